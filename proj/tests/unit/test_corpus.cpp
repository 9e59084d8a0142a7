#include <catch_amalgamated.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "renewscen/corpus/constants.hpp"
#include "renewscen/corpus/series.hpp"
#include "renewscen/corpus/units.hpp"
#include "renewscen/error.hpp"

using namespace renewscen;
using Catch::Matchers::WithinRel;

namespace {

const SeriesSchema kPower{QuantityKind::InstalledPower, Unit::GW, true, "pv"};

CapacitySeries parse(const std::string& text, const SeriesSchema& schema = kPower) {
  std::istringstream in(text);
  return load_capacity_series(in, schema);
}

ErrorCode code_of(const std::string& text, const SeriesSchema& schema = kPower) {
  try {
    parse(text, schema);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for: " << text);
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("single row loads as a series of length one") {
  auto s = parse("2000,1.0\n");
  REQUIRE(s.size() == 1);
  CHECK(s.last().value == 1.0);
}

TEST_CASE("rows are sorted by year") {
  auto s = parse("2001,5\n2000,3\n");
  REQUIRE(s.size() == 2);
  CHECK(s.samples()[0].year == 2000);
  CHECK(s.samples()[0].value == 3);
  CHECK(s.samples()[1].year == 2001);
  CHECK(s.samples()[1].value == 5);
}

TEST_CASE("series validation errors") {
  CHECK(code_of("") == ErrorCode::EmptySeries);
  CHECK(code_of("# only a comment\n") == ErrorCode::EmptySeries);
  CHECK(code_of("2000,0\n") == ErrorCode::NonPositiveValue);
  CHECK(code_of("2000,-1\n") == ErrorCode::NonPositiveValue);
  CHECK(code_of("2000,1\n2000,2\n") == ErrorCode::DuplicateYear);
  CHECK(code_of("# unit: USD_per_MWh\n2000,1\n") == ErrorCode::UnitMismatch);
  CHECK(code_of("2000,1,TWh_per_year\n") == ErrorCode::UnitMismatch);
  CHECK(code_of("2000,abc\n") == ErrorCode::ParseError);
  CHECK(code_of("2000\n") == ErrorCode::ParseError);
  CHECK(code_of("2000,nan\n") == ErrorCode::ParseError);
  CHECK(code_of("# kind: unit_cost\n2000,1\n") == ErrorCode::UnitMismatch);
}

TEST_CASE("zero is allowed on a linear-scale series") {
  auto s = parse("# scale: linear\n2000,0\n2001,1\n");
  CHECK_FALSE(s.log_scale());
  CHECK(s.samples()[0].value == 0.0);
}

TEST_CASE("unit spellings convert to the canonical unit") {
  auto s = parse("# unit: MW\n2000,1500\n");
  CHECK(s.unit() == Unit::GW);
  CHECK_THAT(s.last().value, WithinRel(1.5, 1e-15));
  auto t = parse("2000,2,TW\n2001,1500,MW\n");
  CHECK_THAT(t.samples()[0].value, WithinRel(2000.0, 1e-15));
  CHECK_THAT(t.samples()[1].value, WithinRel(1.5, 1e-15));
}

TEST_CASE("constructor rejects a unit that does not fit the kind") {
  CHECK_THROWS_AS(CapacitySeries("x", QuantityKind::UnitCost, Unit::GW, {{2000, 1}}), Error);
  CHECK(unit_matches_kind(Unit::USDPerKWh, QuantityKind::UnitCost));
  CHECK_FALSE(unit_matches_kind(Unit::TWhPerYear, QuantityKind::InstalledPower));
}

TEST_CASE("canonical text round-trips byte for byte") {
  const std::string text =
      "# source: hand typed\n"
      "# technology: pv\n"
      "# kind: installed_power\n"
      "# unit: GW\n"
      "2000,1.25\n"
      "2001,1.62\n"
      "2002.5,0.1\n"
      "2003,1e+21\n";
  auto s = parse(text);
  CHECK(write_series(s) == text);
  CHECK(write_series(parse(write_series(s))) == text);
}

TEST_CASE("format_number is shortest round-trip text") {
  CHECK(format_number(2020) == "2020");
  CHECK(format_number(0.1) == "0.1");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("range selection") {
  auto s = parse("2000,1\n2001,2\n2002,4\n2003,8\n");
  CHECK(s.in_range({2001, 2002}).size() == 2);
  CHECK(s.in_range({2010, 2020}).empty());
  REQUIRE(s.find(2002) != nullptr);
  CHECK(s.find(2002)->value == 4);
  CHECK(s.find(1999) == nullptr);
}

TEST_CASE("missing file is DatasetMissing") {
  try {
    load_capacity_series(std::filesystem::path("/nonexistent/none.csv"), kPower);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DatasetMissing);
    CHECK(e.category() == ErrorCategory::Data);
  }
}

TEST_CASE("published constants") {
  CHECK(get_constant("cf_pv").value == 0.256);
  CHECK(get_constant("desert_area").value == 34.93e6);
  CHECK(get_constant("desert_area").unit == "km2");
  CHECK(get_constant("efficiency_reduction").value == 0.425);
  CHECK_THROWS_AS(get_constant("cf_geothermal"), Error);
  try {
    get_constant("cf_geothermal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownConstant);
  }
}

TEST_CASE("every constant carries a unit and a citation") {
  std::set<std::string_view> names;
  for (const auto& c : ConstantsRegistry::instance().all()) {
    CHECK_FALSE(c.unit.empty());
    CHECK_FALSE(c.citation.empty());
    CHECK(names.insert(c.name).second);
  }
}

TEST_CASE("registry matches the checked-in literal table") {
  std::ifstream in(RENEWSCEN_FIXTURE_DIR "/constants.csv");
  REQUIRE(in);
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("name,", 0) == 0) continue;
    std::istringstream cells(line);
    std::string name, value, unit;
    std::getline(cells, name, ',');
    std::getline(cells, value, ',');
    std::getline(cells, unit, ',');
    INFO(name);
    const auto& c = get_constant(name);
    CHECK(c.value == std::stod(value));
    CHECK(c.unit == unit);
    ++rows;
  }
  CHECK(rows == ConstantsRegistry::instance().all().size());
}

TEST_CASE("reduced primary demand") {
  CHECK(reduced_primary(186000) == 106950);
  CHECK(reduced_primary(0) == 0);
  CHECK_THAT(reduced_primary(1000), WithinRel(575.0, 1e-15));
  CHECK(reduced_primary(get_constant("primary_demand_2030").value) ==
        get_constant("reduced_primary_2030").value);
  CHECK_THROWS_AS(reduced_primary(-1), Error);
}
