#include <catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "renewscen/error.hpp"
#include "renewscen/report/config.hpp"
#include "renewscen/report/figures.hpp"
#include "renewscen/report/report.hpp"

using namespace renewscen;
namespace fs = std::filesystem;
namespace pt = boost::property_tree;

namespace {

const ScenarioReport& default_report() {
  static const ScenarioReport report = run_scenario(ScenarioConfig{});
  return report;
}

pt::ptree parse_svg(const std::string& text) {
  std::istringstream in(text);
  pt::ptree tree;
  pt::read_xml(in, tree);
  return tree;
}

// Calls f(tag, node) for every element below `node`.
void walk(const pt::ptree& node, const std::function<void(const std::string&, const pt::ptree&)>& f) {
  for (const auto& [tag, child] : node) {
    if (tag == "<xmlattr>" || tag == "<xmlcomment>") continue;
    f(tag, child);
    walk(child, f);
  }
}

std::string attr(const pt::ptree& node, const std::string& name) {
  return node.get<std::string>("<xmlattr>." + name, "");
}

std::vector<std::string> axis_scales(const pt::ptree& svg, const std::string& axis_class) {
  std::vector<std::string> out;
  walk(svg, [&](const std::string& tag, const pt::ptree& n) {
    if (tag == "g" && attr(n, "class") == "axis " + axis_class) out.push_back(attr(n, "data-scale"));
  });
  return out;
}

std::size_t count_class(const pt::ptree& svg, const std::string& tag_name, const std::string& cls) {
  std::size_t n = 0;
  walk(svg, [&](const std::string& tag, const pt::ptree& node) {
    if (tag == tag_name && attr(node, "class") == cls) ++n;
  });
  return n;
}

ScenarioConfig config_from(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args) {
  std::string cmd = std::string("\"") + RENEWSCEN_CLI + "\" " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("renewscen-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("config parsing") {
  auto c = config_from(
      "# comment\n"
      "horizon = 2060\n"
      "thresholds = electric_2026, primary_2032   # trailing comment\n"
      "pv.window = 2005..2020\n"
      "pv.capacity_factor = 0.2\n"
      "wind.treatment = rebound\n"
      "wind.regime_window = ..2008\n"
      "hydro.degree = 3\n"
      "mix_years = 2025\n");
  CHECK(c.horizon == 2060);
  REQUIRE(c.thresholds.size() == 2);
  CHECK(c.thresholds[1] == "primary_2032");
  REQUIRE(c.pv.window);
  CHECK(c.pv.window->first == 2005);
  CHECK(*c.pv.capacity_factor == 0.2);
  CHECK(c.wind_treatment == WindTreatment::Rebound);
  CHECK(std::isinf(c.wind_regime_window.first));
  CHECK(c.wind_regime_window.last == 2008);
  CHECK(c.hydro_degree == 3);
  CHECK(c.mix_years == std::vector<double>{2025});
}

TEST_CASE("config errors") {
  auto code = [](const std::string& text) {
    try {
      config_from(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code("colour = blue\n") == ErrorCode::ConfigInvalid);
  CHECK(code("horizon\n") == ErrorCode::ConfigInvalid);
  CHECK(code("horizon = soon\n") == ErrorCode::ConfigInvalid);
  CHECK(code("pv.capacity_factor = 1.5\n") == ErrorCode::ConfigInvalid);
  CHECK(code("thresholds = electric_2099\n") == ErrorCode::ConfigInvalid);
  CHECK(code("wind.treatment = linear\n") == ErrorCode::ConfigInvalid);
  CHECK(code("pv.window = 2020..2000\n") == ErrorCode::ConfigInvalid);
}

TEST_CASE("formatted config parses back to the same text") {
  auto c = config_from("horizon = 2055\npv.window = 2003..\nwind.treatment = right_segment\n");
  auto text = format_config(c);
  CHECK(format_config(config_from(text)) == text);
}

TEST_CASE("dataset resolution") {
  ScenarioConfig c;
  CHECK(resolve_dataset(c, "pv_installed_power").filename() == "pv_installed_power.csv");
  try {
    resolve_dataset(c, "no_such_dataset");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DatasetMissing);
  }
  c.pv.dataset = "missing/file.csv";
  CHECK_THROWS_AS(run_scenario(c), Error);
}

TEST_CASE("default report has crossings for every registered threshold") {
  const auto& r = default_report();
  for (const auto& t : registered_thresholds()) {
    INFO(t.name);
    CHECK(r.crossing("pv", t.name).result.level == t.level);
    for (auto w : all_wind_treatments()) {
      CHECK_NOTHROW(r.crossing("pv+wind", t.name, w));
      CHECK_NOTHROW(r.crossing("pv+wind+hydro", t.name, w));
    }
  }
  CHECK(r.mixes.size() == 2 * all_wind_treatments().size());
  CHECK_NOTHROW(r.mix(2025));
  CHECK_NOTHROW(r.mix(2030));
}

TEST_CASE("horizon before a crossing gives NotReached") {
  ScenarioConfig c;
  c.horizon = 2024;
  auto r = run_scenario(c);
  CHECK(r.crossing("pv+wind+hydro", "primary_2032").result.status == CrossingStatus::NotReached);
  CHECK(r.crossing("pv", "primary_2032").result.status == CrossingStatus::NotReached);
}

TEST_CASE("horizon must lie after the data") {
  ScenarioConfig c;
  c.horizon = 2015;
  try {
    run_scenario(c);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigInvalid);
  }
}

TEST_CASE("report outputs are deterministic") {
  auto a = run_scenario(ScenarioConfig{});
  auto b = run_scenario(ScenarioConfig{});
  CHECK(emit_json(a) == emit_json(b));
  CHECK(emit_discrepancies(a) == emit_discrepancies(b));
  for (const auto& id : figure_ids()) CHECK(emit_figure(a, id) == emit_figure(b, id));
}

TEST_CASE("report JSON carries the schema and units") {
  auto json = emit_json(default_report());
  CHECK(json.find("\"schema\": \"renewscen.report/1\"") != std::string::npos);
  CHECK(json.find("\"unit\": \"TWh_per_year\"") != std::string::npos);
  CHECK(json.find("nan") == std::string::npos);
}

TEST_CASE("every figure is well-formed SVG") {
  for (const auto& id : figure_ids()) {
    INFO(id);
    auto text = emit_figure(default_report(), id);
    pt::ptree tree;
    REQUIRE_NOTHROW(tree = parse_svg(text));
    CHECK(attr(tree.get_child("svg"), "id") == id);
    CHECK(count_class(tree, "g", "data") >= 1);
  }
}

TEST_CASE("fig5 axes and threshold lines") {
  auto svg = parse_svg(emit_figure(default_report(), "fig5"));
  CHECK(axis_scales(svg, "y-axis") == std::vector<std::string>{"log"});
  CHECK(axis_scales(svg, "x-axis") == std::vector<std::string>{"linear"});
  CHECK(count_class(svg, "line", "threshold") == 3);
  CHECK(count_class(svg, "text", "threshold-label") == 3);
}

TEST_CASE("fig8 is bi-logarithmic with two fits and a crossing") {
  auto svg = parse_svg(emit_figure(default_report(), "fig8"));
  CHECK(axis_scales(svg, "y-axis") == std::vector<std::string>{"log"});
  CHECK(axis_scales(svg, "x-axis") == std::vector<std::string>{"log"});
  CHECK(count_class(svg, "polyline", "fit") == 2);
  CHECK(count_class(svg, "circle", "crossing") == 1);
}

TEST_CASE("panel figures show linear and log ordinates") {
  for (const char* id : {"fig1", "fig2", "fig3", "fig7"}) {
    INFO(id);
    auto svg = parse_svg(emit_figure(default_report(), id));
    CHECK(axis_scales(svg, "y-axis") == std::vector<std::string>{"linear", "log"});
  }
}

TEST_CASE("unknown figure id lists the valid ids") {
  try {
    emit_figure(default_report(), "fig9");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingFit);
    std::string what = e.what();
    for (const auto& id : figure_ids()) CHECK(what.find(id) != std::string::npos);
  }
}

TEST_CASE("discrepancy table") {
  auto csv = emit_discrepancies(default_report());
  std::istringstream in(csv);
  std::string header, line;
  std::getline(in, header);
  CHECK(header == "id,description,stated_value,computed_value,unit,deviation,abs_difference,citation");
  double previous = INFINITY;
  bool saw_area = false, saw_reduced = false;
  for (const auto& d : default_report().discrepancies) {
    if (d.id == "pv_area_electric_2030") {
      saw_area = true;
      CHECK(d.stated == 357667);
      CHECK(std::abs(d.deviation() - (-0.01916)) < 5e-5);
    }
    if (d.id == "reduced_primary_2030") {
      saw_reduced = true;
      CHECK(d.deviation() == 0.0);
    }
  }
  CHECK(saw_area);
  CHECK(saw_reduced);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    // deviation is the sixth field counted from the end minus two
    auto last = line.rfind(',');
    if (line.back() == '"') last = line.rfind(",\"");
    auto abs_start = line.rfind(',', last - 1);
    auto dev_start = line.rfind(',', abs_start - 1);
    double dev = std::stod(line.substr(dev_start + 1, abs_start - dev_start - 1));
    CHECK(std::abs(dev) <= previous);
    previous = std::abs(dev);
  }
  CHECK(rows == default_report().discrepancies.size());
}

TEST_CASE("empty discrepancy registry gives a header-only table") {
  std::vector<Discrepancy> none;
  CHECK(emit_discrepancies(none) ==
        "id,description,stated_value,computed_value,unit,deviation,abs_difference,citation\n");
}

TEST_CASE("CLI exit codes") {
  auto dir = scratch("cli");
  CHECK(run_cli("fit pv") == 0);
  CHECK(run_cli("project pv --year 2030") == 0);
  CHECK(run_cli("cross --threshold electric_2026") == 0);
  CHECK(run_cli("mix --year 2027") == 0);
  CHECK(run_cli("learn") == 0);
  CHECK(run_cli("budget") == 0);
  CHECK(run_cli("figures --id fig5 --out \"" + dir.string() + "\"") == 0);
  CHECK(fs::exists(dir / "fig5.svg"));
  CHECK(run_cli("figures --id fig42") == 2);
  CHECK(run_cli("cross --threshold nope") == 2);
  CHECK(run_cli("--config /nonexistent/x.conf report") == 2);
  CHECK(run_cli("report --horizon 2010") == 2);
  CHECK(run_cli("nonsense") == 2);

  std::ofstream(dir / "bad.csv") << "2000,1\n2000,2\n";
  std::ofstream(dir / "dup.conf") << "pv.dataset = bad.csv\n";
  CHECK(run_cli("--config \"" + (dir / "dup.conf").string() + "\" fit pv") == 3);
  std::ofstream(dir / "missing.conf") << "pv.dataset = nothing_here\n";
  CHECK(run_cli("--config \"" + (dir / "missing.conf").string() + "\" fit pv") == 3);

  std::ofstream(dir / "flat.csv") << "# technology: pv\n2000,5\n2001,5\n2002,5\n";
  std::ofstream(dir / "flat.conf") << "offshore.dataset = flat.csv\noffshore.window = 2000..\n";
  CHECK(run_cli("--config \"" + (dir / "flat.conf").string() + "\" fit pv") == 4);
}

TEST_CASE("report command writes byte-identical outputs") {
  auto a = scratch("report-a"), b = scratch("report-b");
  REQUIRE(run_cli("report --out \"" + a.string() + "\"") == 0);
  REQUIRE(run_cli("report --out \"" + b.string() + "\"") == 0);
  std::size_t files = 0;
  for (const auto& entry : fs::recursive_directory_iterator(a)) {
    if (!entry.is_regular_file()) continue;
    auto rel = fs::relative(entry.path(), a);
    INFO(rel.string());
    CHECK(slurp(entry.path()) == slurp(b / rel));
    ++files;
  }
  CHECK(files == 4 + figure_ids().size());
}

TEST_CASE("shipped default config matches the built-in defaults") {
  auto shipped = load_config(fs::path(RENEWSCEN_FIXTURE_DIR) / ".." / ".." / "config" / "default.conf");
  CHECK(format_config(shipped) == format_config(ScenarioConfig{}));
}
