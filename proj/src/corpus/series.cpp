#include "renewscen/corpus/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <utility>

#include "renewscen/error.hpp"

namespace renewscen {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view text, std::size_t line_no) {
  text = trim(text);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": not a number: '" + std::string(text) + "'");
  }
  return v;
}

// "# key: value" -> (key, value); empty key when the comment is free text.
std::pair<std::string_view, std::string_view> directive(std::string_view line) {
  auto body = trim(line.substr(1));
  const auto colon = body.find(':');
  if (colon == std::string_view::npos) return {};
  auto key = trim(body.substr(0, colon));
  if (key != "unit" && key != "kind" && key != "technology" && key != "scale") return {};
  return {key, trim(body.substr(colon + 1))};
}

}  // namespace

CapacitySeries::CapacitySeries(std::string technology, QuantityKind kind, Unit unit,
                               std::vector<Sample> samples, std::vector<std::string> provenance,
                               bool log_scale)
    : technology_(std::move(technology)),
      kind_(kind),
      unit_(unit),
      samples_(std::move(samples)),
      provenance_(std::move(provenance)),
      log_scale_(log_scale) {
  if (samples_.empty()) throw Error(ErrorCode::EmptySeries, "series '" + technology_ + "' has no samples");
  if (!unit_matches_kind(unit_, kind_)) {
    throw Error(ErrorCode::UnitMismatch, std::string(to_string(unit_)) + " is not a unit of " +
                                             std::string(to_string(kind_)));
  }
  std::stable_sort(samples_.begin(), samples_.end(),
                   [](const Sample& a, const Sample& b) { return a.year < b.year; });
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const auto& s = samples_[i];
    if (!std::isfinite(s.year) || !std::isfinite(s.value)) {
      throw Error(ErrorCode::ParseError, "non-finite sample in '" + technology_ + "'");
    }
    if (s.value < 0.0 || (log_scale_ && s.value == 0.0)) {
      throw Error(ErrorCode::NonPositiveValue, "'" + technology_ + "' year " + format_number(s.year) +
                                                   " has value " + format_number(s.value));
    }
    if (i > 0 && samples_[i - 1].year == s.year) {
      throw Error(ErrorCode::DuplicateYear,
                  "'" + technology_ + "' repeats year " + format_number(s.year));
    }
  }
}

const Sample* CapacitySeries::find(double year) const noexcept {
  auto it = std::lower_bound(samples_.begin(), samples_.end(), year,
                             [](const Sample& s, double y) { return s.year < y; });
  if (it != samples_.end() && it->year == year) return &*it;
  return nullptr;
}

std::vector<Sample> CapacitySeries::in_range(const YearRange& range) const {
  std::vector<Sample> out;
  for (const auto& s : samples_) {
    if (range.contains(s.year)) out.push_back(s);
  }
  return out;
}

CapacitySeries load_capacity_series(std::istream& in, const SeriesSchema& schema) {
  std::vector<std::string> header;
  std::vector<Sample> rows;
  std::string technology = schema.technology;
  bool log_scale = schema.log_scale;
  double factor = 1.0;
  std::optional<Unit> declared_unit;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      if (!rows.empty()) {
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line_no) + ": comment after data rows");
      }
      header.push_back(line);
      auto [key, value] = directive(t);
      if (key == "unit") {
        auto spelling = parse_unit(value);
        if (!spelling) {
          throw Error(ErrorCode::UnitMismatch, "unknown unit '" + std::string(value) + "'");
        }
        if (spelling->canonical != schema.unit) {
          throw Error(ErrorCode::UnitMismatch, "file declares " + std::string(value) + ", expected " +
                                                   std::string(to_string(schema.unit)));
        }
        declared_unit = spelling->canonical;
        factor = spelling->to_canonical;
        header.back() = "# unit: " + std::string(to_string(spelling->canonical));
      } else if (key == "kind") {
        auto kind = parse_quantity_kind(value);
        if (!kind || *kind != schema.kind) {
          throw Error(ErrorCode::UnitMismatch, "file declares kind '" + std::string(value) +
                                                   "', expected " + std::string(to_string(schema.kind)));
        }
      } else if (key == "technology") {
        technology = std::string(value);
      } else if (key == "scale") {
        if (value == "log") {
          log_scale = true;
        } else if (value == "linear") {
          log_scale = false;
        } else {
          throw Error(ErrorCode::ParseError, "scale must be 'log' or 'linear'");
        }
      }
      continue;
    }

    std::vector<std::string_view> cells;
    std::string_view rest = t;
    while (true) {
      const auto comma = rest.find(',');
      cells.push_back(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (cells.size() < 2 || cells.size() > 3) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(line_no) + ": expected 'year,value[,unit]'");
    }
    double row_factor = factor;
    if (cells.size() == 3) {
      auto spelling = parse_unit(cells[2]);
      const Unit effective = declared_unit.value_or(schema.unit);
      if (!spelling || spelling->canonical != effective ||
          (declared_unit && spelling->to_canonical != factor)) {
        throw Error(ErrorCode::UnitMismatch, "line " + std::to_string(line_no) + ": unit '" +
                                                 std::string(cells[2]) + "' differs from series unit");
      }
      row_factor = spelling->to_canonical;
    }
    rows.push_back({parse_double(cells[0], line_no), parse_double(cells[1], line_no) * row_factor});
  }

  if (rows.empty()) throw Error(ErrorCode::EmptySeries, "no data rows");
  return CapacitySeries(technology, schema.kind, schema.unit, std::move(rows), std::move(header),
                        log_scale);
}

CapacitySeries load_capacity_series(const std::filesystem::path& path, const SeriesSchema& schema) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::DatasetMissing, "cannot open " + path.string());
  return load_capacity_series(in, schema);
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string write_series(const CapacitySeries& series) {
  std::ostringstream out;
  for (const auto& line : series.provenance()) out << line << '\n';
  for (const auto& s : series.samples()) {
    out << format_number(s.year) << ',' << format_number(s.value) << '\n';
  }
  return out.str();
}

}  // namespace renewscen
