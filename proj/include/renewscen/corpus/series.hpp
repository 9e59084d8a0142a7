#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "renewscen/corpus/units.hpp"

namespace renewscen {

/// One observation. Years are fractional calendar years (2020.5 is mid-2020).
struct Sample {
  double year;
  double value;
};

/// Closed year interval used to select the samples a fit looks at.
struct YearRange {
  double first;
  double last;

  bool contains(double year) const noexcept { return year >= first && year <= last; }
};

/// What the caller expects a series file to contain. Header directives in the
/// file must agree with it.
struct SeriesSchema {
  QuantityKind kind = QuantityKind::InstalledPower;
  Unit unit = Unit::GW;
  /// Series destined for log-space fitting must be strictly positive.
  bool log_scale = true;
  /// Used when the file carries no "# technology:" line.
  std::string technology;
};

/// Yearly samples of one quantity for one technology. Immutable once built;
/// the constructor sorts by year and enforces the invariants.
class CapacitySeries {
 public:
  CapacitySeries(std::string technology, QuantityKind kind, Unit unit, std::vector<Sample> samples,
                 std::vector<std::string> provenance = {}, bool log_scale = true);

  const std::string& technology() const noexcept { return technology_; }
  QuantityKind kind() const noexcept { return kind_; }
  Unit unit() const noexcept { return unit_; }
  bool log_scale() const noexcept { return log_scale_; }
  std::span<const Sample> samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  /// Header comment lines exactly as read (including the leading '#').
  const std::vector<std::string>& provenance() const noexcept { return provenance_; }

  double first_year() const noexcept { return samples_.front().year; }
  double last_year() const noexcept { return samples_.back().year; }
  const Sample& last() const noexcept { return samples_.back(); }

  /// Value observed at exactly `year`, if present.
  const Sample* find(double year) const noexcept;

  /// Samples whose year lies in `range`; may be empty.
  std::vector<Sample> in_range(const YearRange& range) const;

 private:
  std::string technology_;
  QuantityKind kind_;
  Unit unit_;
  std::vector<Sample> samples_;
  std::vector<std::string> provenance_;
  bool log_scale_;
};

/// Parses the series text format (see docs/series-format.md).
CapacitySeries load_capacity_series(std::istream& in, const SeriesSchema& schema);
CapacitySeries load_capacity_series(const std::filesystem::path& path, const SeriesSchema& schema);

/// Inverse of load_capacity_series. A canonical file (canonical unit
/// spelling, rows sorted, shortest number formatting) round-trips byte for byte.
std::string write_series(const CapacitySeries& series);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace renewscen
