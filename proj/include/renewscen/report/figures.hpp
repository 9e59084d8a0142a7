#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "renewscen/report/report.hpp"

namespace renewscen {

/// fig1..fig8, appfig1, appfig6.
const std::vector<std::string>& figure_ids();

/// Standalone SVG chart. Unknown ids are Error(MissingFit) listing the valid ones.
std::string emit_figure(const ScenarioReport& report, std::string_view id);

}  // namespace renewscen
