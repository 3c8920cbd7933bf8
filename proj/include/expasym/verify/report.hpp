#pragma once

#include <string>

#include "expasym/verify/study.hpp"

namespace expasym {

std::string report_to_json(const ConvergenceReport& report, int digits = 30);
/// Columns n,value,prediction,residual,ratio; ratio is empty on the first row.
std::string report_to_csv(const ConvergenceReport& report, int digits = 30);
std::string report_to_text(const ConvergenceReport& report, int digits = 30);

}  // namespace expasym
