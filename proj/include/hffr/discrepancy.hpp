#pragma once

#include <string>
#include <vector>

namespace hffr {

// One place where the implemented expression deviates from a published
// formula it was transcribed from, with the numeric evidence that decided
// the reading. Rendered in the acceptance run's report.
struct Discrepancy {
  std::string where;
  std::string printed;
  std::string implemented;
  std::string evidence;
};

const std::vector<Discrepancy>& discrepancy_report();
std::string format_discrepancy_report();

}  // namespace hffr
