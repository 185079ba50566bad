#pragma once

#include <iosfwd>
#include <vector>

namespace adai {

/// Entry point of the `adai` tool. Exit codes: 0 success, 1 runtime or training error,
/// 2 invalid configuration or arguments.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

double median(std::vector<double> values);

}  // namespace adai
