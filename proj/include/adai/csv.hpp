#pragma once

#include <string>

namespace adai {

/// Round-trippable decimal form ("%.17g") with a "." separator.
std::string format_real(double v);

}  // namespace adai
