#include "adai/csv.hpp"

#include <cstdio>

namespace adai {

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace adai
