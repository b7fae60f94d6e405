#pragma once

#include <cstdio>
#include <string>

namespace hypflex {

/// %.17g rendering, which round-trips every finite double exactly.
/// Negative zero prints as 0 so a JSON re-import reproduces the same text.
inline std::string fmt17(double x)
{
    if (x == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace hypflex
