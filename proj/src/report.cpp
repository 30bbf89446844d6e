#include "adelic/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace adelic {

double round15(double x) {
    if (!std::isfinite(x) || x == 0) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return std::strtod(buf, nullptr);
}

std::string CheckReport::toJsonLine() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["inputs"] = inputs;
    j["value"] = value;
    j["expected"] = expected;
    if (std::isfinite(absError))
        j["abs_error"] = round15(absError);
    else
        j["abs_error"] = "inf";
    j["pass"] = pass;
    if (!extra.empty()) j["details"] = extra;
    if (runtimeMs) j["runtime_ms"] = round15(*runtimeMs);
    return j.dump();
}

}  // namespace adelic
