#pragma once

// One machine-readable record per check, printed as a JSON line.

#include <optional>
#include <string>

#include "json.hpp"

#include "adelic/qcore.hpp"

namespace adelic {

struct CheckReport {
    std::string check;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    std::string value;               ///< exact rational, complex "a+bi" or real
    std::string expected = "n/a";
    double absError = 0;
    bool pass = true;
    std::optional<double> runtimeMs;  ///< only with --timing, keeps output deterministic
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();

    /// pass <=> absError <= tolerance.
    void judge(double tolerance) { pass = absError <= tolerance; }
    std::string toJsonLine() const;
};

/// Rounded to 15 significant digits so the JSON text is reproducible.
double round15(double x);

}  // namespace adelic
