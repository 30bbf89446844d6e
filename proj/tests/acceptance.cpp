// Acceptance grid: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <iostream>

#include "adelic/acceptance.hpp"

int main() {
    const auto results = adelic::runAcceptance(adelic::SuiteConfig{});
    int failed = 0;
    for (const auto& r : results) {
        std::cout << "criterion " << r.id << ": " << (r.pass ? "PASS" : "FAIL") << "  [" << r.group << "] " << r.title
                  << ": " << r.detail << "\n";
        if (!r.pass) ++failed;
    }
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
