#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graphlink {

struct SelftestCheck {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;  // first failure, empty when passed
};

/// Property suites at reduced scale; `scale` multiplies the case counts.
/// Deterministic for a fixed seed.
[[nodiscard]] std::vector<SelftestCheck> run_selftest(std::uint64_t seed, double scale = 1.0);

}  // namespace graphlink
