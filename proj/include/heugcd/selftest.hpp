#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace heugcd {

struct SelftestCheck {
    std::string name;
    std::size_t passed;
    std::size_t total;
};

/// Embedded property corpus: oracle agreement, codec round trip, Gaussian
/// gcd divisibility, root bound, first-try Bezout bound and fallback.
std::vector<SelftestCheck> run_selftest(std::uint64_t seed = 1);

} // namespace heugcd
