#pragma once

#include "heugcd/heugcd.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace heugcd {

struct RunReport {
    std::string gcd;
    Algorithm algo_used;
    std::vector<Int> z_trace;
    unsigned retries;
    double wall_ms;
    RingTag ring;
};

RunReport make_report(const GcdResult& result, RingTag ring, double wall_ms);

/// {gcd, algo, ring, z_trace, retries, time_ms}; z values are decimal strings.
nlohmann::ordered_json to_json(const RunReport& report);

/// Human-readable form. With `stats` the trace and timing are included.
std::string to_text(const RunReport& report, bool stats);

} // namespace heugcd
