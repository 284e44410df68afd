#include "heugcd/report.hpp"

#include "heugcd/parse.hpp"

#include <sstream>

namespace heugcd {

RunReport make_report(const GcdResult& result, RingTag ring, double wall_ms) {
    RunReport r{format_poly(result.gcd), result.algo_used, {}, result.retries, wall_ms, ring};
    r.z_trace.reserve(result.z_trace.size());
    for (const auto& a : result.z_trace) r.z_trace.push_back(a.z);
    return r;
}

nlohmann::ordered_json to_json(const RunReport& report) {
    nlohmann::ordered_json j;
    j["gcd"] = report.gcd;
    j["algo"] = std::string(algorithm_name(report.algo_used));
    j["ring"] = std::string(ring_name(report.ring));
    auto& trace = j["z_trace"] = nlohmann::ordered_json::array();
    for (const auto& z : report.z_trace) trace.push_back(z.get_str());
    j["retries"] = report.retries;
    j["time_ms"] = report.wall_ms;
    return j;
}

std::string to_text(const RunReport& report, bool stats) {
    std::ostringstream os;
    os << report.gcd << '\n';
    if (stats) {
        os << "algo:    " << algorithm_name(report.algo_used) << '\n'
           << "ring:    " << ring_name(report.ring) << '\n'
           << "z_trace:";
        for (const auto& z : report.z_trace) os << ' ' << z.get_str();
        os << '\n'
           << "retries: " << report.retries << '\n'
           << "time_ms: " << report.wall_ms << '\n';
    }
    return os.str();
}

} // namespace heugcd
