#include "heugcd/heugcd.hpp"

#include "heugcd/oracle.hpp"
#include "heugcd/zadic.hpp"

#include <algorithm>

namespace heugcd {

std::string_view algorithm_name(Algorithm a) noexcept {
    switch (a) {
    case Algorithm::Heuristic: return "heuristic";
    case Algorithm::PrsFallback: return "prs-fallback";
    case Algorithm::Prs: return "prs";
    }
    return "unknown";
}

std::string_view outcome_name(AttemptOutcome o) noexcept {
    switch (o) {
    case AttemptOutcome::Certified: return "certified";
    case AttemptOutcome::DivisionFailed: return "division-test-failed";
    case AttemptOutcome::ReconstructionOverflow: return "reconstruction-overflow";
    case AttemptOutcome::InnerFailed: return "inner-failed";
    case AttemptOutcome::ZeroEvaluation: return "zero-evaluation";
    }
    return "unknown";
}

std::string_view failure_name(FailureReason r) noexcept {
    switch (r) {
    case FailureReason::DivisionTestFailed: return "division-test-failed";
    case FailureReason::ReconstructionOverflow: return "reconstruction-overflow";
    case FailureReason::SizeGuard: return "size-guard";
    case FailureReason::RetriesExhausted: return "retries-exhausted";
    }
    return "unknown";
}

heuristic_failure::heuristic_failure(FailureReason reason, Int last_z, std::vector<ZAttempt> trace)
    : error("heuristic gcd failed (" + std::string(failure_name(reason)) + ", last z = " +
            last_z.get_str() + ")"),
      reason_(reason), last_z_(std::move(last_z)), trace_(std::move(trace)) {}

Int choose_z(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero() || q.is_zero()) throw domain_error("choose_z needs nonzero polynomials");
    const Int hp = height(p);
    const Int hq = height(q);
    return 2 * Int(std::min(hp, hq)) + 2;
}

Int next_z(const Int& z) {
    Int n = z * retry_ratio_num;
    Int r;
    mpz_fdiv_q_ui(r.get_mpz_t(), n.get_mpz_t(), retry_ratio_den);
    return r;
}

namespace {

void require_operands(const MultiPoly& p, const MultiPoly& q) {
    if (p.ring() != q.ring()) throw structural_error("gcd operands belong to different rings");
    if (!p.compatible(q)) throw structural_error("gcd operands have different variable orders");
    if (p.is_zero() && q.is_zero()) throw domain_error("gcd(0, 0) is undefined");
}

// Lifts a polynomial over the first k-1 variables of `like` to all k.
MultiPoly lift(const MultiPoly& lower, const MultiPoly& like) {
    return like.with_body(lower.body());
}

class Driver {
public:
    explicit Driver(const HeuConfig& config) : config_(config) {}

    MultiPoly gcd(const MultiPoly& p0, const MultiPoly& q0, unsigned depth) {
        if (p0.is_zero()) return normalize_unit(q0);
        if (q0.is_zero()) return normalize_unit(p0);
        if (p0.is_constant()) return p0.with_body(Node(gint_gcd(p0.constant_value(), icontent(q0))));
        if (q0.is_constant()) return q0.with_body(Node(gint_gcd(q0.constant_value(), icontent(p0))));

        const GaussInt int_content = gint_gcd(icontent(p0), icontent(q0));
        MultiPoly p = primitive_part(p0);
        MultiPoly q = primitive_part(q0);

        MultiPoly poly_content = p.with_body(Node(GaussInt(1)));
        if (p.num_vars() >= 2) {
            const GcdFn recurse = [this, depth](const MultiPoly& a, const MultiPoly& b) {
                return gcd(a, b, depth + 1);
            };
            const MultiPoly cp = content_main(p, recurse);
            const MultiPoly cq = content_main(q, recurse);
            poly_content = lift(gcd(cp, cq, depth + 1), p);
            p = *try_divide_exact(p, lift(cp, p));
            q = *try_divide_exact(q, lift(cq, q));
        }

        MultiPoly g = p.with_body(Node(GaussInt(1)));
        if (p.main_degree() > 0 && q.main_degree() > 0) g = primitive_gcd(p, q, depth);
        return normalize_unit(scale(poly_content * g, int_content));
    }

    std::vector<ZAttempt>& trace() { return trace_; }

private:
    // p, q primitive, free of main-variable content, both of positive main degree.
    MultiPoly primitive_gcd(const MultiPoly& p, const MultiPoly& q, unsigned depth) {
        const std::string& main_var = p.vars().back();
        const std::uint32_t min_deg = std::min(p.main_degree(), q.main_degree());
        const Int hp = height(p);
        const Int hq = height(q);
        const Int first_z = 2 * Int(std::min(hp, hq)) + 2;
        Int z = first_z;

        for (unsigned attempt = 0; attempt < config_.max_retries; ++attempt) {
            if (bit_length(z) * (std::uint64_t(min_deg) + 1) > config_.size_guard)
                throw heuristic_failure(FailureReason::SizeGuard, z, trace_);

            const std::size_t slot = trace_.size();
            trace_.push_back({depth, p.num_vars(), attempt, z, hp, hq, AttemptOutcome::Certified});
            auto mark = [&](AttemptOutcome o) { trace_[slot].outcome = o; };

            const MultiPoly pz = eval_main(p, z);
            const MultiPoly qz = eval_main(q, z);
            if (pz.is_zero() && qz.is_zero()) {
                mark(AttemptOutcome::ZeroEvaluation);
                z = next_z(z);
                continue;
            }

            std::optional<MultiPoly> h;
            try {
                h = gcd(pz, qz, depth + 1);
            } catch (const heuristic_failure& f) {
                if (f.reason() == FailureReason::SizeGuard) throw;
                mark(AttemptOutcome::InnerFailed);
                z = next_z(z);
                continue;
            }

            auto raw = reconstruct_bounded(*h, z, main_var, std::size_t(min_deg) + 1);
            if (!raw) {
                mark(AttemptOutcome::ReconstructionOverflow);
                z = next_z(z);
                continue;
            }
            // The reconstruction is built over a fresh copy of the variable
            // list; rebase it onto the operands' list.
            MultiPoly candidate = normalize_unit(primitive_part(p.with_body(raw->body())));
            if (try_divide_exact(p, candidate) && try_divide_exact(q, candidate)) {
                if (config_.on_certified)
                    config_.on_certified({depth, p, q, candidate, first_z, z, attempt});
                return candidate;
            }
            mark(AttemptOutcome::DivisionFailed);
            z = next_z(z);
        }
        throw heuristic_failure(FailureReason::RetriesExhausted, z, trace_);
    }

    const HeuConfig& config_;
    std::vector<ZAttempt> trace_;
};

unsigned top_level_retries(const std::vector<ZAttempt>& trace) {
    return static_cast<unsigned>(std::count_if(trace.begin(), trace.end(), [](const ZAttempt& a) {
        return a.depth == 0 && a.outcome != AttemptOutcome::Certified;
    }));
}

} // namespace

GcdResult heugcd(const MultiPoly& p, const MultiPoly& q, const HeuConfig& config) {
    require_operands(p, q);
    Driver driver(config);
    MultiPoly g = driver.gcd(p, q, 0);
    GcdResult result{std::move(g), Algorithm::Heuristic, std::move(driver.trace()), 0, true};
    result.retries = top_level_retries(result.z_trace);
    return result;
}

GcdResult gcd_auto(const MultiPoly& p, const MultiPoly& q, const HeuConfig& config) {
    require_operands(p, q);
    try {
        return heugcd(p, q, config);
    } catch (const heuristic_failure& f) {
        GcdResult result{prs_gcd(p, q), Algorithm::PrsFallback, f.trace(), 0, false};
        result.retries = top_level_retries(result.z_trace);
        result.certified = static_cast<bool>(try_divide_exact(p, result.gcd)) &&
                           static_cast<bool>(try_divide_exact(q, result.gcd));
        if (!result.certified) throw error("PRS fallback produced a non-divisor");
        return result;
    }
}

GcdResult gcd_prs(const MultiPoly& p, const MultiPoly& q) {
    require_operands(p, q);
    GcdResult result{prs_gcd(p, q), Algorithm::Prs, {}, 0, false};
    result.certified = static_cast<bool>(try_divide_exact(p, result.gcd)) &&
                       static_cast<bool>(try_divide_exact(q, result.gcd));
    return result;
}

} // namespace heugcd
