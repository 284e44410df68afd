#pragma once

// Heuristic gcd of multivariate polynomials over Z and Z[i].
//
// The main variable is evaluated at an integer z, the gcd of the two
// evaluations is computed recursively, and a candidate is rebuilt from the
// balanced base-z digits of that gcd. A candidate whose primitive part
// divides both inputs is the gcd; otherwise z grows and the step repeats.
// With z >= 2*min(|P|, |Q|) + 2 a candidate that divides both inputs is
// always the true gcd, so a certified answer is never wrong.

#include "heugcd/error.hpp"
#include "heugcd/multipoly.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace heugcd {

/// A candidate accepted by the division test at some recursion level.
/// `p` and `q` are the primitive, content-free operands that were evaluated.
struct LevelCertificate {
    unsigned depth;
    const MultiPoly& p;
    const MultiPoly& q;
    const MultiPoly& gcd;
    const Int& first_z;
    const Int& z;
    unsigned attempt;
};

struct HeuConfig {
    unsigned max_retries = 6;
    std::uint64_t size_guard = 100000;
    /// Optional observer, called for every certified level.
    std::function<void(const LevelCertificate&)> on_certified;
};

/// Retry growth factor applied to z: 73794 / 27011.
inline constexpr long retry_ratio_num = 73794;
inline constexpr long retry_ratio_den = 27011;

enum class Algorithm { Heuristic, PrsFallback, Prs };

std::string_view algorithm_name(Algorithm a) noexcept;

enum class AttemptOutcome {
    Certified,
    DivisionFailed,
    ReconstructionOverflow,
    InnerFailed,
    ZeroEvaluation,
};

std::string_view outcome_name(AttemptOutcome o) noexcept;

/// One evaluation point tried by one invocation of the driver.
struct ZAttempt {
    unsigned depth;       // 0 for the outermost call
    std::size_t num_vars; // variables of the polynomials being evaluated
    unsigned attempt;     // 0 for the first z of this invocation
    Int z;
    Int height_p;         // heights of the primitive inputs at this invocation
    Int height_q;
    AttemptOutcome outcome;
};

struct GcdResult {
    MultiPoly gcd;
    Algorithm algo_used = Algorithm::Heuristic;
    std::vector<ZAttempt> z_trace;
    unsigned retries = 0;
    bool certified = false;
};

enum class FailureReason { DivisionTestFailed, ReconstructionOverflow, SizeGuard, RetriesExhausted };

std::string_view failure_name(FailureReason r) noexcept;

class heuristic_failure : public error {
public:
    heuristic_failure(FailureReason reason, Int last_z, std::vector<ZAttempt> trace);

    FailureReason reason() const noexcept { return reason_; }
    const Int& last_z() const noexcept { return last_z_; }
    const std::vector<ZAttempt>& trace() const noexcept { return trace_; }

private:
    FailureReason reason_;
    Int last_z_;
    std::vector<ZAttempt> trace_;
};

/// 2 * min(height(P), height(Q)) + 2. Throws domain_error on a zero input.
Int choose_z(const MultiPoly& p, const MultiPoly& q);

/// floor(z * 73794 / 27011).
Int next_z(const Int& z);

/// Throws heuristic_failure when no evaluation point certifies,
/// structural_error on mismatched operands and domain_error for gcd(0, 0).
GcdResult heugcd(const MultiPoly& p, const MultiPoly& q, const HeuConfig& config = {});

/// heugcd with a PRS fallback; the result is always certified by
/// trial division.
GcdResult gcd_auto(const MultiPoly& p, const MultiPoly& q, const HeuConfig& config = {});

/// The PRS oracle wrapped as a GcdResult (algo_used = Prs).
GcdResult gcd_prs(const MultiPoly& p, const MultiPoly& q);

} // namespace heugcd
