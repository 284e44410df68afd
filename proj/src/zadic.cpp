#include "heugcd/zadic.hpp"

#include "heugcd/error.hpp"

#include <algorithm>
#include <limits>

namespace heugcd {

namespace {

void require_modulus(const Int& z) {
    if (z < 3) throw invalid_modulus("base must be at least 3, got " + z.get_str());
}

Node smod_coefficients(const Node& n, const Int& z) {
    if (n.is_scalar()) return Node(gsmod(n.scalar, z));
    std::vector<Term> terms;
    terms.reserve(n.terms.size());
    for (const auto& t : n.terms) terms.push_back({t.exp, smod_coefficients(t.coef, z)});
    return node::make(n.var, std::move(terms));
}

} // namespace

GaussInt DigitExpansion::value() const {
    GaussInt acc;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = acc * base + *it;
    return acc;
}

DigitExpansion symmetric_digits(const GaussInt& n, const Int& z) {
    require_modulus(z);
    DigitExpansion out{z, {}};
    GaussInt rest = n;
    while (!rest.is_zero()) {
        GaussInt d = gsmod(rest, z);
        rest = *exact_div(rest - d, z);
        out.digits.push_back(std::move(d));
    }
    return out;
}

std::optional<MultiPoly> reconstruct_bounded(const MultiPoly& h, const Int& z,
                                             const std::string& new_var,
                                             std::size_t max_digits) {
    require_modulus(z);
    const int var = static_cast<int>(h.num_vars());
    std::vector<Term> digits;
    Node rest = h.body();
    for (std::uint32_t j = 0; !rest.is_zero(); ++j) {
        if (j >= max_digits) return std::nullopt;
        Node d = smod_coefficients(rest, z);
        rest = *node::divide_scalar(node::sub(rest, d), z);
        if (!d.is_zero()) digits.push_back({j, std::move(d)});
    }
    std::reverse(digits.begin(), digits.end());
    return h.with_new_main_var(new_var).with_body(node::make(var, std::move(digits)));
}

MultiPoly reconstruct(const MultiPoly& h, const Int& z, const std::string& new_var) {
    return *reconstruct_bounded(h, z, new_var, std::numeric_limits<std::size_t>::max());
}

} // namespace heugcd
