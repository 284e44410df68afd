#include "heugcd/random.hpp"

#include "heugcd/error.hpp"

namespace heugcd {

Rng::Rng(std::uint64_t seed) : state_(gmp_randinit_mt) { state_.seed(seed); }

Int Rng::uniform(const Int& lo, const Int& hi) {
    const Int span = hi - lo + 1;
    return lo + state_.get_z_range(span);
}

unsigned Rng::uniform(unsigned lo, unsigned hi) {
    return static_cast<unsigned>(uniform(Int(lo), Int(hi)).get_ui());
}

GaussInt random_scalar(Rng& rng, RingTag ring, const Int& height) {
    if (height < 1) throw domain_error("coefficient height must be positive");
    if (ring == RingTag::Integers) {
        Int v = 0;
        while (sgn(v) == 0) v = rng.uniform(Int(-height), height);
        return GaussInt(std::move(v));
    }
    // Components within height/sqrt(2) keep the Euclidean height <= height.
    Int comp = sqrt(Int(height * height / 2));
    if (comp < 1) comp = 1;
    while (true) {
        GaussInt c{rng.uniform(Int(-comp), comp), rng.uniform(Int(-comp), comp)};
        if (!c.is_zero() && coeff_height(c) <= height) return c;
    }
}

MultiPoly random_poly(Rng& rng, RingTag ring, const MultiPoly::VarList& vars,
                      const std::vector<unsigned>& max_degree, const Int& height,
                      std::size_t terms) {
    MultiPoly zero(ring, vars);
    std::vector<MultiPoly> xs;
    for (std::size_t v = 0; v < vars.size(); ++v) xs.push_back(zero.with_body(MultiPoly::variable(ring, vars, v).body()));
    MultiPoly out = zero;
    while (out.is_zero()) {
        const std::size_t n = rng.uniform(1U, static_cast<unsigned>(std::max<std::size_t>(terms, 1)));
        for (std::size_t t = 0; t < n; ++t) {
            MultiPoly m = zero.with_body(Node(random_scalar(rng, ring, height)));
            for (std::size_t v = 0; v < vars.size(); ++v)
                m = m * pow(xs[v], rng.uniform(0U, max_degree[v]));
            out = out + m;
        }
    }
    return out;
}

MultiPoly random_dense_univariate(Rng& rng, RingTag ring, const std::string& var,
                                  unsigned degree, const Int& height) {
    MultiPoly zero(ring, {var});
    std::vector<Term> terms;
    for (unsigned e = degree + 1; e-- > 0;) terms.push_back({e, Node(random_scalar(rng, ring, height))});
    return zero.with_body(node::make(0, std::move(terms)));
}

PlantedInstance planted_instance(Rng& rng, const PlantedSpec& spec) {
    const auto vars = default_vars(spec.num_vars);
    std::vector<unsigned> deg_h(spec.num_vars), deg_a(spec.num_vars), deg_b(spec.num_vars);
    for (std::size_t v = 0; v < spec.num_vars; ++v) {
        deg_h[v] = rng.uniform(0U, spec.max_degree / 2);
        deg_a[v] = rng.uniform(0U, spec.max_degree - deg_h[v]);
        deg_b[v] = rng.uniform(0U, spec.max_degree - deg_h[v]);
    }
    PlantedInstance inst{random_poly(rng, spec.ring, vars, deg_a, spec.height, spec.max_terms),
                         random_poly(rng, spec.ring, vars, deg_b, spec.height, spec.max_terms),
                         random_poly(rng, spec.ring, vars, deg_h, spec.height, spec.max_terms),
                         MultiPoly(spec.ring, vars), MultiPoly(spec.ring, vars)};
    inst.p = inst.a * inst.h;
    inst.q = inst.b * inst.h;
    return inst;
}

MultiPoly::VarList default_vars(std::size_t n) {
    static const char* names[] = {"x", "y", "z", "w", "v", "u", "t", "s"};
    MultiPoly::VarList out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(i < std::size(names) ? names[i] : "x" + std::to_string(i));
    return out;
}

} // namespace heugcd
