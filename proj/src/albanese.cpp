#include "hyperell/albanese.hpp"

#include <algorithm>
#include <set>

namespace hyperell {

namespace {

RatVector slice(const RatVector& v, std::size_t from, std::size_t count) {
    return RatVector(v.begin() + static_cast<std::ptrdiff_t>(from),
                     v.begin() + static_cast<std::ptrdiff_t>(from + count));
}

std::vector<RatVector> unit_vectors(std::size_t n) {
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        RatVector e(n);
        e[i] = 1;
        out.push_back(e);
    }
    return out;
}

// Z^{r0} + K_0 as a rational lattice in Lambda_0 coordinates.
RationalLattice lattice_with_k0(const Decomposition& dec) {
    std::vector<RatVector> gens = unit_vectors(dec.r0());
    for (const auto& g : dec.k0.generators)
        gens.push_back(g);
    return RationalLattice::generated_by(gens, dec.r0());
}

std::size_t power_index(const ActionGroup& g, std::size_t x, std::size_t e) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < e; ++i)
        r = g.multiply(r, x);
    return r;
}

std::set<std::size_t> generated_subgroup(const ActionGroup& g, const std::vector<std::size_t>& gens) {
    std::set<std::size_t> s{0};
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::size_t x = frontier.back();
        frontier.pop_back();
        for (std::size_t y : gens) {
            std::size_t z = g.multiply(x, y);
            if (s.insert(z).second)
                frontier.push_back(z);
        }
    }
    return s;
}

}  // namespace

RatVector Decomposition::c0(const RatVector& v) const { return slice(projection * v, 0, r0()); }

RatVector Decomposition::c1(const RatVector& v) const { return slice(projection * v, r0(), r1()); }

Sublattice compute_A0(const HyperellipticDatum& d) {
    const std::size_t rank = d.torus.rank;
    const auto& gens = d.group.generators();
    IntMatrix stacked(rank * gens.size(), rank);
    for (std::size_t k = 0; k < gens.size(); ++k)
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j)
                stacked(k * rank + i, j) = gens[k].linear(i, j) - (i == j ? 1 : 0);
    Sublattice l0 = gens.empty() ? Sublattice::full(rank) : kernel_lattice(stacked);
    if (l0.rank() % 2 != 0)
        throw Error("OddRank", "fixed lattice has odd rank " + std::to_string(l0.rank()));
    return l0;
}

Sublattice compute_A1(const HyperellipticDatum& d, const Sublattice& lambda0) {
    const std::size_t rank = d.torus.rank;
    if (lambda0.rank() == 0)
        return Sublattice::full(rank);
    RatMatrix b0 = to_rational(lambda0.basis());
    RatMatrix w = b0.transpose() * d.form.matrix;  // V_1 = ker w
    if (determinant(w * b0) == 0)
        throw Error("DegenerateRestriction", "invariant form is degenerate on the fixed part");
    Integer den = lcm_of_denominators(w);
    IntMatrix wi(w.rows(), w.cols());
    for (std::size_t i = 0; i < w.rows(); ++i)
        for (std::size_t j = 0; j < w.cols(); ++j)
            wi(i, j) = Rational(w(i, j) * den).get_num();
    Sublattice l1 = kernel_lattice(wi);
    if (l1.rank() + lambda0.rank() != rank)
        internal_error("RankMismatch", "V_0 and V_1 do not span V");
    RatMatrix b1 = to_rational(l1.basis());
    for (const auto& g : d.group.generators()) {
        RatMatrix image = w * to_rational(g.linear) * b1;
        for (std::size_t i = 0; i < image.rows(); ++i)
            for (std::size_t j = 0; j < image.cols(); ++j)
                if (image(i, j) != 0)
                    internal_error("NotStable", "complement is not preserved by " + g.name);
    }
    return l1;
}

Decomposition compute_K(const HyperellipticDatum& d, const Sublattice& lambda0,
                        const Sublattice& lambda1) {
    const std::size_t rank = d.torus.rank;
    Decomposition dec;
    dec.lambda0 = lambda0;
    dec.lambda1 = lambda1;
    IntMatrix both = hstack(lambda0.basis(), lambda1.basis());
    dec.projection = inverse(to_rational(both));
    dec.k = quotient_group(Sublattice::full(rank), Sublattice(both));
    dec.k0.invariant_factors = dec.k.invariant_factors;
    dec.k1.invariant_factors = dec.k.invariant_factors;
    for (const auto& g : dec.k.generators) {
        dec.k0.generators.push_back(reduce_mod_one(dec.c0(g)));
        dec.k1.generators.push_back(reduce_mod_one(dec.c1(g)));
    }
    return dec;
}

Decomposition decompose(const HyperellipticDatum& d) {
    Sublattice l0 = compute_A0(d);
    Sublattice l1 = compute_A1(d, l0);
    return compute_K(d, l0, l1);
}

CocycleTable decompose_cocycle(const HyperellipticDatum& d, const Decomposition& dec) {
    const ActionGroup& g = d.group;
    CocycleTable table;
    for (const auto& a : g.elements()) {
        table.t0.push_back(dec.c0(a.translation));
        table.t1.push_back(dec.c1(a.translation));
    }
    RationalLattice ref = lattice_with_k0(dec);
    for (std::size_t a = 0; a < g.order(); ++a)
        for (std::size_t b = 0; b < g.order(); ++b) {
            RatVector defect = table.t0[g.multiply(a, b)] - table.t0[a] - table.t0[b];
            if (!ref.contains(defect))
                internal_error("CocycleIdentity", "t0 fails the cocycle identity at (" +
                                                      g.label(a) + ", " + g.label(b) + ")");
        }
    return table;
}

std::vector<std::size_t> compute_H(const HyperellipticDatum& d, const Decomposition& dec,
                                   const CocycleTable& table) {
    RationalLattice ref = lattice_with_k0(dec);
    std::vector<std::size_t> h;
    for (std::size_t i = 0; i < d.group.order(); ++i)
        if (ref.contains(table.t0[i]))
            h.push_back(i);
    for (std::size_t a : h)
        for (std::size_t b : h)
            if (!std::binary_search(h.begin(), h.end(), d.group.multiply(a, b)))
                internal_error("NotASubgroup", "H is not closed under multiplication");
    return h;
}

std::pair<RationalLattice, IntVector> compute_albanese(const HyperellipticDatum& d,
                                                       const Decomposition& dec,
                                                       const CocycleTable& table) {
    std::vector<RatVector> extra = dec.k0.generators;
    for (const auto& g : d.group.generators()) {
        auto idx = d.group.find(g);
        if (!idx)
            internal_error("MissingGenerator", "generator not in its own closure");
        extra.push_back(table.t0[*idx]);
    }
    std::vector<RatVector> all = unit_vectors(dec.r0());
    all.insert(all.end(), extra.begin(), extra.end());
    RationalLattice lb = RationalLattice::generated_by(all, dec.r0());
    IntVector factors = dec.r0() == 0 ? IntVector{} : torsion_subgroup(extra, dec.r0()).invariant_factors;
    return {lb, factors};
}

FiberResult compute_fiber(const HyperellipticDatum& d, const Decomposition& dec,
                          const CocycleTable& table, const std::vector<std::size_t>& h) {
    const ActionGroup& g = d.group;
    const std::size_t r0 = dec.r0(), r1 = dec.r1();
    RatMatrix b1 = to_rational(dec.lambda1.basis());
    RatMatrix p1(r1, d.torus.rank);
    for (std::size_t i = 0; i < r1; ++i)
        for (std::size_t j = 0; j < d.torus.rank; ++j)
            p1(i, j) = dec.projection(r0 + i, j);

    // eigenvalue positions that are trivial on the whole group belong to V_0
    const std::size_t n = d.dim();
    std::vector<std::size_t> moving;
    for (std::size_t pos = 0; pos < n; ++pos) {
        bool trivial = true;
        for (const auto& a : g.elements())
            if (pos >= a.eigenvalues.size() || !a.eigenvalues[pos].is_one()) {
                trivial = false;
                break;
            }
        if (!trivial)
            moving.push_back(pos);
    }
    if (2 * (n - moving.size()) != r0)
        throw Error("EigenvalueAlignment",
                    "trivial eigenvalue positions do not match the fixed lattice rank");

    // choose generators of H greedily
    std::vector<std::size_t> chosen;
    std::set<std::size_t> span{0};
    for (std::size_t x : h) {
        if (span.count(x))
            continue;
        chosen.push_back(x);
        span = generated_subgroup(g, chosen);
    }

    FiberResult out;
    std::vector<AffineAut> gens;
    for (std::size_t c = 0; c < chosen.size(); ++c) {
        const std::size_t x = chosen[c];
        const AffineAut& a = g.element(x);
        auto coeffs = group_coefficients(dec.k0, Sublattice::full(r0), table.t0[x]);
        if (!coeffs)
            internal_error("NotInK0", "element of H has t0 outside K_0");
        RatVector k1h(r1);
        for (std::size_t i = 0; i < coeffs->size(); ++i)
            k1h = k1h + Rational((*coeffs)[i]) * dec.k1.generators[i];
        AffineAut f;
        f.name = chosen.size() == 1 ? "h" : "h" + std::to_string(c + 1);
        f.linear = to_integer(p1 * to_rational(a.linear) * b1);
        f.translation = reduce_mod_one(table.t1[x] - k1h);
        for (std::size_t pos : moving)
            f.eigenvalues.push_back(a.eigenvalues[pos]);
        gens.push_back(std::move(f));
        out.generators.push_back({gens.back().name, a.name});
    }

    // fiber torus: product coordinates when V_1 is spanned by factor blocks
    HyperellipticDatum fd;
    RatMatrix amb1 = d.torus.basis * b1;
    std::vector<std::size_t> support_rows;
    std::vector<EllipticFactor> support;
    if (d.torus.has_provenance()) {
        for (std::size_t f = 0; f < d.torus.factors.size(); ++f) {
            bool used = false;
            for (std::size_t j = 0; j < r1; ++j)
                if (amb1(2 * f, j) != 0 || amb1(2 * f + 1, j) != 0)
                    used = true;
            if (used) {
                support.push_back(d.torus.factors[f]);
                support_rows.push_back(2 * f);
                support_rows.push_back(2 * f + 1);
                out.support.push_back(d.torus.factors[f].label);
            }
        }
    }
    out.aligned = !support.empty() && support_rows.size() == r1;
    if (out.aligned) {
        RatMatrix basis(r1, r1);
        for (std::size_t i = 0; i < r1; ++i)
            for (std::size_t j = 0; j < r1; ++j)
                basis(i, j) = amb1(support_rows[i], j);
        std::vector<RatVector> cols;
        for (std::size_t j = 0; j < r1; ++j)
            cols.push_back(basis.column(j));
        fd.torus = raw_torus(r1, basis, support);
        fd.torus.quotient_gens = torsion_subgroup(cols, r1).generators;
    } else {
        fd.torus = raw_torus(r1);
    }
    fd.form = {b1.transpose() * d.form.matrix * b1};
    fd.builder_mode = d.builder_mode && out.aligned;
    fd.group = close_group(gens, r1);
    fd = quotient_by_translations(fd);
    for (auto& fg : out.generators)
        if (!fd.group.find_label(fg.name))
            fg.name.clear();
    std::erase_if(out.generators, [](const FiberGenerator& fg) { return fg.name.empty(); });

    if (fd.group.order() > 1) {
        ValidationReport vr = validate(fd);
        if (!vr.passed()) {
            auto f = vr.failures();
            internal_error("FiberInvalid", "fiber datum fails validation: " + f.front());
        }
    }
    out.datum = std::move(fd);
    return out;
}

IntVector abelian_invariants(const ActionGroup& g) {
    const std::size_t n = g.order();
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> prime_parts;
    std::size_t rest = n;
    for (std::size_t p = 2; p <= rest; ++p) {
        if (rest % p != 0)
            continue;
        std::size_t pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
        }
        // c_j = #{x : x^(p^j) = e}; factors of order >= p^j number log_p(c_j / c_{j-1})
        std::vector<std::size_t> at_least;
        std::size_t prev = 1, q = 1;
        while (prev < pk) {
            q *= p;
            std::size_t c = 0;
            for (std::size_t x = 0; x < n; ++x)
                if (power_index(g, x, q) == 0)
                    ++c;
            std::size_t ratio = c / prev, k = 0;
            while (ratio > 1) {
                ratio /= p;
                ++k;
            }
            at_least.push_back(k);
            prev = c;
        }
        // exponents of the p-parts of the factors, largest first
        std::vector<std::size_t> exps(at_least.empty() ? 0 : at_least[0], 0);
        for (std::size_t j = 0; j < at_least.size(); ++j)
            for (std::size_t i = 0; i < at_least[j]; ++i)
                exps[i] = j + 1;
        prime_parts.push_back({p, exps});
    }
    std::size_t count = 0;
    for (const auto& [p, e] : prime_parts)
        count = std::max(count, e.size());
    IntVector factors(count, Integer(1));
    for (const auto& [p, e] : prime_parts)
        for (std::size_t i = 0; i < e.size(); ++i) {
            Integer pp;
            mpz_ui_pow_ui(pp.get_mpz_t(), p, e[i]);
            factors[i] *= pp;
        }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

FiberClass classify_fiber(const HyperellipticDatum& fiber) {
    FiberClass c;
    const ActionGroup& g = fiber.group;
    c.holonomy_order = g.order();
    c.abelian_variety = g.order() == 1;
    c.cyclic = g.cyclic();
    c.abelian_group = g.abelian();
    if (c.abelian_group && g.order() > 1)
        c.invariant_factors = abelian_invariants(g);
    for (const auto& gen : g.generators()) {
        auto idx = g.find(gen);
        c.generator_orders.push_back(idx ? g.element_order(*idx) : 0);
    }
    return c;
}

namespace {

AlbaneseReport pipeline(const HyperellipticDatum& d, bool recurse, std::size_t depth) {
    if (!d.validated)
        throw Error("NotValidated", "datum must pass validation before the Albanese pipeline");
    Decomposition dec = decompose(d);
    CocycleTable table = decompose_cocycle(d, dec);
    auto h = compute_H(d, dec, table);
    auto [lb, factors] = compute_albanese(d, dec, table);
    FiberResult fr = compute_fiber(d, dec, table, h);

    AlbaneseReport r;
    r.dim = d.dim();
    r.q = dec.r0() / 2;
    r.group_order = d.group.order();
    if (r.group_order > 1 && r.q >= r.dim)
        internal_error("IrregularityBound", "q must be smaller than dim X");
    r.lambda0 = dec.lambda0.basis();
    r.lambda1 = dec.lambda1.basis();
    r.k = dec.k;
    r.k0 = dec.k0;
    r.k1 = dec.k1;
    for (std::size_t i = 0; i < d.group.order(); ++i)
        r.cocycle.push_back({d.group.label(i), table.t0[i], table.t1[i]});
    r.albanese_lattice = lb.basis();
    r.albanese_isogeny_factors = factors;
    for (std::size_t i : h)
        r.subgroup_h.push_back(d.group.label(i));
    r.fiber_dim = dec.r1() / 2;
    r.fiber_class = classify_fiber(fr.datum);
    r.fiber = std::move(fr.datum);
    r.fiber_generators = std::move(fr.generators);
    r.fiber_support = std::move(fr.support);

    bool v0_aligned = true;
    if (d.torus.has_provenance()) {
        RatMatrix amb0 = d.torus.basis * to_rational(dec.lambda0.basis());
        std::size_t rows_used = 0;
        for (std::size_t f = 0; f < d.torus.factors.size(); ++f) {
            bool used = false;
            for (std::size_t j = 0; j < amb0.cols(); ++j)
                if (amb0(2 * f, j) != 0 || amb0(2 * f + 1, j) != 0)
                    used = true;
            rows_used += used ? 2 : 0;
        }
        v0_aligned = rows_used == dec.r0();
    }
    r.j_stability = d.builder_mode && d.torus.has_provenance() && v0_aligned && fr.aligned
                        ? "verified"
                        : "assumed";
    if (r.dim != r.q + r.fiber_dim)
        internal_error("DimensionSum", "dim Alb + dim fiber != dim X");

    if (recurse && !r.fiber_class.abelian_variety && r.q > 0 && depth < d.dim())
        r.fiber_report.push_back(pipeline(r.fiber, true, depth + 1));
    return r;
}

}  // namespace

AlbaneseReport run_pipeline(const HyperellipticDatum& d, bool recurse) {
    return pipeline(d, recurse, 0);
}

RatMatrix albanese_in_ambient(const HyperellipticDatum& d, const AlbaneseReport& r) {
    return d.torus.basis * to_rational(r.lambda0) * r.albanese_lattice;
}

}  // namespace hyperell
