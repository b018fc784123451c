#include "hyperell/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace hyperell {

std::vector<std::vector<Integer>> HodgeDiamond::rows() const {
    std::vector<std::vector<Integer>> out;
    if (h.empty())
        return out;
    for (std::size_t k = 0; k <= 2 * n; ++k) {
        std::vector<Integer> row;
        std::size_t hi = std::min(k, n), lo = k > n ? k - n : 0;
        for (std::size_t p = hi + 1; p-- > lo;)
            row.push_back(h[p][k - p]);
        out.push_back(std::move(row));
    }
    return out;
}

long character_conductor(const HyperellipticDatum& d) {
    long n = 1;
    for (const auto& a : d.group.elements())
        for (const auto& z : a.eigenvalues)
            n = std::lcm(n, z.order());
    return n;
}

namespace {

void require_eigenvalues(const HyperellipticDatum& d) {
    for (const auto& a : d.group.elements())
        if (a.eigenvalues.size() != d.dim())
            throw Error("EigenvalueCount", "element " + a.name + " lacks eigenvalue data");
}

Integer certified_integer(const CycloNumber& sum, std::size_t order, const std::string& what) {
    Rational v = rational_part(sum) / Rational(static_cast<unsigned long>(order));
    if (v.get_den() != 1 || v < 0)
        throw Error("Inconsistent", what + " averages to " + v.get_str());
    return v.get_num();
}

}  // namespace

std::size_t irregularity(const HyperellipticDatum& d) {
    require_eigenvalues(d);
    const long n = character_conductor(d);
    CycloNumber sum = CycloNumber::zero(n);
    for (const auto& a : d.group.elements())
        for (const auto& z : a.eigenvalues)
            sum += embed(z, n);
    Integer q = certified_integer(sum, d.group.order(), "irregularity");
    std::size_t lattice_q = compute_A0(d).rank() / 2;
    if (q != lattice_q)
        throw Error("Inconsistent", "character irregularity " + q.get_str() +
                                        " differs from fixed-lattice irregularity " +
                                        std::to_string(lattice_q));
    return lattice_q;
}

HodgeDiamond hodge_diamond(const HyperellipticDatum& d) {
    require_eigenvalues(d);
    const long cond = character_conductor(d);
    const std::size_t n = d.dim();
    std::vector<std::vector<CycloNumber>> sums(n + 1,
                                               std::vector<CycloNumber>(n + 1, CycloNumber::zero(cond)));
    for (const auto& a : d.group.elements()) {
        std::vector<CycloNumber> eig;
        for (const auto& z : a.eigenvalues)
            eig.push_back(embed(z, cond));
        std::vector<CycloNumber> e, ebar;
        for (std::size_t p = 0; p <= n; ++p) {
            e.push_back(elementary_symmetric(eig, p, cond));
            ebar.push_back(e.back().conj());
        }
        for (std::size_t p = 0; p <= n; ++p)
            for (std::size_t q = 0; q <= n; ++q)
                sums[p][q] += e[p] * ebar[q];
    }
    HodgeDiamond hd;
    hd.n = n;
    hd.h.assign(n + 1, std::vector<Integer>(n + 1));
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; q <= n; ++q)
            hd.h[p][q] = certified_integer(sums[p][q], d.group.order(),
                                           "h^{" + std::to_string(p) + "," + std::to_string(q) + "}");
    return hd;
}

std::size_t canonical_order(const HyperellipticDatum& d) {
    require_eigenvalues(d);
    long order = 1;
    for (const auto& a : d.group.elements()) {
        RootOfUnity det;
        for (const auto& z : a.eigenvalues)
            det = det * z;
        order = std::lcm(order, det.order());
    }
    return static_cast<std::size_t>(order);
}

InvariantsReport compute_invariants(const HyperellipticDatum& d) {
    InvariantsReport r;
    r.dim = d.dim();
    r.q = irregularity(d);
    r.diamond = hodge_diamond(d);
    if (r.dim >= 1 && r.diamond.h[1][0] != static_cast<unsigned long>(r.q))
        throw Error("Inconsistent", "h^{1,0} differs from the irregularity");
    r.canonical_order = canonical_order(d);
    for (std::size_t q = 0; q <= r.dim; ++q)
        r.euler_char_O += (q % 2 == 0 ? 1 : -1) * r.diamond.h[0][q];
    r.group_order = d.group.order();
    r.cyclic = d.group.cyclic();
    return r;
}

PullbackDiagnostic canonical_report(const AlbaneseReport& report, const InvariantsReport& inv_x,
                                    const InvariantsReport& inv_f) {
    if (inv_f.dim != report.fiber_dim || inv_x.dim != report.dim)
        internal_error("DimensionMismatch", "invariant reports do not match the Albanese report");
    PullbackDiagnostic p;
    p.x_order = inv_x.canonical_order;
    p.fiber_order = inv_f.canonical_order;
    p.divides = p.x_order % p.fiber_order == 0;
    if (!p.divides)
        throw Error("DivisibilityViolation",
                    "fiber canonical order " + std::to_string(p.fiber_order) +
                        " does not divide " + std::to_string(p.x_order),
                    ErrorKind::Internal);
    p.pulled_back = p.fiber_order == 1;
    return p;
}

std::string format_diamond(const HodgeDiamond& d) {
    auto rows = d.rows();
    std::size_t width = 1;
    for (const auto& row : rows)
        for (const auto& x : row)
            width = std::max(width, x.get_str().size());
    // 2n+1 slots per line; row with m entries starts at slot n+1-m
    const std::size_t slots = 2 * d.n + 1;
    std::string out;
    for (const auto& row : rows) {
        std::vector<std::string> cells(slots, std::string(width, ' '));
        const std::size_t start = d.n + 1 - row.size();
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::string s = row[i].get_str();
            cells[start + 2 * i] = std::string(width - s.size(), ' ') + s;
        }
        std::string line;
        for (std::size_t i = 0; i < slots; ++i) {
            if (i)
                line += ' ';
            line += cells[i];
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line + "\n";
    }
    return out;
}

}  // namespace hyperell
