#include "hyperell/oracle.hpp"

#include <map>
#include <numeric>

namespace hyperell {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

std::int64_t to_i64(const Integer& x) {
    if (!x.fits_slong_p())
        throw Error("Overflow", "value too large for the enumeration model", ErrorKind::Internal);
    return x.get_si();
}

bool fits(long level, std::size_t rank, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < rank; ++i) {
        if (total > cap / static_cast<std::uint64_t>(level))
            return false;
        total *= static_cast<std::uint64_t>(level);
    }
    return total <= cap;
}

long to_long(const Integer& x) {
    if (!x.fits_slong_p())
        throw Error("CapExceeded", "level does not fit a machine integer");
    return x.get_si();
}

}  // namespace

TorsionModel::TorsionModel(const HyperellipticDatum& d, long level, std::uint64_t cap)
    : level_(level), rank_(d.torus.rank) {
    if (level < 1)
        throw Error("BadLevel", "level must be positive");
    if (!fits(level, rank_, cap))
        throw Error("CapExceeded", "level " + std::to_string(level) + " gives more than " +
                                       std::to_string(cap) + " points");
    size_ = 1;
    for (std::size_t i = 0; i < rank_; ++i)
        size_ *= static_cast<std::uint64_t>(level);
    for (const auto& a : d.group.elements()) {
        std::vector<std::int64_t> m(rank_ * rank_), s(rank_);
        for (std::size_t i = 0; i < rank_; ++i) {
            for (std::size_t j = 0; j < rank_; ++j)
                m[i * rank_ + j] = mod(to_i64(a.linear(i, j)), level);
            Rational nt = a.translation[i] * level;
            if (nt.get_den() != 1)
                throw Error("BadLevel", "level " + std::to_string(level) +
                                            " does not clear the translation of " + a.name);
            s[i] = mod(to_i64(nt.get_num()), level);
        }
        mats_.push_back(std::move(m));
        shifts_.push_back(std::move(s));
    }
}

void TorsionModel::decode(std::uint64_t point, std::vector<std::int64_t>& coords) const {
    coords.resize(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
        coords[i] = static_cast<std::int64_t>(point % static_cast<std::uint64_t>(level_));
        point /= static_cast<std::uint64_t>(level_);
    }
}

std::uint64_t TorsionModel::encode(const std::vector<std::int64_t>& coords) const {
    std::uint64_t p = 0;
    for (std::size_t i = rank_; i-- > 0;)
        p = p * static_cast<std::uint64_t>(level_) + static_cast<std::uint64_t>(coords[i]);
    return p;
}

std::uint64_t TorsionModel::apply(std::size_t element, std::uint64_t point) const {
    std::vector<std::int64_t> u, v(rank_);
    decode(point, u);
    const auto& m = mats_[element];
    const auto& s = shifts_[element];
    for (std::size_t i = 0; i < rank_; ++i) {
        std::int64_t acc = s[i];
        for (std::size_t j = 0; j < rank_; ++j)
            acc += m[i * rank_ + j] * u[j];
        v[i] = mod(acc, level_);
    }
    return encode(v);
}

RatVector TorsionModel::point(std::uint64_t index) const {
    std::vector<std::int64_t> u;
    decode(index, u);
    RatVector r(rank_);
    for (std::size_t i = 0; i < rank_; ++i)
        r[i] = Rational(static_cast<long>(u[i]), static_cast<unsigned long>(level_));
    return r;
}

TorsionModel build_model(const HyperellipticDatum& d, long level, std::uint64_t cap) {
    return TorsionModel(d, level, cap);
}

std::uint64_t oracle_fixed_points(const TorsionModel& model, std::size_t element) {
    std::uint64_t count = 0;
    for (std::uint64_t p = 0; p < model.size(); ++p)
        if (model.apply(element, p) == p)
            ++count;
    return count;
}

LevelChoice choose_level(const HyperellipticDatum& d, std::uint64_t cap) {
    const ActionGroup& g = d.group;
    const std::size_t rank = d.torus.rank;
    Integer dens = 1, orders = 1, bounds = 1;
    for (std::size_t i = 0; i < g.order(); ++i) {
        const AffineAut& a = g.element(i);
        dens = lcm(dens, lcm_of_denominators(a.translation));
        orders = lcm(orders, Integer(static_cast<unsigned long>(g.element_order(i))));
        if (i != 0 && has_fixed_point(a))
            bounds = lcm(bounds, fixed_point_level_bound(a));
    }
    LevelChoice c;
    const long nominal = to_long(dens * orders);
    c.nominal_level = nominal;
    const long with_bounds = to_long(lcm(Integer(nominal), bounds));
    const long reduced = to_long(lcm(dens, bounds));
    if (fits(with_bounds, rank, cap)) {
        c.level = with_bounds;
        c.nominal = true;
        c.exhaustive = true;
        c.note = with_bounds == nominal ? "nominal level" : "nominal level times fixed-point bound";
    } else if (fits(nominal, rank, cap)) {
        c.level = nominal;
        c.nominal = true;
        c.exhaustive = Integer(nominal) % bounds == 0;
        c.note = "nominal level";
    } else if (fits(reduced, rank, cap)) {
        c.level = reduced;
        c.exhaustive = true;
        c.note = "reduced level: nominal level " + std::to_string(nominal) +
                 " exceeds the enumeration cap; lcm of denominators and fixed-point bounds used";
    } else {
        c.level = to_long(dens);
        c.exhaustive = dens % bounds == 0;
        c.note = "reduced level: only the translation denominators fit the enumeration cap";
    }
    return c;
}

FiberCountVerdict oracle_fiber_count(const TorsionModel& model, const AlbaneseReport& report) {
    FiberCountVerdict v;
    const std::size_t rank = model.rank();
    const std::size_t r0 = report.lambda0.cols();
    const long n = model.level();
    v.points = model.size();
    v.h_order = report.subgroup_h.size();

    // c0(u / N) = (P0 u) / (D N) with P0 integral after scaling by D
    RatMatrix proj = inverse(to_rational(hstack(report.lambda0, report.lambda1)));
    RatMatrix p0(r0, rank);
    for (std::size_t i = 0; i < r0; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            p0(i, j) = proj(i, j);
    Integer dd = lcm_of_denominators(p0);

    std::vector<RatVector> base_gens;
    for (std::size_t i = 0; i < r0; ++i) {
        RatVector e(r0);
        e[i] = 1;
        base_gens.push_back(e);
    }
    for (const auto& g : report.k0.generators)
        base_gens.push_back(g);
    RationalLattice base = RationalLattice::generated_by(base_gens, r0);
    std::vector<RatVector> alb_cols;
    for (std::size_t j = 0; j < report.albanese_lattice.cols(); ++j)
        alb_cols.push_back(report.albanese_lattice.column(j));
    RationalLattice alb = RationalLattice::generated_by(alb_cols, r0);

    const Integer scale = lcm(lcm(dd * n, alb.denominator()), base.denominator());
    const std::int64_t up = to_i64(Integer(scale / (dd * n)));
    std::vector<std::int64_t> p0i(r0 * rank);
    for (std::size_t i = 0; i < r0; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            p0i[i * rank + j] = to_i64(Rational(p0(i, j) * dd).get_num()) * up;

    auto scaled_basis = [&](const RationalLattice& l) {
        RatMatrix b = l.basis();
        std::vector<std::int64_t> out(r0 * r0);
        for (std::size_t i = 0; i < r0; ++i)
            for (std::size_t j = 0; j < r0; ++j)
                out[i * r0 + j] = to_i64(Rational(b(i, j) * scale).get_num());
        return out;
    };
    // canonical bases are lower triangular with positive diagonal
    const auto alb_b = scaled_basis(alb);
    const auto base_b = scaled_basis(base);
    auto reduce = [&](std::vector<std::int64_t> w, const std::vector<std::int64_t>& b) {
        for (std::size_t k = 0; k < r0; ++k) {
            std::int64_t piv = b[k * r0 + k];
            std::int64_t q = w[k] / piv;
            if (mod(w[k], piv) != w[k] - q * piv)
                --q;
            if (q != 0)
                for (std::size_t i = k; i < r0; ++i)
                    w[i] -= q * b[i * r0 + k];
        }
        return w;
    };
    std::vector<std::int64_t> u;
    auto raw_key = [&](std::uint64_t p) {
        model.decode(p, u);
        std::vector<std::int64_t> w(r0, 0);
        for (std::size_t i = 0; i < r0; ++i)
            for (std::size_t j = 0; j < rank; ++j)
                w[i] += p0i[i * rank + j] * u[j];
        return w;
    };

    const std::size_t order = model.group_order();
    std::vector<char> seen(model.size(), 0);
    std::map<std::vector<std::int64_t>, std::uint64_t> orbits_per_key;
    std::map<std::vector<std::int64_t>, std::uint64_t> first_point;
    std::uint64_t total = 0;
    for (std::uint64_t p = 0; p < model.size(); ++p) {
        auto w = raw_key(p);
        bool zero = true;
        for (auto x : reduce(w, base_b))
            if (x != 0)
                zero = false;
        if (zero)
            ++v.base_points;
        if (seen[p])
            continue;
        auto key = reduce(w, alb_b);
        std::uint64_t size = 0;
        for (std::size_t gi = 0; gi < order; ++gi) {
            std::uint64_t q = model.apply(gi, p);
            if (seen[q])
                continue;
            seen[q] = 1;
            ++size;
            if (reduce(raw_key(q), alb_b) != key)
                internal_error("KeyNotInvariant", "Albanese key is not constant on an orbit");
        }
        if (order % size != 0)
            internal_error("OrbitSize", "orbit size does not divide the group order");
        total += size;
        ++v.orbits;
        if (orbits_per_key[key]++ == 0)
            first_point[key] = p;
    }
    if (total != model.size())
        internal_error("OrbitSum", "orbit sizes do not add up to the model size");
    v.fibers = orbits_per_key.size();

    if (v.h_order == 0 || v.base_points % v.h_order != 0) {
        v.pass = false;
        v.message = "points over the base point are not a multiple of |H|";
        return v;
    }
    v.expected_orbits_per_fiber = v.base_points / v.h_order;
    v.pass = true;
    for (const auto& [key, count] : orbits_per_key)
        if (count != v.expected_orbits_per_fiber) {
            v.pass = false;
            v.witness = model.point(first_point[key]);
            v.witness_orbits = count;
            v.message = "fiber through " + to_string(*v.witness) + " has " + std::to_string(count) +
                        " orbits, expected " + std::to_string(v.expected_orbits_per_fiber);
            break;
        }
    if (v.pass)
        v.message = "every fiber has " + std::to_string(v.expected_orbits_per_fiber) + " orbits";
    return v;
}

bool OracleReport::pass() const {
    for (const auto& c : fixed_points)
        if (!c.agree)
            return false;
    return !fiber || fiber->pass;
}

OracleReport run_oracle(const HyperellipticDatum& d, std::optional<long> level) {
    OracleReport r;
    if (level) {
        r.level.level = *level;
        r.level.nominal_level = choose_level(d, UINT64_MAX).nominal_level;
        r.level.nominal = *level % r.level.nominal_level == 0;
        r.level.exhaustive = true;
        for (std::size_t i = 1; i < d.group.order(); ++i)
            if (has_fixed_point(d.group.element(i)) &&
                Integer(*level) % fixed_point_level_bound(d.group.element(i)) != 0)
                r.level.exhaustive = false;
        r.level.note = "level given explicitly";
    } else {
        r.level = choose_level(d);
    }
    TorsionModel model(d, r.level.level);
    for (std::size_t i = 1; i < d.group.order(); ++i) {
        FixedPointCheck c;
        c.element = d.group.label(i);
        c.oracle_count = oracle_fixed_points(model, i);
        c.exact_has_fixed_point = has_fixed_point(d.group.element(i));
        c.agree = r.level.exhaustive ? (c.oracle_count > 0) == c.exact_has_fixed_point
                                     : (c.oracle_count == 0 || c.exact_has_fixed_point);
        r.fixed_points.push_back(std::move(c));
    }
    if (d.validated)
        r.fiber = oracle_fiber_count(model, run_pipeline(d));
    return r;
}

}  // namespace hyperell
