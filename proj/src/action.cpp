#include "hyperell/action.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace hyperell {

namespace {

std::string key_of(const IntMatrix& m, const RatVector& t) {
    std::string k;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            k += m(i, j).get_str();
            k += ',';
        }
    k += '|';
    for (const auto& x : t) {
        k += x.get_str();
        k += ',';
    }
    return k;
}

std::string power_label(const std::string& name, long e) {
    return e == 1 ? name : name + "^" + std::to_string(e);
}

}  // namespace

AffineAut compose(const AffineAut& a, const AffineAut& b) {
    AffineAut r;
    r.linear = a.linear * b.linear;
    r.translation = reduce_mod_one(a.linear * b.translation + a.translation);
    if (a.eigenvalues.size() == b.eigenvalues.size())
        for (std::size_t i = 0; i < a.eigenvalues.size(); ++i)
            r.eigenvalues.push_back(a.eigenvalues[i] * b.eigenvalues[i]);
    return r;
}

AffineAut identity_aut(std::size_t rank, std::size_t dim) {
    AffineAut r;
    r.name = "e";
    r.linear = IntMatrix::identity(rank);
    r.translation = RatVector(rank);
    r.eigenvalues.assign(dim, RootOfUnity::one());
    return r;
}

bool is_translation(const AffineAut& a) { return a.linear == IntMatrix::identity(a.linear.rows()); }

bool is_identity(const AffineAut& a) { return is_translation(a) && is_zero(a.translation); }

// ---- ActionGroup ------------------------------------------------------------

std::size_t ActionGroup::inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b)
        if (table_[a][b] == 0)
            return b;
    internal_error("NoInverse", "group element without inverse");
}

std::size_t ActionGroup::element_order(std::size_t a) const {
    std::size_t k = 1, x = a;
    while (x != 0) {
        x = table_[x][a];
        ++k;
    }
    return k;
}

bool ActionGroup::abelian() const {
    for (std::size_t a = 0; a < order(); ++a)
        for (std::size_t b = a + 1; b < order(); ++b)
            if (table_[a][b] != table_[b][a])
                return false;
    return true;
}

bool ActionGroup::cyclic() const {
    for (std::size_t a = 0; a < order(); ++a)
        if (element_order(a) == order())
            return true;
    return false;
}

std::optional<std::size_t> ActionGroup::find(const AffineAut& a) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i].same_map(a))
            return i;
    return std::nullopt;
}

std::optional<std::size_t> ActionGroup::find_label(const std::string& label) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i].name == label)
            return i;
    return std::nullopt;
}

ActionGroup close_group(const std::vector<AffineAut>& gens_in, std::size_t rank, std::size_t cap) {
    std::vector<AffineAut> gens = gens_in;
    for (auto& g : gens) {
        if (g.linear.rows() != rank || g.linear.cols() != rank || g.translation.size() != rank)
            throw Error("DimensionMismatch", "generator '" + g.name + "' has the wrong size");
        g.translation = reduce_mod_one(g.translation);
    }
    const std::size_t dim = rank / 2;

    // breadth-first closure
    std::vector<AffineAut> found{identity_aut(rank, dim)};
    std::map<std::string, std::size_t> index{{key_of(found[0].linear, found[0].translation), 0}};
    std::vector<std::pair<std::size_t, std::size_t>> parent{{0, 0}};  // (element, generator)
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < gens.size(); ++k) {
            AffineAut p = compose(found[i], gens[k]);
            std::string key = key_of(p.linear, p.translation);
            if (index.count(key))
                continue;
            if (found.size() >= cap)
                throw Error("NotClosedWithinCap",
                            "group exceeds " + std::to_string(cap) + " elements");
            index.emplace(key, found.size());
            found.push_back(std::move(p));
            parent.emplace_back(i, k);
            queue.push_back(found.size() - 1);
        }
    }
    const std::size_t n = found.size();

    // labels from exponent tuples g1^e1 * ... * gk^ek in order of total degree
    std::vector<std::string> label(n);
    std::vector<std::size_t> order_of_label;
    label[0] = "e";
    order_of_label.push_back(0);
    std::vector<long> gen_order;
    for (const auto& g : gens) {
        long o = 1;
        AffineAut x = g;
        while (!is_identity(x)) {
            x = compose(x, g);
            ++o;
        }
        gen_order.push_back(o);
    }
    long total = 1;
    for (long o : gen_order)
        total = (total > 100000) ? total : total * o;
    if (!gens.empty() && total <= 100000) {
        std::vector<std::vector<long>> tuples;
        std::vector<long> e(gens.size(), 0);
        for (;;) {
            tuples.push_back(e);
            std::size_t i = 0;
            while (i < e.size()) {
                if (++e[i] < gen_order[i])
                    break;
                e[i] = 0;
                ++i;
            }
            if (i == e.size())
                break;
        }
        std::stable_sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) {
            long sa = std::accumulate(a.begin(), a.end(), 0L);
            long sb = std::accumulate(b.begin(), b.end(), 0L);
            if (sa != sb)
                return sa < sb;
            return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
        });
        for (const auto& t : tuples) {
            AffineAut x = identity_aut(rank, dim);
            std::string name;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i] == 0)
                    continue;
                for (long j = 0; j < t[i]; ++j)
                    x = compose(x, gens[i]);
                if (!name.empty())
                    name += "*";
                name += power_label(gens[i].name, t[i]);
            }
            std::size_t idx = index.at(key_of(x.linear, x.translation));
            if (label[idx].empty()) {
                label[idx] = name;
                order_of_label.push_back(idx);
            }
        }
    }
    // anything left (non-abelian groups) gets its breadth-first word
    for (std::size_t i = 1; i < n; ++i) {
        if (!label[i].empty())
            continue;
        std::vector<std::size_t> word;
        for (std::size_t j = i; j != 0; j = parent[j].first)
            word.push_back(parent[j].second);
        std::string name;
        for (auto it = word.rbegin(); it != word.rend();) {
            auto run = it;
            long e = 0;
            while (run != word.rend() && *run == *it) {
                ++run;
                ++e;
            }
            if (!name.empty())
                name += "*";
            name += power_label(gens[*it].name, e);
            it = run;
        }
        label[i] = name;
        order_of_label.push_back(i);
    }

    ActionGroup g;
    g.generators_ = gens;
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) {
        position[order_of_label[p]] = p;
        AffineAut x = found[order_of_label[p]];
        x.name = label[order_of_label[p]];
        g.elements_.push_back(std::move(x));
    }
    std::map<std::string, std::size_t> final_index;
    for (std::size_t p = 0; p < n; ++p)
        final_index.emplace(key_of(g.elements_[p].linear, g.elements_[p].translation), p);
    g.table_.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            AffineAut p = compose(g.elements_[a], g.elements_[b]);
            g.table_[a][b] = final_index.at(key_of(p.linear, p.translation));
        }
    return g;
}

// ---- construction ---------------------------------------------------------

HyperellipticDatum build_datum(const BuilderSpec& spec) {
    HyperellipticDatum d;
    d.torus = build_product_torus(spec.factors, spec.k_gens);
    d.builder_mode = true;
    const std::size_t nf = spec.factors.size();
    const std::size_t rank = 2 * nf;
    std::vector<AffineAut> gens;
    for (const auto& bg : spec.generators) {
        if (bg.linear.size() != nf)
            throw Error("DimensionMismatch", "generator '" + bg.name + "' lists " +
                                                 std::to_string(bg.linear.size()) +
                                                 " factor actions for " + std::to_string(nf) +
                                                 " factors");
        if (bg.translation.size() != rank)
            throw Error("DimensionMismatch", "generator '" + bg.name + "' translation length");
        IntMatrix amb(rank, rank);
        AffineAut a;
        a.name = bg.name;
        for (std::size_t f = 0; f < nf; ++f) {
            IntMatrix block;
            RootOfUnity z;
            if (std::holds_alternative<RootOfUnity>(bg.linear[f])) {
                z = std::get<RootOfUnity>(bg.linear[f]);
                block = factor_automorphism_matrix(spec.factors[f], z);
            } else {
                block = std::get<IntMatrix>(bg.linear[f]);
                z = factor_root_of_block(spec.factors[f], block);
            }
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    amb(2 * f + i, 2 * f + j) = block(i, j);
            a.eigenvalues.push_back(z);
        }
        a.linear = d.torus.linear_to_lattice(amb);
        a.translation = reduce_mod_one(d.torus.to_lattice(bg.translation));
        gens.push_back(std::move(a));
    }
    d.group = close_group(gens, rank);
    d.form = standard_form(d.torus);
    bool invariant = std::all_of(gens.begin(), gens.end(),
                                 [&](const AffineAut& g) { return d.form.invariant_under(g.linear); });
    if (!invariant) {
        std::vector<IntMatrix> mats;
        for (const auto& g : gens)
            mats.push_back(g.linear);
        d.form = average_form(d.form, mats);
    }
    return d;
}

HyperellipticDatum make_raw_datum(TorusDatum torus, const std::vector<RawGenerator>& gens,
                                  std::optional<AlternatingForm> form) {
    HyperellipticDatum d;
    const std::size_t rank = torus.rank;
    std::vector<AffineAut> auts;
    for (const auto& g : gens) {
        if (g.matrix.rows() != rank || g.matrix.cols() != rank)
            throw Error("DimensionMismatch", "matrix of '" + g.name + "' is not " +
                                                 std::to_string(rank) + "x" + std::to_string(rank));
        if (g.translation.size() != rank)
            throw Error("DimensionMismatch", "translation of '" + g.name + "' has wrong length");
        if (g.eigenvalues.size() != rank / 2)
            throw Error("EigenvalueCount", "'" + g.name + "' needs " + std::to_string(rank / 2) +
                                               " eigenvalues");
        Integer det = determinant(g.matrix);
        if (det != 1 && det != -1)
            throw Error("LatticeNotPreserved", "matrix of '" + g.name + "' is not unimodular");
        auts.push_back({g.name, g.matrix, reduce_mod_one(g.translation), g.eigenvalues});
    }
    if (form) {
        if (form->matrix.rows() != rank || form->matrix.cols() != rank)
            throw Error("DimensionMismatch", "form must be " + std::to_string(rank) + "x" +
                                                 std::to_string(rank));
        d.form = *form;
    } else {
        d.form = standard_form(torus);
    }
    d.torus = std::move(torus);
    d.group = close_group(auts, rank);
    return d;
}

// ---- fixed points -----------------------------------------------------------

namespace {

IntMatrix minus_identity(const IntMatrix& m) {
    IntMatrix a = m;
    for (std::size_t i = 0; i < a.rows(); ++i)
        a(i, i) -= 1;
    return a;
}

}  // namespace

bool has_fixed_point(const AffineAut& a) {
    RatVector neg_t(a.translation.size());
    for (std::size_t i = 0; i < neg_t.size(); ++i)
        neg_t[i] = -a.translation[i];
    return coset_meets_lattice(Sublattice(minus_identity(a.linear)), neg_t);
}

std::optional<RatVector> fixed_point_witness(const AffineAut& a) {
    // U (M - I) V = S; solve S y = -U t modulo Z and take x = V y.
    SmithResult sr = smith_normal_form(minus_identity(a.linear));
    RatVector ut = sr.u * a.translation;
    const std::size_t n = ut.size();
    RatVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Integer s = i < sr.s.cols() ? Integer(sr.s(i, i)) : Integer(0);
        if (s == 0) {
            if (ut[i].get_den() != 1)
                return std::nullopt;
        } else {
            y[i] = -ut[i] / Rational(s);
        }
    }
    RatVector x = reduce_mod_one(sr.v * y);
    RatVector image = reduce_mod_one(a.linear * x + a.translation);
    if (image != x)
        internal_error("BadWitness", "fixed point witness does not verify");
    return x;
}

Integer fixed_point_level_bound(const AffineAut& a) {
    SmithResult sr = smith_normal_form(minus_identity(a.linear));
    Integer bound = lcm_of_denominators(a.translation);
    for (std::size_t i = 0; i < std::min(sr.s.rows(), sr.s.cols()); ++i)
        if (sr.s(i, i) != 0)
            bound = lcm(bound, sr.s(i, i));
    return bound;
}

// ---- validation -------------------------------------------------------------

bool eigenvalues_match(const IntMatrix& linear, const std::vector<RootOfUnity>& eigenvalues) {
    if (2 * eigenvalues.size() != linear.rows())
        return false;
    std::map<long, int> mult;
    try {
        mult = cyclotomic_multiplicities(characteristic_polynomial(linear));
    } catch (const Error&) {
        return false;
    }
    std::map<RootOfUnity, int> count;
    for (const auto& z : eigenvalues) {
        ++count[z];
        ++count[z.conj()];
    }
    std::map<long, long> distinct;
    for (const auto& [z, c] : count) {
        auto it = mult.find(z.order());
        if (it == mult.end() || it->second != c)
            return false;
        ++distinct[z.order()];
    }
    for (const auto& [d, m] : mult)
        if (m > 0 && distinct[d] != euler_phi(d))
            return false;
    return true;
}

bool ValidationReport::passed() const {
    return free() && translations.empty() && has_non_translation && form_antisymmetric &&
           form_nondegenerate && form_invariant && eigen_consistent && faithful;
}

std::vector<std::string> ValidationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& w : fixed_points)
        out.push_back("FixedPoint: " + w.element + " fixes " + to_string(w.point));
    for (const auto& t : translations)
        out.push_back("Translation: " + t + " is a non-trivial translation");
    if (!has_non_translation)
        out.push_back("OnlyTranslations: group acts by translations only");
    if (!form_antisymmetric)
        out.push_back("FormNotAlternating: form is not antisymmetric");
    if (!form_nondegenerate)
        out.push_back("Degenerate: form is singular");
    if (!form_invariant)
        out.push_back("FormNotInvariant: form is not preserved by the group");
    for (const auto& e : eigen_failures)
        out.push_back("EigenvalueMismatch: " + e);
    if (!faithful)
        out.push_back("NotFaithful: distinct elements share a linear part");
    return out;
}

ValidationReport validation_report(const HyperellipticDatum& d) {
    const ActionGroup& g = d.group;
    ValidationReport r;
    r.group_order = g.order();
    for (std::size_t i = 1; i < g.order(); ++i) {
        const AffineAut& a = g.element(i);
        if (is_translation(a)) {
            r.translations.push_back(a.name);
            continue;
        }
        r.has_non_translation = true;
        if (auto w = fixed_point_witness(a))
            r.fixed_points.push_back({a.name, *w});
    }
    r.form_antisymmetric = d.form.antisymmetric();
    r.form_nondegenerate = d.form.nondegenerate();
    r.form_invariant = std::all_of(g.generators().begin(), g.generators().end(),
                                   [&](const AffineAut& a) { return d.form.invariant_under(a.linear); });
    for (std::size_t i = 0; i < g.order(); ++i)
        if (!eigenvalues_match(g.element(i).linear, g.element(i).eigenvalues))
            r.eigen_failures.push_back(g.element(i).name);
    r.eigen_consistent = r.eigen_failures.empty();
    r.faithful = true;
    for (std::size_t i = 0; i < g.order() && r.faithful; ++i)
        for (std::size_t j = i + 1; j < g.order(); ++j)
            if (g.element(i).linear == g.element(j).linear) {
                r.faithful = false;
                break;
            }
    return r;
}

ValidationReport validate(HyperellipticDatum& d) {
    ValidationReport r = validation_report(d);
    d.validated = r.passed();
    return r;
}

// ---- translations -----------------------------------------------------------

std::vector<std::size_t> translation_subgroup(const ActionGroup& g) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.order(); ++i)
        if (is_translation(g.element(i)))
            out.push_back(i);
    return out;
}

HyperellipticDatum quotient_by_translations(const HyperellipticDatum& d) {
    auto trans = translation_subgroup(d.group);
    if (trans.size() == 1)
        return d;
    const std::size_t rank = d.torus.rank;
    std::vector<RatVector> gens;
    for (std::size_t i = 0; i < rank; ++i) {
        RatVector e(rank);
        e[i] = 1;
        gens.push_back(e);
    }
    for (std::size_t i : trans)
        gens.push_back(d.group.element(i).translation);
    RatMatrix b = RationalLattice::generated_by(gens, rank).basis();
    RatMatrix binv = inverse(b);

    HyperellipticDatum out;
    out.builder_mode = d.builder_mode;
    out.torus = d.torus;
    out.torus.basis = d.torus.basis * b;
    for (std::size_t i : trans)
        if (i != 0)
            out.torus.quotient_gens.push_back(d.torus.to_ambient(d.group.element(i).translation));
    out.form = {b.transpose() * d.form.matrix * b};

    std::vector<AffineAut> new_gens;
    for (const auto& g : d.group.generators()) {
        AffineAut a;
        a.name = g.name;
        RatMatrix m = binv * to_rational(g.linear) * b;
        if (!is_integral(m))
            internal_error("LatticeNotPreserved", "translation subgroup is not normal");
        a.linear = to_integer(m);
        a.translation = reduce_mod_one(binv * g.translation);
        a.eigenvalues = g.eigenvalues;
        if (is_identity(a))
            continue;
        new_gens.push_back(std::move(a));
    }
    out.group = close_group(new_gens, rank);
    if (out.group.order() * trans.size() != d.group.order())
        internal_error("QuotientOrder", "quotient by translations has the wrong order");
    return out;
}

}  // namespace hyperell
