#include "hyperell/cyclotomic.hpp"

#include <numeric>

namespace hyperell {

RootOfUnity::RootOfUnity(long k, long n) {
    if (n < 1)
        throw Error("InvalidRoot", "root of unity needs a positive order");
    k %= n;
    if (k < 0)
        k += n;
    long g = std::gcd(k, n);
    if (g == 0)
        g = n;
    k_ = k / g;
    n_ = n / g;
}

RootOfUnity RootOfUnity::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            long k = std::stol(text, &used);
            if (used != text.size())
                throw std::invalid_argument(text);
            return {k, 1};
        }
        std::string a = text.substr(0, slash), b = text.substr(slash + 1);
        long k = std::stol(a, &used);
        if (used != a.size())
            throw std::invalid_argument(text);
        long n = std::stol(b, &used);
        if (used != b.size() || n < 1)
            throw std::invalid_argument(text);
        return {k, n};
    } catch (const std::logic_error&) {
        throw Error("BadRoot", "cannot read root of unity '" + text + "'", ErrorKind::Parse);
    }
}

RootOfUnity RootOfUnity::pow(long e) const {
    long m = e % n_;
    if (m < 0)
        m += n_;
    return {(k_ * m) % n_, n_};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    long n = std::lcm(n_, o.n_);
    return {k_ * (n / n_) + o.k_ * (n / o.n_), n};
}

std::string RootOfUnity::to_string() const {
    return std::to_string(k_) + "/" + std::to_string(n_);
}

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

IntPolynomial poly_multiply(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.empty() || b.empty())
        return {};
    IntPolynomial r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

std::optional<IntPolynomial> poly_divide_exact(const IntPolynomial& a, const IntPolynomial& monic) {
    if (monic.empty() || monic.back() != 1)
        internal_error("NotMonic", "polynomial division needs a monic divisor");
    if (a.size() < monic.size())
        return std::nullopt;
    IntPolynomial rem = a;
    const std::size_t d = monic.size() - 1;
    IntPolynomial q(a.size() - d);
    for (std::size_t i = a.size(); i-- > d;) {
        Integer c = rem[i];
        q[i - d] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= d; ++j)
            rem[i - d + j] -= c * monic[j];
    }
    for (std::size_t i = 0; i < d; ++i)
        if (rem[i] != 0)
            return std::nullopt;
    return q;
}

static int moebius(long n) {
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

IntPolynomial cyclotomic_polynomial(long n) {
    if (n < 1)
        throw Error("InvalidOrder", "cyclotomic polynomial needs n >= 1");
    // Phi_n = prod_{d | n} (x^d - 1)^mu(n/d)
    IntPolynomial num{1};
    std::vector<long> den;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        int mu = moebius(n / d);
        if (mu == 0)
            continue;
        if (mu > 0) {
            IntPolynomial f(static_cast<std::size_t>(d) + 1);
            f[0] = -1;
            f[static_cast<std::size_t>(d)] = 1;
            num = poly_multiply(num, f);
        } else {
            den.push_back(d);
        }
    }
    for (long d : den) {
        IntPolynomial f(static_cast<std::size_t>(d) + 1);
        f[0] = -1;
        f[static_cast<std::size_t>(d)] = 1;
        auto q = poly_divide_exact(num, f);
        if (!q)
            internal_error("CyclotomicDivision", "x^d - 1 does not divide the product");
        num = *q;
    }
    return num;
}

std::map<long, int> cyclotomic_multiplicities(const IntPolynomial& p) {
    std::map<long, int> mult;
    IntPolynomial rest = p;
    const long deg = static_cast<long>(p.size()) - 1;
    // phi(d) <= deg forces d <= 2 deg^2 (phi(d) >= sqrt(d/2))
    for (long d = 1; d <= 2 * deg * deg + 2 && rest.size() > 1; ++d) {
        if (euler_phi(d) > deg)
            continue;
        IntPolynomial phi = cyclotomic_polynomial(d);
        while (rest.size() >= phi.size()) {
            auto q = poly_divide_exact(rest, phi);
            if (!q)
                break;
            rest = *q;
            ++mult[d];
        }
    }
    if (rest.size() != 1 || rest[0] != 1)
        throw Error("NotFiniteOrder", "characteristic polynomial is not a product of cyclotomic factors");
    return mult;
}

// ---- CycloNumber ----------------------------------------------------------

CycloNumber::CycloNumber(long conductor) : n_(conductor) {
    if (conductor < 1)
        throw Error("InvalidConductor", "conductor must be positive");
    c_.assign(static_cast<std::size_t>(euler_phi(conductor)), Rational(0));
}

CycloNumber::CycloNumber(long conductor, const Rational& constant) : CycloNumber(conductor) {
    c_[0] = constant;
}

void CycloNumber::reduce_from(RatVector full) {
    IntPolynomial phi = cyclotomic_polynomial(n_);
    const std::size_t d = phi.size() - 1;
    for (std::size_t i = full.size(); i-- > d;) {
        Rational c = full[i];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= d; ++j)
            full[i - d + j] -= c * Rational(phi[j]);
    }
    full.resize(d);
    c_ = std::move(full);
}

static void require_same(long a, long b) {
    if (a != b)
        throw Error("ConductorMismatch", "cyclotomic numbers live in different fields",
                    ErrorKind::Internal);
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    require_same(n_, o.n_);
    CycloNumber r(n_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = c_[i] + o.c_[i];
    return r;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
    require_same(n_, o.n_);
    CycloNumber r(n_);
    for (std::size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = c_[i] - o.c_[i];
    return r;
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    require_same(n_, o.n_);
    RatVector full(c_.size() + o.c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            full[i + j] += c_[i] * o.c_[j];
    }
    CycloNumber r(n_);
    r.reduce_from(std::move(full));
    return r;
}

CycloNumber CycloNumber::scaled(const Rational& s) const {
    CycloNumber r = *this;
    for (auto& x : r.c_)
        x *= s;
    return r;
}

CycloNumber CycloNumber::conj() const {
    CycloNumber r(n_);
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0)
            r += embed(RootOfUnity(-static_cast<long>(j), n_), n_).scaled(c_[j]);
    return r;
}

bool CycloNumber::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

CycloNumber embed(const RootOfUnity& z, long conductor) {
    if (conductor < 1 || conductor % z.order() != 0)
        throw Error("OrderMismatch", "root " + z.to_string() + " does not lie in Q(zeta_" +
                                         std::to_string(conductor) + ")");
    const long e = z.numerator() * (conductor / z.order());
    RatVector full(static_cast<std::size_t>(e) + 1);
    full[static_cast<std::size_t>(e)] = 1;
    CycloNumber r(conductor);
    r.reduce_from(std::move(full));
    return r;
}

CycloNumber elementary_symmetric(const std::vector<CycloNumber>& values, std::size_t p,
                                 long conductor) {
    if (p > values.size())
        return CycloNumber::zero(conductor);
    // e[k] after processing a prefix of values
    std::vector<CycloNumber> e(p + 1, CycloNumber::zero(conductor));
    e[0] = CycloNumber::one(conductor);
    for (const auto& v : values)
        for (std::size_t k = p; k >= 1; --k)
            e[k] += e[k - 1] * v;
    return e[p];
}

Rational rational_part(const CycloNumber& z) {
    if (!z.is_rational())
        throw Error("NonRational", "character value is not rational");
    return z.coefficients()[0];
}

}  // namespace hyperell
