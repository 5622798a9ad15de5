#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace hopfstar {

using Rational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotReal : Error {
    using Error::Error;
};
struct PrecisionExhausted : Error {
    using Error::Error;
};
struct NotInvertible : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

inline std::string rational_to_string(const Rational& q) {
    // canonical form p/q with q > 0, gcd-reduced (mpq keeps it that way)
    std::ostringstream os;
    os << q.get_num() << "/" << q.get_den();
    return os.str();
}

inline Rational rational_from_string(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw ParseError("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

// --- dense rational polynomials, ascending degree ---------------------------

using RatPoly = std::vector<Rational>;

inline void poly_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// division with remainder over Q; divisor must be nonzero
inline std::pair<RatPoly, RatPoly> poly_divmod(RatPoly num, RatPoly den) {
    poly_trim(num);
    poly_trim(den);
    if (den.empty()) throw Error("polynomial division by zero");
    if (num.size() < den.size()) return {{}, std::move(num)};
    RatPoly quot(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size()) {
        size_t shift = num.size() - den.size();
        Rational c = num.back() / den.back();
        quot[shift] = c;
        for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
        poly_trim(num);
    }
    poly_trim(quot);
    return {std::move(quot), std::move(num)};
}

inline RatPoly poly_mod(const RatPoly& a, const RatPoly& m) { return poly_divmod(a, m).second; }

// extended gcd: returns (g, u, v) with u*a + v*b = g, g monic
inline std::tuple<RatPoly, RatPoly, RatPoly> poly_ext_gcd(RatPoly a, RatPoly b) {
    poly_trim(a);
    poly_trim(b);
    RatPoly r0 = std::move(a), r1 = std::move(b);
    RatPoly u0 = {Rational(1)}, u1 = {};
    RatPoly v0 = {}, v1 = {Rational(1)};
    auto sub_mul = [](const RatPoly& x, const RatPoly& q, const RatPoly& y) {
        RatPoly qy = poly_mul(q, y);
        RatPoly r = x;
        r.resize(std::max(r.size(), qy.size()), Rational(0));
        for (size_t i = 0; i < qy.size(); ++i) r[i] -= qy[i];
        poly_trim(r);
        return r;
    };
    while (!r1.empty()) {
        auto [q, r2] = poly_divmod(r0, r1);
        RatPoly u2 = sub_mul(u0, q, u1);
        RatPoly v2 = sub_mul(v0, q, v1);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.empty() && r0.back() != 1) {
        Rational lead = r0.back();
        for (auto& c : r0) c /= lead;
        for (auto& c : u0) c /= lead;
        for (auto& c : v0) c /= lead;
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

// --- cyclotomic polynomials --------------------------------------------------

inline unsigned euler_phi(unsigned n) {
    unsigned result = n, m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

// Phi_n by exact division of x^n - 1 by the lower cyclotomics; cached
inline const RatPoly& cyclotomic_polynomial(unsigned n) {
    static std::map<unsigned, RatPoly> cache;
    static std::mutex mtx;
    if (n == 0) throw Error("cyclotomic order must be positive");
    std::lock_guard<std::mutex> lock(mtx);
    std::function<const RatPoly&(unsigned)> get = [&](unsigned m) -> const RatPoly& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        RatPoly q(m + 1, Rational(0));
        q[0] = -1;
        q[m] = 1;
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0) q = poly_divmod(q, get(d)).first;
        return cache.emplace(m, std::move(q)).first->second;
    };
    return get(n);
}

inline unsigned cyclotomic_degree(unsigned n) {
    return static_cast<unsigned>(cyclotomic_polynomial(n).size() - 1);
}

// --- the *-field Q(zeta_n) ----------------------------------------------------

/// Element of the cyclotomic field Q(zeta_n), reduced mod Phi_n.
/// Complex conjugation is the Galois automorphism zeta -> zeta^(n-1).
class Scalar {
  public:
    Scalar() : order_(1), coeffs_(1, Rational(0)) {}
    Scalar(long v) : order_(1), coeffs_(1, Rational(v)) {}
    Scalar(int v) : Scalar(static_cast<long>(v)) {}
    explicit Scalar(const Rational& q) : order_(1), coeffs_(1, q) {}

    static Scalar from_coeffs(unsigned n, std::vector<Rational> coeffs) {
        unsigned deg = cyclotomic_degree(n);
        if (coeffs.size() != deg)
            throw DimensionMismatch("cyclo(" + std::to_string(n) + ") needs " + std::to_string(deg) +
                                    " coefficients, got " + std::to_string(coeffs.size()));
        Scalar s;
        s.order_ = n;
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    /// zeta_n as an element of Q(zeta_n)
    static Scalar root_of_unity(unsigned n) { return root_of_unity_power(n, 1); }

    static Scalar root_of_unity_power(unsigned n, unsigned k) {
        RatPoly p(k % n + 1, Rational(0));
        p[k % n] = 1;
        return from_poly(n, p);
    }

    unsigned order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
    }

    bool is_rational() const {
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational()) throw Error("scalar is not rational: " + to_string());
        return coeffs_[0];
    }

    /// image under zeta_n -> zeta_n^(n-1); involutive field automorphism
    Scalar conj() const {
        RatPoly img;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            size_t e = (k * (order_ - 1)) % order_;
            if (img.size() < e + 1) img.resize(e + 1, Rational(0));
            img[e] += coeffs_[k];
        }
        return from_poly(order_, img);
    }

    Scalar lift(unsigned m) const {
        if (m == order_) return *this;
        if (m % order_ != 0)
            throw Error("cannot lift cyclo(" + std::to_string(order_) + ") into cyclo(" + std::to_string(m) + ")");
        size_t step = m / order_;
        RatPoly img;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            size_t e = k * step;
            if (img.size() < e + 1) img.resize(e + 1, Rational(0));
            img[e] += coeffs_[k];
        }
        return from_poly(m, img);
    }

    Scalar inv() const {
        if (is_zero()) throw NotInvertible("division by zero scalar");
        RatPoly p = coeffs_;
        poly_trim(p);
        auto [g, u, v] = poly_ext_gcd(p, cyclotomic_polynomial(order_));
        (void)v;
        if (g.size() != 1) throw NotInvertible("scalar has no inverse: " + to_string());
        RatPoly r = u;
        for (auto& c : r) c /= g[0];
        return from_poly(order_, r);
    }

    Scalar operator-() const {
        Scalar r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        auto [x, y] = align(a, b);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        auto [x, y] = align(a, b);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        auto [x, y] = align(a, b);
        return from_poly(x.order_, poly_mul(x.coeffs_, y.coeffs_));
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
        auto [x, y] = align(a, b);
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// text form "cyclo(n)[c0, c1, ...]" with rationals "p/q"
    std::string to_string() const {
        std::string s = "cyclo(" + std::to_string(order_) + ")[";
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) s += ", ";
            s += rational_to_string(coeffs_[i]);
        }
        return s + "]";
    }

    static Scalar parse(const std::string& text);

    /// float approximation of the (real part of the) value at zeta_n = exp(2*pi*i/n)
    double to_double_real() const {
        double acc = 0.0;
        const double pi = 3.14159265358979323846;
        for (size_t k = 0; k < coeffs_.size(); ++k)
            acc += coeffs_[k].get_d() * std::cos(2.0 * pi * static_cast<double>(k) / order_);
        return acc;
    }

  private:
    static Scalar from_poly(unsigned n, const RatPoly& p) {
        RatPoly r = poly_mod(p, cyclotomic_polynomial(n));
        r.resize(cyclotomic_degree(n), Rational(0));
        Scalar s;
        s.order_ = n;
        s.coeffs_ = std::move(r);
        return s;
    }

    static std::pair<Scalar, Scalar> align(const Scalar& a, const Scalar& b) {
        if (a.order_ == b.order_) return {a, b};
        unsigned m = std::lcm(a.order_, b.order_);
        return {a.lift(m), b.lift(m)};
    }

    unsigned order_;
    std::vector<Rational> coeffs_;
};

inline Scalar Scalar::parse(const std::string& text) {
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (text.compare(i, 6, "cyclo(") != 0) {
        // lenient: a bare rational is an order-1 scalar
        return Scalar(rational_from_string(text.substr(i)));
    }
    i += 6;
    size_t close = text.find(')', i);
    if (close == std::string::npos) throw ParseError("unterminated cyclo(...) in '" + text + "'");
    unsigned long n = 0;
    try {
        n = std::stoul(text.substr(i, close - i));
    } catch (...) {
        throw ParseError("bad cyclotomic order in '" + text + "'");
    }
    if (n == 0) throw ParseError("cyclotomic order must be positive in '" + text + "'");
    i = close + 1;
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw ParseError("expected '[' in '" + text + "'");
    ++i;
    std::vector<Rational> coeffs;
    bool first = true;
    while (true) {
        skip_ws();
        size_t j = i;
        while (j < text.size() && text[j] != ',' && text[j] != ']') ++j;
        if (j >= text.size()) throw ParseError("unterminated coefficient list in '" + text + "'");
        std::string tok = text.substr(i, j - i);
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
        if (tok.empty()) {
            if (!(first && text[j] == ']')) throw ParseError("empty coefficient in '" + text + "'");
        } else {
            coeffs.push_back(rational_from_string(tok));
        }
        first = false;
        i = j;
        if (text[i] == ']') break;
        ++i;
    }
    return Scalar::from_coeffs(static_cast<unsigned>(n), std::move(coeffs));
}

// --- exact sign of conjugation-fixed scalars -----------------------------------

enum class Sign { zero, positive, negative };

inline unsigned& sign_refinement_cap() {
    static unsigned cap = [] {
        if (const char* env = std::getenv("HOPFSTAR_SIGN_CAP")) {
            long v = std::atol(env);
            if (v > 0) return static_cast<unsigned>(v);
        }
        return 64u;
    }();
    return cap;
}

namespace detail {

struct RatInterval {
    Rational lo, hi;
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

inline RatInterval interval_add(const RatInterval& a, const RatInterval& b) {
    return {Rational(a.lo + b.lo), Rational(a.hi + b.hi)};
}

inline RatInterval interval_scale(const Rational& c, const RatInterval& a) {
    if (c >= 0) return {Rational(c * a.lo), Rational(c * a.hi)};
    return {Rational(c * a.hi), Rational(c * a.lo)};
}

// arctan(1/q) bracketed by consecutive partial sums of the alternating series
inline RatInterval atan_inv_interval(unsigned long q, unsigned long terms) {
    Rational x(1, q);
    Rational x2 = x * x;
    Rational term = x, sum = 0;
    for (unsigned long j = 0; j <= terms; ++j) {
        Rational contrib = term / (2 * j + 1);
        if (j % 2 == 0)
            sum += contrib;
        else
            sum -= contrib;
        term *= x2;
    }
    Rational next = term / (2 * terms + 3);
    if (terms % 2 == 0) return {Rational(sum - next), sum};
    return {sum, Rational(sum + next)};
}

inline RatInterval pi_interval(unsigned long terms) {
    // Machin: pi = 16*arctan(1/5) - 4*arctan(1/239)
    RatInterval a = atan_inv_interval(5, terms);
    RatInterval b = atan_inv_interval(239, terms);
    return {Rational(16 * a.lo - 4 * b.hi), Rational(16 * a.hi - 4 * b.lo)};
}

// enclosure of cos over [t.lo, t.hi] (0 <= t.lo) via Taylor at the midpoint
// plus the Lipschitz bound |cos x - cos m| <= |x - m|
inline RatInterval cos_interval(const RatInterval& t, unsigned long terms) {
    Rational m = (t.lo + t.hi) / 2;
    Rational half_width = (t.hi - t.lo) / 2;
    Rational m2 = m * m;
    Rational term(1), sum(0);
    unsigned long j = 0;
    auto step = [&] {
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
        term *= m2;
        term /= (2 * j + 1) * (2 * j + 2);
        ++j;
    };
    while (j < terms) step();
    // once the term ratio drops below 1/2 the tail is at most twice the next term
    while (2 * m2 > Rational((2 * j + 1) * (2 * j + 2))) step();
    Rational rem = 2 * term;
    return {Rational(sum - rem - half_width), Rational(sum + rem + half_width)};
}

}  // namespace detail

/// Exact sign of a conjugation-fixed (real) scalar, evaluated at
/// zeta_n = exp(2*pi*i/n). Symbolic zero test first, then interval refinement
/// with rational endpoints, doubling the series precision each round.
inline Sign scalar_sign(const Scalar& s, unsigned cap) {
    if (s.conj() != s) throw NotReal("scalar_sign needs conj-fixed input, got " + s.to_string());
    if (s.is_zero()) return Sign::zero;
    if (s.is_rational()) return s.coeffs()[0] > 0 ? Sign::positive : Sign::negative;

    const unsigned n = s.order();
    for (unsigned round = 0;; ++round) {
        if (round >= cap)
            throw PrecisionExhausted("sign of " + s.to_string() + " unresolved after " + std::to_string(round) +
                                     " refinement rounds");
        unsigned long terms = 8ul << std::min(round, 24u);
        detail::RatInterval pi = detail::pi_interval(terms);
        detail::RatInterval acc{Rational(0), Rational(0)};
        for (size_t k = 0; k < s.coeffs().size(); ++k) {
            const Rational& c = s.coeffs()[k];
            if (c == 0) continue;
            if (k == 0) {
                acc = detail::interval_add(acc, {c, c});
                continue;
            }
            Rational f(2 * k, n);
            f.canonicalize();
            detail::RatInterval theta{Rational(f * pi.lo), Rational(f * pi.hi)};
            acc = detail::interval_add(acc, detail::interval_scale(c, detail::cos_interval(theta, terms)));
        }
        if (!acc.contains_zero()) return acc.lo > 0 ? Sign::positive : Sign::negative;
    }
}

inline Sign scalar_sign(const Scalar& s) { return scalar_sign(s, sign_refinement_cap()); }

}  // namespace hopfstar
