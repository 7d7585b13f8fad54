#pragma once

#include "qwalk/error.hpp"
#include "qwalk/rat.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

template <class R>
class Poly;

// Identity elements and small-integer embedding for the coefficient rings in use.
template <class R>
struct ring_traits;

template <>
struct ring_traits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long k) { return Rat(k); }
};

template <class R>
struct ring_traits<Poly<R>> {
    static Poly<R> zero() { return Poly<R>(); }
    static Poly<R> one() { return Poly<R>(ring_traits<R>::one()); }
    static Poly<R> from_int(long k) { return Poly<R>(ring_traits<R>::from_int(k)); }
};

inline Rat exact_quotient(const Rat& a, const Rat& b)
{
    if (is_zero(b))
        fail(ErrorCode::ZeroDenominator, "rational division by zero");
    return Rat(a / b);
}

inline Rat field_inverse(const Rat& a)
{
    if (is_zero(a))
        fail(ErrorCode::ZeroDenominator, "rational inverse of zero");
    return Rat(1 / a);
}

inline std::string format_coeff(const Rat& r, const std::vector<std::string>&, std::size_t) { return to_string(r); }

// Dense univariate polynomial, coefficients stored from degree 0 upwards.
// The zero polynomial has degree -1.
template <class R>
class Poly {
public:
    using coeff_type = R;

    Poly() = default;
    explicit Poly(R c)
    {
        if (!is_zero(c))
            c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }

    static Poly monomial(R c, int k)
    {
        if (is_zero(c))
            return Poly();
        std::vector<R> v(static_cast<std::size_t>(k) + 1, ring_traits<R>::zero());
        v[static_cast<std::size_t>(k)] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly variable() { return monomial(ring_traits<R>::one(), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }

    const R& coeff(int k) const
    {
        static const R z = ring_traits<R>::zero();
        return (k < 0 || k > degree()) ? z : c_[static_cast<std::size_t>(k)];
    }
    const R& lc() const { return coeff(degree()); }

    // Smallest exponent with a nonzero coefficient, -1 for the zero polynomial.
    int low_degree() const
    {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!is_zero(c_[k]))
                return static_cast<int>(k);
        return -1;
    }

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), ring_traits<R>::zero());
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), ring_traits<R>::zero());
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.c_.empty() || b.c_.empty())
            return Poly();
        std::vector<R> out(a.c_.size() + b.c_.size() - 1, ring_traits<R>::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }
    Poly operator-() const
    {
        Poly r = *this;
        for (auto& c : r.c_)
            c = -c;
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const R& s) const
    {
        if (is_zero(s))
            return Poly();
        Poly r = *this;
        for (auto& c : r.c_)
            c *= s;
        r.trim();
        return r;
    }

    // Multiplication by var^k, k >= 0.
    Poly shifted(int k) const
    {
        if (c_.empty() || k == 0)
            return *this;
        std::vector<R> v(static_cast<std::size_t>(k), ring_traits<R>::zero());
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

    R eval(const R& x) const
    {
        R acc = ring_traits<R>::zero();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    Poly derivative() const
    {
        std::vector<R> v;
        for (std::size_t k = 1; k < c_.size(); ++k)
            v.push_back(c_[k] * ring_traits<R>::from_int(static_cast<long>(k)));
        return Poly(std::move(v));
    }

    // Truncation to degrees < n.
    Poly truncated(int n) const
    {
        if (n <= 0)
            return Poly();
        if (n >= static_cast<int>(c_.size()))
            return *this;
        return Poly(std::vector<R>(c_.begin(), c_.begin() + n));
    }

    template <class F>
    auto map(F f) const -> Poly<decltype(f(std::declval<const R&>()))>
    {
        using S = decltype(f(std::declval<const R&>()));
        std::vector<S> v;
        v.reserve(c_.size());
        for (const auto& c : c_)
            v.push_back(f(c));
        return Poly<S>(std::move(v));
    }

private:
    void trim()
    {
        while (!c_.empty() && is_zero(c_.back()))
            c_.pop_back();
    }

    std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p)
{
    return p.is_zero_poly();
}

// Quotient and remainder over a coefficient field.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b)
{
    if (b.is_zero_poly())
        fail(ErrorCode::ZeroDenominator, "polynomial division by zero");
    const int db = b.degree();
    std::vector<R> q(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)), ring_traits<R>::zero());
    Poly<R> r = a;
    const R inv = field_inverse(b.lc());
    while (!r.is_zero_poly() && r.degree() >= db) {
        const int k = r.degree() - db;
        R c = r.lc() * inv;
        r -= b.scaled(c).shifted(k);
        q[static_cast<std::size_t>(k)] = std::move(c);
    }
    return {Poly<R>(std::move(q)), r};
}

// Division known to be exact, over any integral domain with exact_quotient.
template <class R>
Poly<R> exact_quotient(const Poly<R>& a, const Poly<R>& b)
{
    if (b.is_zero_poly())
        fail(ErrorCode::ZeroDenominator, "polynomial division by zero");
    const int db = b.degree();
    std::vector<R> q(static_cast<std::size_t>(std::max(0, a.degree() - db + 1)), ring_traits<R>::zero());
    Poly<R> r = a;
    while (!r.is_zero_poly()) {
        const int k = r.degree() - db;
        if (k < 0)
            fail(ErrorCode::PreconditionFailed, "exact_quotient: division is not exact");
        R c = exact_quotient(r.lc(), b.lc());
        r -= b.scaled(c).shifted(k);
        q[static_cast<std::size_t>(k)] = std::move(c);
    }
    return Poly<R>(std::move(q));
}

// Pseudo-remainder: lc(b)^e * a mod b, computed without division.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b)
{
    if (b.is_zero_poly())
        fail(ErrorCode::ZeroDenominator, "pseudo-remainder by zero");
    Poly<R> r = a;
    while (!r.is_zero_poly() && r.degree() >= b.degree()) {
        const int k = r.degree() - b.degree();
        const R c = r.lc();
        r = r.scaled(b.lc()) - b.scaled(c).shifted(k);
    }
    return r;
}

template <class R>
Poly<R> monic(const Poly<R>& p)
{
    if (p.is_zero_poly())
        return p;
    return p.scaled(field_inverse(p.lc()));
}

// Monic gcd over a coefficient field.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b)
{
    while (!b.is_zero_poly()) {
        Poly<R> r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// Square-free decomposition (Yun): p = lc * prod_i f_i^i, returned as (f_i, i) with deg f_i > 0.
template <class R>
std::vector<std::pair<Poly<R>, int>> squarefree_decomposition(const Poly<R>& p)
{
    std::vector<std::pair<Poly<R>, int>> out;
    if (p.degree() <= 0)
        return out;
    Poly<R> dp = p.derivative();
    Poly<R> a = gcd(p, dp);
    Poly<R> b = divmod(p, a).first;
    Poly<R> c = divmod(dp, a).first;
    Poly<R> d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly<R> g = gcd(b, d);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        b = divmod(b, g).first;
        c = divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// Resultant with respect to the polynomial variable, by fraction-free (Bareiss)
// elimination on the Sylvester matrix. Convention: rows 0..deg(q)-1 carry the
// coefficients of p from the leading one down, shifted right by the row index;
// the following deg(p) rows carry those of q. With this layout
// res(p, q) = lc(p)^deg(q) * prod q(alpha) over the roots alpha of p.
template <class R>
R resultant(const Poly<R>& p, const Poly<R>& q)
{
    const int m = p.degree();
    const int n = q.degree();
    if (m < 0 || n < 0)
        fail(ErrorCode::PreconditionFailed, "resultant of the zero polynomial");
    if (m == 0 && n == 0)
        fail(ErrorCode::BothConstantInVariable, "both operands are constant in the eliminated variable");
    const int size = m + n;
    std::vector<std::vector<R>> mat(static_cast<std::size_t>(size),
                                    std::vector<R>(static_cast<std::size_t>(size), ring_traits<R>::zero()));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k)
            mat[i][i + k] = p.coeff(m - k);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k)
            mat[n + i][i + k] = q.coeff(n - k);

    bool negate = false;
    R prev = ring_traits<R>::one();
    for (int k = 0; k + 1 < size; ++k) {
        if (is_zero(mat[k][k])) {
            int swap_row = -1;
            for (int i = k + 1; i < size; ++i)
                if (!is_zero(mat[i][k])) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0)
                return ring_traits<R>::zero();
            std::swap(mat[k], mat[swap_row]);
            negate = !negate;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j)
                mat[i][j] = exact_quotient(mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j], prev);
            mat[i][k] = ring_traits<R>::zero();
        }
        prev = mat[k][k];
    }
    R det = mat[size - 1][size - 1];
    return negate ? R(-det) : det;
}

// Monic square root over a field: returns q monic with q^2 = monic(p) when it
// exists. Squareness of p over an algebraic closure of the coefficient field is
// equivalent to the existence of this q. Degree 2 is decided by the discriminant.
template <class R>
std::optional<Poly<R>> monic_square_root(const Poly<R>& p)
{
    if (p.is_zero_poly())
        return Poly<R>();
    const int d = p.degree();
    if (d % 2 != 0)
        return std::nullopt;
    const Poly<R> mp = monic(p);
    const int m = d / 2;
    if (d == 2) {
        const R& b = mp.coeff(1);
        const R& c = mp.coeff(0);
        R disc = b * b - ring_traits<R>::from_int(4) * c;
        if (!is_zero(disc))
            return std::nullopt;
        return Poly<R>(std::vector<R>{R(b * field_inverse(ring_traits<R>::from_int(2))), ring_traits<R>::one()});
    }
    std::vector<R> q(static_cast<std::size_t>(m) + 1, ring_traits<R>::zero());
    q[m] = ring_traits<R>::one();
    const R half = field_inverse(ring_traits<R>::from_int(2));
    for (int k = 1; k <= m; ++k) {
        R acc = mp.coeff(d - k);
        for (int i = 1; i < k; ++i)
            acc -= q[m - i] * q[m - k + i];
        q[m - k] = acc * half;
    }
    Poly<R> root(std::move(q));
    if (root * root != mp)
        return std::nullopt;
    return root;
}

// Square root over the rationals: p = w^2 with w in Q[var] and lc(w) > 0.
std::optional<Poly<Rat>> rational_square_root(const Poly<Rat>& p);

// Monic gcd over Q, faster than the generic Euclid for large coefficients.
Poly<Rat> gcd(const Poly<Rat>& a, const Poly<Rat>& b);

inline bool is_square(const Poly<Rat>& p) { return rational_square_root(p).has_value(); }

template <class R>
std::string to_string(const Poly<R>& p, const std::vector<std::string>& vars, std::size_t depth = 0);

template <class R>
std::string format_coeff(const Poly<R>& p, const std::vector<std::string>& vars, std::size_t depth)
{
    return "(" + to_string(p, vars, depth) + ")";
}

template <class R>
std::string to_string(const Poly<R>& p, const std::vector<std::string>& vars, std::size_t depth)
{
    if (p.is_zero_poly())
        return "0";
    const std::string var = depth < vars.size() ? vars[depth] : "z" + std::to_string(depth);
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        const R& c = p.coeff(k);
        if (is_zero(c))
            continue;
        std::string cs = format_coeff(c, vars, depth + 1);
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string term;
        if (k == 0)
            term = cs;
        else if (cs == "1")
            term = mono;
        else if (cs == "-1")
            term = "-" + mono;
        else
            term = cs + "*" + mono;
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

using PolyT = Poly<Rat>;     // univariate in t (or any single variable) over Q
using PolyXT = Poly<PolyT>;  // outer x, inner t
using PolyYXT = Poly<PolyXT>; // outer y, then x, then t

} // namespace qwalk
