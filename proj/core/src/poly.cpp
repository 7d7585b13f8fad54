#include "qwalk/poly.hpp"

#include <algorithm>

namespace qwalk {

namespace {

// Primitive integer polynomial proportional to p (p nonzero).
std::vector<mpz_class> primitive_integer(const Poly<Rat>& p)
{
    mpz_class den = 1;
    for (const Rat& c : p.coeffs())
        den = lcm(den, mpz_class(c.get_den()));
    std::vector<mpz_class> out;
    mpz_class content = 0;
    for (const Rat& c : p.coeffs()) {
        out.push_back(mpz_class(c.get_num()) * (den / c.get_den()));
        content = gcd(content, out.back());
    }
    for (auto& c : out)
        c /= content;
    return out;
}

mpz_class eval_int(const std::vector<mpz_class>& p, const mpz_class& x)
{
    mpz_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpz_class max_norm(const std::vector<mpz_class>& p)
{
    mpz_class m = 0;
    for (const auto& c : p)
        m = std::max(m, mpz_class(abs(c)));
    return m;
}

} // namespace

// Heuristic gcd: the integer gcd of the values at a large point is expanded
// back in base xi with symmetric digits, and kept if it divides both inputs.
// Falls back to Euclid when the evaluation point grows too large.
Poly<Rat> gcd(const Poly<Rat>& a, const Poly<Rat>& b)
{
    if (a.is_zero_poly() || b.is_zero_poly() || a.degree() == 0 || b.degree() == 0)
        return gcd<Rat>(a, b);
    const auto ia = primitive_integer(a);
    const auto ib = primitive_integer(b);
    mpz_class xi = 2 * std::min(max_norm(ia), max_norm(ib)) + 29;
    const std::size_t max_deg = static_cast<std::size_t>(std::max(a.degree(), b.degree()));
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * max_deg > 200000)
            break;
        mpz_class gamma = gcd(eval_int(ia, xi), eval_int(ib, xi));
        std::vector<Rat> digits;
        const mpz_class half = xi / 2;
        while (gamma != 0) {
            mpz_class c = gamma % xi;
            if (c > half)
                c -= xi;
            else if (c < -half)
                c += xi;
            digits.push_back(Rat(c));
            gamma = (gamma - c) / xi;
        }
        Poly<Rat> g(std::move(digits));
        if (g.degree() >= 0) {
            g = monic(g);
            if (divmod(a, g).second.is_zero_poly() && divmod(b, g).second.is_zero_poly())
                return g;
        }
        xi = xi * 73794 / 27011;
    }
    return gcd<Rat>(a, b);
}

std::optional<Poly<Rat>> rational_square_root(const Poly<Rat>& p)
{
    if (p.is_zero_poly())
        return Poly<Rat>();
    Rat s;
    if (p.degree() % 2 != 0 || !is_rational_square(p.lc(), &s))
        return std::nullopt;
    auto root = monic_square_root(p);
    if (!root)
        return std::nullopt;
    return root->scaled(s);
}

} // namespace qwalk
