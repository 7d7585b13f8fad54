#pragma once

#include "qwalk/ratfunc.hpp"

#include <string>

namespace qwalk {

// Leading Puiseux term of the selected square root: sqrt(square) * t^exponent,
// where sqrt is the principal branch (positive real, or i times a positive real).
struct RootSelector {
    Rat exponent;
    Rat square;
};

// base + radical_coeff * sqrt(radicand) in Q(t)(sqrt(radicand)).
//
// The radicand is stored as a square-free polynomial times a square-free integer
// (integer part reduced as far as trial division allows). The square root symbol
// always means the branch whose leading Puiseux term is the principal square root
// of the lowest coefficient of the radicand. An element whose radicand is a
// square collapses into Q(t).
class QuadExtElem {
public:
    QuadExtElem() : d_(Rat(1)) {}
    QuadExtElem(const RatFunc& base) : a_(base), d_(Rat(1)) {}
    QuadExtElem(const Rat& base) : QuadExtElem(RatFunc(base)) {}
    QuadExtElem(long base) : QuadExtElem(RatFunc(base)) {}

    // base + coeff * sqrt(radicand), principal branch.
    static QuadExtElem make(const RatFunc& base, const RatFunc& coeff, const RatFunc& radicand);
    // The square root of radicand whose Puiseux expansion starts with coeff * t^exponent.
    // Throws RootSelectorInconsistent if no root of radicand starts that way.
    static QuadExtElem sqrt_with_leading(const RatFunc& radicand, const Rat& exponent, const Rat& coeff);

    const RatFunc& base() const { return a_; }
    const RatFunc& radical_coeff() const { return b_; }
    const PolyT& radicand() const { return d_; }
    RootSelector root_selector() const;
    bool in_base_field() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExtElem conjugate() const;
    // a^2 - b^2 D.
    RatFunc norm() const;

    QuadExtElem& operator+=(const QuadExtElem& o);
    QuadExtElem& operator-=(const QuadExtElem& o);
    QuadExtElem& operator*=(const QuadExtElem& o);
    QuadExtElem& operator/=(const QuadExtElem& o);
    friend QuadExtElem operator+(QuadExtElem a, const QuadExtElem& b) { return a += b; }
    friend QuadExtElem operator-(QuadExtElem a, const QuadExtElem& b) { return a -= b; }
    friend QuadExtElem operator*(QuadExtElem a, const QuadExtElem& b) { return a *= b; }
    friend QuadExtElem operator/(QuadExtElem a, const QuadExtElem& b) { return a /= b; }
    QuadExtElem operator-() const;

    // Equality as algebraic numbers under the principal-branch embedding,
    // valid across different radicands.
    friend bool operator==(const QuadExtElem& u, const QuadExtElem& v);
    friend bool operator!=(const QuadExtElem& u, const QuadExtElem& v) { return !(u == v); }

    std::string to_string() const;

private:
    // Rewrites o over this element's radicand; throws IncompatibleRadicands
    // when the two square roots generate different fields.
    QuadExtElem aligned(const QuadExtElem& o) const;

    RatFunc a_;
    RatFunc b_;
    PolyT d_;
};

inline bool is_zero(const QuadExtElem& e) { return e.is_zero(); }
inline QuadExtElem field_inverse(const QuadExtElem& e) { return QuadExtElem(1) / e; }
inline QuadExtElem exact_quotient(const QuadExtElem& a, const QuadExtElem& b) { return a / b; }
inline std::string format_coeff(const QuadExtElem& e, const std::vector<std::string>&, std::size_t)
{
    return "(" + e.to_string() + ")";
}

template <>
struct ring_traits<QuadExtElem> {
    static QuadExtElem zero() { return QuadExtElem(); }
    static QuadExtElem one() { return QuadExtElem(1); }
    static QuadExtElem from_int(long k) { return QuadExtElem(k); }
};

// Exact valuation at t = 0 under the principal-branch embedding.
Valuation t_valuation(const QuadExtElem& e);

// The two roots of alpha X^2 + beta X + gamma over Q(t) (alpha != 0), in
// canonical order; a double root is returned twice.
std::pair<QuadExtElem, QuadExtElem> quadratic_roots(const RatFunc& alpha, const RatFunc& beta,
                                                    const RatFunc& gamma);

// Canonical root order: higher valuation first (+inf first), then smaller
// leading coefficient when both are rational, then the '+' branch first.
bool canonical_less(const QuadExtElem& u, const QuadExtElem& v);

} // namespace qwalk
