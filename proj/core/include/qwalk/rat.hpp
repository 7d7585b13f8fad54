#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace qwalk {

// Exact rational, always kept canonical (reduced, positive denominator).
using Rat = mpq_class;

// Order of vanishing at t = 0; std::nullopt encodes +infinity.
using Valuation = std::optional<Rat>;

// Accepts "p/q" or an integer string. Throws Error(MalformedInput).
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& r);

// n/d in canonical form (mpq_class(n, d) alone does not reduce).
template <class N, class D>
Rat make_rat(const N& n, const D& d)
{
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// True iff r = s^2 for a rational s; the nonnegative s is written to root.
bool is_rational_square(const Rat& r, Rat* root = nullptr);

std::string to_string(const Valuation& v);

// Valuation ordering with +infinity as the top element.
bool valuation_less(const Valuation& a, const Valuation& b);

} // namespace qwalk
