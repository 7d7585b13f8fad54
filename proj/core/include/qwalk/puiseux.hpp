#pragma once

#include "qwalk/quadext.hpp"

#include <string>
#include <vector>

namespace qwalk {

// Truncated Puiseux series sum_k coeffs[k] * t^(valuation + k/ramification),
// holding every term with exponent <= order. valuation is nullopt when the
// series vanishes up to the truncation order.
struct PuiseuxTrunc {
    int ramification = 1;
    Valuation valuation;
    std::vector<Rat> coeffs;
    Rat order;

    // Coefficient of t^exponent (zero outside the stored range).
    Rat coeff_at(const Rat& exponent) const;
    std::string to_string() const;
};

// First `count` coefficients of n/d as a power series in the variable (d(0) != 0).
std::vector<Rat> series_quotient(const PolyT& n, const PolyT& d, int count);

// First `count` coefficients of sqrt(h) for a power series h with h[0] = 1.
std::vector<Rat> series_sqrt_unit(const std::vector<Rat>& h, int count);

// Expansion of e to order `order` under the principal-branch embedding.
// Throws Unsupported when the expansion has irrational coefficients (lowest
// coefficient of the radicand not a positive rational square).
PuiseuxTrunc puiseux_expand(const QuadExtElem& e, const Rat& order);

// Product of two truncations, truncated to the order both factors determine.
PuiseuxTrunc multiply(const PuiseuxTrunc& u, const PuiseuxTrunc& v);

} // namespace qwalk
