#pragma once

#include "qwalk/model.hpp"

#include <vector>

namespace qwalk {

// Bivariate polynomial: outer variable x, coefficients polynomials in y.
using PolyXY = Poly<PolyT>;

inline Rat coeff_xy(const PolyXY& p, int i, int j) { return p.coeff(i).coeff(j); }

// Q(x,y) mod t^(order+1): terms[n] is the coefficient of t^n.
struct SeriesTruncation {
    int order = 0;
    std::vector<PolyXY> terms;
};

// Weighted count of all quadrant walks of length 0..N. A step whose endpoint has
// second coordinate 0 contributes a factor a, one whose endpoint has first
// coordinate 0 contributes b.
SeriesTruncation enumerate(const Model& m, int N);

enum class Specialization {
    YZero,     // Q(x,0), polynomials in x
    XZero,     // Q(0,y), polynomials in y
    OneOne,    // Q(1,1), constants
    XOneYZero, // Q(1,0), constants
    XZeroYOne, // Q(0,1), constants
};

// Per-term substitution; result polynomials are in the remaining variable.
std::vector<PolyT> specialize(const SeriesTruncation& s, Specialization which);

// Coefficient of t^k of a polynomial Laurent form, as a polynomial in x (outer) and y.
PolyXY t_coefficient(const LaurentXY& f, int k);

// K Q - omega xy - x^2 y gamma1 Q(x,0) - x y^2 gamma2 Q(0,y), term by term up to t^N.
std::vector<PolyXY> functional_equation_residual(const Model& m, const SeriesTruncation& s, int N);

// Throws ResidualNonZero naming the first nonzero coefficient.
void check_functional_equation(const Model& m, const SeriesTruncation& s, int N);

} // namespace qwalk
