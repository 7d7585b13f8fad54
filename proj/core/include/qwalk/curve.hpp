#pragma once

#include "qwalk/model.hpp"
#include "qwalk/quadext.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qwalk {

// A point of the kernel curve in the reciprocal chart x1 = 1/x, y1 = 1/y.
//
// The only point of the curve with an infinite reciprocal coordinate is the
// singular point Omega (x = y = 0), so points off Omega are stored affinely.
struct CurvePoint {
    QuadExtElem x1;
    QuadExtElem y1;

    friend bool operator==(const CurvePoint& p, const CurvePoint& q) { return p.x1 == q.x1 && p.y1 == q.y1; }
    friend bool operator!=(const CurvePoint& p, const CurvePoint& q) { return !(p == q); }
    std::string to_string() const;
};

// Polynomial in x1, y1 over Q(t); the key (a, b) stands for x1^a y1^b.
class RecipPoly {
public:
    using Key = std::pair<int, int>;

    RecipPoly() = default;
    void add(const RatFunc& c, int a, int b);
    const std::map<Key, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree_x() const;
    int degree_y() const;

    QuadExtElem eval(const QuadExtElem& x1, const QuadExtElem& y1) const;
    // Nested form with outer variable y1 (outer_y) or x1, inner the other one.
    Poly<Poly<RatFunc>> nested(bool outer_y) const;
    friend RecipPoly operator*(const RecipPoly& u, const RecipPoly& v);

private:
    std::map<Key, RatFunc> terms_;
};

// f(x, y) = N(x1, y1) / (x1^px y1^py) in the reciprocal chart.
struct RecipForm {
    RecipPoly numerator;
    int px = 0;
    int py = 0;
};
RecipForm to_reciprocal(const LaurentXY& f);

// x1 y1 - t (d_{-1,1} x1^2 + d_{0,1} x1 + d_{1,1} + d_{1,-1} y1^2 + d_{1,0} y1).
RecipPoly curve_polynomial(const Model& m);

bool on_curve(const Model& m, const CurvePoint& p);
// Value of a Laurent polynomial in x, y at a point; throws ZeroDenominator at its poles.
QuadExtElem evaluate(const LaurentXY& f, const CurvePoint& p);

// Throws OffCurveInput unless p lies on the curve.
CurvePoint apply_iota1(const Model& m, const CurvePoint& p);
CurvePoint apply_iota2(const Model& m, const CurvePoint& p);
CurvePoint apply_sigma(const Model& m, const CurvePoint& p);
CurvePoint apply_sigma_inverse(const Model& m, const CurvePoint& p);
// sigma^n p for any integer n.
CurvePoint apply_sigma_power(const Model& m, CurvePoint p, int n);
// sigma^n p for n = -w..w, in that order.
std::vector<CurvePoint> sigma_orbit(const Model& m, const CurvePoint& p, int w);

// Factors of the discriminant product delta = 16 t^2 f1 f2 f3.
struct DiscriminantFactors {
    RatFunc f1;
    RatFunc f2;
    RatFunc f3;
    RatFunc delta;
};
DiscriminantFactors discriminant_factors(const Model& m);

// P1, P2: zeros of gamma1; P3, P4: zeros of gamma2, each pair in canonical root order.
// Throws DegenerateWeights when delta vanishes.
std::array<CurvePoint, 4> critical_points(const Model& m);

struct CriticalSets {
    std::array<CurvePoint, 4> L1_minus; // P1, P2, i2 P3, i2 P4
    std::array<CurvePoint, 4> L1_plus;  // i1 P1, i1 P2, s^-1 P3, s^-1 P4
    std::array<CurvePoint, 4> L2_minus; // s P1, s P2, i2 P3, i2 P4
    std::array<CurvePoint, 4> L2_plus;  // i1 P1, i1 P2, P3, P4
};
CriticalSets critical_sets(const Model& m);

struct CurveZero {
    CurvePoint point;
    int multiplicity;
};

// Divisor of prod f_k^{e_k} on the curve minus Omega, zero entries dropped.
// Each factor's reciprocal numerator must meet the curve in points whose
// coordinates have degree <= 2 over Q(t); otherwise Unsupported.
// Throws IdenticallyZeroOnCurve when a factor vanishes on the curve.
std::vector<CurveZero> curve_divisor(const Model& m, const std::vector<std::pair<LaurentXY, int>>& factors);

// Positive part of the divisor.
std::vector<CurveZero> curve_zeros(const Model& m, const std::vector<std::pair<LaurentXY, int>>& factors);
std::vector<CurveZero> curve_zeros(const Model& m, const LaurentXY& h);

// Minimal polynomial over Q(t) of a coordinate, as a string in X.
std::string minimal_polynomial(const QuadExtElem& e);

} // namespace qwalk
