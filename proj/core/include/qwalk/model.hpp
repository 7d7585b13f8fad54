#pragma once

#include "qwalk/laurent.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace qwalk {

enum class Support { S1, S2, S3, S4, S5 };

struct Step {
    int i;
    int j;
    friend bool operator==(const Step&, const Step&) = default;
};

// The five admissible steps, in the order (1,-1), (-1,1), (1,0), (0,1), (1,1).
inline constexpr std::array<Step, 5> all_steps{{{1, -1}, {-1, 1}, {1, 0}, {0, 1}, {1, 1}}};

std::string_view support_name(Support s);
// Throws Error(MalformedInput) for anything but "S1".."S5".
Support parse_support(std::string_view name);
const std::vector<Step>& support_steps(Support s);
bool support_contains(Support s, Step v);

// Step weights d_v plus the Boltzmann weights a (x-axis) and b (y-axis).
struct Weighting {
    Rat d1m1; // d_{1,-1}
    Rat dm11; // d_{-1,1}
    Rat d10;
    Rat d01;
    Rat d11;
    Rat a = 1;
    Rat b = 1;

    const Rat& d(Step v) const;
    Rat& d(Step v);
    friend bool operator==(const Weighting&, const Weighting&) = default;

    // All present steps of the support weighted 1, the others 0.
    static Weighting unit(Support s, const Rat& a = 1, const Rat& b = 1);
};

struct Model {
    Support stepset;
    Weighting w;
    Rat A;     // 1 - 1/a
    Rat B;     // 1 - 1/b
    Rat omega; // 1 - A - B
    LaurentXY S;
    LaurentXY K; // xy (1 - t S)
    LaurentXY gamma1;
    LaurentXY gamma2;
};

// Throws InvalidSupport or NonPositiveWeight.
Model build_model(Support stepset, const Weighting& w);

struct GammaFunctions {
    LaurentXY gamma1;
    LaurentXY gamma2;
    // gamma = gamma1 / gamma2 as numerator and denominator.
    LaurentXY gamma_num;
    LaurentXY gamma_den;
};
GammaFunctions gamma_functions(const Model& m);

// The polynomial coefficients of K Q(x,y) = omega xy + x^2 y gamma1 Q(x,0) + x y^2 gamma2 Q(0,y).
struct FunctionalEquation {
    LaurentXY kernel;
    LaurentXY omega_term;
    LaurentXY x_axis_coeff; // x^2 y gamma1
    LaurentXY y_axis_coeff; // x y^2 gamma2
};
FunctionalEquation functional_equation_coeffs(const Model& m);

// Remainder of f (denominators cleared by a monomial) modulo K, by pseudo-division
// in y over Q[t][x]. Zero exactly when f vanishes on the kernel curve.
PolyYXT residue_mod_kernel(const Model& m, const LaurentXY& f);

// The variable t as a coefficient polynomial.
inline PolyT t_poly(int k = 1, const Rat& c = 1) { return PolyT::monomial(c, k); }

} // namespace qwalk
