#pragma once

#include "qwalk/poly.hpp"

#include <map>
#include <string>
#include <utility>

namespace qwalk {

// Laurent polynomial in x, y with coefficients in Q[t]; the key (i, j) stands for x^i y^j.
class LaurentXY {
public:
    using Key = std::pair<int, int>;

    LaurentXY() = default;
    explicit LaurentXY(const PolyT& c) { add(c, 0, 0); }
    explicit LaurentXY(const Rat& c) : LaurentXY(PolyT(c)) {}
    static LaurentXY monomial(const PolyT& c, int i, int j);
    static LaurentXY monomial(const Rat& c, int i, int j) { return monomial(PolyT(c), i, j); }
    static LaurentXY x() { return monomial(Rat(1), 1, 0); }
    static LaurentXY y() { return monomial(Rat(1), 0, 1); }

    const std::map<Key, PolyT>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const PolyT& coeff(int i, int j) const;

    LaurentXY& operator+=(const LaurentXY& o);
    LaurentXY& operator-=(const LaurentXY& o);
    friend LaurentXY operator+(LaurentXY a, const LaurentXY& b) { return a += b; }
    friend LaurentXY operator-(LaurentXY a, const LaurentXY& b) { return a -= b; }
    friend LaurentXY operator*(const LaurentXY& a, const LaurentXY& b);
    LaurentXY operator-() const;
    friend bool operator==(const LaurentXY& a, const LaurentXY& b) { return a.terms_ == b.terms_; }

    LaurentXY scaled(const PolyT& c) const;
    LaurentXY scaled(const Rat& c) const { return scaled(PolyT(c)); }
    LaurentXY pow(int k) const;

    int min_x() const;
    int min_y() const;
    // Substitution y = 0 / x = 0 of a polynomial (no negative exponents in that variable).
    LaurentXY at_y_zero() const;
    LaurentXY at_x_zero() const;

    // Polynomial form after multiplying by x^shift_x y^shift_y (shifts >= 0,
    // chosen minimal). Outer variable y, then x, then t.
    PolyYXT cleared(int* shift_x = nullptr, int* shift_y = nullptr) const;

    std::string to_string() const;

private:
    void add(const PolyT& c, int i, int j);
    std::map<Key, PolyT> terms_;
};

} // namespace qwalk
