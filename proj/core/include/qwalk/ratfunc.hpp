#pragma once

#include "qwalk/poly.hpp"

#include <string>

namespace qwalk {

// Element of Q(t): reduced fraction with monic denominator.
class RatFunc {
public:
    RatFunc() : den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFunc(long c) : RatFunc(Rat(c)) {}
    explicit RatFunc(PolyT p) : num_(std::move(p)), den_(Rat(1)) {}

    // Throws Error(ZeroDenominator) when d = 0.
    static RatFunc make(const PolyT& n, const PolyT& d);
    static RatFunc t() { return RatFunc(PolyT::variable()); }

    const PolyT& num() const { return num_; }
    const PolyT& den() const { return den_; }
    bool is_zero() const { return num_.is_zero_poly(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Order at t = 0; nullopt for zero.
    std::optional<int> valuation() const;
    // Coefficient of t^valuation in the Laurent expansion at 0 (zero for f = 0).
    Rat leading_coeff() const;
    // f(0) when the valuation is nonnegative.
    Rat eval_at_zero() const;

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string(const std::string& var = "t") const;

private:
    RatFunc(PolyT n, PolyT d, bool) : num_(std::move(n)), den_(std::move(d)) {}
    PolyT num_;
    PolyT den_;
};

RatFunc ratfunc_normalize(const PolyT& n, const PolyT& d);

inline bool is_zero(const RatFunc& f) { return f.is_zero(); }
RatFunc field_inverse(const RatFunc& f);
inline RatFunc exact_quotient(const RatFunc& a, const RatFunc& b) { return a / b; }
inline std::string format_coeff(const RatFunc& f, const std::vector<std::string>&, std::size_t)
{
    return f.is_polynomial() && f.num().degree() <= 0 ? f.to_string() : "(" + f.to_string() + ")";
}

template <>
struct ring_traits<RatFunc> {
    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    static RatFunc from_int(long k) { return RatFunc(k); }
};

Valuation t_valuation(const RatFunc& f);

} // namespace qwalk
