#include "qwalk/ratfunc.hpp"

namespace qwalk {

RatFunc RatFunc::make(const PolyT& n, const PolyT& d)
{
    if (d.is_zero_poly())
        fail(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    if (n.is_zero_poly())
        return RatFunc();
    if (d.degree() == 0)
        return RatFunc(n.scaled(field_inverse(d.lc())), PolyT(Rat(1)), true);
    PolyT g = gcd(n, d);
    PolyT nn = n, dd = d;
    if (g.degree() > 0) {
        nn = divmod(n, g).first;
        dd = divmod(d, g).first;
    }
    const Rat inv = field_inverse(dd.lc());
    return RatFunc(nn.scaled(inv), dd.scaled(inv), true);
}

RatFunc ratfunc_normalize(const PolyT& n, const PolyT& d) { return RatFunc::make(n, d); }

std::optional<int> RatFunc::valuation() const
{
    if (is_zero())
        return std::nullopt;
    return num_.low_degree() - den_.low_degree();
}

Rat RatFunc::leading_coeff() const
{
    if (is_zero())
        return Rat(0);
    return Rat(num_.coeff(num_.low_degree()) / den_.coeff(den_.low_degree()));
}

Rat RatFunc::eval_at_zero() const
{
    if (is_zero())
        return Rat(0);
    if (den_.low_degree() > 0)
        fail(ErrorCode::ZeroDenominator, "rational function has a pole at t = 0");
    return Rat(num_.coeff(0) / den_.coeff(0));
}

RatFunc& RatFunc::operator+=(const RatFunc& o)
{
    if (is_polynomial() && o.is_polynomial()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_)
        return *this = make(num_ + o.num_, den_);
    return *this = make(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o)
{
    if (is_polynomial() && o.is_polynomial()) {
        num_ -= o.num_;
        return *this;
    }
    if (den_ == o.den_)
        return *this = make(num_ - o.num_, den_);
    return *this = make(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator*=(const RatFunc& o)
{
    if (is_polynomial() && o.is_polynomial()) {
        num_ = num_ * o.num_;
        return *this;
    }
    return *this = make(num_ * o.num_, den_ * o.den_);
}

RatFunc& RatFunc::operator/=(const RatFunc& o)
{
    if (o.is_zero())
        fail(ErrorCode::ZeroDenominator, "division by the zero rational function");
    return *this = make(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, true); }

std::string RatFunc::to_string(const std::string& var) const
{
    std::string n = qwalk::to_string(num_, {var});
    if (is_polynomial())
        return n;
    std::string d = qwalk::to_string(den_, {var});
    if (num_.degree() > 0)
        n = "(" + n + ")";
    return n + "/(" + d + ")";
}

RatFunc field_inverse(const RatFunc& f) { return RatFunc(1) / f; }

Valuation t_valuation(const RatFunc& f)
{
    auto v = f.valuation();
    if (!v)
        return std::nullopt;
    return Rat(*v);
}

} // namespace qwalk
