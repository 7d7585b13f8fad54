#include "qwalk/curve.hpp"

#include <algorithm>
#include <optional>

namespace qwalk {

namespace {

RatFunc rf(const Rat& c) { return RatFunc(c); }

QuadExtElem power(const QuadExtElem& base, int k)
{
    QuadExtElem acc(1);
    for (int i = 0; i < std::abs(k); ++i)
        acc *= base;
    return k < 0 ? QuadExtElem(1) / acc : acc;
}

QuadExtElem eval_at(const Poly<RatFunc>& p, const QuadExtElem& r)
{
    QuadExtElem acc;
    for (int k = p.degree(); k >= 0; --k)
        acc = acc * r + QuadExtElem(p.coeff(k));
    return acc;
}

void require_on_curve(const Model& m, const CurvePoint& p)
{
    if (!on_curve(m, p))
        fail(ErrorCode::OffCurveInput, "point " + p.to_string() + " is not on the kernel curve");
}

// Zeros of alpha X^2 + beta X + gamma (or of the linear part when alpha = 0).
std::pair<QuadExtElem, QuadExtElem> gamma_zero_coords(const RatFunc& alpha, const RatFunc& beta, const RatFunc& gamma)
{
    if (alpha.is_zero())
        fail(ErrorCode::DegenerateWeights, "critical-point quadratic has lost its leading term");
    return quadratic_roots(alpha, beta, gamma);
}

// Zeros of A x1 - t c y1 on the curve, written for gamma1; gamma2 is the same
// computation with the roles of x1 and y1 exchanged.
std::array<std::pair<QuadExtElem, QuadExtElem>, 2> gamma_zeros(const Rat& A, const Rat& c, const Rat& cp,
                                                                 const Rat& c10, const Rat& c01, const Rat& c11)
{
    const RatFunc t = RatFunc::t();
    std::pair<QuadExtElem, QuadExtElem> roots;
    if (A == 0) {
        roots = gamma_zero_coords(rf(cp), rf(c01), rf(c11));
        return {{{roots.first, QuadExtElem()}, {roots.second, QuadExtElem()}}};
    }
    const RatFunc alpha = rf(A - A * A) - t * t * rf(c * cp);
    const RatFunc beta = -(t * t * rf(c * c01) + t * rf(A * c10));
    const RatFunc gamma = -(t * t * rf(c * c11));
    roots = gamma_zero_coords(alpha, beta, gamma);
    const QuadExtElem slope(rf(A) / (t * rf(c)));
    return {{{roots.first, slope * roots.first}, {roots.second, slope * roots.second}}};
}

std::optional<std::vector<CurveZero>> zeros_eliminating(const RecipPoly& n, const RecipPoly& f, bool keep_x)
{
    // keep_x: eliminate y1, solve for x1, then recover y1 by a gcd.
    const Poly<Poly<RatFunc>> nn = n.nested(keep_x);
    const Poly<Poly<RatFunc>> ff = f.nested(keep_x);
    const Poly<RatFunc> res = nn.degree() == 0 && ff.degree() == 0 ? Poly<RatFunc>() : resultant(nn, ff);
    if (res.is_zero_poly())
        fail(ErrorCode::IdenticallyZeroOnCurve, "function vanishes identically on the kernel curve");
    std::vector<CurveZero> out;
    for (const auto& [factor, mult] : squarefree_decomposition(res)) {
        std::vector<QuadExtElem> roots;
        if (factor.degree() == 1) {
            roots.push_back(QuadExtElem(-factor.coeff(0) / factor.coeff(1)));
        } else if (factor.degree() == 2) {
            auto [r1, r2] = quadratic_roots(factor.coeff(2), factor.coeff(1), factor.coeff(0));
            roots = {r1, r2};
        } else if (factor.degree() > 2) {
            fail(ErrorCode::Unsupported, "curve zeros of degree > 2 over Q(t)");
        }
        for (const QuadExtElem& r : roots) {
            Poly<QuadExtElem> nr = nn.map([&](const Poly<RatFunc>& c) { return eval_at(c, r); });
            Poly<QuadExtElem> fr = ff.map([&](const Poly<RatFunc>& c) { return eval_at(c, r); });
            Poly<QuadExtElem> g = nr.is_zero_poly() ? monic(fr) : gcd(nr, fr);
            QuadExtElem other;
            if (g.degree() == 1) {
                other = -g.coeff(0);
            } else if (g.degree() == 2) {
                const QuadExtElem disc = g.coeff(1) * g.coeff(1) - QuadExtElem(4) * g.coeff(0);
                if (!disc.is_zero())
                    return std::nullopt;
                other = -g.coeff(1) / QuadExtElem(2);
            } else {
                fail(ErrorCode::PreconditionFailed, "resultant root without a common zero");
            }
            out.push_back({keep_x ? CurvePoint{r, other} : CurvePoint{other, r}, mult});
        }
    }
    return out;
}

std::vector<CurveZero> polynomial_zeros(const RecipPoly& n, const RecipPoly& f)
{
    if (n.is_zero())
        fail(ErrorCode::IdenticallyZeroOnCurve, "zero function");
    if (n.degree_x() <= 0 && n.degree_y() <= 0)
        return {};
    if (auto z = zeros_eliminating(n, f, true))
        return *z;
    if (auto z = zeros_eliminating(n, f, false))
        return *z;
    fail(ErrorCode::Unsupported, "curve zeros not separated by either coordinate projection");
}

void accumulate(std::vector<CurveZero>& acc, const std::vector<CurveZero>& zs, int scale)
{
    for (const auto& z : zs) {
        auto it = std::find_if(acc.begin(), acc.end(), [&](const CurveZero& e) { return e.point == z.point; });
        if (it == acc.end())
            acc.push_back({z.point, scale * z.multiplicity});
        else
            it->multiplicity += scale * z.multiplicity;
    }
}

// Sum of the two y1-roots of the curve equation at fixed x1, minus y1.
CurvePoint iota1_unchecked(const Model& m, const CurvePoint& p)
{
    const RatFunc t = RatFunc::t();
    const QuadExtElem sum = (p.x1 - QuadExtElem(t * rf(m.w.d10))) / QuadExtElem(t * rf(m.w.d1m1));
    return {p.x1, sum - p.y1};
}

CurvePoint iota2_unchecked(const Model& m, const CurvePoint& p)
{
    const RatFunc t = RatFunc::t();
    const QuadExtElem sum = (p.y1 - QuadExtElem(t * rf(m.w.d01))) / QuadExtElem(t * rf(m.w.dm11));
    return {sum - p.x1, p.y1};
}

} // namespace

std::string CurvePoint::to_string() const { return "(x1 = " + x1.to_string() + ", y1 = " + y1.to_string() + ")"; }

void RecipPoly::add(const RatFunc& c, int a, int b)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(Key{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

int RecipPoly::degree_x() const
{
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.first);
    return d;
}

int RecipPoly::degree_y() const
{
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, k.second);
    return d;
}

QuadExtElem RecipPoly::eval(const QuadExtElem& x1, const QuadExtElem& y1) const
{
    QuadExtElem acc;
    for (const auto& [k, c] : terms_)
        acc += QuadExtElem(c) * power(x1, k.first) * power(y1, k.second);
    return acc;
}

Poly<Poly<RatFunc>> RecipPoly::nested(bool outer_y) const
{
    Poly<Poly<RatFunc>> out;
    for (const auto& [k, c] : terms_) {
        const int outer = outer_y ? k.second : k.first;
        const int inner = outer_y ? k.first : k.second;
        out += Poly<Poly<RatFunc>>::monomial(Poly<RatFunc>::monomial(c, inner), outer);
    }
    return out;
}

RecipPoly operator*(const RecipPoly& u, const RecipPoly& v)
{
    RecipPoly out;
    for (const auto& [ku, cu] : u.terms_)
        for (const auto& [kv, cv] : v.terms_)
            out.add(cu * cv, ku.first + kv.first, ku.second + kv.second);
    return out;
}

RecipForm to_reciprocal(const LaurentXY& f)
{
    RecipForm out;
    if (f.is_zero())
        return out;
    out.px = std::max_element(f.terms().begin(), f.terms().end(), [](const auto& l, const auto& r) {
                 return l.first.first < r.first.first;
             })->first.first;
    out.py = std::max_element(f.terms().begin(), f.terms().end(), [](const auto& l, const auto& r) {
                 return l.first.second < r.first.second;
             })->first.second;
    for (const auto& [k, c] : f.terms())
        out.numerator.add(RatFunc(c), out.px - k.first, out.py - k.second);
    return out;
}

RecipPoly curve_polynomial(const Model& m)
{
    const RatFunc t = RatFunc::t();
    RecipPoly f;
    f.add(RatFunc(1), 1, 1);
    f.add(-t * rf(m.w.dm11), 2, 0);
    f.add(-t * rf(m.w.d01), 1, 0);
    f.add(-t * rf(m.w.d11), 0, 0);
    f.add(-t * rf(m.w.d1m1), 0, 2);
    f.add(-t * rf(m.w.d10), 0, 1);
    return f;
}

bool on_curve(const Model& m, const CurvePoint& p)
{
    const Weighting& w = m.w;
    const QuadExtElem& x = p.x1;
    const QuadExtElem& y = p.y1;
    const QuadExtElem inner = (QuadExtElem(w.dm11) * x + QuadExtElem(w.d01)) * x + QuadExtElem(w.d11) +
                              (QuadExtElem(w.d1m1) * y + QuadExtElem(w.d10)) * y;
    return (x * y - QuadExtElem(RatFunc::t()) * inner).is_zero();
}

QuadExtElem evaluate(const LaurentXY& f, const CurvePoint& p)
{
    const RecipForm r = to_reciprocal(f);
    return r.numerator.eval(p.x1, p.y1) / (power(p.x1, r.px) * power(p.y1, r.py));
}

CurvePoint apply_iota1(const Model& m, const CurvePoint& p)
{
    require_on_curve(m, p);
    return iota1_unchecked(m, p);
}

CurvePoint apply_iota2(const Model& m, const CurvePoint& p)
{
    require_on_curve(m, p);
    return iota2_unchecked(m, p);
}

CurvePoint apply_sigma(const Model& m, const CurvePoint& p) { return apply_sigma_power(m, p, 1); }

CurvePoint apply_sigma_inverse(const Model& m, const CurvePoint& p) { return apply_sigma_power(m, p, -1); }

CurvePoint apply_sigma_power(const Model& m, CurvePoint p, int n)
{
    // The involutions map the curve to itself, so only the input is checked.
    require_on_curve(m, p);
    for (int k = 0; k < n; ++k)
        p = iota2_unchecked(m, iota1_unchecked(m, p));
    for (int k = 0; k > n; --k)
        p = iota1_unchecked(m, iota2_unchecked(m, p));
    return p;
}

std::vector<CurvePoint> sigma_orbit(const Model& m, const CurvePoint& p, int w)
{
    require_on_curve(m, p);
    std::vector<CurvePoint> out(static_cast<std::size_t>(2 * w + 1));
    out[w] = p;
    for (int k = 1; k <= w; ++k) {
        out[w + k] = iota2_unchecked(m, iota1_unchecked(m, out[w + k - 1]));
        out[w - k] = iota1_unchecked(m, iota2_unchecked(m, out[w - k + 1]));
    }
    return out;
}

DiscriminantFactors discriminant_factors(const Model& m)
{
    const RatFunc t = RatFunc::t();
    const Weighting& w = m.w;
    DiscriminantFactors out;
    out.f1 = rf(w.d1m1);
    out.f2 = rf(w.d1m1 * w.dm11) * t * t + rf(m.A * (m.A - 1));
    out.f3 = rf(w.d01 * w.d01 * w.d1m1 + w.d10 * w.d10 * w.dm11 - 4 * w.d11 * w.d1m1 * w.dm11) * t * t +
             rf(w.d01 * w.d10) * t + rf(w.d11);
    out.delta = RatFunc(16) * t * t * out.f1 * out.f2 * out.f3;
    return out;
}

std::array<CurvePoint, 4> critical_points(const Model& m)
{
    if (discriminant_factors(m).delta.is_zero())
        fail(ErrorCode::DegenerateWeights, "discriminant product vanishes");
    const Weighting& w = m.w;
    auto g1 = gamma_zeros(m.A, w.d1m1, w.dm11, w.d10, w.d01, w.d11);
    auto g2 = gamma_zeros(m.B, w.dm11, w.d1m1, w.d01, w.d10, w.d11);
    std::array<CurvePoint, 4> p{{{g1[0].first, g1[0].second},
                                 {g1[1].first, g1[1].second},
                                 {g2[0].second, g2[0].first},
                                 {g2[1].second, g2[1].first}}};
    for (const auto& q : p)
        require_on_curve(m, q);
    return p;
}

CriticalSets critical_sets(const Model& m)
{
    const auto p = critical_points(m);
    CriticalSets s;
    for (int k = 0; k < 2; ++k) {
        const CurvePoint i1 = apply_iota1(m, p[k]);
        const CurvePoint i2 = apply_iota2(m, p[k + 2]);
        s.L1_minus[k] = p[k];
        s.L1_minus[k + 2] = i2;
        s.L1_plus[k] = i1;
        s.L1_plus[k + 2] = apply_iota1(m, i2);
        s.L2_minus[k] = apply_iota2(m, i1);
        s.L2_minus[k + 2] = i2;
        s.L2_plus[k] = i1;
        s.L2_plus[k + 2] = p[k + 2];
    }
    return s;
}

std::vector<CurveZero> curve_divisor(const Model& m, const std::vector<std::pair<LaurentXY, int>>& factors)
{
    const RecipPoly f = curve_polynomial(m);
    RecipPoly x1, y1;
    x1.add(RatFunc(1), 1, 0);
    y1.add(RatFunc(1), 0, 1);
    const auto zx = polynomial_zeros(x1, f);
    const auto zy = polynomial_zeros(y1, f);
    std::vector<CurveZero> acc;
    for (const auto& [h, e] : factors) {
        if (h.is_zero())
            fail(ErrorCode::IdenticallyZeroOnCurve, "zero factor");
        const RecipForm r = to_reciprocal(h);
        accumulate(acc, polynomial_zeros(r.numerator, f), e);
        accumulate(acc, zx, -e * r.px);
        accumulate(acc, zy, -e * r.py);
    }
    std::erase_if(acc, [](const CurveZero& z) { return z.multiplicity == 0; });
    return acc;
}

std::vector<CurveZero> curve_zeros(const Model& m, const std::vector<std::pair<LaurentXY, int>>& factors)
{
    auto d = curve_divisor(m, factors);
    std::erase_if(d, [](const CurveZero& z) { return z.multiplicity < 0; });
    return d;
}

std::vector<CurveZero> curve_zeros(const Model& m, const LaurentXY& h) { return curve_zeros(m, {{h, 1}}); }

std::string minimal_polynomial(const QuadExtElem& e)
{
    if (e.in_base_field())
        return "X - (" + e.base().to_string() + ")";
    return "X^2 - (" + (RatFunc(2) * e.base()).to_string() + ")*X + (" + e.norm().to_string() + ")";
}

} // namespace qwalk
