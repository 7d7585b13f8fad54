#include "qwalk/quadext.hpp"

#include "qwalk/puiseux.hpp"

namespace qwalk {

namespace {

// m = s^2 * core with core free of the square factors found by trial division.
void split_integer_square(const mpz_class& m, mpz_class& s, mpz_class& core)
{
    s = 1;
    core = m;
    mpz_class n = abs(m);
    for (unsigned long p = 2; p <= 100000 && mpz_class(p) * p <= n; ++p) {
        mpz_class pp = mpz_class(p) * p;
        while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
            n /= pp;
            s *= p;
        }
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        s *= r;
        n = 1;
    }
    core = sgn(m) < 0 ? mpz_class(-n) : n;
}

struct RadicandSplit {
    PolyT core;     // square-free part, principal root taken of this
    RatFunc factor; // sqrt(radicand) = factor * sqrt(core) as principal branches
};

RadicandSplit split_radicand(const RatFunc& r)
{
    if (r.is_zero())
        fail(ErrorCode::PreconditionFailed, "zero radicand");
    const PolyT p = r.num() * r.den(); // r = p / den^2
    PolyT square(Rat(1)), core(Rat(1)), prod(Rat(1));
    for (const auto& [f, mult] : squarefree_decomposition(p)) {
        for (int k = 0; k < mult; ++k)
            prod = prod * f;
        if (mult % 2 != 0)
            core = core * f;
        for (int k = 0; k < mult / 2; ++k)
            square = square * f;
    }
    const Rat c = p.lc() / prod.lc();
    mpz_class s, m;
    split_integer_square(c.get_num() * c.get_den(), s, m);
    core = core.scaled(Rat(m));
    RatFunc w = RatFunc::make(square.scaled(make_rat(s, c.get_den())), r.den());
    if (sgn(w.leading_coeff()) < 0)
        w = -w;
    return {core, w};
}

bool is_one(const PolyT& p) { return p.degree() == 0 && p.coeff(0) == 1; }

} // namespace

QuadExtElem QuadExtElem::make(const RatFunc& base, const RatFunc& coeff, const RatFunc& radicand)
{
    QuadExtElem e(base);
    if (coeff.is_zero())
        return e;
    RadicandSplit sp = split_radicand(radicand);
    if (is_one(sp.core)) {
        e.a_ += coeff * sp.factor;
        return e;
    }
    e.b_ = coeff * sp.factor;
    e.d_ = sp.core;
    return e;
}

QuadExtElem QuadExtElem::sqrt_with_leading(const RatFunc& radicand, const Rat& exponent, const Rat& coeff)
{
    QuadExtElem root = make(RatFunc(), RatFunc(1), radicand);
    Valuation v = t_valuation(root);
    if (!v || *v != exponent)
        fail(ErrorCode::RootSelectorInconsistent, "no square root has leading exponent " + qwalk::to_string(exponent));
    PuiseuxTrunc lead;
    try {
        lead = puiseux_expand(root, exponent);
    } catch (const Error&) {
        fail(ErrorCode::RootSelectorInconsistent, "leading coefficient of the root is irrational");
    }
    const Rat c = lead.coeff_at(exponent);
    if (c == coeff)
        return root;
    if (c == -coeff)
        return -root;
    fail(ErrorCode::RootSelectorInconsistent,
         "requested leading coefficient " + qwalk::to_string(coeff) + " but the roots start with +/-" + qwalk::to_string(c));
}

RootSelector QuadExtElem::root_selector() const
{
    const int vd = d_.low_degree();
    return {make_rat(vd, 2), d_.coeff(vd)};
}

QuadExtElem QuadExtElem::conjugate() const
{
    QuadExtElem e = *this;
    e.b_ = -e.b_;
    return e;
}

RatFunc QuadExtElem::norm() const { return a_ * a_ - b_ * b_ * RatFunc(d_); }

QuadExtElem QuadExtElem::aligned(const QuadExtElem& o) const
{
    if (o.b_.is_zero() || b_.is_zero() || o.d_ == d_)
        return o;
    auto w = rational_square_root(d_ * o.d_);
    if (!w)
        fail(ErrorCode::IncompatibleRadicands,
             "sqrt(" + qwalk::to_string(d_, {"t"}) + ") and sqrt(" + qwalk::to_string(o.d_, {"t"}) + ") generate different fields");
    // sqrt(o.d) = eps * (w / d) * sqrt(d), eps fixed by the principal branches.
    RatFunc ratio = RatFunc::make(*w, d_);
    if (sgn(ratio.leading_coeff()) < 0)
        ratio = -ratio;
    QuadExtElem e = o;
    e.b_ = o.b_ * ratio;
    e.d_ = d_;
    return e;
}

QuadExtElem& QuadExtElem::operator+=(const QuadExtElem& o)
{
    QuadExtElem v = aligned(o);
    if (b_.is_zero())
        d_ = v.d_;
    a_ += v.a_;
    b_ += v.b_;
    if (b_.is_zero())
        d_ = PolyT(Rat(1));
    return *this;
}

QuadExtElem& QuadExtElem::operator-=(const QuadExtElem& o) { return *this += -o; }

QuadExtElem& QuadExtElem::operator*=(const QuadExtElem& o)
{
    QuadExtElem v = aligned(o);
    if (b_.is_zero())
        d_ = v.d_;
    RatFunc a = a_ * v.a_ + b_ * v.b_ * RatFunc(d_);
    RatFunc b = a_ * v.b_ + b_ * v.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    if (b_.is_zero())
        d_ = PolyT(Rat(1));
    return *this;
}

QuadExtElem& QuadExtElem::operator/=(const QuadExtElem& o)
{
    if (o.is_zero())
        fail(ErrorCode::ZeroDenominator, "division by zero in the quadratic extension");
    const RatFunc n = o.norm();
    QuadExtElem inv = o.conjugate();
    inv.a_ /= n;
    inv.b_ /= n;
    return *this *= inv;
}

QuadExtElem QuadExtElem::operator-() const
{
    QuadExtElem e = *this;
    e.a_ = -e.a_;
    e.b_ = -e.b_;
    return e;
}

bool operator==(const QuadExtElem& u, const QuadExtElem& v)
{
    QuadExtElem w;
    try {
        w = u.aligned(v);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::IncompatibleRadicands)
            throw;
        return false; // 1, sqrt(D1), sqrt(D2) are linearly independent over Q(t)
    }
    return u.a_ == w.a_ && u.b_ == w.b_;
}

std::string QuadExtElem::to_string() const
{
    if (b_.is_zero())
        return a_.to_string();
    std::string rad = "(" + b_.to_string() + ")*sqrt(" + qwalk::to_string(d_, {"t"}) + ")";
    if (a_.is_zero())
        return rad;
    return a_.to_string() + " + " + rad;
}

Valuation t_valuation(const QuadExtElem& e)
{
    if (e.in_base_field())
        return t_valuation(e.base());
    const PolyT& d = e.radicand();
    const int vd = d.low_degree();
    const Rat vb = Rat(*e.radical_coeff().valuation()) + make_rat(vd, 2);
    if (e.base().is_zero())
        return vb;
    const Rat va = Rat(*e.base().valuation());
    if (va != vb)
        return std::min(va, vb);
    Rat s;
    if (!is_rational_square(d.coeff(vd), &s))
        return va; // leading terms are rationally independent
    const Rat lead = e.base().leading_coeff() + e.radical_coeff().leading_coeff() * s;
    if (!is_zero(lead))
        return va;
    // The conjugate keeps valuation va, so the norm carries the rest.
    return *t_valuation(e.norm()) - va;
}

namespace {

std::optional<Rat> leading_rational(const QuadExtElem& e)
{
    Valuation v = t_valuation(e);
    if (!v)
        return std::nullopt;
    try {
        return puiseux_expand(e, *v).coeff_at(*v);
    } catch (const Error& err) {
        if (err.code() != ErrorCode::Unsupported)
            throw;
        return std::nullopt;
    }
}

} // namespace

bool canonical_less(const QuadExtElem& u, const QuadExtElem& v)
{
    const Valuation vu = t_valuation(u);
    const Valuation vv = t_valuation(v);
    if (vu != vv)
        return valuation_less(vv, vu);
    auto lu = leading_rational(u);
    auto lv = leading_rational(v);
    if (lu && lv && *lu != *lv)
        return *lu < *lv;
    return sgn(u.radical_coeff().leading_coeff()) > sgn(v.radical_coeff().leading_coeff());
}

std::pair<QuadExtElem, QuadExtElem> quadratic_roots(const RatFunc& alpha, const RatFunc& beta, const RatFunc& gamma)
{
    if (alpha.is_zero())
        fail(ErrorCode::PreconditionFailed, "quadratic_roots: leading coefficient is zero");
    const RatFunc disc = beta * beta - RatFunc(4) * alpha * gamma;
    const RatFunc inv2a = RatFunc(1) / (RatFunc(2) * alpha);
    const RatFunc center = -beta * inv2a;
    if (disc.is_zero())
        return {QuadExtElem(center), QuadExtElem(center)};
    QuadExtElem r1 = QuadExtElem::make(center, inv2a, disc);
    QuadExtElem r2 = QuadExtElem::make(center, -inv2a, disc);
    if (canonical_less(r2, r1))
        std::swap(r1, r2);
    return {r1, r2};
}

} // namespace qwalk
