#include "qwalk/puiseux.hpp"

#include <map>
#include <numeric>

namespace qwalk {

namespace {

mpz_class floor_rat(const Rat& q)
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Laurent terms of f as (exponent, coefficient), exponents up to `order`.
void add_laurent(const RatFunc& f, const Rat& scale, const Rat& shift, const Rat& order, int ram,
                 std::map<long, Rat>& acc, const std::vector<Rat>* factor = nullptr)
{
    if (f.is_zero())
        return;
    const int v = *f.valuation();
    const Rat start = Rat(v) + shift;
    if (start > order)
        return;
    const long count = floor_rat(order - start).get_si() + 1;
    PolyT n = PolyT(std::vector<Rat>(f.num().coeffs().begin() + f.num().low_degree(), f.num().coeffs().end()));
    PolyT d = PolyT(std::vector<Rat>(f.den().coeffs().begin() + f.den().low_degree(), f.den().coeffs().end()));
    std::vector<Rat> s = series_quotient(n, d, static_cast<int>(count));
    if (factor) {
        std::vector<Rat> prod(static_cast<std::size_t>(count), Rat(0));
        for (long i = 0; i < count; ++i)
            for (long j = 0; i + j < count; ++j)
                prod[i + j] += s[i] * (*factor)[j];
        s = std::move(prod);
    }
    for (long k = 0; k < count; ++k) {
        Rat e = start + k;
        Rat idx = e * ram;
        acc[idx.get_num().get_si()] += s[k] * scale;
    }
}

} // namespace

std::vector<Rat> series_quotient(const PolyT& n, const PolyT& d, int count)
{
    if (is_zero(d.coeff(0)))
        fail(ErrorCode::ZeroDenominator, "series_quotient: denominator vanishes at 0");
    std::vector<Rat> out(static_cast<std::size_t>(std::max(count, 0)), Rat(0));
    const Rat inv = Rat(1 / d.coeff(0));
    for (int k = 0; k < count; ++k) {
        Rat acc = n.coeff(k);
        for (int i = 1; i <= std::min(k, d.degree()); ++i)
            acc -= d.coeff(i) * out[k - i];
        out[k] = acc * inv;
    }
    return out;
}

std::vector<Rat> series_sqrt_unit(const std::vector<Rat>& h, int count)
{
    std::vector<Rat> g(static_cast<std::size_t>(std::max(count, 0)), Rat(0));
    if (count == 0)
        return g;
    g[0] = 1;
    for (int n = 1; n < count; ++n) {
        Rat acc = n < static_cast<int>(h.size()) ? h[n] : Rat(0);
        for (int k = 1; k < n; ++k)
            acc -= g[k] * g[n - k];
        g[n] = acc / 2;
    }
    return g;
}

Rat PuiseuxTrunc::coeff_at(const Rat& exponent) const
{
    if (!valuation)
        return Rat(0);
    Rat k = (exponent - *valuation) * ramification;
    if (k.get_den() != 1 || k < 0 || k >= static_cast<long>(coeffs.size()))
        return Rat(0);
    return coeffs[k.get_num().get_ui()];
}

std::string PuiseuxTrunc::to_string() const
{
    std::string out;
    if (valuation) {
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (is_zero(coeffs[k]))
                continue;
            Rat e = *valuation + make_rat(static_cast<long>(k), ramification);
            std::string term = qwalk::to_string(coeffs[k]);
            if (e != 0)
                term += "*t^" + qwalk::to_string(e);
            if (!out.empty())
                out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
            else
                out = term;
        }
    }
    if (out.empty())
        out = "0";
    return out + " + O(t^" + qwalk::to_string(Rat(order + make_rat(1, ramification))) + ")";
}

PuiseuxTrunc puiseux_expand(const QuadExtElem& e, const Rat& order)
{
    const bool radical = !e.in_base_field();
    const PolyT& d = e.radicand();
    if (radical && d.is_zero_poly())
        fail(ErrorCode::PreconditionFailed, "puiseux_expand: zero radicand");
    const int vd = radical ? d.low_degree() : 0;
    const int ram = (radical && vd % 2 != 0) ? 2 : 1;

    std::map<long, Rat> acc;
    add_laurent(e.base(), Rat(1), Rat(0), order, ram, acc);
    if (radical) {
        const Rat c0 = d.coeff(vd);
        Rat s0;
        if (!is_rational_square(c0, &s0))
            fail(ErrorCode::Unsupported, "expansion of sqrt(" + to_string(d, {"t"}) + ") has irrational coefficients");
        const RootSelector sel = e.root_selector();
        if (sel.exponent != make_rat(vd, 2) || sel.square != c0)
            fail(ErrorCode::RootSelectorInconsistent, "stored leading term disagrees with the radicand");
        const Rat half = make_rat(vd, 2);
        const Rat start = Rat(*e.radical_coeff().valuation()) + half;
        const long count = start > order ? 0 : floor_rat(order - start).get_si() + 1;
        std::vector<Rat> h(static_cast<std::size_t>(count), Rat(0));
        for (long k = 0; k < count; ++k)
            h[k] = d.coeff(vd + static_cast<int>(k)) / c0;
        std::vector<Rat> g = series_sqrt_unit(h, static_cast<int>(count));
        add_laurent(e.radical_coeff(), s0, half, order, ram, acc, &g);
    }

    PuiseuxTrunc out;
    out.ramification = ram;
    out.order = order;
    auto first = acc.begin();
    while (first != acc.end() && is_zero(first->second))
        ++first;
    if (first == acc.end())
        return out;
    out.valuation = make_rat(first->first, ram);
    const long last = floor_rat(order * ram).get_si();
    for (long idx = first->first; idx <= last; ++idx) {
        auto it = acc.find(idx);
        out.coeffs.push_back(it == acc.end() ? Rat(0) : it->second);
    }
    return out;
}

PuiseuxTrunc multiply(const PuiseuxTrunc& u, const PuiseuxTrunc& v)
{
    PuiseuxTrunc out;
    const int ram = std::lcm(u.ramification, v.ramification);
    out.ramification = ram;
    if (!u.valuation || !v.valuation) {
        out.order = std::min(u.order + (v.valuation ? *v.valuation : v.order),
                             v.order + (u.valuation ? *u.valuation : u.order));
        return out;
    }
    out.order = std::min(u.order + *v.valuation, v.order + *u.valuation);
    out.valuation = *u.valuation + *v.valuation;
    const long last = floor_rat((out.order - *out.valuation) * ram).get_si();
    out.coeffs.assign(static_cast<std::size_t>(std::max(last + 1, 0L)), Rat(0));
    const int su = ram / u.ramification;
    const int sv = ram / v.ramification;
    for (std::size_t i = 0; i < u.coeffs.size(); ++i)
        for (std::size_t j = 0; j < v.coeffs.size(); ++j) {
            long idx = static_cast<long>(i) * su + static_cast<long>(j) * sv;
            if (idx <= last)
                out.coeffs[idx] += u.coeffs[i] * v.coeffs[j];
        }
    std::size_t lead = 0;
    while (lead < out.coeffs.size() && is_zero(out.coeffs[lead]))
        ++lead;
    if (lead == out.coeffs.size()) {
        out.coeffs.clear();
        out.valuation.reset();
        return out;
    }
    if (lead > 0) {
        out.coeffs.erase(out.coeffs.begin(), out.coeffs.begin() + static_cast<long>(lead));
        *out.valuation += make_rat(static_cast<long>(lead), ram);
    }
    return out;
}

} // namespace qwalk
