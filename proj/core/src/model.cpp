#include "qwalk/model.hpp"

namespace qwalk {

std::string_view support_name(Support s)
{
    static constexpr std::array<std::string_view, 5> names{"S1", "S2", "S3", "S4", "S5"};
    return names[static_cast<std::size_t>(s)];
}

Support parse_support(std::string_view name)
{
    for (int k = 0; k < 5; ++k)
        if (support_name(static_cast<Support>(k)) == name)
            return static_cast<Support>(k);
    fail(ErrorCode::MalformedInput, "unknown step set '" + std::string(name) + "'");
}

const std::vector<Step>& support_steps(Support s)
{
    static const std::array<std::vector<Step>, 5> table{{
        {{1, -1}, {-1, 1}, {0, 1}},
        {{1, -1}, {-1, 1}, {1, 0}, {0, 1}},
        {{1, -1}, {-1, 1}, {1, 1}},
        {{1, -1}, {-1, 1}, {0, 1}, {1, 1}},
        {{1, -1}, {-1, 1}, {1, 0}, {0, 1}, {1, 1}},
    }};
    return table[static_cast<std::size_t>(s)];
}

bool support_contains(Support s, Step v)
{
    for (const Step& u : support_steps(s))
        if (u == v)
            return true;
    return false;
}

const Rat& Weighting::d(Step v) const { return const_cast<Weighting*>(this)->d(v); }

Rat& Weighting::d(Step v)
{
    if (v == Step{1, -1})
        return d1m1;
    if (v == Step{-1, 1})
        return dm11;
    if (v == Step{1, 0})
        return d10;
    if (v == Step{0, 1})
        return d01;
    if (v == Step{1, 1})
        return d11;
    fail(ErrorCode::InvalidSupport, "step (" + std::to_string(v.i) + "," + std::to_string(v.j) + ") is not admissible");
}

Weighting Weighting::unit(Support s, const Rat& a, const Rat& b)
{
    Weighting w;
    for (const Step& v : support_steps(s))
        w.d(v) = 1;
    w.a = a;
    w.b = b;
    return w;
}

namespace {

void validate(Support s, const Weighting& w)
{
    for (const Step& v : all_steps) {
        const Rat& d = w.d(v);
        const std::string name = "d(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
        if (support_contains(s, v)) {
            if (sgn(d) < 0)
                fail(ErrorCode::NonPositiveWeight, name + " = " + to_string(d));
            if (sgn(d) == 0)
                fail(ErrorCode::InvalidSupport, name + " is zero but the step belongs to " + std::string(support_name(s)));
        } else if (sgn(d) != 0) {
            fail(ErrorCode::InvalidSupport, name + " is nonzero but the step is absent from " + std::string(support_name(s)));
        }
    }
    if (sgn(w.a) <= 0)
        fail(ErrorCode::NonPositiveWeight, "a = " + to_string(w.a));
    if (sgn(w.b) <= 0)
        fail(ErrorCode::NonPositiveWeight, "b = " + to_string(w.b));
}

} // namespace

Model build_model(Support stepset, const Weighting& w)
{
    validate(stepset, w);
    Model m{stepset, w, Rat(1 - 1 / w.a), Rat(1 - 1 / w.b), Rat(0), {}, {}, {}, {}};
    if (m.A >= 1 || m.B >= 1)
        fail(ErrorCode::NonPositiveWeight, "A and B must stay below 1");
    m.omega = 1 - m.A - m.B;
    for (const Step& v : all_steps)
        if (sgn(w.d(v)) != 0)
            m.S += LaurentXY::monomial(w.d(v), v.i, v.j);
    const LaurentXY xy = LaurentXY::monomial(Rat(1), 1, 1);
    m.K = xy - (xy * m.S).scaled(t_poly());
    m.gamma1 = LaurentXY::monomial(m.A, -1, 0) - LaurentXY::monomial(t_poly(1, w.d1m1), 0, -1);
    m.gamma2 = LaurentXY::monomial(m.B, 0, -1) - LaurentXY::monomial(t_poly(1, w.dm11), -1, 0);
    return m;
}

GammaFunctions gamma_functions(const Model& m)
{
    return {m.gamma1, m.gamma2, m.gamma1, m.gamma2};
}

FunctionalEquation functional_equation_coeffs(const Model& m)
{
    return {m.K, LaurentXY::monomial(m.omega, 1, 1), LaurentXY::monomial(Rat(1), 2, 1) * m.gamma1,
            LaurentXY::monomial(Rat(1), 1, 2) * m.gamma2};
}

PolyYXT residue_mod_kernel(const Model& m, const LaurentXY& f)
{
    return pseudo_remainder(f.cleared(), m.K.cleared());
}

} // namespace qwalk
