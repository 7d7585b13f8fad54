#include "qwalk/enumerator.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <random>

using namespace qwalk;

namespace {

Weighting random_weighting(std::mt19937& rng, Support s, const Rat& a, const Rat& b)
{
    std::uniform_int_distribution<int> num(1, 5), den(1, 3);
    Weighting w;
    for (const Step& v : support_steps(s))
        w.d(v) = make_rat(num(rng), den(rng));
    w.a = a;
    w.b = b;
    return w;
}

// Walk-by-walk enumeration: every path is generated, its step weights multiplied,
// and its axis contacts counted separately before applying a^nx b^ny.
std::map<std::tuple<int, int, int>, Rat> brute_force(const Model& m, int N)
{
    std::map<std::tuple<int, int, int>, Rat> out;
    std::function<void(int, int, int, Rat, int, int)> go = [&](int n, int i, int j, Rat prod, int nx, int ny) {
        Rat w = prod;
        for (int k = 0; k < nx; ++k)
            w *= m.w.a;
        for (int k = 0; k < ny; ++k)
            w *= m.w.b;
        out[{n, i, j}] += w;
        if (n == N)
            return;
        for (const Step& v : support_steps(m.stepset)) {
            int ni = i + v.i, nj = j + v.j;
            if (ni < 0 || nj < 0)
                continue;
            go(n + 1, ni, nj, prod * m.w.d(v), nx + (nj == 0 ? 1 : 0), ny + (ni == 0 ? 1 : 0));
        }
    };
    go(0, 0, 0, Rat(1), 0, 0);
    return out;
}

// Plain count of weighted walks without any contact statistic.
std::vector<std::map<std::pair<int, int>, Rat>> plain_dp(Support s, const Weighting& w, int N)
{
    std::vector<std::map<std::pair<int, int>, Rat>> layers(1);
    layers[0][{0, 0}] = 1;
    for (int n = 1; n <= N; ++n) {
        std::map<std::pair<int, int>, Rat> next;
        for (const auto& [pos, c] : layers.back())
            for (const Step& v : support_steps(s)) {
                std::pair<int, int> q{pos.first + v.i, pos.second + v.j};
                if (q.first >= 0 && q.second >= 0)
                    next[q] += c * w.d(v);
            }
        layers.push_back(std::move(next));
    }
    return layers;
}

} // namespace

TEST_CASE("build_model derived quantities")
{
    Model m3 = build_model(Support::S3, Weighting::unit(Support::S3, 2, 2));
    CHECK(m3.A == make_rat(1, 2));
    CHECK(m3.B == make_rat(1, 2));
    CHECK(m3.omega == 0);
    // xy(1 - t(x/y + y/x + xy)) expanded by hand.
    LaurentXY K = LaurentXY::monomial(Rat(1), 1, 1) -
                  LaurentXY::monomial(t_poly(), 2, 2) - LaurentXY::monomial(t_poly(), 2, 0) -
                  LaurentXY::monomial(t_poly(), 0, 2);
    CHECK(m3.K == K);

    Model m1 = build_model(Support::S1, Weighting::unit(Support::S1, 3, make_rat(3, 2)));
    CHECK(m1.A == make_rat(2, 3));
    CHECK(m1.B == make_rat(1, 3));
    CHECK(m1.omega == 0);

    Model m5 = build_model(Support::S5, Weighting::unit(Support::S5));
    CHECK(m5.A == 0);
    CHECK(m5.B == 0);
    CHECK(m5.omega == 1);
}

TEST_CASE("build_model validates supports and weights")
{
    Weighting w = Weighting::unit(Support::S1);
    w.d10 = 1;
    CHECK_THROWS_AS(build_model(Support::S1, w), Error);
    Weighting z = Weighting::unit(Support::S2);
    z.d10 = 0;
    try {
        build_model(Support::S2, z);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidSupport);
    }
    Weighting neg = Weighting::unit(Support::S3);
    neg.d11 = -1;
    try {
        build_model(Support::S3, neg);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonPositiveWeight);
    }
    CHECK_THROWS_AS(build_model(Support::S3, Weighting::unit(Support::S3, 0, 1)), Error);
    CHECK_THROWS_AS(parse_support("S6"), Error);
}

TEST_CASE("gamma functions and functional-equation coefficients")
{
    Model a1 = build_model(Support::S4, Weighting::unit(Support::S4, 1, 3));
    CHECK(a1.gamma1 == -LaurentXY::monomial(t_poly(), 0, -1));
    Model b1 = build_model(Support::S4, Weighting::unit(Support::S4, 3, 1));
    CHECK(b1.gamma2 == -LaurentXY::monomial(t_poly(), -1, 0));
    Model u = build_model(Support::S5, Weighting::unit(Support::S5, 2, 2));
    CHECK(u.gamma1 == LaurentXY::monomial(make_rat(1, 2), -1, 0) - LaurentXY::monomial(t_poly(), 0, -1));

    Model s1 = build_model(Support::S1, Weighting::unit(Support::S1));
    auto fe = functional_equation_coeffs(s1);
    CHECK(fe.omega_term == LaurentXY::monomial(Rat(1), 1, 1));
    CHECK(fe.x_axis_coeff == LaurentXY::monomial(s1.A, 1, 1) - LaurentXY::monomial(t_poly(1, s1.w.d1m1), 2, 0));
    Model rat = build_model(Support::S2, Weighting::unit(Support::S2, 3, make_rat(3, 2)));
    CHECK(functional_equation_coeffs(rat).omega_term.is_zero());

    auto g = gamma_functions(u);
    CHECK(g.gamma_num == u.gamma1);
    CHECK(g.gamma_den == u.gamma2);
    CHECK(!g.gamma_num.is_zero());
}

TEST_CASE("K has no constant xy correction and vanishes at the origin")
{
    for (int s = 0; s < 5; ++s) {
        Model m = build_model(static_cast<Support>(s), Weighting::unit(static_cast<Support>(s), 2, 3));
        CHECK(m.K.coeff(0, 0).is_zero_poly());
        CHECK(m.K.coeff(1, 1) == PolyT(Rat(1)));
        for (const auto& [k, c] : m.K.terms())
            CHECK(k.first + k.second <= 4);
        CHECK(m.omega == 1 - m.A - m.B);
    }
}

TEST_CASE("enumerate small cases by hand")
{
    Model m = build_model(Support::S3, Weighting::unit(Support::S3));
    auto s = enumerate(m, 2);
    CHECK(s.terms[0] == PolyXY(PolyT(Rat(1))));
    CHECK(coeff_xy(s.terms[1], 1, 1) == 1);
    CHECK(s.terms[1].degree() == 1);
    CHECK(coeff_xy(s.terms[2], 2, 2) == 1);
    CHECK(coeff_xy(s.terms[2], 2, 0) == 1);
    CHECK(coeff_xy(s.terms[2], 0, 2) == 1);

    Model r = build_model(Support::S1, Weighting::unit(Support::S1, 3, make_rat(3, 2)));
    auto qx0 = specialize(enumerate(r, 2), Specialization::YZero);
    CHECK(qx0[2] == PolyT::monomial(make_rat(9, 2), 1));

    Model plain = build_model(Support::S1, Weighting::unit(Support::S1));
    auto q0y = specialize(enumerate(plain, 1), Specialization::XZero);
    CHECK(q0y[1] == PolyT::monomial(Rat(1), 1));
    CHECK(specialize(enumerate(plain, 3), Specialization::OneOne)[0] == PolyT(Rat(1)));
}

TEST_CASE("enumerate agrees with walk-by-walk enumeration")
{
    std::mt19937 rng(42);
    for (int s = 0; s < 5; ++s) {
        Support sup = static_cast<Support>(s);
        Model m = build_model(sup, random_weighting(rng, sup, make_rat(5, 2), make_rat(2, 3)));
        const int N = 6;
        auto series = enumerate(m, N);
        auto bf = brute_force(m, N);
        for (int n = 0; n <= N; ++n)
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    auto it = bf.find({n, i, j});
                    Rat expect = it == bf.end() ? Rat(0) : it->second;
                    CHECK(coeff_xy(series.terms[n], i, j) == expect);
                }
    }
}

TEST_CASE("with a = b = 1 the count matches a contact-free DP")
{
    std::mt19937 rng(8);
    for (int s = 0; s < 5; ++s) {
        Support sup = static_cast<Support>(s);
        Weighting w = random_weighting(rng, sup, 1, 1);
        auto series = enumerate(build_model(sup, w), 10);
        auto plain = plain_dp(sup, w, 10);
        for (int n = 0; n <= 10; ++n) {
            for (const auto& [pos, c] : plain[n])
                CHECK(coeff_xy(series.terms[n], pos.first, pos.second) == c);
        }
    }
    auto unit = enumerate(build_model(Support::S5, Weighting::unit(Support::S5)), 8);
    for (const auto& term : unit.terms)
        for (const auto& row : term.coeffs())
            for (const auto& c : row.coeffs())
                CHECK(c.get_den() == 1);
}

TEST_CASE("coefficients are nonnegative and monotone in step weights")
{
    std::mt19937 rng(99);
    for (int s = 0; s < 5; ++s) {
        Support sup = static_cast<Support>(s);
        Weighting w = random_weighting(rng, sup, 2, 3);
        auto base = enumerate(build_model(sup, w), 7);
        for (const Step& v : support_steps(sup)) {
            Weighting up = w;
            up.d(v) += make_rat(1, 2);
            auto bigger = enumerate(build_model(sup, up), 7);
            for (int n = 0; n <= 7; ++n)
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n; ++j) {
                        CHECK(coeff_xy(base.terms[n], i, j) >= 0);
                        CHECK(coeff_xy(bigger.terms[n], i, j) >= coeff_xy(base.terms[n], i, j));
                    }
        }
    }
}

TEST_CASE("functional equation residual vanishes")
{
    struct Case {
        Support s;
        Weighting w;
        int N;
    };
    Weighting half = Weighting::unit(Support::S5, 2, 3);
    for (const Step& v : support_steps(Support::S5))
        half.d(v) = make_rat(1, 2);
    std::vector<Case> cases{{Support::S3, Weighting::unit(Support::S3, 2, 2), 8},
                            {Support::S1, Weighting::unit(Support::S1), 8},
                            {Support::S5, half, 6}};
    for (const auto& c : cases) {
        Model m = build_model(c.s, c.w);
        auto s = enumerate(m, c.N);
        CHECK_NOTHROW(check_functional_equation(m, s, c.N));
    }
}

TEST_CASE("residual detects a wrong contact convention")
{
    Model m = build_model(Support::S2, Weighting::unit(Support::S2, 2, 3));
    auto s = enumerate(m, 5);
    s.terms[3] += PolyXY::monomial(PolyT(Rat(1)), 1); // perturb one coefficient
    CHECK_THROWS_AS(check_functional_equation(m, s, 5), Error);
}
