#include "qwalk/sigmadist.hpp"

#include <doctest.h>

using namespace qwalk;

namespace {

Bivaluation bv(int i, int j) { return {Rat(i), Rat(j)}; }
const Valuation inf = std::nullopt;

std::vector<Model> sample_models()
{
    std::vector<Model> out;
    const std::vector<std::pair<Rat, Rat>> ab{{1, 1}, {2, 2}, {5, 2}, {4, make_rat(4, 3)}};
    for (int s = 0; s < 5; ++s) {
        Support sup = static_cast<Support>(s);
        for (const auto& [a, b] : ab) {
            Weighting w = Weighting::unit(sup, a, b);
            w.dm11 = 2;
            out.push_back(build_model(sup, w));
        }
    }
    return out;
}

std::vector<Bivaluation> window_valuations(const OrbitProfile& p, int w)
{
    std::vector<Bivaluation> out;
    for (int n = -w; n <= w; ++n)
        out.push_back(p.valuation_at(n));
    return out;
}

// nullopt when the step rule does not apply.
std::optional<Bivaluation> predicted(Bivaluation (*step)(const Bivaluation&), const Bivaluation& v)
{
    try {
        return step(v);
    } catch (const Error& e) {
        REQUIRE(e.code() == ErrorCode::RegimeNotApplicable);
        return std::nullopt;
    }
}

} // namespace

TEST_CASE("bivaluation examples")
{
    Model generic = build_model(Support::S1, Weighting::unit(Support::S1, 3, 2));
    CHECK(bivaluation(critical_points(generic)[1]) == bv(2, 1));
    Model a0 = build_model(Support::S1, Weighting::unit(Support::S1, 1, 2));
    CHECK(bivaluation(critical_points(a0)[1]) == Bivaluation{Rat(0), inf});
    CHECK(bivaluation(CurvePoint{QuadExtElem(1), QuadExtElem(1)}) == bv(0, 0));
    CHECK(bv(-2, -1).to_string() == "(-2,-1)");
}

TEST_CASE("valuation steps in the linear regime")
{
    CHECK(step_valuation_forward(bv(-2, -1)) == bv(-4, -3));
    Bivaluation v = bv(-3, -2);
    for (int k = 1; k <= 6; ++k) {
        v = step_valuation_forward(v);
        CHECK(v == bv(-3 - 2 * k, -2 - 2 * k));
    }
    Bivaluation b = bv(-1, -3);
    for (int k = 1; k <= 4; ++k) {
        b = step_valuation_backward(b);
        CHECK(b == bv(-1 - 4 * k, -3 - 4 * k));
    }
    try {
        step_valuation_forward(bv(2, 1));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RegimeNotApplicable);
    }
    CHECK_THROWS_AS(step_valuation_backward(Bivaluation{Rat(-1), inf}), Error);
}

TEST_CASE("predicted valuations agree with explicit sigma steps")
{
    for (const Model& m : sample_models())
        for (const CurvePoint& p : critical_points(m)) {
            const auto orbit = sigma_orbit(m, p, 4);
            for (std::size_t k = 0; k + 1 < orbit.size(); ++k) {
                const Bivaluation v = bivaluation(orbit[k]);
                const Bivaluation next = bivaluation(orbit[k + 1]);
                if (auto f = predicted(step_valuation_forward, v))
                    CHECK(*f == next);
                if (auto b = predicted(step_valuation_backward, next))
                    CHECK(*b == v);
            }
        }
}

TEST_CASE("orbit profiles of P2 on S1")
{
    Model generic = build_model(Support::S1, Weighting::unit(Support::S1, 3, 2));
    auto prof = orbit_profile(generic, critical_points(generic)[1]);
    CHECK(window_valuations(prof, 2) == std::vector<Bivaluation>{bv(-2, -3), bv(0, -1), bv(2, 1), bv(0, 1), bv(-2, -1)});
    CHECK(is_backward_tail(prof.valuation_at(-2)));
    CHECK(is_forward_tail(prof.valuation_at(2)));
    for (int n = 2; n < prof.window; ++n) {
        CHECK(*prof.valuation_at(n + 1).vx == *prof.valuation_at(n).vx - 2);
        CHECK(*prof.valuation_at(-n - 1).vx == *prof.valuation_at(-n).vx - 2);
    }

    Model a0 = build_model(Support::S1, Weighting::unit(Support::S1, 1, 2));
    auto p0 = orbit_profile(a0, critical_points(a0)[1]);
    CHECK(window_valuations(p0, 2) ==
          std::vector<Bivaluation>{bv(0, -1), Bivaluation{inf, inf}, Bivaluation{Rat(0), inf}, bv(-2, -1), bv(-4, -3)});
    CHECK(p0.valuation_at(-3) == bv(-2, -3));
}

TEST_CASE("sigma distance of P2 and its iota1 image on S1")
{
    auto dist = [](const Rat& a) {
        Model m = build_model(Support::S1, Weighting::unit(Support::S1, a, 2));
        auto p = critical_points(m);
        // Labels within {P1, P2} may be permuted; take the nontrivial zero.
        const CurvePoint& q = p[1].x1.is_zero() ? p[0] : p[1];
        return sigma_distance(m, q, apply_iota1(m, q));
    };
    CHECK(dist(2) == SigmaDistance(0));
    CHECK(dist(1) == SigmaDistance(-2));
    CHECK(dist(5) == std::nullopt);
    CHECK(to_string(dist(5)) == "bot");
}

TEST_CASE("sigma distance algebra on critical points")
{
    for (const Model& m : sample_models()) {
        const auto p = critical_points(m);
        for (const CurvePoint& q : p) {
            const auto prof = orbit_profile(m, q);
            for (int k = -5; k <= 5; ++k)
                CHECK(sigma_distance(m, prof, apply_sigma_power(m, q, k)) == SigmaDistance(k));
        }
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const CurvePoint& P = p[i];
                const CurvePoint Q = apply_iota1(m, p[j]);
                const SigmaDistance d = sigma_distance(m, P, Q);
                const SigmaDistance back = sigma_distance(m, Q, P);
                CHECK(d.has_value() == back.has_value());
                if (d)
                    CHECK(*d == -*back);
                const SigmaDistance shifted = sigma_distance(m, P, apply_sigma(m, Q));
                CHECK(shifted == (d ? SigmaDistance(*d + 1) : std::nullopt));
                CHECK(sigma_distance(m, apply_iota1(m, Q), apply_iota1(m, P)) == d);
                CHECK(sigma_distance(m, apply_iota2(m, Q), apply_iota2(m, P)) == d);
                const CurvePoint R = apply_sigma_power(m, apply_iota2(m, p[3 - j]), 1);
                const SigmaDistance d2 = sigma_distance(m, Q, R);
                const SigmaDistance d3 = sigma_distance(m, P, R);
                if (d && d2)
                    CHECK(d3 == SigmaDistance(*d + *d2));
            }
    }
}

TEST_CASE("matrix symmetry and the block shift")
{
    for (const Model& m : sample_models()) {
        const CriticalSets s = critical_sets(m);
        const MatrixPair derived = build_matrices(m, s, default_window, 7);
        const MatrixPair direct = build_matrices_direct(m, s);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                CHECK(direct.M1(i, j) == direct.M1(j, i));
                CHECK(direct.M2(i, j) == direct.M2(j, i));
                CHECK(derived.M1(i, j) == direct.M1(i, j));
                CHECK(derived.M2(i, j) == direct.M2(i, j));
            }
    }
}

TEST_CASE("edge case: one nonnegative entry of M2")
{
    Model m = build_model(Support::S1, Weighting::unit(Support::S1, 5, 2));
    const MatrixPair mp = build_matrices(m);
    int nonneg = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (mp.M2(i, j) && *mp.M2(i, j) >= 0)
                ++nonneg;
    CHECK(nonneg == 1);
    CHECK(mp.M2(3, 3) == SigmaDistance(1));
    CHECK(mp.M2.row_labels[3] == "i2P4");
    CHECK(mp.M2.col_labels[3] == "P4");
}

TEST_CASE("window bounds")
{
    Model m = build_model(Support::S2, Weighting::unit(Support::S2, 2, 2));
    const CurvePoint p = critical_points(m)[1];
    CHECK_THROWS_AS(orbit_profile(m, p, 0), Error);
    CHECK_THROWS_AS(orbit_profile(m, p, max_window + 1), Error);
    CHECK(orbit_profile(m, p, 2).window >= 2);
}
