// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "qwalk_io.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace qwalk;

namespace {

const Rat half = make_rat(1, 2);

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Collects the first few failures of one criterion.
class Report {
public:
    void require(bool cond, const std::string& what)
    {
        ++checks_;
        if (!cond && failures_.size() < 5)
            failures_.push_back(what);
        ok_ = ok_ && cond;
    }
    Outcome outcome() const
    {
        if (ok_)
            return {true, std::to_string(checks_) + " checks"};
        std::string s;
        for (const auto& f : failures_)
            s += (s.empty() ? "" : "; ") + f;
        return {false, s};
    }

private:
    bool ok_ = true;
    int checks_ = 0;
    std::vector<std::string> failures_;
};

Model unit(Support s, const Rat& a, const Rat& b) { return build_model(s, Weighting::unit(s, a, b)); }

std::string name(const Model& m)
{
    return std::string(support_name(m.stepset)) + " a=" + to_string(m.w.a) + " b=" + to_string(m.w.b);
}

Rat a_of(const Rat& A) { return 1 / (1 - A); }

std::vector<Model> sampled_models(int count, unsigned seed)
{
    const std::vector<Rat> As{0, make_rat(1, 4), make_rat(1, 3), half, make_rat(2, 3)};
    std::mt19937 rng(seed);
    std::vector<Model> out;
    for (int k = 0; k < count; ++k) {
        const Support s = static_cast<Support>(k % 5);
        const Rat A = As[static_cast<std::size_t>(k) % As.size()];
        const Rat B = As[static_cast<std::size_t>(k / 5 + 2 * k) % As.size()];
        out.push_back(build_model(s, io::random_weighting(s, a_of(A), a_of(B), rng)));
    }
    return out;
}

Outcome rational_oracle()
{
    Report r;
    const std::vector<std::pair<Rat, Rat>> ab{{3, make_rat(3, 2)}, {4, make_rat(4, 3)}, {make_rat(3, 2), 3}};
    for (Support s : {Support::S1, Support::S2})
        for (const auto& [a, b] : ab) {
            const Model m = unit(s, a, b);
            const Classification c = classify(m);
            r.require(c.verdict == Verdict::Rational, name(m) + " is not classified rational");
            try {
                verify_closed_form(m, c, 12);
                r.require(true, "");
            } catch (const Error& e) {
                r.require(false, name(m) + ": " + e.what());
            }
        }
    return r.outcome();
}

Outcome algebraic_oracle()
{
    Report r;
    Weighting w = Weighting::unit(Support::S3, 2, 2);
    Weighting w2 = w;
    w2.d11 = 2;
    w2.d1m1 = half;
    w2.dm11 = 3;
    for (const Weighting& wt : {w, w2}) {
        const Model m = build_model(Support::S3, wt);
        const Classification c = classify(m);
        r.require(c.verdict == Verdict::Algebraic, name(m) + " is not classified algebraic");
        try {
            verify_closed_form(m, c, 12);
            r.require(true, "");
        } catch (const Error& e) {
            r.require(false, name(m) + ": " + e.what());
        }
    }
    const auto qx0 = specialize(enumerate(build_model(Support::S3, w), 4), Specialization::YZero);
    r.require(qx0[2] == PolyT::monomial(Rat(2), 2), "[t^2]Q(x,0) != 2x^2");
    r.require(qx0[4] == PolyT::monomial(Rat(8), 2) + PolyT::monomial(Rat(6), 4), "[t^4]Q(x,0) != 8x^2 + 6x^4");
    return r.outcome();
}

Outcome residuals()
{
    Report r;
    const std::vector<std::pair<Rat, Rat>> ab{{1, 1}, {2, 2}, {5, 2}};
    std::mt19937 rng(2024);
    for (int s = 0; s < 5; ++s)
        for (int k = 0; k < 3; ++k) {
            const Support sup = static_cast<Support>(s);
            const Weighting base = io::random_weighting(sup, 1, 1, rng);
            for (const auto& [a, b] : ab) {
                Weighting w = base;
                w.a = a;
                w.b = b;
                const Model m = build_model(sup, w);
                try {
                    check_functional_equation(m, enumerate(m, 8), 8);
                    r.require(true, "");
                } catch (const Error& e) {
                    r.require(false, io::model_json(m).dump() + ": " + e.what());
                }
            }
        }
    return r.outcome();
}

Outcome p2_distances()
{
    Report r;
    for (const Rat& b : {Rat(1), Rat(2)}) {
        auto dist = [&](const Rat& a) {
            const Model m = unit(Support::S1, a, b);
            const auto p = critical_points(m);
            // P2 is the critical point off the origin; the {P1, P2} labels may be swapped.
            const CurvePoint& q = p[1].x1.is_zero() && p[1].y1.is_zero() ? p[0] : p[1];
            return sigma_distance(m, q, apply_iota1(m, q));
        };
        r.require(dist(2) == SigmaDistance(0), "a=2 b=" + to_string(b) + ": " + to_string(dist(2)));
        r.require(dist(1) == SigmaDistance(-2), "a=1 b=" + to_string(b) + ": " + to_string(dist(1)));
        r.require(dist(5) == std::nullopt, "a=5 b=" + to_string(b) + ": " + to_string(dist(5)));
    }
    return r.outcome();
}

Outcome edge_case()
{
    Report r;
    const Model m = unit(Support::S1, 5, 2);
    const CriticalSets sets = critical_sets(m);
    const MatrixPair mp = build_matrices_direct(m, sets);
    std::vector<std::pair<int, int>> nonneg;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (mp.M2(i, j) && *mp.M2(i, j) >= 0)
                nonneg.emplace_back(i, j);
    r.require(nonneg.size() == 1, std::to_string(nonneg.size()) + " nonnegative entries in M2");
    if (nonneg.size() == 1) {
        const auto [i, j] = nonneg.front();
        r.require(i == j && j >= 2, "entry is not in the (i2P3,P3)/(i2P4,P4) diagonal");
        r.require(mp.M2(i, j) == SigmaDistance(1), "entry is " + to_string(mp.M2(i, j)));
        r.require(sets.L2_minus[i] == apply_iota2(m, sets.L2_plus[j]), "row point is not iota2 of the column point");
    }
    try {
        edge_case_checks(m);
        r.require(true, "");
    } catch (const Error& e) {
        r.require(false, e.what());
    }
    return r.outcome();
}

Outcome matrix_structure()
{
    Report r;
    for (const Model& m : sampled_models(20, 6)) {
        const MatrixPair mp = build_matrices_direct(m, critical_sets(m));
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                r.require(mp.M1(i, j) == mp.M1(j, i), name(m) + ": M1 not symmetric");
                const int shift = (i < 2 && j < 2) ? -1 : (i >= 2 && j >= 2) ? 1 : 0;
                const SigmaDistance expect = mp.M1(i, j) ? SigmaDistance(*mp.M1(i, j) + shift) : std::nullopt;
                r.require(mp.M2(i, j) == expect, name(m) + ": M2 differs from M1 + block shift");
            }
    }
    return r.outcome();
}

Outcome distance_arithmetic()
{
    Report r;
    for (const Model& m : sampled_models(10, 7)) {
        const auto crit = critical_points(m);
        std::vector<CurvePoint> pts;
        for (const CurvePoint& p : crit)
            for (int k = -3; k <= 3; ++k)
                pts.push_back(apply_sigma_power(m, p, k));
        const CurvePoint third = apply_iota1(m, crit[1]);
        std::vector<OrbitProfile> anchors;
        for (const CurvePoint& p : crit)
            anchors.push_back(orbit_profile(m, p));
        for (const CurvePoint& q : pts) {
            const OrbitProfile pq = orbit_profile(m, q);
            const OrbitProfile p1 = orbit_profile(m, apply_iota1(m, q));
            const OrbitProfile p2 = orbit_profile(m, apply_iota2(m, q));
            const SigmaDistance d2 = sigma_distance(m, pq, third);
            const CurvePoint sq = apply_sigma(m, q);
            for (std::size_t a = 0; a < 4; ++a) {
                const CurvePoint& P = crit[a];
                const std::string tag = name(m) + " P" + std::to_string(a + 1);
                const SigmaDistance d = sigma_distance(m, anchors[a], q);
                const SigmaDistance back = sigma_distance(m, pq, P);
                r.require(d.has_value() == back.has_value() && (!d || *d == -*back), tag + ": antisymmetry");
                if (d && d2)
                    r.require(sigma_distance(m, anchors[a], third) == SigmaDistance(*d + *d2), tag + ": additivity");
                const SigmaDistance s = sigma_distance(m, anchors[a], sq);
                r.require(s == (d ? SigmaDistance(*d + 1) : std::nullopt), tag + ": sigma shift");
                r.require(sigma_distance(m, p1, apply_iota1(m, P)) == d, tag + ": iota1");
                r.require(sigma_distance(m, p2, apply_iota2(m, P)) == d, tag + ": iota2");
            }
        }
    }
    return r.outcome();
}

Outcome identity_lemmas()
{
    Report r;
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> pick(0, 4);
    const std::vector<Rat> As{0, make_rat(1, 4), make_rat(1, 3), half, make_rat(2, 3)};
    auto run = [&](Support s, const Rat& B, const std::string& lemma, int expected) {
        for (int k = 0; k < 5; ++k) {
            const Rat A = As[static_cast<std::size_t>(pick(rng))];
            const Rat b = B < 0 ? a_of(As[static_cast<std::size_t>(pick(rng))]) : a_of(B);
            const Model m = build_model(s, io::random_weighting(s, a_of(A), b, rng));
            try {
                int n = 0;
                for (const auto& c : verify_identity_lemmas(m))
                    n += c.lemma == lemma;
                r.require(n == expected, name(m) + ": " + std::to_string(n) + " " + lemma + " checks");
            } catch (const Error& e) {
                r.require(false, name(m) + ": " + e.what());
            }
        }
    };
    // dcpl_type12 runs lambda = A and lambda = 1/2 (a single pass when A = 1/2).
    for (Support s : {Support::S1, Support::S2})
        for (int k = 0; k < 5; ++k) {
            const Rat A = As[static_cast<std::size_t>(k)];
            const Model m = build_model(s, io::random_weighting(s, a_of(A), a_of(As[(k + 2) % 5]), rng));
            try {
                int n = 0;
                for (const auto& c : verify_identity_lemmas(m))
                    n += c.lemma == "dcpl_type12";
                r.require(n == (A == half ? 3 : 6), name(m) + ": " + std::to_string(n) + " dcpl_type12 checks");
            } catch (const Error& e) {
                r.require(false, name(m) + ": " + e.what());
            }
        }
    run(Support::S3, Rat(-1), "dcpl_type3", 2);
    run(Support::S1, half, "edge_comp", 2);
    return r.outcome();
}

Outcome homogeneous_table()
{
    Report r;
    const std::vector<std::pair<Rat, Rat>> cells{{0, 0},
                                                 {0, half},
                                                 {half, 0},
                                                 {half, half},
                                                 {make_rat(1, 3), make_rat(2, 3)},
                                                 {make_rat(1, 4), make_rat(1, 3)},
                                                 {make_rat(2, 3), 0},
                                                 {0, make_rat(1, 4)}};
    std::mt19937 rng(9);
    for (int s = 0; s < 5; ++s)
        for (const auto& [A, B] : cells)
            for (int k = 0; k < 2; ++k) {
                const Support sup = static_cast<Support>(s);
                const Weighting w =
                    k == 0 ? Weighting::unit(sup, a_of(A), a_of(B)) : io::random_weighting(sup, a_of(A), a_of(B), rng);
                const Model m = build_model(sup, w);
                const TableCell cell = homogeneous_table_cell(sup, A, B);
                try {
                    const HomStatus st = homogeneous_analysis(m, build_matrices(m).M1);
                    r.require(st.to_string() == cell.to_string(), name(m) + ": " + st.to_string());
                    if (cell.kind == HomKind::BotRow)
                        continue;
                    int negative = 0;
                    for (const auto& c : st.certificates)
                        if (c.sign < 0) {
                            ++negative;
                            const bool reason = c.evidence.find("odd degree") != std::string::npos ||
                                                c.evidence.find("discriminant") != std::string::npos ||
                                                c.evidence.find("not a square") != std::string::npos;
                            r.require(reason, name(m) + ": sign certificate lacks a non-square reason");
                        }
                    const int minus = (cell.eps1 < 0) + (cell.eps2 < 0);
                    if (cell.kind == HomKind::SignedSolution)
                        r.require(negative == minus, name(m) + ": " + std::to_string(negative) + " negative certificates");
                } catch (const Error& e) {
                    r.require(false, name(m) + ": " + e.what());
                }
            }
    return r.outcome();
}

Verdict case_split(Support s, const Rat& A, const Rat& B)
{
    if ((s == Support::S1 || s == Support::S2) && A + B == 1)
        return Verdict::Rational;
    if (s == Support::S3 && A == half && B == half)
        return Verdict::Algebraic;
    return Verdict::NotDAlgebraic;
}

bool valid_trail(const Classification& c)
{
    auto has = [&](const std::string& rule) {
        for (const auto& e : c.trail)
            if (e.rule == rule && !e.evidence.empty())
                return true;
        return false;
    };
    switch (c.verdict) {
    case Verdict::Rational:
        return has("RationalDecoupling") && has("ClosedForm");
    case Verdict::Algebraic:
        return has("HomogeneousSolution") && has("ClosedForm");
    case Verdict::NotDAlgebraic:
        return has("HomogeneousTable") && (has("EdgeCase") || has("H1Confined") || has("H2Confined"));
    }
    return false;
}

Outcome full_coverage()
{
    Report r;
    const std::vector<Rat> As{0, make_rat(1, 4), make_rat(1, 3), half, make_rat(2, 3)};
    std::mt19937 rng(10);
    for (int s = 0; s < 5; ++s)
        for (const Rat& A : As)
            for (const Rat& B : As)
                for (int k = 0; k < 2; ++k) {
                    const Support sup = static_cast<Support>(s);
                    const Weighting w = k == 0 ? Weighting::unit(sup, a_of(A), a_of(B))
                                               : io::random_weighting(sup, a_of(A), a_of(B), rng);
                    const Model m = build_model(sup, w);
                    try {
                        const Classification c = classify(m);
                        r.require(c.verdict == case_split(sup, A, B), name(m) + ": " + verdict_name(c.verdict));
                        r.require(valid_trail(c), name(m) + ": incomplete trail");
                    } catch (const Error& e) {
                        r.require(false, name(m) + ": " + e.what());
                    }
                }
    return r.outcome();
}

struct Criterion {
    int id;
    std::string title;
    double budget_s; // 0: no runtime bound
    std::function<Outcome()> run;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "rational closed forms match enumeration to t^12", 30, rational_oracle},
        {2, "algebraic closed forms match enumeration to t^12", 30, algebraic_oracle},
        {3, "functional-equation residual vanishes mod t^9", 120, residuals},
        {4, "sigma distances of P2 and iota1 P2 on S1", 10, p2_distances},
        {5, "edge-case M2 has one nonnegative entry delta(i2P4, P4) = 1", 10, edge_case},
        {6, "M1 symmetric and M2 = M1 + block shift on 20 models", 0, matrix_structure},
        {7, "sigma-distance identities on critical orbits", 0, distance_arithmetic},
        {8, "decoupling identities vanish modulo the kernel", 0, identity_lemmas},
        {9, "homogeneous table cells and non-square certificates", 0, homogeneous_table},
        {10, "classification grid covers every model with the expected verdict", 600, full_coverage},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("uncaught: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && secs > c.budget_s)
            o = {false, "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s"};
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (o.ok ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << ": " << c.title << " (" << secs << " s) "
             << o.detail;
        std::cout << line.str() << std::endl;
        failed += !o.ok;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
