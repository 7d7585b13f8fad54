#include "qwalk/classifier.hpp"

#include "qwalk/enumerator.hpp"
#include "qwalk/puiseux.hpp"

#include <algorithm>

namespace qwalk {

namespace {

const Rat half = make_rat(1, 2);

LaurentXY L(const PolyT& c, int i, int j) { return LaurentXY::monomial(c, i, j); }
PolyT tp(int k, const Rat& c) { return t_poly(k, c); }

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

void require_identity(const Model& m, const std::string& lemma, const LaurentXY& lhs, const LaurentXY& rhs)
{
    if (auto r = kernel_residual(m, lhs - rhs))
        fail(ErrorCode::IdentityFailed, lemma + ": residual " + *r);
}

// u_lambda = (1 - lambda) - t d10 x - t d1m1 x / y.
LaurentXY u_lambda(const Model& m, const Rat& lambda)
{
    return LaurentXY(1 - lambda) - L(tp(1, m.w.d10), 1, 0) - L(tp(1, m.w.d1m1), 1, -1);
}

LaurentXY x_gamma1(const Model& m) { return LaurentXY::x() * m.gamma1; }
LaurentXY y_gamma2(const Model& m) { return LaurentXY::y() * m.gamma2; }

// Right-hand sides of the identities.
LaurentXY type12_ii_rhs(const Model& m, const Rat& lambda)
{
    const Weighting& w = m.w;
    return LaurentXY(lambda * (1 - lambda)) - L(tp(2, w.d1m1 * w.dm11), 0, 0) -
           L(tp(1, lambda * w.d10) + tp(2, w.d1m1 * w.d01), 1, 0);
}

LaurentXY type12_iii_rhs(const Model& m, const Rat& lambda)
{
    const Weighting& w = m.w;
    return LaurentXY(lambda * (1 - lambda)) - L(tp(2, w.d1m1 * w.dm11), 0, 0) -
           L(tp(1, (1 - lambda) * w.d01) + tp(2, w.dm11 * w.d10), 0, 1);
}

LaurentXY type3_rhs(const Model& m, bool in_x)
{
    const Weighting& w = m.w;
    const Rat side = in_x ? w.d1m1 : w.dm11;
    return LaurentXY(make_rat(1, 4)) - L(tp(2, w.d1m1 * w.dm11), 0, 0) -
           L(tp(2, w.d11 * side), in_x ? 2 : 0, in_x ? 0 : 2);
}

// (x gamma1)^2 at A = 1/2 when d10 = 0.
LaurentXY half_square_rhs(const Model& m)
{
    const Weighting& w = m.w;
    return LaurentXY(make_rat(1, 4)) - L(tp(2, w.d1m1 * w.dm11), 0, 0) - L(tp(2, w.d1m1 * w.d01), 1, 0) -
           L(tp(2, w.d1m1 * w.d11), 2, 0);
}

LaurentXY edge_u(const Model& m) { return LaurentXY(half) - L(tp(1, m.w.d1m1), 1, -1); }

LaurentXY edge_i_rhs(const Model& m)
{
    const Weighting& w = m.w;
    return LaurentXY(make_rat(1, 4)) - L(tp(2, w.dm11 * w.d1m1), 0, 0) - L(tp(2, w.d1m1 * w.d01), 1, 0);
}

LaurentXY edge_ii_rhs(const Model& m)
{
    const Weighting& w = m.w;
    return LaurentXY(make_rat(1, 4)) - L(tp(1, half * w.d01), 0, 1) - L(tp(2, w.dm11 * w.d1m1), 0, 0);
}

// Univariate polynomial in x (in_x) or y; the other exponent must be 0.
Poly<RatFunc> univariate(const LaurentXY& f, bool in_x)
{
    Poly<RatFunc> p;
    for (const auto& [k, c] : f.terms()) {
        const int e = in_x ? k.first : k.second;
        const int other = in_x ? k.second : k.first;
        if (other != 0 || e < 0)
            fail(ErrorCode::PreconditionFailed, "not a polynomial in one variable: " + f.to_string());
        p += Poly<RatFunc>::monomial(RatFunc(c), e);
    }
    return p;
}

bool depends_only_on(const LaurentXY& f, bool on_x)
{
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [&](const auto& kv) { return (on_x ? kv.first.second : kv.first.first) == 0; });
}

// Squareness over an algebraic closure of Q(t); the certificate text says why not.
std::optional<std::string> non_square_certificate(const Poly<RatFunc>& p, const std::string& var)
{
    const std::string shown = to_string(p, {var});
    if (p.degree() % 2 == 1)
        return shown + " has odd degree " + std::to_string(p.degree()) + " in " + var;
    if (monic_square_root(p))
        return std::nullopt;
    if (p.degree() == 2) {
        const RatFunc disc = p.coeff(1) * p.coeff(1) - RatFunc(4) * p.coeff(0) * p.coeff(2);
        return shown + " has nonzero discriminant " + disc.to_string();
    }
    return shown + " is not a square";
}

// iota1 sign of f with f^2 congruent to the polynomial rhs in x (or the iota2 sign, in y).
SignCertificate signed_by_square(const Model& m, const std::string& factor, const std::string& lemma,
                                 const LaurentXY& f, const LaurentXY& rhs, bool in_x)
{
    require_identity(m, lemma, f * f, rhs);
    const auto why = non_square_certificate(univariate(rhs, in_x), in_x ? "x" : "y");
    if (!why)
        fail(ErrorCode::TableCellMismatch, factor + ": square is a perfect square, no sign certificate");
    return {factor, -1, lemma + " holds mod K and " + *why};
}

std::string matrix_string(const DistanceMatrix& M)
{
    std::string s = "[";
    for (int i = 0; i < 4; ++i) {
        s += i ? "; " : "";
        for (int j = 0; j < 4; ++j)
            s += (j ? " " : "") + to_string(M(i, j));
    }
    return s + "]";
}

bool all_negative_or_bot(const DistanceMatrix& M)
{
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (M(i, j) && *M(i, j) >= 0)
                return false;
    return true;
}

bool is_s1_or_s2(Support s) { return s == Support::S1 || s == Support::S2; }

} // namespace

std::optional<std::string> kernel_residual(const Model& m, const LaurentXY& f)
{
    const PolyYXT r = residue_mod_kernel(m, f);
    if (r.is_zero_poly())
        return std::nullopt;
    return to_string(r, {"y", "x", "t"});
}

std::string TableCell::to_string() const
{
    if (kind == HomKind::BotRow) {
        std::string s;
        for (int r : bot_rows)
            s += (s.empty() ? "" : ", ") + std::string("(bot,") + std::to_string(r) + ")";
        return s;
    }
    std::string s = "(" + sign_char(eps1) + "," + sign_char(eps2) + ")";
    return kind == HomKind::Solution ? s + " solution" : s;
}

std::string HomStatus::to_string() const
{
    TableCell c{kind, bot_rows, eps1, eps2};
    return c.to_string();
}

TableCell homogeneous_table_cell(Support s, const Rat& A, const Rat& B)
{
    auto bot = [](std::vector<int> rows) { return TableCell{HomKind::BotRow, std::move(rows)}; };
    auto sgn = [](int e1, int e2) { return TableCell{HomKind::SignedSolution, {}, e1, e2}; };
    const bool s1 = s == Support::S1, s3 = s == Support::S3, s4 = s == Support::S4;
    if (A == 0 && B == 0)
        return sgn(1, 1);
    if (A == 0 && B == half)
        return s1 ? sgn(-1, 1) : s3 ? sgn(1, -1) : bot({4});
    if (A == half && B == 0)
        return (s1 || s3 || s4) ? sgn(-1, 1) : bot({2});
    if (A == half && B == half) {
        if (is_s1_or_s2(s))
            return sgn(1, 1);
        if (s3)
            return TableCell{HomKind::Solution, {}, -1, -1};
        return bot({4});
    }
    if (A + B == 1)
        return is_s1_or_s2(s) ? sgn(1, 1) : bot({2});
    std::vector<int> rows;
    if (A != 0 && A != half)
        rows.push_back(2);
    if (B != 0 && B != half)
        rows.push_back(4);
    return bot(rows);
}

HomStatus homogeneous_analysis(const Model& m, const DistanceMatrix& M1)
{
    const TableCell cell = homogeneous_table_cell(m.stepset, m.A, m.B);
    HomStatus st;
    st.kind = cell.kind;
    if (cell.kind == HomKind::BotRow) {
        for (int r : cell.bot_rows)
            for (int j = 0; j < 4; ++j)
                if (M1(r - 1, j))
                    fail(ErrorCode::TableCellMismatch, "row " + std::to_string(r) + " of M1 is not all bot: " +
                                                           matrix_string(M1));
        st.bot_rows = cell.bot_rows;
        return st;
    }

    const Weighting& w = m.w;
    if (is_s1_or_s2(m.stepset) && m.A + m.B == 1) {
        // h1 = 1 / (gamma1 u_A) in C(x), h2 = -1 / (gamma2 u_A) in C(y).
        const LaurentXY u = u_lambda(m, m.A);
        const LaurentXY px = type12_ii_rhs(m, m.A), py = type12_iii_rhs(m, m.A);
        require_identity(m, "dcpl_type12(ii) lambda=A", x_gamma1(m) * u, px);
        require_identity(m, "dcpl_type12(iii) lambda=A", -(y_gamma2(m) * u), py);
        if (px.coeff(0, 0).is_zero_poly())
            fail(ErrorCode::TableCellMismatch, "u_A vanishes");
        st.certificates.push_back({"h1 = x / ((x gamma1) u_A)", 1, "(x gamma1) u_A = " + px.to_string() + " mod K"});
        st.certificates.push_back({"h2 = -y / ((y gamma2) u_A)", 1, "-(y gamma2) u_A = " + py.to_string() + " mod K"});
        st.eps1 = st.eps2 = 1;
    } else {
        int e11 = 1, e12 = 1, e21 = 1, e22 = 1;
        if (m.A == 0) {
            if (!depends_only_on(m.gamma1, false))
                fail(ErrorCode::TableCellMismatch, "gamma1 is not a function of y");
            st.certificates.push_back({"h12 = gamma1", 1, "gamma1 = " + m.gamma1.to_string() + " lies in Q(t)(y)"});
        } else if (m.A == half && w.d10 == 0) {
            st.certificates.push_back(
                signed_by_square(m, "h11 = gamma1", "(x gamma1)^2 identity", x_gamma1(m), half_square_rhs(m), true));
            e11 = -1;
        } else {
            fail(ErrorCode::TableCellMismatch, "gamma1 has no signed decoupling for A = " + to_string(m.A));
        }
        if (m.B == 0) {
            if (!depends_only_on(m.gamma2, true))
                fail(ErrorCode::TableCellMismatch, "gamma2 is not a function of x");
            st.certificates.push_back({"h21 = gamma2", 1, "gamma2 = " + m.gamma2.to_string() + " lies in Q(t)(x)"});
        } else if (m.B == half && m.stepset == Support::S1) {
            const LaurentXY u = edge_u(m);
            SignCertificate c = signed_by_square(m, "h21 = 1/u", "edge_comp(i)", u, edge_i_rhs(m), true);
            st.certificates.push_back(c);
            require_identity(m, "edge_comp(ii)", -(y_gamma2(m) * u), edge_ii_rhs(m));
            st.certificates.push_back({"h22 = -mu/y", 1, "mu = -(y gamma2) u = " + edge_ii_rhs(m).to_string() + " mod K"});
            e21 = -1;
        } else if (m.B == half && m.stepset == Support::S3) {
            st.certificates.push_back(
                signed_by_square(m, "h22 = gamma2", "dcpl_type3(ii)", y_gamma2(m), type3_rhs(m, false), false));
            e22 = -1;
        } else {
            fail(ErrorCode::TableCellMismatch, "gamma2 has no signed decoupling for B = " + to_string(m.B));
        }
        st.eps1 = e11 * e21;
        st.eps2 = e12 * e22;
    }
    if (st.eps1 != cell.eps1 || st.eps2 != cell.eps2)
        fail(ErrorCode::TableCellMismatch, "signed solution " + st.to_string() + " but table cell " + cell.to_string());
    if (cell.kind == HomKind::Solution) {
        st.h1 = "1/gamma1";
        st.h2 = "-1/gamma2";
        st.certificates.push_back({"gamma1 h1 + gamma2 h2", 1, "gamma1/gamma1 - gamma2/gamma2 = 0"});
    }
    return st;
}

std::vector<IdentityCheck> verify_identity_lemmas(const Model& m)
{
    std::vector<IdentityCheck> out;
    const Weighting& w = m.w;
    if (w.d11 == 0) {
        std::vector<Rat> lambdas{m.A};
        if (m.A != half)
            lambdas.push_back(half);
        for (const Rat& lambda : lambdas) {
            const LaurentXY u = u_lambda(m, lambda);
            const std::string ls = to_string(lambda);
            require_identity(m, "dcpl_type12(i) lambda=" + ls, u,
                             LaurentXY(-lambda) + L(tp(1, w.d01), 0, 1) + L(tp(1, w.dm11), -1, 1));
            out.push_back({"dcpl_type12", "i", ls});
            require_identity(m, "dcpl_type12(ii) lambda=" + ls, (LaurentXY(lambda - m.A) + x_gamma1(m)) * u,
                             type12_ii_rhs(m, lambda));
            out.push_back({"dcpl_type12", "ii", ls});
            require_identity(m, "dcpl_type12(iii) lambda=" + ls, -((LaurentXY(1 - lambda - m.B) + y_gamma2(m)) * u),
                             type12_iii_rhs(m, lambda));
            out.push_back({"dcpl_type12", "iii", ls});
        }
    }
    if (w.d10 == 0 && w.d01 == 0) {
        const LaurentXY fx = LaurentXY(half - m.A) + x_gamma1(m);
        require_identity(m, "dcpl_type3(i)", fx * fx, type3_rhs(m, true));
        out.push_back({"dcpl_type3", "i", ""});
        const LaurentXY fy = LaurentXY(half - m.B) + y_gamma2(m);
        require_identity(m, "dcpl_type3(ii)", fy * fy, type3_rhs(m, false));
        out.push_back({"dcpl_type3", "ii", ""});
    }
    if (m.stepset == Support::S1 && m.B == half) {
        const LaurentXY u = edge_u(m);
        require_identity(m, "edge_comp(i)", u * u, edge_i_rhs(m));
        out.push_back({"edge_comp", "i", ""});
        require_identity(m, "edge_comp(ii)", -(y_gamma2(m) * u), edge_ii_rhs(m));
        out.push_back({"edge_comp", "ii", ""});
    }
    if (m.A == half && w.d10 == 0) {
        const LaurentXY f = x_gamma1(m);
        require_identity(m, "(x gamma1)^2 at A=1/2", f * f, half_square_rhs(m));
        out.push_back({"half_square", "", ""});
    }
    return out;
}

std::string PoleConfinement::to_string() const
{
    std::string s;
    if (edge_case)
        s += "EdgeCase ";
    if (h1_confined)
        s += "H1Confined ";
    if (h2_confined)
        s += "H2Confined ";
    return s.empty() ? "Inconclusive" : s.substr(0, s.size() - 1);
}

PoleConfinement inhomogeneous_analysis(const Model& m, const DistanceMatrix& M1, const DistanceMatrix& M2)
{
    PoleConfinement p;
    p.h1_confined = all_negative_or_bot(M1);
    p.h2_confined = all_negative_or_bot(M2);
    p.edge_case = m.stepset == Support::S1 && m.B == half && m.A != half;
    return p;
}

std::vector<TrailEntry> edge_case_checks(const Model& m, const CriticalSets& sets, const MatrixPair& mats)
{
    if (!(m.stepset == Support::S1 && m.B == half && m.A != half))
        fail(ErrorCode::PreconditionFailed, "edge-case checks need S1, B = 1/2, A != 1/2");
    std::vector<std::pair<int, int>> nonneg;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (mats.M2(i, j) && *mats.M2(i, j) >= 0)
                nonneg.push_back({i, j});
    if (nonneg.size() != 1)
        fail(ErrorCode::EvidenceFailed, std::to_string(nonneg.size()) + " nonnegative entries in M2 " +
                                            matrix_string(mats.M2));
    const auto [r, c] = nonneg.front();
    const CurvePoint& p4 = sets.L2_plus[c];
    if (r != c || r < 2 || mats.M2(r, c) != SigmaDistance(1) || sets.L2_minus[r] != apply_iota2(m, p4))
        fail(ErrorCode::EvidenceFailed, "nonnegative M2 entry at (" + std::to_string(r + 1) + "," +
                                            std::to_string(c + 1) + ") is not delta(i2P4, P4) = 1");
    std::vector<TrailEntry> trail;
    const std::string label = "P" + std::to_string(c + 1);
    trail.push_back({"EdgeCase.M2", "only nonnegative entry of M2 " + matrix_string(mats.M2) + " is delta(i2" + label +
                                        ", " + label + ") = 1"});

    const auto zeros = curve_zeros(m, {{edge_u(m), 1}, {m.gamma2, 1}});
    const CurvePoint q = apply_iota2(m, p4);
    int total = 0;
    bool ok = true;
    for (const auto& z : zeros) {
        total += z.multiplicity;
        ok = ok && z.multiplicity == 1 && (z.point == p4 || z.point == q);
    }
    if (!ok || total != 2 || p4 == q)
        fail(ErrorCode::EvidenceFailed, "zeros of u gamma2 are not {" + label + ", i2" + label + "}");
    trail.push_back({"EdgeCase.zeros", "zeros of u gamma2 on the curve are " + label + " and i2" + label});
    return trail;
}

std::vector<TrailEntry> edge_case_checks(const Model& m)
{
    const CriticalSets sets = critical_sets(m);
    return edge_case_checks(m, sets, build_matrices(m, sets));
}

std::vector<PolyT> ClosedForm::series(int N) const
{
    if (N < 0)
        return {};
    const auto v = c.valuation();
    if (v && *v < 1)
        fail(ErrorCode::Unsupported, "closed-form coefficient must vanish at t = 0");
    const std::vector<Rat> cs = series_quotient(c.num(), c.den(), N + 1);
    std::vector<PolyT> out(static_cast<std::size_t>(N) + 1);
    std::vector<Rat> ck(static_cast<std::size_t>(N) + 1, Rat(0));
    ck[0] = 1;
    Rat weight = 1; // binom(2k, k) / 4^k for the inverse square root
    for (int k = 0; k <= N; ++k) {
        for (int n = 0; n <= N; ++n)
            if (ck[n] != 0)
                out[n] += PolyT::monomial(Rat(weight * ck[n]), power * k);
        std::vector<Rat> next(ck.size(), Rat(0));
        for (int i = 0; i <= N; ++i)
            for (int j = 0; i + j <= N; ++j)
                next[i + j] += ck[i] * cs[j];
        ck = std::move(next);
        if (power == 2)
            weight = weight * (2 * k + 1) / (2 * (k + 1));
    }
    return out;
}

std::string ClosedForm::to_string() const
{
    if (power == 1)
        return "1/(1 - " + variable + "*(" + c.to_string() + "))";
    return "1/sqrt(1 - " + variable + "^2*(" + c.to_string() + "))";
}

std::string verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::Rational:
        return "Rational";
    case Verdict::Algebraic:
        return "Algebraic";
    case Verdict::NotDAlgebraic:
        return "NotDAlgebraic";
    }
    return "?";
}

Classification classify(const Model& m, const ClassifyOptions& opts)
{
    const Weighting& w = m.w;
    const RatFunc t = RatFunc::t();
    Classification out;
    out.trail.push_back({"Model", std::string(support_name(m.stepset)) + ", A = " + to_string(m.A) +
                                      ", B = " + to_string(m.B)});

    if (is_s1_or_s2(m.stepset) && m.A + m.B == 1) {
        // In terms of a and b: 1/A = b and 1/B = a when A + B = 1.
        const Rat ab = w.a * w.b;
        const RatFunc den = RatFunc(1) - RatFunc(ab * w.d1m1 * w.dm11) * t * t;
        const RatFunc cx = (RatFunc(w.a * w.d10) * t + RatFunc(ab * w.d1m1 * w.d01) * t * t) / den;
        const RatFunc cy = (RatFunc(w.b * w.d01) * t + RatFunc(ab * w.dm11 * w.d10) * t * t) / den;
        // Form read off the decoupling identities, normalized by Q(0,0) = 1.
        const RatFunc lam = RatFunc(m.A * m.B) - RatFunc(w.d1m1 * w.dm11) * t * t;
        const RatFunc cx_id = (RatFunc(m.A * w.d10) * t + RatFunc(w.d1m1 * w.d01) * t * t) / lam;
        const RatFunc cy_id = (RatFunc(m.B * w.d01) * t + RatFunc(w.dm11 * w.d10) * t * t) / lam;
        if (cx != cx_id || cy != cy_id)
            fail(ErrorCode::EvidenceFailed, "closed form differs from the decoupling normalization");
        const HomStatus hom = homogeneous_analysis(m, DistanceMatrix{});
        out.trail.push_back({"RationalDecoupling", "A + B = 1; (x gamma1) u_A and -(y gamma2) u_A reduce mod K to "
                                                   "polynomials in x and y; signed pair " + hom.to_string()});
        out.verdict = Verdict::Rational;
        out.qx0 = ClosedForm{"x", 1, cx};
        out.q0y = ClosedForm{"y", 1, cy};
        out.trail.push_back({"ClosedForm", "Q(x,0) = " + out.qx0->to_string() + ", Q(0,y) = " + out.q0y->to_string()});
        return out;
    }

    const CriticalSets sets = critical_sets(m);
    const MatrixPair mats = build_matrices(m, sets, opts.window, opts.seed);
    out.trail.push_back({"Matrices", "M1 = " + matrix_string(mats.M1) + ", M2 = " + matrix_string(mats.M2)});
    const HomStatus hom = homogeneous_analysis(m, mats.M1);
    out.trail.push_back({"HomogeneousTable", homogeneous_table_cell(m.stepset, m.A, m.B).to_string()});

    if (hom.has_solution()) {
        if (!(m.stepset == Support::S3 && m.A == half && m.B == half))
            fail(ErrorCode::TableCellMismatch, "homogeneous solution outside S3 with A = B = 1/2");
        verify_identity_lemmas(m);
        const RatFunc den = RatFunc(1) - RatFunc(4 * w.d1m1 * w.dm11) * t * t;
        const RatFunc gx = RatFunc(4 * w.d11 * w.d1m1) * t * t / den;
        const RatFunc gy = RatFunc(4 * w.d11 * w.dm11) * t * t / den;
        const RatFunc lam2 = RatFunc(make_rat(1, 4)) - RatFunc(w.d1m1 * w.dm11) * t * t;
        if (gx != RatFunc(w.d11 * w.d1m1) * t * t / lam2 || gy != RatFunc(w.d11 * w.dm11) * t * t / lam2)
            fail(ErrorCode::EvidenceFailed, "closed form differs from the dcpl_type3 normalization");
        out.trail.push_back({"HomogeneousSolution", "(h1, h2) = (" + hom.h1 + ", " + hom.h2 + "), signs " +
                                                        hom.to_string()});
        out.verdict = Verdict::Algebraic;
        out.qx0 = ClosedForm{"x", 2, gx};
        out.q0y = ClosedForm{"y", 2, gy};
        out.trail.push_back({"ClosedForm", "Q(x,0) = " + out.qx0->to_string() + ", Q(0,y) = " + out.q0y->to_string()});
        return out;
    }

    const std::string no_sol = "homogeneous equation has no nonzero solution: " + hom.to_string();
    const PoleConfinement pc = inhomogeneous_analysis(m, mats.M1, mats.M2);
    bool decided = false;
    if (pc.edge_case) {
        for (auto& e : edge_case_checks(m, sets, mats))
            out.trail.push_back(std::move(e));
        out.trail.push_back({"EdgeCase", no_sol});
        decided = true;
    }
    if (pc.h1_confined) {
        out.trail.push_back({"H1Confined", "every M1 entry is negative or bot; " + no_sol});
        decided = true;
    }
    if (pc.h2_confined) {
        out.trail.push_back({"H2Confined", "every M2 entry is negative or bot; " + no_sol});
        decided = true;
    }
    if (!decided)
        fail(ErrorCode::CoverageGap, "no rule applies to " + std::string(support_name(m.stepset)) + " with A = " +
                                         to_string(m.A) + ", B = " + to_string(m.B) + "; M1 = " +
                                         matrix_string(mats.M1) + ", M2 = " + matrix_string(mats.M2));
    out.verdict = Verdict::NotDAlgebraic;
    return out;
}

void verify_closed_form(const Model& m, const Classification& c, int N)
{
    if (!c.qx0 || !c.q0y)
        fail(ErrorCode::PreconditionFailed, "no closed form for verdict " + verdict_name(c.verdict));
    const SeriesTruncation s = enumerate(m, N);
    const auto dp_x = specialize(s, Specialization::YZero);
    const auto dp_y = specialize(s, Specialization::XZero);
    const auto cf_x = c.qx0->series(N);
    const auto cf_y = c.q0y->series(N);
    for (int n = 0; n <= N; ++n)
        if (dp_x[n] != cf_x[n] || dp_y[n] != cf_y[n])
            fail(ErrorCode::OracleMismatch, "closed form and enumeration differ at t^" + std::to_string(n));
}

} // namespace qwalk
