#include "qwalk/enumerator.hpp"

namespace qwalk {

SeriesTruncation enumerate(const Model& m, int N)
{
    if (N < 0)
        fail(ErrorCode::PreconditionFailed, "enumerate: negative order");
    struct Move {
        int di, dj;
        Rat w;
    };
    std::vector<Move> moves;
    for (const Step& v : support_steps(m.stepset))
        moves.push_back({v.i, v.j, m.w.d(v)});

    const std::size_t side = static_cast<std::size_t>(N) + 2;
    std::vector<Rat> layer(side * side, Rat(0)), next(side * side, Rat(0));
    auto at = [side](std::vector<Rat>& g, int i, int j) -> Rat& {
        return g[static_cast<std::size_t>(i) * side + static_cast<std::size_t>(j)];
    };
    at(layer, 0, 0) = 1;

    SeriesTruncation out;
    out.order = N;
    auto collect = [&](std::vector<Rat>& g, int n) {
        std::vector<PolyT> rows;
        for (int i = 0; i <= n; ++i) {
            std::vector<Rat> row(static_cast<std::size_t>(n) + 1);
            for (int j = 0; j <= n; ++j)
                row[j] = at(g, i, j);
            rows.emplace_back(std::move(row));
        }
        out.terms.emplace_back(std::move(rows));
    };
    collect(layer, 0);

    for (int n = 1; n <= N; ++n) {
        std::fill(next.begin(), next.end(), Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const Rat& v = at(layer, i, j);
                if (is_zero(v))
                    continue;
                for (const Move& mv : moves) {
                    const int ni = i + mv.di, nj = j + mv.dj;
                    if (ni < 0 || nj < 0)
                        continue;
                    Rat w = v * mv.w;
                    if (nj == 0)
                        w *= m.w.a;
                    if (ni == 0)
                        w *= m.w.b;
                    at(next, ni, nj) += w;
                }
            }
        std::swap(layer, next);
        collect(layer, n);
    }
    return out;
}

std::vector<PolyT> specialize(const SeriesTruncation& s, Specialization which)
{
    std::vector<PolyT> out;
    out.reserve(s.terms.size());
    for (const PolyXY& p : s.terms) {
        switch (which) {
        case Specialization::YZero:
            out.push_back(p.map([](const PolyT& c) { return c.coeff(0); }));
            break;
        case Specialization::XZero:
            out.push_back(p.coeff(0));
            break;
        case Specialization::OneOne: {
            Rat acc = 0;
            for (const PolyT& c : p.coeffs())
                for (const Rat& r : c.coeffs())
                    acc += r;
            out.emplace_back(acc);
            break;
        }
        case Specialization::XOneYZero: {
            Rat acc = 0;
            for (const PolyT& c : p.coeffs())
                acc += c.coeff(0);
            out.emplace_back(acc);
            break;
        }
        case Specialization::XZeroYOne: {
            Rat acc = 0;
            for (const Rat& r : p.coeff(0).coeffs())
                acc += r;
            out.emplace_back(acc);
            break;
        }
        }
    }
    return out;
}

PolyXY t_coefficient(const LaurentXY& f, int k)
{
    PolyXY out;
    for (const auto& [key, c] : f.terms()) {
        if (key.first < 0 || key.second < 0)
            fail(ErrorCode::PreconditionFailed, "t_coefficient: negative exponent");
        if (!is_zero(c.coeff(k)))
            out += PolyXY::monomial(PolyT::monomial(c.coeff(k), key.second), key.first);
    }
    return out;
}

namespace {

int t_degree(const LaurentXY& f)
{
    int d = -1;
    for (const auto& [key, c] : f.terms())
        d = std::max(d, c.degree());
    return d;
}

PolyXY from_x_poly(const PolyT& p)
{
    return p.map([](const Rat& c) { return PolyT(c); });
}

} // namespace

std::vector<PolyXY> functional_equation_residual(const Model& m, const SeriesTruncation& s, int N)
{
    if (N > s.order)
        fail(ErrorCode::PreconditionFailed, "residual order exceeds the series truncation");
    const FunctionalEquation fe = functional_equation_coeffs(m);
    const auto qx0 = specialize(s, Specialization::YZero);
    const auto q0y = specialize(s, Specialization::XZero);
    auto split = [](const LaurentXY& f) {
        std::vector<PolyXY> v;
        for (int k = 0; k <= t_degree(f); ++k)
            v.push_back(t_coefficient(f, k));
        return v;
    };
    const auto K = split(fe.kernel);
    const auto W = split(fe.omega_term);
    const auto X = split(fe.x_axis_coeff);
    const auto Y = split(fe.y_axis_coeff);

    std::vector<PolyXY> res;
    for (int n = 0; n <= N; ++n) {
        PolyXY r;
        for (int k = 0; k < static_cast<int>(K.size()) && k <= n; ++k)
            r += K[k] * s.terms[n - k];
        if (n < static_cast<int>(W.size()))
            r -= W[n];
        for (int k = 0; k < static_cast<int>(X.size()) && k <= n; ++k)
            r -= X[k] * from_x_poly(qx0[n - k]);
        for (int k = 0; k < static_cast<int>(Y.size()) && k <= n; ++k)
            r -= Y[k] * PolyXY(q0y[n - k]);
        res.push_back(std::move(r));
    }
    return res;
}

void check_functional_equation(const Model& m, const SeriesTruncation& s, int N)
{
    const auto res = functional_equation_residual(m, s, N);
    for (int n = 0; n <= N; ++n) {
        const PolyXY& r = res[n];
        for (int i = 0; i <= r.degree(); ++i)
            for (int j = 0; j <= r.coeff(i).degree(); ++j)
                if (!is_zero(coeff_xy(r, i, j)))
                    fail(ErrorCode::ResidualNonZero, "t^" + std::to_string(n) + " x^" + std::to_string(i) + " y^" +
                                                         std::to_string(j) + ": " + to_string(coeff_xy(r, i, j)));
    }
}

} // namespace qwalk
