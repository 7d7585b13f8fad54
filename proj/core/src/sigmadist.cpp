#include "qwalk/sigmadist.hpp"

#include <random>

namespace qwalk {

namespace {

bool finite(const Bivaluation& v) { return v.vx && v.vy; }

// Index k >= 1 with (i - 2 delta k, j - 2 delta k) = target, if any.
std::optional<int> tail_index(const Bivaluation& start, const Rat& delta, const Bivaluation& target)
{
    if (!finite(target))
        return std::nullopt;
    const Rat k = (*start.vx - *target.vx) / (2 * delta);
    if (k.get_den() != 1 || k < 1 || *start.vy - 2 * delta * k != *target.vy)
        return std::nullopt;
    return static_cast<int>(k.get_num().get_si());
}

SigmaDistance shifted(const SigmaDistance& d, int s) { return d ? SigmaDistance(*d + s) : std::nullopt; }

} // namespace

std::string Bivaluation::to_string() const { return "(" + qwalk::to_string(vx) + "," + qwalk::to_string(vy) + ")"; }

Bivaluation bivaluation(const CurvePoint& p) { return {t_valuation(p.x1), t_valuation(p.y1)}; }

Bivaluation step_valuation_forward(const Bivaluation& v)
{
    // iota1 needs v(x1) < 0, then iota2 needs the new v(y1) < 0.
    if (!finite(v) || *v.vx >= 0)
        fail(ErrorCode::RegimeNotApplicable, "forward step from " + v.to_string());
    const Rat i = *v.vx;
    const Rat j = 2 * i - *v.vy;
    if (j >= 0)
        fail(ErrorCode::RegimeNotApplicable, "forward step from " + v.to_string());
    return {Rat(2 * j - i), j};
}

Bivaluation step_valuation_backward(const Bivaluation& v)
{
    if (!finite(v) || *v.vy >= 0)
        fail(ErrorCode::RegimeNotApplicable, "backward step from " + v.to_string());
    const Rat j = *v.vy;
    const Rat i = 2 * j - *v.vx;
    if (i >= 0)
        fail(ErrorCode::RegimeNotApplicable, "backward step from " + v.to_string());
    return {i, Rat(2 * i - j)};
}

bool is_forward_tail(const Bivaluation& v) { return finite(v) && *v.vx < *v.vy && *v.vy < 0; }

bool is_backward_tail(const Bivaluation& v) { return finite(v) && *v.vy < *v.vx && *v.vx < 0; }

OrbitProfile orbit_profile(const Model& m, const CurvePoint& p, int window)
{
    if (window < 1 || window > max_window)
        fail(ErrorCode::PreconditionFailed, "window must lie in [1, " + std::to_string(max_window) + "]");
    OrbitProfile prof;
    prof.window = window;
    prof.points = sigma_orbit(m, p, window);
    for (const auto& q : prof.points)
        prof.valuations.push_back(bivaluation(q));
    while (!is_forward_tail(prof.valuations.back()) || !is_backward_tail(prof.valuations.front())) {
        if (prof.window == max_window)
            fail(ErrorCode::OrbitRegimeNotReached,
                 "valuation tails not entered within window " + std::to_string(max_window) + " for " + p.to_string());
        ++prof.window;
        prof.points.push_back(apply_sigma(m, prof.points.back()));
        prof.points.insert(prof.points.begin(), apply_sigma_inverse(m, prof.points.front()));
        prof.valuations.push_back(bivaluation(prof.points.back()));
        prof.valuations.insert(prof.valuations.begin(), bivaluation(prof.points.front()));
    }
    return prof;
}

std::string to_string(const SigmaDistance& d) { return d ? std::to_string(*d) : "bot"; }

SigmaDistance sigma_distance(const Model& m, const OrbitProfile& from, const CurvePoint& to)
{
    const Bivaluation target = bivaluation(to);
    const int w = from.window;
    for (int n = -w; n <= w; ++n)
        if (from.valuation_at(n) == target && from.at(n) == to)
            return n;

    const Bivaluation fwd = from.valuation_at(w);
    if (auto k = tail_index(fwd, *fwd.vy - *fwd.vx, target))
        if (apply_sigma_power(m, from.at(w), *k) == to)
            return w + *k;
    const Bivaluation bwd = from.valuation_at(-w);
    if (auto k = tail_index(bwd, *bwd.vx - *bwd.vy, target))
        if (apply_sigma_power(m, from.at(-w), -*k) == to)
            return -w - *k;
    return std::nullopt;
}

SigmaDistance sigma_distance(const Model& m, const CurvePoint& from, const CurvePoint& to, int window)
{
    return sigma_distance(m, orbit_profile(m, from, window), to);
}

MatrixPair build_matrices(const Model& m, const CriticalSets& s, int window, unsigned seed)
{
    MatrixPair out;
    out.M1.which = 1;
    out.M1.row_labels = {"P1", "P2", "i2P3", "i2P4"};
    out.M1.col_labels = {"i1P1", "i1P2", "s^-1P3", "s^-1P4"};
    out.M2.which = 2;
    out.M2.row_labels = {"sP1", "sP2", "i2P3", "i2P4"};
    out.M2.col_labels = {"i1P1", "i1P2", "P3", "P4"};

    for (int i = 0; i < 4; ++i) {
        const OrbitProfile prof = orbit_profile(m, s.L1_minus[i], window);
        for (int j = i; j < 4; ++j) {
            out.M1.entries[i][j] = sigma_distance(m, prof, s.L1_plus[j]);
            out.M1.entries[j][i] = out.M1.entries[i][j];
        }
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const int shift = (i < 2 && j < 2) ? -1 : (i >= 2 && j >= 2) ? 1 : 0;
            out.M2.entries[i][j] = shifted(out.M1.entries[i][j], shift);
        }

    std::mt19937 rng(seed);
    std::vector<int> cells(16);
    for (int k = 0; k < 16; ++k)
        cells[k] = k;
    std::shuffle(cells.begin(), cells.end(), rng);
    for (int k = 0; k < 4; ++k) {
        const int i = cells[k] / 4, j = cells[k] % 4;
        const SigmaDistance direct = sigma_distance(m, s.L2_minus[i], s.L2_plus[j], window);
        if (direct != out.M2.entries[i][j])
            fail(ErrorCode::EvidenceFailed, "M2 entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                ") derived " + to_string(out.M2.entries[i][j]) + ", direct " +
                                                to_string(direct));
    }
    return out;
}

MatrixPair build_matrices(const Model& m, int window, unsigned seed)
{
    return build_matrices(m, critical_sets(m), window, seed);
}

MatrixPair build_matrices_direct(const Model& m, const CriticalSets& s, int window)
{
    MatrixPair out;
    out.M2.which = 2;
    for (int i = 0; i < 4; ++i) {
        const OrbitProfile p1 = orbit_profile(m, s.L1_minus[i], window);
        const OrbitProfile p2 = orbit_profile(m, s.L2_minus[i], window);
        for (int j = 0; j < 4; ++j) {
            out.M1.entries[i][j] = sigma_distance(m, p1, s.L1_plus[j]);
            out.M2.entries[i][j] = sigma_distance(m, p2, s.L2_plus[j]);
        }
    }
    return out;
}

} // namespace qwalk
