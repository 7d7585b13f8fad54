#pragma once

#include "qwalk/curve.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qwalk {

// Valuations of the reciprocal coordinates; nullopt is +infinity (coordinate 0).
struct Bivaluation {
    Valuation vx;
    Valuation vy;
    friend bool operator==(const Bivaluation&, const Bivaluation&) = default;
    std::string to_string() const;
};

Bivaluation bivaluation(const CurvePoint& p);

// Valuation of sigma(P) (resp. sigma^-1(P)) predicted from v(P) alone, valid when
// the moving coordinate is negative before each half-step.
// Throws RegimeNotApplicable otherwise.
Bivaluation step_valuation_forward(const Bivaluation& v);
Bivaluation step_valuation_backward(const Bivaluation& v);

// Forward tail: v = (i, j) with i < j < 0. Backward tail: j < i < 0.
bool is_forward_tail(const Bivaluation& v);
bool is_backward_tail(const Bivaluation& v);

inline constexpr int default_window = 5;
inline constexpr int max_window = 12;

// Explicit points sigma^n P for |n| <= window, with both ends inside the
// regime where the valuations continue linearly.
struct OrbitProfile {
    int window = 0;
    std::vector<CurvePoint> points;
    std::vector<Bivaluation> valuations;

    const CurvePoint& at(int n) const { return points[static_cast<std::size_t>(n + window)]; }
    const Bivaluation& valuation_at(int n) const { return valuations[static_cast<std::size_t>(n + window)]; }
};

// Starts at `window` and widens up to max_window; throws OrbitRegimeNotReached beyond.
OrbitProfile orbit_profile(const Model& m, const CurvePoint& p, int window = default_window);

// n with sigma^n P = P', or nullopt for no relation.
using SigmaDistance = std::optional<int>;
std::string to_string(const SigmaDistance& d);

SigmaDistance sigma_distance(const Model& m, const CurvePoint& from, const CurvePoint& to,
                             int window = default_window);
SigmaDistance sigma_distance(const Model& m, const OrbitProfile& from, const CurvePoint& to);

struct DistanceMatrix {
    int which = 1;
    std::array<std::array<SigmaDistance, 4>, 4> entries;
    std::array<std::string, 4> row_labels;
    std::array<std::string, 4> col_labels;

    const SigmaDistance& operator()(int i, int j) const { return entries[i][j]; }
};

struct MatrixPair {
    DistanceMatrix M1;
    DistanceMatrix M2;
};

// M1 from its 10 upper entries and symmetry, M2 from M1 by the block shift;
// 4 entries of M2 drawn with `seed` are recomputed directly and must agree
// (EvidenceFailed otherwise).
MatrixPair build_matrices(const Model& m, const CriticalSets& sets, int window = default_window,
                          unsigned seed = 0);
MatrixPair build_matrices(const Model& m, int window = default_window, unsigned seed = 0);

// All 32 entries computed independently.
MatrixPair build_matrices_direct(const Model& m, const CriticalSets& sets, int window = default_window);

} // namespace qwalk
