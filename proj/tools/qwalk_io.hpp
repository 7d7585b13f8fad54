#pragma once

#include "qwalk/classifier.hpp"
#include "qwalk/enumerator.hpp"

#include <json.hpp>

#include <random>
#include <string>
#include <vector>

namespace qwalk::io {

using json = nlohmann::ordered_json;

// {"stepset": "S1", "weights": {"1,-1": "p/q", ...}, "a": "p/q", "b": "p/q"}.
// Weights of absent steps may be omitted; missing weights of present steps default to 1.
// Throws Error(MalformedInput) on unknown keys, non-string rationals or bad step keys.
Model parse_model(const json& j);
Model parse_model_text(const std::string& text);
Model load_model(const std::string& path);
json model_json(const Model& m);

// Terms as lists of [i, j, "p/q"], sorted by (i, j).
json series_json(const SeriesTruncation& s);
json matrix_json(const DistanceMatrix& M);
json classification_json(const Model& m, const Classification& c);

// Exact rational rendered with `digits` decimals, rounded toward zero.
std::string decimal(const Rat& r, int digits = 12);

struct PhaseRow {
    Rat a;
    Rat b;
    int n;
    Rat ratio_x_axis; // [t^n]Q(1,0) / [t^n]Q(1,1)
    Rat ratio_y_axis; // [t^n]Q(0,1) / [t^n]Q(1,1)
};
std::vector<PhaseRow> phase_rows(const Model& m, int N);

// Positive rationals p/q with 1 <= p, q <= 9 on every step of the support.
Weighting random_weighting(Support s, const Rat& a, const Rat& b, std::mt19937& rng);

} // namespace qwalk::io
