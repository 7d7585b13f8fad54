#include "qwalk_io.hpp"

#include <fstream>
#include <sstream>

namespace qwalk::io {

namespace {

std::string step_key(Step v) { return std::to_string(v.i) + "," + std::to_string(v.j); }

Rat rat_field(const json& j, const std::string& what)
{
    if (!j.is_string())
        fail(ErrorCode::MalformedInput, what + " must be a rational string such as \"3/2\"");
    return parse_rat(j.get<std::string>());
}

json coeff_triples(const PolyXY& p)
{
    json out = json::array();
    for (int i = 0; i <= p.degree(); ++i) {
        const PolyT& row = p.coeff(i);
        for (int j = 0; j <= row.degree(); ++j)
            if (row.coeff(j) != 0)
                out.push_back(json::array({i, j, to_string(row.coeff(j))}));
    }
    return out;
}

} // namespace

Model parse_model(const json& j)
{
    if (!j.is_object())
        fail(ErrorCode::MalformedInput, "model must be a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "stepset" && key != "weights" && key != "a" && key != "b")
            fail(ErrorCode::MalformedInput, "unknown key '" + key + "'");
    if (!j.contains("stepset") || !j["stepset"].is_string())
        fail(ErrorCode::MalformedInput, "missing string field 'stepset'");
    const Support s = parse_support(j["stepset"].get<std::string>());
    const Rat a = j.contains("a") ? rat_field(j["a"], "a") : Rat(1);
    const Rat b = j.contains("b") ? rat_field(j["b"], "b") : Rat(1);
    Weighting w = Weighting::unit(s, a, b);
    if (j.contains("weights")) {
        const json& ws = j["weights"];
        if (!ws.is_object())
            fail(ErrorCode::MalformedInput, "'weights' must be an object");
        for (const auto& [key, value] : ws.items()) {
            bool found = false;
            for (const Step& v : all_steps)
                if (step_key(v) == key) {
                    w.d(v) = rat_field(value, "weight " + key);
                    found = true;
                }
            if (!found)
                fail(ErrorCode::MalformedInput, "unknown step '" + key + "'");
        }
    }
    return build_model(s, w);
}

Model parse_model_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
    }
    return parse_model(j);
}

Model load_model(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::MalformedInput, "cannot read model file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_model_text(buf.str());
}

json model_json(const Model& m)
{
    json ws = json::object();
    for (const Step& v : support_steps(m.stepset))
        ws[step_key(v)] = to_string(m.w.d(v));
    return json{{"stepset", std::string(support_name(m.stepset))},
                {"weights", ws},
                {"a", to_string(m.w.a)},
                {"b", to_string(m.w.b)}};
}

json series_json(const SeriesTruncation& s)
{
    json out = json::array();
    for (const auto& term : s.terms)
        out.push_back(coeff_triples(term));
    return out;
}

json matrix_json(const DistanceMatrix& M)
{
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int k = 0; k < 4; ++k)
            row.push_back(M(i, k) ? json(*M(i, k)) : json("bot"));
        rows.push_back(row);
    }
    return json{{"name", "M" + std::to_string(M.which)},
                {"rows", M.row_labels},
                {"columns", M.col_labels},
                {"entries", rows}};
}

json classification_json(const Model& m, const Classification& c)
{
    json trail = json::array();
    for (const auto& e : c.trail)
        trail.push_back(json{{"rule", e.rule}, {"evidence", e.evidence}});
    json forms = nullptr;
    if (c.qx0 && c.q0y)
        forms = json{{"Q(x,0)", c.qx0->to_string()}, {"Q(0,y)", c.q0y->to_string()}};
    return json{{"model", model_json(m)},
                {"verdict", verdict_name(c.verdict)},
                {"closed_forms", forms},
                {"trail", trail}};
}

std::string decimal(const Rat& r, int digits)
{
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    const mpz_class scaled = r.get_num() * scale / r.get_den();
    mpz_class ip, fp;
    mpz_tdiv_qr(ip.get_mpz_t(), fp.get_mpz_t(), scaled.get_mpz_t(), scale.get_mpz_t());
    const std::string sign = (sgn(r) < 0 && ip == 0) ? "-" : "";
    if (digits == 0)
        return sign + ip.get_str();
    std::string frac = mpz_class(abs(fp)).get_str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    return sign + ip.get_str() + "." + frac;
}

std::vector<PhaseRow> phase_rows(const Model& m, int N)
{
    const SeriesTruncation s = enumerate(m, N);
    const auto all = specialize(s, Specialization::OneOne);
    const auto xa = specialize(s, Specialization::XOneYZero);
    const auto ya = specialize(s, Specialization::XZeroYOne);
    std::vector<PhaseRow> out;
    for (int n = 0; n <= N; ++n) {
        const Rat total = all[n].coeff(0);
        if (total == 0)
            fail(ErrorCode::EvidenceFailed, "[t^" + std::to_string(n) + "]Q(1,1) vanishes");
        out.push_back({m.w.a, m.w.b, n, Rat(xa[n].coeff(0) / total), Rat(ya[n].coeff(0) / total)});
    }
    return out;
}

Weighting random_weighting(Support s, const Rat& a, const Rat& b, std::mt19937& rng)
{
    std::uniform_int_distribution<int> digit(1, 9);
    Weighting w = Weighting::unit(s, a, b);
    for (const Step& v : support_steps(s)) {
        const int p = digit(rng);
        const int q = digit(rng);
        w.d(v) = make_rat(p, q);
    }
    return w;
}

} // namespace qwalk::io
