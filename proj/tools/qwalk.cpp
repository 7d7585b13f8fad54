// qwalk: classify, enumerate and inspect quadrant walks with interacting boundaries.
//
// Exit codes: 0 success, 1 malformed input or usage, 2 failed evidence
// (CoverageGap, EvidenceFailed, any failed verification), 3 other errors.

#include "qwalk_io.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace qwalk;
using io::json;

namespace {

enum class Format { Json, Csv, Text };

struct RunConfig {
    std::string model_path;
    int order = 12;
    int window = default_window;
    Format format = Format::Json;
    unsigned seed = 0;
    int samples = 3;
    std::string grid_a;
    std::string grid_b;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::vector<Rat> parse_grid(const std::string& text, const Rat& fallback)
{
    if (text.empty())
        return {fallback};
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_rat(item));
    return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_classify(const RunConfig& cfg)
{
    const Model m = io::load_model(cfg.model_path);
    const Classification c = classify(m, {cfg.window, cfg.seed});
    switch (cfg.format) {
    case Format::Json:
        print_json(io::classification_json(m, c));
        break;
    case Format::Csv:
        std::cout << "verdict,rule,evidence\n";
        for (const auto& e : c.trail)
            std::cout << verdict_name(c.verdict) << ',' << csv_field(e.rule) << ',' << csv_field(e.evidence) << '\n';
        break;
    case Format::Text:
        std::cout << "verdict: " << verdict_name(c.verdict) << '\n';
        if (c.qx0)
            std::cout << "Q(x,0) = " << c.qx0->to_string() << "\nQ(0,y) = " << c.q0y->to_string() << '\n';
        for (const auto& e : c.trail)
            std::cout << "  [" << e.rule << "] " << e.evidence << '\n';
        break;
    }
    return 0;
}

int cmd_enumerate(const RunConfig& cfg)
{
    const Model m = io::load_model(cfg.model_path);
    const SeriesTruncation s = enumerate(m, cfg.order);
    switch (cfg.format) {
    case Format::Json:
        print_json(json{{"model", io::model_json(m)}, {"order", cfg.order}, {"terms", io::series_json(s)}});
        break;
    case Format::Csv:
        std::cout << "n,i,j,coefficient\n";
        for (int n = 0; n <= s.order; ++n)
            for (const auto& tr : io::series_json({s.order, {s.terms[n]}})[0])
                std::cout << n << ',' << tr[0].get<int>() << ',' << tr[1].get<int>() << ','
                          << tr[2].get<std::string>() << '\n';
        break;
    case Format::Text:
        for (int n = 0; n <= s.order; ++n)
            std::cout << "t^" << n << ": " << to_string(s.terms[n], {"x", "y"}) << '\n';
        break;
    }
    return 0;
}

int cmd_matrix(const RunConfig& cfg)
{
    const Model m = io::load_model(cfg.model_path);
    const MatrixPair mp = build_matrices(m, cfg.window, cfg.seed);
    switch (cfg.format) {
    case Format::Json:
        print_json(json{{"model", io::model_json(m)}, {"M1", io::matrix_json(mp.M1)}, {"M2", io::matrix_json(mp.M2)}});
        break;
    case Format::Csv:
        std::cout << "matrix,row,column,value\n";
        for (const DistanceMatrix* M : {&mp.M1, &mp.M2})
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    std::cout << 'M' << M->which << ',' << M->row_labels[i] << ',' << M->col_labels[j] << ','
                              << to_string((*M)(i, j)) << '\n';
        break;
    case Format::Text:
        for (const DistanceMatrix* M : {&mp.M1, &mp.M2}) {
            std::cout << 'M' << M->which << '\n' << "        ";
            for (const auto& c : M->col_labels)
                std::cout << std::setw(8) << c;
            std::cout << '\n';
            for (int i = 0; i < 4; ++i) {
                std::cout << std::setw(8) << M->row_labels[i];
                for (int j = 0; j < 4; ++j)
                    std::cout << std::setw(8) << to_string((*M)(i, j));
                std::cout << '\n';
            }
        }
        break;
    }
    return 0;
}

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

template <class F>
Check run_check(const std::string& name, F&& f)
{
    try {
        return {name, true, f()};
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CoverageGap)
            throw;
        return {name, false, e.what()};
    }
}

int cmd_verify(const RunConfig& cfg)
{
    const Model m = io::load_model(cfg.model_path);
    const int N = cfg.order;
    std::vector<Check> checks;
    checks.push_back(run_check("functional_equation", [&] {
        check_functional_equation(m, enumerate(m, N), N);
        return "residual vanishes mod t^" + std::to_string(N + 1);
    }));
    std::mt19937 rng(cfg.seed);
    for (int k = 0; k < cfg.samples; ++k) {
        const Model r = build_model(m.stepset, io::random_weighting(m.stepset, m.w.a, m.w.b, rng));
        checks.push_back(run_check("functional_equation_random_" + std::to_string(k + 1), [&] {
            check_functional_equation(r, enumerate(r, N), N);
            return io::model_json(r).dump();
        }));
    }
    checks.push_back(run_check("identity_lemmas", [&] {
        std::string s;
        for (const auto& c : verify_identity_lemmas(m))
            s += (s.empty() ? "" : "; ") + c.lemma + (c.item.empty() ? "" : "(" + c.item + ")") +
                 (c.lambda.empty() ? "" : " lambda=" + c.lambda);
        return s.empty() ? std::string("no identity applies") : s;
    }));
    checks.push_back(run_check("matrices", [&] {
        const CriticalSets sets = critical_sets(m);
        const MatrixPair derived = build_matrices(m, sets, cfg.window, cfg.seed);
        const MatrixPair direct = build_matrices_direct(m, sets, cfg.window);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (derived.M1(i, j) != direct.M1(i, j) || derived.M2(i, j) != direct.M2(i, j))
                    fail(ErrorCode::EvidenceFailed, "derived and direct matrices differ at (" + std::to_string(i + 1) +
                                                        "," + std::to_string(j + 1) + ")");
        return std::string("derived matrices equal the direct computation");
    }));
    checks.push_back(run_check("classification", [&] {
        const Classification c = classify(m, {cfg.window, cfg.seed});
        if (!c.qx0)
            return verdict_name(c.verdict);
        verify_closed_form(m, c, N);
        return verdict_name(c.verdict) + "; closed forms match enumeration up to t^" + std::to_string(N);
    }));

    bool ok = true;
    for (const auto& c : checks)
        ok = ok && c.ok;
    switch (cfg.format) {
    case Format::Json: {
        json arr = json::array();
        for (const auto& c : checks)
            arr.push_back(json{{"check", c.name}, {"status", c.ok ? "pass" : "fail"}, {"detail", c.detail}});
        print_json(json{{"model", io::model_json(m)}, {"order", N}, {"checks", arr}, {"passed", ok}});
        break;
    }
    case Format::Csv:
        std::cout << "check,status,detail\n";
        for (const auto& c : checks)
            std::cout << c.name << ',' << (c.ok ? "pass" : "fail") << ',' << csv_field(c.detail) << '\n';
        break;
    case Format::Text:
        for (const auto& c : checks)
            std::cout << (c.ok ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        break;
    }
    return ok ? 0 : 2;
}

int cmd_phase_scan(const RunConfig& cfg)
{
    if (cfg.order < 4)
        fail(ErrorCode::MalformedInput, "phase-scan needs --order >= 4");
    const Model base = io::load_model(cfg.model_path);
    std::vector<io::PhaseRow> rows;
    for (const Rat& a : parse_grid(cfg.grid_a, base.w.a))
        for (const Rat& b : parse_grid(cfg.grid_b, base.w.b)) {
            Weighting w = base.w;
            w.a = a;
            w.b = b;
            for (auto& r : io::phase_rows(build_model(base.stepset, w), cfg.order))
                rows.push_back(std::move(r));
        }
    switch (cfg.format) {
    case Format::Csv:
    case Format::Text:
        std::cout << "a,b,n,ratio_x_axis,ratio_y_axis\n";
        for (const auto& r : rows)
            std::cout << to_string(r.a) << ',' << to_string(r.b) << ',' << r.n << ',' << io::decimal(r.ratio_x_axis)
                      << ',' << io::decimal(r.ratio_y_axis) << '\n';
        break;
    case Format::Json: {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back(json{{"a", to_string(r.a)},
                               {"b", to_string(r.b)},
                               {"n", r.n},
                               {"ratio_x_axis", io::decimal(r.ratio_x_axis)},
                               {"ratio_y_axis", io::decimal(r.ratio_y_axis)}});
        print_json(arr);
        break;
    }
    }
    return 0;
}

bool is_input_error(ErrorCode c)
{
    return c == ErrorCode::MalformedInput || c == ErrorCode::InvalidSupport || c == ErrorCode::NonPositiveWeight;
}

bool is_evidence_error(ErrorCode c)
{
    switch (c) {
    case ErrorCode::CoverageGap:
    case ErrorCode::EvidenceFailed:
    case ErrorCode::OracleMismatch:
    case ErrorCode::ResidualNonZero:
    case ErrorCode::IdentityFailed:
    case ErrorCode::TableCellMismatch:
        return true;
    default:
        return false;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quadrant walks with interacting boundaries: classification and enumeration"};
    app.require_subcommand(1);
    RunConfig cfg;
    const std::map<std::string, Format> formats{{"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--model", cfg.model_path, "Model JSON file")->required()->check(CLI::ExistingFile);
        sub->add_option("--order", cfg.order, "Truncation order N")->check(CLI::NonNegativeNumber)->capture_default_str();
        sub->add_option("--window", cfg.window, "Orbit window W")->check(CLI::Range(2, max_window))->capture_default_str();
        sub->add_option("--format", cfg.format, "Output format")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
            ->capture_default_str();
        sub->add_option("--seed", cfg.seed, "Seed for sampled checks")->capture_default_str();
    };
    auto* classify_cmd = app.add_subcommand("classify", "Classify Q(x,0) and Q(0,y)");
    auto* enumerate_cmd = app.add_subcommand("enumerate", "Walk generating function up to t^N");
    auto* matrix_cmd = app.add_subcommand("matrix", "Sigma-distance matrices M1 and M2");
    auto* verify_cmd = app.add_subcommand("verify", "Run the internal consistency checks");
    auto* scan_cmd = app.add_subcommand("phase-scan", "Ratios [t^n]Q(1,0)/[t^n]Q(1,1) and [t^n]Q(0,1)/[t^n]Q(1,1)");
    for (auto* sub : {classify_cmd, enumerate_cmd, matrix_cmd, verify_cmd, scan_cmd})
        common(sub);
    verify_cmd->add_option("--samples", cfg.samples, "Random weightings for the residual check")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    scan_cmd->add_option("--grid-a", cfg.grid_a, "Comma-separated values of a (default: the model's)");
    scan_cmd->add_option("--grid-b", cfg.grid_b, "Comma-separated values of b (default: the model's)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*classify_cmd)
            return cmd_classify(cfg);
        if (*enumerate_cmd)
            return cmd_enumerate(cfg);
        if (*matrix_cmd)
            return cmd_matrix(cfg);
        if (*verify_cmd)
            return cmd_verify(cfg);
        return cmd_phase_scan(cfg);
    } catch (const Error& e) {
        std::cerr << "qwalk: " << e.what() << '\n';
        if (is_input_error(e.code()))
            return 1;
        return is_evidence_error(e.code()) ? 2 : 3;
    }
}
