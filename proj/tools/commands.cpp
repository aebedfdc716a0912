#include "commands.hpp"

#include "sumlike/conditions.hpp"
#include "sumlike/examples.hpp"
#include "sumlike/metrization.hpp"
#include "sumlike/reductions.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>

namespace sumlike::cli {

namespace {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool is_sample(const Json& j)
{
    return j.is_object() && j.contains("psi") && !j.contains("coords");
}

/// A family file, or a bare sample wrapped as a one-coordinate family.
FamilyDescription family_or_sample(const Json& j)
{
    if (is_sample(j)) {
        FamilyDescription fam;
        fam.coords.emplace_back(TableModulus{sample_from_json(j)});
        fam.name = fam.coords.front().sample().name();
        return fam;
    }
    return family_from_json(j);
}

std::string kind_name(const ModulusSpec& spec)
{
    switch (spec.kind()) {
    case ModulusKind::Table: return "table";
    case ModulusKind::Power: return "power";
    case ModulusKind::F: return "f";
    case ModulusKind::Indicator: return "indicator";
    }
    return "unknown";
}

std::string fmt(double x)
{
    return std::isfinite(x) ? format_real(x) : "INFINITE";
}

Json optional_constant(const std::optional<double>& a)
{
    return a ? number_or_infinite(*a) : Json("UNBOUNDED");
}

std::vector<double> real_vector(const Json& j, const char* key, std::string_view what)
{
    return as_numbers(require(j, key, what), key);
}

std::string matrix_csv(const std::vector<std::vector<double>>& rows, const std::vector<std::string>& header)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    char buf[32];
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            os << (i ? "," : "") << buf;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace

std::string sha256_hex(std::string_view bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

Input load_input(const std::string& path)
{
    const std::string bytes = read_file(path);
    return {"sha256:" + sha256_hex(bytes), parse_json(bytes)};
}

// ---------------------------------------------------------------------------
// check

CommandResult cmd_check(const Json& input, const CheckOptions& opts, const ToleranceConfig& tol)
{
    const FamilyDescription fam = family_or_sample(input);
    std::optional<FamilyDescription> other;
    if (!opts.compare.empty()) {
        other = family_or_sample(load_input(opts.compare).json);
        if (other->size() != fam.size()) fail("--compare family has a different number of coordinates");
    }

    Json coords = Json::array();
    Json comparison = Json::array();
    std::size_t failing = 0;
    double worst_tri = 1.0, worst_sym = 1.0;
    for (std::size_t n = 0; n < fam.size(); ++n) {
        const ModulusSample s = fam.coords[n].sample(opts.grid_points);
        const QuasiConstants q = quasi_constants(s, tol);
        const bool ok = q.finite() && q.diagonal_ok(tol);
        if (!ok) ++failing;
        worst_tri = std::max(worst_tri, q.c_tri);
        worst_sym = std::max(worst_sym, q.c_sym);
        coords.push_back(Json{{"index", n},
                              {"kind", kind_name(fam.coords[n])},
                              {"points", s.size()},
                              {"quasi_constants", to_json(q)},
                              {"equivalence_inducing", ok}});
        if (other) {
            const ModulusSample t = other->coords[n].sample(opts.grid_points);
            comparison.push_back(Json{{"index", n},
                                      {"phi_over_psi", optional_constant(compare_moduli(s, t, tol))},
                                      {"psi_over_phi", optional_constant(compare_moduli(t, s, tol))},
                                      {"two_sided", optional_constant(compare_moduli_two_sided(s, t, tol))}});
        }
    }

    CommandResult r;
    r.payload = Json{{"family", fam.name}, {"coordinates", fam.size()}, {"per_coordinate", coords}};
    if (other) r.payload["comparison"] = comparison;
    r.payload["max_c_sym"] = number_or_infinite(worst_sym);
    r.payload["max_c_tri"] = number_or_infinite(worst_tri);
    r.payload["verdict"] = failing == 0 ? "QUASI_METRIC" : "NOT_EQUIVALENCE_INDUCING";
    r.exit_code = failing == 0 ? kOk : kVerdictFailure;
    r.summary = "check: " + std::to_string(fam.size()) + " coordinate(s), max c_sym = " + fmt(worst_sym) +
                ", max c_tri = " + fmt(worst_tri) +
                (failing ? ", " + std::to_string(failing) + " not equivalence-inducing" : ", all finite");
    return r;
}

// ---------------------------------------------------------------------------
// metrize

CommandResult cmd_metrize(const Json& input, const MetrizeOptions& opts, const ToleranceConfig& tol)
{
    ModulusSample s = [&] {
        if (is_sample(input)) return sample_from_json(input);
        const FamilyDescription fam = family_from_json(input);
        if (opts.coord >= fam.size()) {
            fail("--coord " + std::to_string(opts.coord) + " out of range (family has " +
                 std::to_string(fam.size()) + " coordinates)");
        }
        return fam.coords[opts.coord].sample(opts.grid_points);
    }();

    const MetrizationCertificate cert = metrize(s, tol);
    CommandResult r;
    r.payload = to_json(cert);
    r.exit_code = cert.all_ok() ? kOk : kVerdictFailure;
    r.summary = "metrize: " + std::to_string(cert.points.size()) + " points, C = " + fmt(cert.C) +
                ", B = " + fmt(cert.B) + ", p = " + fmt(cert.p) + ", L = " + std::to_string(cert.L) +
                (cert.all_ok() ? ", certificate holds" : ", certificate FAILED") +
                (cert.advisory ? " (advisory: composition property fails on this sample)" : "");
    std::ostringstream csv;
    write_distance_csv(csv, cert.points, cert.d);
    r.csv = csv.str();
    return r;
}

// ---------------------------------------------------------------------------
// classify

CommandResult cmd_classify(const Json& input, const ClassifyOptions& opts, const ToleranceConfig& tol)
{
    const FamilyDescription fam = family_or_sample(input);
    TrichotomyOptions t;
    if (!opts.c_grid.empty()) t.c_grid = opts.c_grid;
    t.target = opts.target;
    t.budget = opts.budget;
    t.class_growth_bound = opts.class_bound;
    t.grid_points = opts.grid_points;
    const TrichotomyReport report = classify_trichotomy(fam, t, tol);

    CommandResult r;
    r.payload = to_json(report);
    r.summary = "classify: " + fam.name + " -> " + to_string(report.branch);
    return r;
}

// ---------------------------------------------------------------------------
// reduce

CommandResult cmd_reduce_clamp(const Json& input, const ToleranceConfig& tol)
{
    check_fields(input, {"z", "w", "window"}, "clamp input");
    const auto z = real_vector(input, "z", "clamp input");
    const auto window = real_vector(input, "window", "clamp input");
    if (window.size() != 2 || window[0] != std::floor(window[0]) || window[1] != std::floor(window[1])) {
        fail("clamp window must be two integers [lo, hi]");
    }
    const IntWindow K{static_cast<std::int64_t>(window[0]), static_cast<std::int64_t>(window[1])};
    const auto rows = clamp_reduce(z, K);

    CommandResult r;
    r.payload = Json{{"window", Json::array({K.lo, K.hi})}, {"z", z}};
    Json jrows = Json::array();
    for (const auto& row : rows) jrows.push_back(row);
    r.payload["rows"] = jrows;

    std::vector<std::string> header{"m"};
    for (std::int64_t k = K.lo; k <= K.hi; ++k) header.push_back("k=" + std::to_string(k));
    std::vector<std::vector<double>> csv_rows;
    for (std::size_t m = 0; m < rows.size(); ++m) {
        csv_rows.push_back({static_cast<double>(m)});
        csv_rows.back().insert(csv_rows.back().end(), rows[m].begin(), rows[m].end());
    }
    r.csv = matrix_csv(csv_rows, header);

    std::size_t mismatches = 0;
    if (const auto it = input.find("w"); it != input.end()) {
        const auto w = as_numbers(*it, "w");
        if (w.size() != z.size()) fail("clamp input: z and w differ in length");
        const auto wrows = clamp_reduce(w, K);
        Json identity = Json::array();
        for (std::size_t m = 0; m < z.size(); ++m) {
            double sum = 0.0;
            for (std::size_t k = 0; k < K.size(); ++k) sum += std::abs(rows[m][k] - wrows[m][k]);
            const double dist = std::abs(z[m] - w[m]);
            const bool inside = std::min(z[m], w[m]) >= static_cast<double>(K.lo) &&
                                std::max(z[m], w[m]) <= static_cast<double>(K.hi + 1);
            const bool ok = !inside || tol.near(sum, dist);
            if (!ok) ++mismatches;
            identity.push_back(Json{{"m", m}, {"distance", dist}, {"row_difference", sum},
                                    {"window_covers", inside}, {"ok", ok}});
        }
        r.payload["w"] = w;
        r.payload["identity"] = identity;
    }
    r.exit_code = mismatches ? kVerdictFailure : kOk;
    r.summary = "reduce clamp: " + std::to_string(z.size()) + " row(s) over k in [" + std::to_string(K.lo) +
                ", " + std::to_string(K.hi) + "]" +
                (mismatches ? ", " + std::to_string(mismatches) + " identity mismatch(es)" : "");
    return r;
}

CommandResult cmd_reduce_blocks(const Json& input, const ToleranceConfig&)
{
    check_fields(input, {"levels", "stream", "streams", "z", "w"}, "blocks input");
    const double levels_raw = as_number(require(input, "levels", "blocks input"), "levels");
    if (!(levels_raw >= 0 && levels_raw == std::floor(levels_raw) && levels_raw <= 64)) {
        fail("levels must be an integer in [0, 64]");
    }
    const int levels = static_cast<int>(levels_raw);

    std::vector<WeightStream> streams;
    if (input.contains("stream") == input.contains("streams")) {
        fail("blocks input needs exactly one of 'stream' (shared by all levels) or 'streams'");
    }
    if (const auto it = input.find("stream"); it != input.end()) {
        streams.assign(static_cast<std::size_t>(levels), WeightStream{as_numbers(*it, "stream"), {}});
    } else {
        const Json& arr = input.at("streams");
        if (!arr.is_array()) fail("streams must be an array");
        for (const auto& s : arr) {
            if (s.is_array()) {
                streams.push_back({as_numbers(s, "streams[]"), {}});
            } else {
                check_fields(s, {"forward", "backward"}, "stream");
                WeightStream ws{as_numbers(require(s, "forward", "stream"), "forward"), {}};
                if (s.contains("backward")) ws.backward = as_numbers(s.at("backward"), "backward");
                streams.push_back(std::move(ws));
            }
        }
    }

    const BlockPlan plan = select_blocks(streams, levels);
    CommandResult r;
    r.payload = Json{{"plan", to_json(plan)}};
    r.summary = "reduce blocks: " + std::to_string(plan.levels()) + " level(s) over " +
                std::to_string(plan.span()) + " coordinates";

    const bool has_z = input.contains("z"), has_w = input.contains("w");
    if (has_z) {
        const auto z = as_numbers(input.at("z"), "z");
        const auto slots = block_reduce(z, plan);
        Json js = Json::array();
        for (const Slot& s : slots) {
            js.push_back(s.side == Side::Filler ? "-" : (s.side == Side::X ? "x" : "y") + std::to_string(s.level));
        }
        r.payload["z"] = z;
        r.payload["slots"] = js;
        if (has_w) {
            const auto w = as_numbers(input.at("w"), "w");
            const auto margins = verify_block_inequality(z, w, plan);
            Json jm = Json::array();
            std::size_t bad = 0;
            for (const auto& m : margins) {
                jm.push_back(to_json(m));
                if (!m.ok) ++bad;
            }
            r.payload["w"] = w;
            r.payload["margins"] = jm;
            r.exit_code = bad ? kVerdictFailure : kOk;
            r.summary += bad ? ", " + std::to_string(bad) + " level(s) outside the margin" : ", all margins hold";
        }
    } else if (has_w) {
        fail("blocks input: 'w' requires 'z'");
    }
    if (!plan.valid()) {
        r.exit_code = kVerdictFailure;
        r.summary += ", plan INVALID";
    }
    return r;
}

CommandResult cmd_reduce_koch(const Json& input, const ToleranceConfig& tol)
{
    check_fields(input, {"rho", "r", "depth", "interval_offset", "points", "pairs", "dyadic", "random_pairs", "q"},
                 "koch input");
    const int depth = input.contains("depth") ? static_cast<int>(as_number(input.at("depth"), "depth")) : 12;
    KochParams params;
    if (input.contains("rho") && input.contains("r")) fail("koch input: give rho or r, not both");
    if (input.contains("r")) {
        params = KochParams::from_r(as_number(input.at("r"), "r"), depth);
    } else {
        params = KochParams::from_rho(input.contains("rho") ? as_number(input.at("rho"), "rho") : 1.0, depth);
    }
    if (input.contains("interval_offset")) params.interval_offset = as_number(input.at("interval_offset"), "offset");
    params.validate(tol);
    const double q = input.contains("q") ? as_number(input.at("q"), "q") : 1.0;

    CommandResult r;
    r.payload = Json{{"params", to_json(params)}};
    r.summary = "reduce koch: rho = " + fmt(params.rho) + ", depth = " + std::to_string(params.depth);

    if (const auto it = input.find("points"); it != input.end()) {
        const auto s = as_numbers(*it, "points");
        const auto image = koch_interleave(s, params);
        Json pts = Json::array();
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < s.size(); ++i) {
            pts.push_back(Json{{"s", s[i]}, {"x", image[2 * i]}, {"y", image[2 * i + 1]}});
            rows.push_back({s[i], image[2 * i], image[2 * i + 1]});
        }
        r.payload["points"] = pts;
        r.csv = matrix_csv(rows, {"s", "x", "y"});
    }

    std::vector<std::pair<double, double>> pairs;
    if (const auto it = input.find("pairs"); it != input.end()) {
        if (!it->is_array()) fail("pairs must be an array of [s, t]");
        for (const auto& p : *it) {
            const auto v = as_numbers(p, "pair");
            if (v.size() != 2) fail("each pair must be [s, t]");
            pairs.emplace_back(v[0], v[1]);
        }
    }
    if (const auto it = input.find("dyadic"); it != input.end()) {
        const double kmax = as_number(*it, "dyadic");
        if (!(kmax >= 1 && kmax == std::floor(kmax))) fail("dyadic must be a positive integer");
        for (int k = 1; k <= static_cast<int>(kmax); ++k) pairs.emplace_back(0.0, std::pow(4.0, -k));
    }
    if (const auto it = input.find("random_pairs"); it != input.end()) {
        check_fields(*it, {"count", "seed"}, "random_pairs");
        const double count_raw = as_number(require(*it, "count", "random_pairs"), "count");
        if (!(count_raw >= 0 && count_raw <= 1e6 && count_raw == std::floor(count_raw))) {
            fail("random_pairs.count must be an integer in [0, 1e6]");
        }
        const auto count = static_cast<std::size_t>(count_raw);
        const auto seed = static_cast<std::uint64_t>(as_number(require(*it, "seed", "random_pairs"), "seed"));
        std::mt19937_64 rng(seed);
        const double resolution = std::pow(4.0, -params.depth);
        const std::size_t target = pairs.size() + count;
        while (pairs.size() < target) {
            // Raw 53-bit draws keep the stream identical across standard libraries.
            const double s = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            const double t = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (std::abs(s - t) > 4.0 * resolution) pairs.emplace_back(s, t);
        }
    }
    if (!pairs.empty()) {
        const HolderEstimate h = estimate_holder(params, pairs, q, tol);
        r.payload["holder"] = to_json(h);
        r.summary += ", m' = " + fmt(h.m_lower) + ", M' = " + fmt(h.M_upper) + " over " +
                     std::to_string(h.pairs) + " pairs";
        if (!h.norm_chain_ok()) {
            r.exit_code = kVerdictFailure;
            r.summary += ", norm chain violated";
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// example4

CommandResult cmd_example4(const std::optional<Json>& spec_json, const Example4Options& opts,
                           const ToleranceConfig& tol)
{
    if (opts.grid_points < 2) fail("--grid-points must be at least 2");
    CommandResult r;
    if (!spec_json && opts.preset == "linear") {
        const ScalarModulus f = PowerLaw{1.0};
        const auto grid = log_grid(std::ldexp(1.0, -20), 1.0, opts.grid_points);
        const MazurOrliczVerdict v = mazur_orlicz_check(f, grid, {}, tol);
        r.payload = Json{{"preset", "linear"}, {"f", to_json(f)}, {"mazur_orlicz", to_json(v)}};
        r.summary = std::string("example4: f(t) = t -> ") + (v.linear_likely ? "LINEAR_LIKELY" : "NOT_LINEAR");
        return r;
    }

    Example4Spec spec;
    if (spec_json) {
        spec = example4_spec_from_json(*spec_json);
    } else if (opts.preset == "default") {
        spec = Example4Spec::preset_default(opts.M);
    } else if (opts.preset == "two-term") {
        spec = Example4Spec::two_term();
    } else {
        fail("unknown preset '" + opts.preset + "' (expected default, two-term or linear)");
    }

    const PiecewiseModulus f = build_example4(spec, tol);
    const auto grid = log_grid(spec.a.back(), spec.a.front(), opts.grid_points);
    const auto mo_grid = merge_grids(grid, example4_breakpoints(f));
    const ToleranceConfig scaled = scaled_tolerance(f, mo_grid, tol);

    Json ratios = Json::array();
    std::size_t disagreements = 0;
    for (std::size_t n = 0; n < f.last_index(); ++n) {
        const Example4Ratio q = example4_ratio(f, n, scaled);
        if (!q.agree) ++disagreements;
        ratios.push_back(to_json(q));
    }
    const InequalityReport ineq = verify_example4_inequalities(f, grid, scaled);
    const MazurOrliczVerdict v = mazur_orlicz_check(ScalarModulus(f), mo_grid, {}, scaled);

    r.payload = Json{{"spec", to_json(spec)},
                     {"f", to_json(ScalarModulus(f))},
                     {"tolerance_used", to_json(scaled)},
                     {"continuity_defect", f.continuity_defect()},
                     {"ratios", ratios},
                     {"inequalities", to_json(ineq)},
                     {"mazur_orlicz", to_json(v)}};
    if (disagreements) r.exit_code = kVerdictFailure;
    r.summary = "example4: M = " + std::to_string(f.last_index()) + ", b' " +
                (v.b_prime.bounded ? "BOUNDED" : "UNBOUNDED") + " -> " +
                (v.linear_likely ? "LINEAR_LIKELY" : "NOT_LINEAR") + "; subadditivity " +
                (ineq.subadditive_violations ? "fails" : "holds") + ", reverse inequality " +
                (ineq.reverse_violations ? "fails on " + std::to_string(ineq.reverse_violations) + " pairs" : "holds") +
                (disagreements ? "; ratio identity disagrees" : "");
    return r;
}

// ---------------------------------------------------------------------------
// driver

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Sum-like equivalence relations: checks, metrization, classification and reductions", "sumlike"};
    app.require_subcommand(1);

    double tol_abs = ToleranceConfig{}.eps_abs;
    double tol_rel = ToleranceConfig{}.eps_rel;
    std::string out_path, csv_path;
    app.add_option("--tol-abs", tol_abs, "absolute tolerance")->capture_default_str();
    app.add_option("--tol-rel", tol_rel, "relative tolerance")->capture_default_str();
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_option("--csv-out", csv_path, "write the command's table (distances, rows, points) as CSV");

    std::string input_path;
    CheckOptions check_opts;
    auto* check = app.add_subcommand("check", "quasi-metric constants per coordinate");
    check->add_option("input", input_path, "family or sample JSON")->required();
    check->add_option("--compare", check_opts.compare, "second family: report comparison constants");
    check->add_option("--grid-points", check_opts.grid_points, "sampling of real-valued coordinates");

    MetrizeOptions metrize_opts;
    auto* metr = app.add_subcommand("metrize", "metrize a sample and certify the sandwich");
    metr->add_option("input", input_path, "sample or family JSON")->required();
    metr->add_option("--coord", metrize_opts.coord, "coordinate of a family to metrize");
    metr->add_option("--grid-points", metrize_opts.grid_points, "sampling of real-valued coordinates");

    ClassifyOptions classify_opts;
    auto* classify = app.add_subcommand("classify", "trichotomy branch of a finite family");
    classify->add_option("input", input_path, "family JSON")->required();
    classify->add_option("--c-grid", classify_opts.c_grid, "thresholds c to scan")->delimiter(',');
    classify->add_option("--target", classify_opts.target, "witness sum target");
    classify->add_option("--budget", classify_opts.budget, "coordinates scanned per search (0 = all)");
    classify->add_option("--class-bound", classify_opts.class_bound, "class count standing in for 'many'");
    classify->add_option("--grid-points", classify_opts.grid_points, "sampling of real-valued coordinates");

    auto* reduce = app.add_subcommand("reduce", "run a reduction map on an input file");
    reduce->require_subcommand(1);
    auto* clamp = reduce->add_subcommand("clamp", "z -> clamp rows over an integer window");
    clamp->add_option("input", input_path, "{z, window, w?}")->required();
    auto* blocks = reduce->add_subcommand("blocks", "block selection and the block map");
    blocks->add_option("input", input_path, "{levels, stream | streams, z?, w?}")->required();
    auto* koch = reduce->add_subcommand("koch", "Koch curve points and Hölder ratios");
    koch->add_option("input", input_path, "{rho | r, depth?, points?, pairs?, dyadic?, random_pairs?}")->required();

    Example4Options ex_opts;
    auto* ex4 = app.add_subcommand("example4", "zigzag modulus with an unbounded domination constant");
    ex4->add_option("spec", input_path, "spec JSON {g?, a}; omit for a preset");
    ex4->add_option("--preset", ex_opts.preset, "default, two-term or linear")->capture_default_str();
    ex4->add_option("--M", ex_opts.M, "last index of the default preset")->capture_default_str();
    ex4->add_option("--grid-points", ex_opts.grid_points, "log grid size")->capture_default_str();

    for (auto* sub : {check, metr, classify, reduce, clamp, blocks, koch, ex4}) sub->fallthrough();

    std::vector<const char*> argv{"sumlike"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        ToleranceConfig tol{tol_abs, tol_rel};
        tol.validate();

        const auto start = std::chrono::steady_clock::now();
        std::string command;
        std::string digest;
        CommandResult result;
        auto load = [&] {
            Input in = load_input(input_path);
            digest = in.digest;
            return in.json;
        };

        if (check->parsed()) {
            command = "check";
            result = cmd_check(load(), check_opts, tol);
        } else if (metr->parsed()) {
            command = "metrize";
            result = cmd_metrize(load(), metrize_opts, tol);
        } else if (classify->parsed()) {
            command = "classify";
            result = cmd_classify(load(), classify_opts, tol);
        } else if (clamp->parsed()) {
            command = "reduce clamp";
            result = cmd_reduce_clamp(load(), tol);
        } else if (blocks->parsed()) {
            command = "reduce blocks";
            result = cmd_reduce_blocks(load(), tol);
        } else if (koch->parsed()) {
            command = "reduce koch";
            result = cmd_reduce_koch(load(), tol);
        } else {
            command = "example4";
            std::optional<Json> spec;
            if (!input_path.empty()) {
                spec = load();
            } else {
                digest = "sha256:" + sha256_hex("preset=" + ex_opts.preset + ";M=" + std::to_string(ex_opts.M));
            }
            result = cmd_example4(spec, ex_opts, tol);
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

        Json report{{"command", command},
                    {"input_digest", digest},
                    {"tolerance", to_json(tol)},
                    {"payload", result.payload},
                    {"wall_time", elapsed.count()},
                    {"summary", result.summary}};
        const std::string text = dump_json(report) + "\n";
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) fail("cannot write '" + out_path + "'");
            f << text;
        }
        if (!csv_path.empty()) {
            if (!result.csv) fail(command + " has no CSV output");
            std::ofstream f(csv_path, std::ios::binary);
            if (!f) fail("cannot write '" + csv_path + "'");
            f << *result.csv;
        }
        err << result.summary << '\n';
        return result.exit_code;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::InvalidInput ? kInputError : kVerdictFailure;
    }
}

}  // namespace sumlike::cli
