// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances, sizes, seeds and time limits are pinned here.
#include "../generators.hpp"
#include "../../tools/commands.hpp"

#include "sumlike/conditions.hpp"
#include "sumlike/examples.hpp"
#include "sumlike/metrization.hpp"
#include "sumlike/reductions.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace sumlike;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string data(const std::string& name) { return std::string(SUMLIKE_DATA_DIR) + "/" + name; }

// ---------------------------------------------------------------------------

constexpr std::uint64_t kSampleSeed = 20240101;
constexpr int kSamples = 50;
constexpr std::size_t kMaxPoints = 40;

std::vector<ModulusSample> acceptance_samples()
{
    gen::Rng rng(kSampleSeed);
    std::vector<ModulusSample> out;
    for (int i = 0; i < kSamples; ++i) out.push_back(gen::mixed_sample(rng, kMaxPoints));
    return out;
}

Outcome criterion_1()
{
    const ToleranceConfig tol{1e-12, 1e-9};
    const auto start = Clock::now();
    int failures = 0;
    for (const auto& s : acceptance_samples()) {
        const auto cert = metrize(s, tol);
        bool containment = true;
        for (bool b : cert.containment_ok) containment = containment && b;
        if (!(containment && cert.zero_equivalence_ok && cert.threshold_ok && cert.sandwich_ok)) ++failures;
    }
    const double t = seconds_since(start);
    return {failures == 0 && t < 10.0,
            std::to_string(kSamples) + " samples, " + std::to_string(failures) + " failing certificates, " + fmt(t) +
                " s (limit 10 s)"};
}

Outcome criterion_2()
{
    std::size_t checked = 0, skipped = 0, violations = 0;
    for (const auto& raw : acceptance_samples()) {
        const auto s = truncate_modulus(raw);
        const auto levels = build_level_sets(s, quasi_constants(s).combined());
        if (!levels.composition_holds()) {
            ++skipped;
            continue;
        }
        ++checked;
        const auto d = frink_pseudometric(levels);
        for (int n = 1; n <= levels.L; ++n) {
            const double r = std::ldexp(1.0, -n);
            const auto& inner = levels.U[static_cast<std::size_t>(n)];
            const auto& outer = levels.U[static_cast<std::size_t>(n - 1)];
            for (std::size_t u = 0; u < s.size(); ++u) {
                for (std::size_t v = 0; v < s.size(); ++v) {
                    if (inner.contains(u, v) && !(d(u, v) < r)) ++violations;
                    if (d(u, v) < r && !outer.contains(u, v)) ++violations;
                }
            }
        }
    }
    return {violations == 0 && checked > 0,
            std::to_string(checked) + " samples checked, " + std::to_string(skipped) + " without composition, " +
                std::to_string(violations) + " violations"};
}

Outcome criterion_3()
{
    const auto start = Clock::now();
    std::vector<std::string> labels;
    for (int i = 0; i < 20; ++i) labels.push_back(std::to_string(i));
    bool pass = true;
    std::string detail;
    for (double p : {0.5, 1.0, 1.5, 2.0}) {
        SquareMatrix psi(20);
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) psi(i, j) = std::pow(std::abs(i - j) / 19.0, p);
        }
        const double c = quasi_constants(ModulusSample("power", labels, psi)).c_tri;
        bool ok = false;
        if (p <= 1.0) {
            ok = std::abs(c - 1.0) <= 1e-12;
        } else {
            // The exact value 2^(p-1) is attained on equidistant triples; the
            // upper end allows the last bit of rounding in psi.
            const double target = std::pow(2.0, p - 1);
            ok = c >= target * (1 - 1e-6) && c <= target * (1 + 1e-15) + 1e-15;
        }
        pass = pass && ok;
        detail += "p=" + fmt(p) + ": c_tri=" + fmt(c) + (ok ? "" : " (out of range)") + "; ";
    }
    const double t = seconds_since(start);
    pass = pass && t < 1.0;
    return {pass, detail + fmt(t) + " s (limit 1 s)"};
}

Outcome criterion_4()
{
    gen::Rng rng(4444);
    std::size_t plan_violations = 0, margin_violations = 0, levels_checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int L = static_cast<int>(rng.index(1, 8));
        std::vector<WeightStream> streams;
        for (int l = 0; l < L; ++l) streams.push_back({gen::weight_stream(rng, l, 20000), {}});
        const auto plan = select_blocks(streams, L);
        if (plan.levels() != static_cast<std::size_t>(L)) ++plan_violations;
        for (std::size_t l = 0; l < plan.blocks.size(); ++l) {
            const auto& b = plan.blocks[l];
            const double cap = std::ldexp(1.0, -static_cast<int>(l));
            if (!(b.start < b.end)) ++plan_violations;
            if (l + 1 < plan.blocks.size() && !(b.end < plan.blocks[l + 1].start)) ++plan_violations;
            double sum = 0;
            for (std::size_t n = b.start; n <= b.end; ++n) {
                if (!(streams[l].forward[n] < cap)) ++plan_violations;
                sum += streams[l].forward[n];
            }
            if (!(sum >= 1.0 && sum < 1.0 + cap)) ++plan_violations;
        }
        std::vector<double> z(static_cast<std::size_t>(L)), w(z.size());
        for (auto& x : z) x = rng.unit();
        for (auto& x : w) x = rng.unit();
        for (const auto& m : verify_block_inequality(z, w, plan)) {
            ++levels_checked;
            if (!(m.lower_margin > 0 && m.upper_margin > 0)) ++margin_violations;
        }
    }
    return {plan_violations == 0 && margin_violations == 0,
            "100 plans, " + std::to_string(levels_checked) + " levels, " + std::to_string(plan_violations) +
                " plan violations, " + std::to_string(margin_violations) + " margin violations"};
}

Outcome criterion_5()
{
    gen::Rng rng(5555);
    const IntWindow K{-20, 20};
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const double z = rng.uniform(-10, 10);
        const double w = z + rng.uniform(-3, 3);
        const std::vector<double> zs{z}, ws{w};
        const auto a = clamp_reduce(zs, K);
        const auto b = clamp_reduce(ws, K);
        double sum = 0;
        for (std::size_t k = 0; k < K.size(); ++k) sum += std::abs(a[0][k] - b[0][k]);
        worst = std::max(worst, std::abs(sum - std::abs(z - w)));
    }
    return {worst <= 1e-12, "1000 pairs, max |sum - |z-w|| = " + fmt(worst) + " (limit 1e-12)"};
}

Outcome criterion_6()
{
    constexpr int depth = 12;
    const auto start = Clock::now();
    bool pass = true;
    std::string detail;
    for (double rho : {0.6, 0.75, 0.9}) {
        const auto params = KochParams::from_rho(rho, depth);
        std::vector<std::pair<double, double>> dyadic;
        for (int k = 1; k <= depth - 2; ++k) dyadic.emplace_back(0.0, std::pow(4.0, -k));
        const auto d = estimate_holder(params, dyadic);
        const double dyadic_err = std::max(std::abs(d.m_lower - 1), std::abs(d.M_upper - 1));

        gen::Rng rng(static_cast<std::uint64_t>(rho * 1000));
        std::vector<std::pair<double, double>> random;
        while (random.size() < 2000) {
            const double s = rng.uniform(0, 2), t = rng.uniform(0, 2);
            if (std::abs(s - t) > 1e-6) random.emplace_back(s, t);
        }
        double m = INFINITY, M = 0;
        std::size_t chain = 0;
        for (double q : {1.0, 2.0, 4.0}) {
            const auto h = estimate_holder(params, random, q);
            m = std::min(m, h.m_lower);
            M = std::max(M, h.M_upper);
            chain += h.norm_chain_violations;
        }
        const bool ok = dyadic_err <= 1e-9 && m > 0 && std::isfinite(M) && chain == 0;
        pass = pass && ok;
        detail += "rho=" + fmt(rho) + ": dyadic err " + fmt(dyadic_err) + ", m'=" + fmt(m) + ", M'=" + fmt(M) +
                  ", chain violations " + std::to_string(chain) + "; ";
    }
    const double t = seconds_since(start);
    pass = pass && t < 5.0;
    return {pass, detail + fmt(t) + " s (limit 5 s)"};
}

Outcome criterion_7()
{
    const auto spec = Example4Spec::preset_default(8);
    const auto f = build_example4(spec);
    const auto grid = log_grid(spec.a.back(), spec.a.front(), 200);
    const auto tol = scaled_tolerance(f, grid);

    const double continuity = f.continuity_defect();
    const auto ineq = verify_example4_inequalities(f, grid, tol);

    double ratio_err = 0;
    const auto k = spec.slopes();
    for (std::size_t n = 0; n < f.last_index(); ++n) {
        const auto r = example4_ratio(f, n, tol);
        const double expected = 0.5 * (1 + k[n + 1] / k[n]);
        ratio_err = std::max(ratio_err, std::abs(r.direct - expected) / expected);
    }

    const auto mo_grid = merge_grids(grid, example4_breakpoints(f));
    const auto mo = mazur_orlicz_check(ScalarModulus(f), mo_grid, {}, scaled_tolerance(f, mo_grid));

    const auto two = build_example4(Example4Spec::two_term());
    const double two_ratio = example4_ratio(two, 0).direct;

    const bool ok = continuity <= 1e-12 && ineq.subadditive_violations == 0 && ineq.reverse_violations == 0 &&
                    ratio_err <= 1e-9 && !mo.b_prime.bounded && two_ratio == 2.5;
    std::string detail = "continuity " + fmt(continuity) + "; subadditivity violations " +
                         std::to_string(ineq.subadditive_violations) + "; reverse violations " +
                         std::to_string(ineq.reverse_violations) + "/" + std::to_string(ineq.pairs);
    if (ineq.reverse_violations) {
        detail += " (worst s=" + fmt(ineq.reverse_witness.first) + " t=" + fmt(ineq.reverse_witness.second) +
                  " excess " + fmt(ineq.max_reverse_excess) + ")";
    }
    detail += "; ratio rel err " + fmt(ratio_err) + "; b' " + (mo.b_prime.bounded ? "BOUNDED" : "UNBOUNDED") +
              "; two-term ratio " + fmt(two_ratio);
    return {ok, detail};
}

Outcome criterion_8()
{
    const auto start = Clock::now();
    const std::array<std::pair<const char*, const char*>, 4> cases{{
        {"power-family.json", "L1_LIKE"},
        {"indicators-one-block.json", "TRIVIAL"},
        {"indicators-two-block.json", "E0_LIKE"},
        {"indicators-growing.json", "E1_LIKE"},
    }};
    bool pass = true;
    std::string detail;
    for (const auto& [file, expected] : cases) {
        const auto r = cli::cmd_classify(cli::load_input(data(file)).json, {}, {});
        const std::string branch = r.payload["branch"];
        pass = pass && branch == expected;
        detail += std::string(file) + " -> " + branch + "; ";
    }
    const double t = seconds_since(start);
    pass = pass && t < 2.0;
    return {pass, detail + fmt(t) + " s (limit 2 s)"};
}

/// Runs the CLI binary and returns the serialized payload, or "exit <code>"
/// appended when the report is missing.
std::string cli_payload(const std::string& threads, const std::string& args, int& code)
{
    const std::string cmd = "SUMLIKE_THREADS=" + threads + " '" + SUMLIKE_CLI_PATH + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return "popen failed";
    std::string text;
    std::array<char, 4096> buf{};
    while (const std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), n);
    const int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    try {
        return dump_json(parse_json(text)["payload"]);
    } catch (const std::exception&) {
        return "no report";
    }
}

Outcome criterion_9()
{
    const std::vector<std::string> commands{
        "check '" + data("power-p1.json") + "'",
        "check '" + data("power-p1.json") + "' --compare '" + data("power-p2.json") + "'",
        "check '" + data("power-family.json") + "'",
        "check '" + data("asym.json") + "'",
        "metrize '" + data("metric-grid.json") + "'",
        "metrize '" + data("power-family.json") + "' --coord 5",
        "classify '" + data("power-family.json") + "'",
        "classify '" + data("indicators-growing.json") + "'",
        "classify '" + data("indicators-two-block.json") + "'",
        "reduce clamp '" + data("clamp-pairs.json") + "'",
        "reduce blocks '" + data("blocks.json") + "'",
        "reduce koch '" + data("koch.json") + "'",
        "example4",
        "example4 --preset two-term",
        "example4 --preset linear",
        "example4 '" + data("example4-power.json") + "'",
    };
    std::size_t mismatches = 0;
    std::string detail;
    for (const auto& args : commands) {
        int c1 = 0, c4 = 0, c4b = 0;
        const auto one = cli_payload("1", args, c1);
        const auto four = cli_payload("4", args, c4);
        const auto again = cli_payload("4", args, c4b);
        if (one != four || four != again || c1 != c4 || c4 != c4b || one == "no report") {
            ++mismatches;
            detail += "[" + args + "] differs; ";
        }
    }
    return {mismatches == 0,
            std::to_string(commands.size()) + " commands x {1, 4, 4} threads, " + std::to_string(mismatches) +
                " mismatches" + (detail.empty() ? "" : ": " + detail)};
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"metrization certificates", criterion_1},
        {"level set containments", criterion_2},
        {"quasi-constants of power moduli", criterion_3},
        {"block plans and margins", criterion_4},
        {"clamp identity", criterion_5},
        {"Koch Hölder ratios", criterion_6},
        {"zigzag modulus end to end", criterion_7},
        {"classifier branches", criterion_8},
        {"CLI determinism", criterion_9},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS " : "FAIL ") << i + 1 << ": " << criteria[i].first << " -- " << o.detail
                  << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
