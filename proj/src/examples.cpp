#include "sumlike/examples.hpp"

#include "sumlike/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace sumlike {

GFunction GFunction::power(double alpha)
{
    GFunction g{Kind::Power, alpha};
    g.validate();
    return g;
}

double GFunction::operator()(double x) const
{
    if (x <= 0.0) return 0.0;
    return kind == Kind::Sqrt ? std::sqrt(x) : std::pow(x, alpha);
}

std::string GFunction::name() const
{
    return kind == Kind::Sqrt ? "sqrt" : "power";
}

void GFunction::validate() const
{
    if (kind == Kind::Power && !(alpha > 0.0 && alpha < 1.0)) {
        fail("g(x) = x^alpha needs 0 < alpha < 1, got " + format_real(alpha));
    }
}

Example4Spec Example4Spec::preset_default(int M)
{
    if (M < 1 || M > 20) fail("example4 preset needs 1 <= M <= 20");
    Example4Spec spec;
    for (int n = 0; n <= M; ++n) spec.a.push_back(std::ldexp(1.0, -2 * (n + 1) * (n + 1)));
    return spec;
}

Example4Spec Example4Spec::two_term()
{
    return Example4Spec{GFunction::sqrt(), {0.25, 1.0 / 64.0}};
}

std::vector<double> Example4Spec::slopes() const
{
    std::vector<double> k;
    k.reserve(a.size());
    for (double an : a) k.push_back(g(an) / an);
    return k;
}

std::vector<double> Example4Spec::joins() const
{
    const auto k = slopes();
    std::vector<double> b;
    for (std::size_t n = 0; n + 1 < a.size(); ++n) {
        b.push_back(2.0 * k[n + 1] * a[n + 1] / (k[n] + k[n + 1]));
    }
    return b;
}

void Example4Spec::validate() const
{
    g.validate();
    if (a.empty()) fail("example4: the sequence a is empty");
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (!(a[n] > 0.0) || !std::isfinite(a[n])) fail("example4: a_" + std::to_string(n) + " must be positive");
        if (n + 1 < a.size() && !(a[n + 1] < a[n])) {
            fail("example4: a must be strictly decreasing (a_" + std::to_string(n + 1) + " >= a_" +
                 std::to_string(n) + ")");
        }
    }
    const auto k = slopes();
    const auto b = joins();
    for (std::size_t n = 0; n + 1 < a.size(); ++n) {
        if (!(k[n] < k[n + 1])) fail("example4: k_" + std::to_string(n) + " < k_" + std::to_string(n + 1) + " fails");
        if (!(a[n + 1] < b[n] && b[n] < a[n])) {
            fail("example4: a_" + std::to_string(n + 1) + " < b_" + std::to_string(n) + " < a_" +
                 std::to_string(n) + " fails");
        }
    }
}

PiecewiseModulus build_example4(const Example4Spec& spec, const ToleranceConfig& tol)
{
    spec.validate();
    return PiecewiseModulus(spec.a, spec.slopes(), spec.joins(), spec.g(spec.a.front()), tol);
}

Example4Ratio example4_ratio(const PiecewiseModulus& f, std::size_t n, const ToleranceConfig& tol)
{
    if (n >= f.last_index()) {
        fail("example4_ratio: n = " + std::to_string(n) + " must be below M = " + std::to_string(f.last_index()));
    }
    const double at_b = f(f.joins()[n]);
    if (at_b <= tol.eps_abs) fail("example4_ratio: f(b_" + std::to_string(n) + ") vanishes");
    Example4Ratio r;
    r.n = n;
    r.direct = f(f.breakpoints()[n + 1]) / at_b;
    r.closed_form = 0.5 * (1.0 + f.slopes()[n + 1] / f.slopes()[n]);
    r.agree = std::abs(r.direct - r.closed_form) <= tol.eps_rel * r.closed_form;
    return r;
}

InequalityReport verify_example4_inequalities(const PiecewiseModulus& f, std::span<const double> grid,
                                              const ToleranceConfig& tol)
{
    const double hi = 2.0 * f.breakpoints().front();
    for (double s : grid) {
        if (!(s > 0.0 && s <= hi)) fail("inequality grid must lie in (0, 2 a_0]");
    }

    struct Row {
        double sub = -kInfinity, rev = -kInfinity;
        double sub_t = 0.0, rev_t = 0.0;
        std::size_t sub_violations = 0, rev_violations = 0;
    };
    std::vector<Row> rows(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        Row& row = rows[i];
        const double s = grid[i];
        const double fs = f(s);
        for (double t : grid) {
            const double ft = f(t);
            const double fst = f(s + t);
            const double sub = fst - (fs + ft);
            const double rev = fs - (fst + ft);
            if (sub > row.sub) {
                row.sub = sub;
                row.sub_t = t;
            }
            if (rev > row.rev) {
                row.rev = rev;
                row.rev_t = t;
            }
            if (!tol.leq(fst, fs + ft)) ++row.sub_violations;
            if (!tol.leq(fs, fst + ft)) ++row.rev_violations;
        }
    });

    InequalityReport out;
    out.grid_points = grid.size();
    out.pairs = grid.size() * grid.size();
    out.max_subadditive_excess = -kInfinity;
    out.max_reverse_excess = -kInfinity;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].sub > out.max_subadditive_excess) {
            out.max_subadditive_excess = rows[i].sub;
            out.subadditive_witness = {grid[i], rows[i].sub_t};
        }
        if (rows[i].rev > out.max_reverse_excess) {
            out.max_reverse_excess = rows[i].rev;
            out.reverse_witness = {grid[i], rows[i].rev_t};
        }
        out.subadditive_violations += rows[i].sub_violations;
        out.reverse_violations += rows[i].rev_violations;
    }
    if (grid.empty()) out.max_subadditive_excess = out.max_reverse_excess = 0.0;
    return out;
}

ToleranceConfig scaled_tolerance(const PiecewiseModulus& f, std::span<const double> grid,
                                 const ToleranceConfig& tol)
{
    ToleranceConfig out = tol;
    if (grid.empty()) return out;
    const double lo = *std::min_element(grid.begin(), grid.end());
    const double floor_value = tol.eps_rel * f(lo);
    if (floor_value > 0.0) out.eps_abs = std::min(tol.eps_abs, floor_value);
    return out;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n)
{
    if (!(lo > 0.0 && lo <= hi) || !std::isfinite(hi)) fail("log_grid needs 0 < lo <= hi");
    if (n == 0) return {};
    if (n == 1) return {lo};
    std::vector<double> out(n);
    const double a = std::log(lo), b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<double> example4_breakpoints(const PiecewiseModulus& f)
{
    std::vector<double> out = f.breakpoints();
    out.insert(out.end(), f.joins().begin(), f.joins().end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> merge_grids(std::span<const double> a, std::span<const double> b)
{
    std::vector<double> out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> catalog_names()
{
    return {"linear", "capped-linear", "sqrt", "example4-default", "example4-two-term"};
}

ScalarModulus catalog_modulus(const std::string& name)
{
    if (name == "linear") return PowerLaw{1.0};
    if (name == "capped-linear") return PowerLaw{1.0, 1.0};
    if (name == "sqrt") return PowerLaw{0.5};
    if (name == "example4-default") return build_example4(Example4Spec::preset_default());
    if (name == "example4-two-term") return build_example4(Example4Spec::two_term());
    std::string known;
    for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
    fail("unknown catalog entry '" + name + "' (known: " + known + ")");
}

Json to_json(const GFunction& g)
{
    Json j{{"type", g.name()}};
    if (g.kind == GFunction::Kind::Power) j["alpha"] = g.alpha;
    return j;
}

Json to_json(const Example4Spec& spec)
{
    return Json{{"g", to_json(spec.g)}, {"a", spec.a}};
}

Json to_json(const Example4Ratio& r)
{
    return Json{{"n", r.n}, {"direct", r.direct}, {"closed_form", r.closed_form}, {"agree", r.agree}};
}

Json to_json(const InequalityReport& r)
{
    return Json{{"grid_points", r.grid_points},
                {"pairs", r.pairs},
                {"max_subadditive_excess", r.max_subadditive_excess},
                {"subadditive_witness", Json::array({r.subadditive_witness.first, r.subadditive_witness.second})},
                {"max_reverse_excess", r.max_reverse_excess},
                {"reverse_witness", Json::array({r.reverse_witness.first, r.reverse_witness.second})},
                {"subadditive_violations", r.subadditive_violations},
                {"reverse_violations", r.reverse_violations},
                {"ok", r.ok()}};
}

Example4Spec example4_spec_from_json(const Json& j)
{
    check_fields(j, {"g", "a"}, "example4 spec");
    Example4Spec spec;
    if (const auto it = j.find("g"); it != j.end()) {
        check_fields(*it, {"type", "alpha"}, "g");
        const std::string type = as_string(require(*it, "type", "g"), "g.type");
        if (type == "sqrt") {
            if (it->contains("alpha")) fail("g of type 'sqrt' takes no alpha");
            spec.g = GFunction::sqrt();
        } else if (type == "power") {
            spec.g = GFunction::power(as_number(require(*it, "alpha", "g"), "g.alpha"));
        } else {
            fail("unknown g type '" + type + "' (expected 'sqrt' or 'power')");
        }
    }
    spec.a = as_numbers(require(j, "a", "example4 spec"), "a");
    spec.validate();
    return spec;
}

}  // namespace sumlike
