#include "sumlike/conditions.hpp"

#include "sumlike/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sumlike {

namespace {

/// Ratio under the zero-denominator convention; nullopt = vacuous.
std::optional<double> guarded_ratio(double num, double den, const ToleranceConfig& tol)
{
    if (den <= tol.eps_abs) {
        if (num <= tol.eps_abs) return std::nullopt;
        return kInfinity;
    }
    return num / den;
}

struct TripleBest {
    double ratio = -1.0;
    std::size_t v = 0, r = 0;
};

}  // namespace

// ---------------------------------------------------------------------------
// quasi constants

bool QuasiConstants::finite() const noexcept
{
    return std::isfinite(c_sym) && std::isfinite(c_tri);
}

double QuasiConstants::combined() const noexcept
{
    return std::max(c_sym, c_tri);
}

QuasiConstants quasi_constants(const ModulusSample& s, const ToleranceConfig& tol)
{
    QuasiConstants q;
    const std::size_t n = s.size();

    for (std::size_t u = 0; u < n; ++u) {
        if (s.psi(u, u) > q.c_diag_violation) {
            q.c_diag_violation = s.psi(u, u);
            q.diag_witness = s.label(u);
        }
    }
    if (q.c_diag_violation <= tol.eps_abs) q.diag_witness.reset();

    double best_sym = -1.0;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            const auto ratio = guarded_ratio(s.psi(v, u), s.psi(u, v), tol);
            if (ratio && *ratio > best_sym) {
                best_sym = *ratio;
                q.sym_witness = PairWitness{s.label(u), s.label(v), *ratio};
            }
        }
    }
    q.c_sym = std::max(best_sym, 1.0);

    // Triple scan, one slot per first index; ties resolve to the
    // lexicographically first (u, v, r).
    std::vector<TripleBest> per_u(n);
    parallel_for(n, [&](std::size_t u) {
        TripleBest best;
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t r = 0; r < n; ++r) {
                const auto ratio = guarded_ratio(s.psi(u, r), s.psi(u, v) + s.psi(v, r), tol);
                if (ratio && *ratio > best.ratio) {
                    best = {*ratio, v, r};
                }
            }
        }
        per_u[u] = best;
    });
    double best_tri = -1.0;
    for (std::size_t u = 0; u < n; ++u) {
        if (per_u[u].ratio > best_tri) {
            best_tri = per_u[u].ratio;
            q.tri_witness = TripleWitness{s.label(u), s.label(per_u[u].v), s.label(per_u[u].r), best_tri};
        }
    }
    q.c_tri = std::max(best_tri, 1.0);
    return q;
}

namespace {

std::vector<std::size_t> align_points(const ModulusSample& psi, const ModulusSample& phi)
{
    if (psi.size() != phi.size()) {
        fail("compare_moduli: samples have different point sets");
    }
    std::vector<std::size_t> map(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        const auto j = phi.index_of(psi.label(i));
        if (!j) fail("compare_moduli: point '" + psi.label(i) + "' missing from second sample");
        map[i] = *j;
    }
    return map;
}

}  // namespace

std::optional<double> compare_moduli(const ModulusSample& psi, const ModulusSample& phi,
                                     const ToleranceConfig& tol)
{
    const auto map = align_points(psi, phi);
    double a = 1.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        for (std::size_t j = 0; j < psi.size(); ++j) {
            const auto ratio = guarded_ratio(phi.psi(map[i], map[j]), psi.psi(i, j), tol);
            if (!ratio) continue;
            if (std::isinf(*ratio)) return std::nullopt;
            a = std::max(a, *ratio);
        }
    }
    return a;
}

std::optional<double> compare_moduli_two_sided(const ModulusSample& psi, const ModulusSample& phi,
                                               const ToleranceConfig& tol)
{
    const auto forward = compare_moduli(psi, phi, tol);
    const auto backward = compare_moduli(phi, psi, tol);
    if (!forward || !backward) return std::nullopt;
    return std::max(*forward, *backward);
}

// ---------------------------------------------------------------------------
// (l1) witness search

namespace {

std::optional<WitnessTerm> continuous_term(const ModulusSpec& spec, const ScalarModulus& f,
                                           const Interval& domain, double c)
{
    double t = 0.0;
    double best = 0.0;
    for (double v : f.vertices(domain.width())) {
        const double fv = f(v);
        if (fv < c) {
            if (fv > best) {
                best = fv;
                t = v;
            }
            continue;
        }
        // f(0) = 0 < c <= f(v): bisect toward the crossing from below.
        double lo = 0.0;
        double hi = v;
        for (int it = 0; it < 200 && std::nextafter(lo, hi) < hi; ++it) {
            const double mid = lo + (hi - lo) / 2;
            (f(mid) < c ? lo : hi) = mid;
        }
        if (f(lo) > best) t = lo;
        break;
    }
    // Realize the gap as a pair of labelled points and re-evaluate.
    for (;;) {
        const double other = std::min(domain.lo + t, domain.hi);
        WitnessTerm term{0, format_real(domain.lo), format_real(other), 0.0};
        term.value = spec.evaluate(term.u, term.v);
        if (term.value < c) return term;
        if (t <= 0.0) return std::nullopt;
        t = std::nextafter(t, 0.0);
    }
}

}  // namespace

std::optional<WitnessTerm> max_admissible_term(const ModulusSpec& spec, double c)
{
    switch (spec.kind()) {
    case ModulusKind::Table: {
        const auto& s = std::get<TableModulus>(spec.variant()).sample;
        std::optional<WitnessTerm> best;
        for (std::size_t u = 0; u < s.size(); ++u) {
            for (std::size_t v = 0; v < s.size(); ++v) {
                const double value = s.psi(u, v);
                if (value < c && (!best || value > best->value)) {
                    best = WitnessTerm{0, s.label(u), s.label(v), value};
                }
            }
        }
        return best;
    }
    case ModulusKind::Indicator: {
        const auto& blocks = std::get<IndicatorModulus>(spec.variant()).blocks;
        if (c > 1.0 && blocks.size() >= 2) {
            return WitnessTerm{0, blocks[0][0], blocks[1][0], 1.0};
        }
        if (c > 0.0) {
            return WitnessTerm{0, blocks[0][0], blocks[0][0], 0.0};
        }
        return std::nullopt;
    }
    case ModulusKind::Power: {
        const auto& pm = std::get<PowerModulus>(spec.variant());
        return continuous_term(spec, ScalarModulus(PowerLaw{pm.p, kInfinity}), pm.domain, c);
    }
    case ModulusKind::F: {
        const auto& fm = std::get<FModulus>(spec.variant());
        return continuous_term(spec, fm.f, fm.domain, c);
    }
    }
    return std::nullopt;
}

std::optional<L1Witness> search_l1_witness(const FamilyDescription& fam, double c, double target,
                                           std::size_t budget)
{
    if (!(c > 0.0) || !(target > 0.0)) {
        fail("witness search needs c > 0 and target > 0");
    }
    const std::size_t limit = budget == 0 ? fam.size() : std::min(budget, fam.size());
    L1Witness w;
    w.c = c;
    w.target = target;
    for (std::size_t n = 0; n < limit; ++n) {
        auto term = max_admissible_term(fam.coords[n], c);
        if (!term || term->value <= 0.0) continue;
        term->coord = n;
        w.sum += term->value;
        w.terms.push_back(std::move(*term));
        if (w.sum >= target) {
            w.coordinates_scanned = n + 1;
            return w;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// PairSet

std::size_t PairSet::count() const
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

bool PairSet::subset_of(const PairSet& other) const
{
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_[i]) return false;
    }
    return true;
}

bool PairSet::symmetric() const
{
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (contains(i, j) != contains(j, i)) return false;
        }
    }
    return true;
}

bool PairSet::has_diagonal() const
{
    for (std::size_t i = 0; i < n_; ++i) {
        if (!contains(i, i)) return false;
    }
    return true;
}

PairSet PairSet::compose(const PairSet& rhs) const
{
    PairSet out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (!contains(i, j)) continue;
            for (std::size_t k = 0; k < n_; ++k) {
                if (rhs.contains(j, k)) out.set(i, k);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// threshold relations

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

ThresholdRelation build_threshold_relation(const ModulusSample& s, std::size_t coord, double c)
{
    const std::size_t n = s.size();
    if (n == 0) fail("threshold relation on an empty sample");

    ThresholdRelation f;
    f.coord = coord;
    f.c = c;
    f.points = s.points();
    f.pairs = PairSet(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (s.psi(u, v) < c) f.pairs.set(u, v);
        }
    }

    auto record = [&](const char* kind, std::size_t u, std::size_t v, std::size_t r) {
        ++f.violation_count;
        if (f.violations.size() < ThresholdRelation::kMaxListed) {
            f.violations.push_back({kind, s.label(u), s.label(v), s.label(r)});
        }
    };

    f.reflexive = true;
    for (std::size_t u = 0; u < n; ++u) {
        if (!f.pairs.contains(u, u)) {
            f.reflexive = false;
            record("reflexive", u, u, u);
        }
    }
    f.symmetric = true;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (f.pairs.contains(u, v) && !f.pairs.contains(v, u)) {
                f.symmetric = false;
                record("symmetric", u, v, u);
            }
        }
    }

    struct Slot {
        std::size_t count = 0;
        std::vector<std::pair<std::size_t, std::size_t>> first;
    };
    std::vector<Slot> per_u(n);
    parallel_for(n, [&](std::size_t u) {
        Slot& slot = per_u[u];
        for (std::size_t v = 0; v < n; ++v) {
            if (!f.pairs.contains(u, v)) continue;
            for (std::size_t r = 0; r < n; ++r) {
                if (f.pairs.contains(v, r) && !f.pairs.contains(u, r)) {
                    ++slot.count;
                    if (slot.first.size() < ThresholdRelation::kMaxListed) slot.first.emplace_back(v, r);
                }
            }
        }
    });
    f.transitive = true;
    for (std::size_t u = 0; u < n; ++u) {
        if (per_u[u].count == 0) continue;
        f.transitive = false;
        for (const auto& [v, r] : per_u[u].first) record("transitive", u, v, r);
        f.violation_count += per_u[u].count - per_u[u].first.size();
    }

    if (f.valid()) {
        UnionFind uf(n);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) {
                if (f.pairs.contains(u, v)) uf.unite(u, v);
            }
        }
        std::vector<std::ptrdiff_t> slot_of_root(n, -1);
        for (std::size_t u = 0; u < n; ++u) {
            const std::size_t root = uf.find(u);
            if (slot_of_root[root] < 0) {
                slot_of_root[root] = static_cast<std::ptrdiff_t>(f.classes.size());
                f.classes.emplace_back();
            }
            f.classes[static_cast<std::size_t>(slot_of_root[root])].push_back(s.label(u));
        }
        f.class_count = f.classes.size();
    }
    return f;
}

ThresholdRelation build_threshold_relation(const ModulusSpec& spec, std::size_t coord, double c,
                                           std::size_t grid_points)
{
    return build_threshold_relation(spec.sample(grid_points), coord, c);
}

// ---------------------------------------------------------------------------
// trichotomy

std::string to_string(Branch b)
{
    switch (b) {
    case Branch::L1Like: return "L1_LIKE";
    case Branch::E1Like: return "E1_LIKE";
    case Branch::E0Like: return "E0_LIKE";
    case Branch::Trivial: return "TRIVIAL";
    case Branch::Undecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

std::vector<double> TrichotomyOptions::default_c_grid()
{
    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(std::ldexp(1.0, -i));
    return grid;
}

TrichotomyReport classify_trichotomy(const FamilyDescription& fam, const TrichotomyOptions& opts,
                                     const ToleranceConfig& tol)
{
    tol.validate();
    fam.validate();
    if (opts.c_grid.empty()) fail("c_grid must not be empty");
    for (double c : opts.c_grid) {
        if (!(c > 0.0)) fail("c_grid values must be positive");
    }

    TrichotomyReport report;
    const std::size_t N = fam.size();
    if (fam.tail) {
        report.narrative.push_back("tail annotation '" + *fam.tail +
                                   "' noted; all evidence below comes from the " + std::to_string(N) +
                                   "-coordinate truncation");
    }

    std::optional<double> smallest_failure;
    std::optional<double> smallest_success;
    for (double c : opts.c_grid) {
        auto w = search_l1_witness(fam, c, opts.target, opts.budget);
        if (w) {
            report.witness_found_for.push_back(c);
            if (!smallest_success || c < *smallest_success) {
                smallest_success = c;
                report.l1_witness = std::move(w);
            }
        } else if (!smallest_failure || c < *smallest_failure) {
            smallest_failure = c;
        }
    }

    if (!smallest_failure) {
        report.branch = Branch::L1Like;
        report.narrative.push_back(
            "condition (l1) holds on the grid: for every c a tail with terms < c sums to >= " +
            format_real(opts.target) + "; R^N/l1 reduces to E via the block construction");
        return report;
    }
    report.l1_witness.reset();

    const double c = *smallest_failure;
    report.threshold = c;
    report.narrative.push_back("condition (l1) fails at c = " + format_real(c) +
                               "; analysing F_n = {(u,v) : psi_n(u,v) < c}");

    report.prefix = N / 2;
    const std::size_t window = N - report.prefix;
    const std::size_t suffix_start = N - (window + 1) / 2;
    const std::size_t bound = opts.class_growth_bound;

    std::vector<std::size_t> invalid_prefix;
    std::vector<std::size_t> invalid_tail;
    for (std::size_t n = 0; n < N; ++n) {
        report.fn_reports.push_back(build_threshold_relation(fam.coords[n], n, c, opts.grid_points));
        if (!report.fn_reports.back().valid()) {
            (n < report.prefix ? invalid_prefix : invalid_tail).push_back(n);
        }
    }
    report.narrative.push_back("tail window n in [" + std::to_string(report.prefix) + ", " +
                               std::to_string(N) + "), suffix n >= " + std::to_string(suffix_start) +
                               "; 'perfectly many classes' is proxied by class_count > " +
                               std::to_string(bound));
    if (!invalid_prefix.empty()) {
        report.narrative.push_back("F_n fails to be an equivalence relation at " +
                                   std::to_string(invalid_prefix.size()) +
                                   " coordinate(s) before the window; observed N0 proxy = " +
                                   std::to_string(invalid_prefix.back()));
    }
    if (!invalid_tail.empty()) {
        report.branch = Branch::Undecided;
        report.narrative.push_back(
            "F_n is not an equivalence relation at n = " + std::to_string(invalid_tail.front()) + " (and " +
            std::to_string(invalid_tail.size() - 1) +
            " more) inside the window; cofinite validity is not observed at this truncation");
        return report;
    }

    bool all_one = true;
    bool any_big_in_window = false;
    bool suffix_all_big = true;
    bool suffix_has_multi = false;
    for (std::size_t n = report.prefix; n < N; ++n) {
        const std::size_t k = report.fn_reports[n].class_count;
        all_one = all_one && k == 1;
        any_big_in_window = any_big_in_window || k > bound;
        if (n >= suffix_start) {
            suffix_all_big = suffix_all_big && k > bound;
            suffix_has_multi = suffix_has_multi || k >= 2;
        }
    }

    if (all_one) {
        report.branch = Branch::Trivial;
        report.narrative.push_back("Case 2: every F_n in the window has a single class; E is trivial");
    } else if (suffix_all_big) {
        report.branch = Branch::E1Like;
        report.narrative.push_back(
            "Case 1 proxy: class counts exceed the bound on the whole suffix; E1 reduces to E");
    } else if (!any_big_in_window && suffix_has_multi) {
        report.branch = Branch::E0Like;
        report.narrative.push_back(
            "Case 3: class counts stay within [1, bound] and reach >= 2 on the suffix; E ~ E0");
    } else {
        report.branch = Branch::Undecided;
        report.narrative.push_back(any_big_in_window
                                       ? "class counts cross the bound inside the window without "
                                         "staying above it on the suffix; evidence is mixed"
                                       : "multi-class F_n appear only before the suffix; cannot tell "
                                         "Case 2 from Case 3 at this truncation");
    }
    return report;
}

// ---------------------------------------------------------------------------
// Mazur-Orlicz

namespace {

struct RatioScan {
    ConditionConstant c;
    double raw = -1.0;
    const ToleranceConfig* tol;

    void offer(double num, double den, double s, double t)
    {
        const auto ratio = guarded_ratio(num, den, *tol);
        if (ratio && *ratio > raw) {
            raw = *ratio;
            c.s = s;
            c.t = t;
        }
    }
    ConditionConstant finish(double threshold)
    {
        c.value = std::max(raw, 1.0);
        c.bounded = std::isfinite(c.value) && c.value <= threshold;
        return c;
    }
};

}  // namespace

MazurOrliczVerdict mazur_orlicz_check(const ScalarModulus& f, std::span<const double> grid,
                                      const MazurOrliczParams& params, const ToleranceConfig& tol)
{
    if (grid.empty()) fail("Mazur-Orlicz check needs a non-empty grid");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] > 0.0) || (i > 0 && !(grid[i - 1] < grid[i]))) {
            fail("Mazur-Orlicz grid must be strictly positive and strictly increasing");
        }
    }
    auto eval = [&](double t) {
        const double v = f(t);
        if (v < 0.0 || std::isnan(v)) fail("modulus f evaluates negative at t = " + format_real(t));
        return v;
    };

    MazurOrliczVerdict out;
    const double threshold = params.unbounded_threshold;

    RatioScan a{{"a", 0.0, true, {}, {}}, -1.0, &tol};
    for (std::size_t i = 0; i < grid.size() && grid[i] < params.epsilon; ++i) {
        for (std::size_t j = i; j < grid.size() && grid[j] < params.epsilon; ++j) {
            a.offer(eval(grid[i] + grid[j]), eval(grid[i]) + eval(grid[j]), grid[i], grid[j]);
        }
    }
    out.a = a.finish(threshold);

    for (double rho : params.rho_list) {
        RatioScan b{{"b(rho=" + format_real(rho) + ")", 0.0, true, {}, {}}, -1.0, &tol};
        for (double t : grid) {
            if (!(t < params.delta)) break;
            for (double s : grid) {
                if (!(s < rho * t)) break;
                b.offer(eval(s), eval(t), s, t);
            }
        }
        out.b.push_back(b.finish(threshold));
    }

    RatioScan ap{{"a'", 0.0, true, {}, {}}, -1.0, &tol};
    const auto doubling = params.doubling_grid.empty() ? grid : std::span<const double>(params.doubling_grid);
    for (double s : doubling) {
        ap.offer(eval(2 * s), eval(s), s, 2 * s);
    }
    out.a_prime = ap.finish(threshold);

    RatioScan bp{{"b'", 0.0, true, {}, {}}, -1.0, &tol};
    for (std::size_t j = 0; j < grid.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            bp.offer(eval(grid[i]), eval(grid[j]), grid[i], grid[j]);
        }
    }
    out.b_prime = bp.finish(threshold);

    out.linear_likely = out.a_prime.bounded && out.b_prime.bounded;
    return out;
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const QuasiConstants& q)
{
    Json j{{"c_diag_violation", q.c_diag_violation},
           {"c_sym", number_or_infinite(q.c_sym)},
           {"c_tri", number_or_infinite(q.c_tri)}};
    j["diag_witness"] = q.diag_witness ? Json(*q.diag_witness) : Json(nullptr);
    j["sym_witness"] = q.sym_witness ? Json{{"u", q.sym_witness->u},
                                            {"v", q.sym_witness->v},
                                            {"ratio", number_or_infinite(q.sym_witness->ratio)}}
                                     : Json(nullptr);
    j["tri_witness"] = q.tri_witness ? Json{{"u", q.tri_witness->u},
                                            {"v", q.tri_witness->v},
                                            {"r", q.tri_witness->r},
                                            {"ratio", number_or_infinite(q.tri_witness->ratio)}}
                                     : Json(nullptr);
    return j;
}

Json to_json(const L1Witness& w)
{
    Json terms = Json::array();
    for (const auto& t : w.terms) {
        terms.push_back(Json{{"coord", t.coord}, {"u", t.u}, {"v", t.v}, {"value", t.value}});
    }
    return Json{{"c", w.c},
                {"target", w.target},
                {"sum", w.sum},
                {"coordinates_scanned", w.coordinates_scanned},
                {"terms", terms}};
}

Json to_json(const ThresholdRelation& f, bool include_pairs)
{
    Json violations = Json::array();
    for (const auto& v : f.violations) {
        violations.push_back(Json{{"kind", v.kind}, {"u", v.u}, {"v", v.v}, {"r", v.r}});
    }
    Json j{{"coord", f.coord},
           {"c", f.c},
           {"points", f.points.size()},
           {"pair_count", f.pairs.count()},
           {"reflexive", f.reflexive},
           {"symmetric", f.symmetric},
           {"transitive", f.transitive},
           {"violation_count", f.violation_count},
           {"violations", violations},
           {"class_count", f.class_count}};
    if (include_pairs) {
        Json pairs = Json::array();
        for (std::size_t u = 0; u < f.points.size(); ++u) {
            for (std::size_t v = 0; v < f.points.size(); ++v) {
                if (f.pairs.contains(u, v)) pairs.push_back(Json::array({f.points[u], f.points[v]}));
            }
        }
        j["pairs"] = pairs;
        j["classes"] = f.classes;
    }
    return j;
}

Json to_json(const TrichotomyReport& r)
{
    Json fns = Json::array();
    for (const auto& f : r.fn_reports) fns.push_back(to_json(f));
    return Json{{"branch", to_string(r.branch)},
                {"l1_witness", r.l1_witness ? to_json(*r.l1_witness) : Json(nullptr)},
                {"witness_found_for", r.witness_found_for},
                {"threshold", r.threshold ? Json(*r.threshold) : Json(nullptr)},
                {"prefix", r.prefix},
                {"fn_reports", fns},
                {"narrative", r.narrative}};
}

Json to_json(const ConditionConstant& c)
{
    return Json{{"name", c.name},
                {"value", number_or_infinite(c.value)},
                {"status", c.bounded ? "BOUNDED" : "UNBOUNDED"},
                {"s", c.s ? Json(*c.s) : Json(nullptr)},
                {"t", c.t ? Json(*c.t) : Json(nullptr)}};
}

Json to_json(const MazurOrliczVerdict& v)
{
    Json b = Json::array();
    for (const auto& c : v.b) b.push_back(to_json(c));
    return Json{{"a", to_json(v.a)},
                {"b", b},
                {"a_prime", to_json(v.a_prime)},
                {"b_prime", to_json(v.b_prime)},
                {"verdict", v.linear_likely ? "LINEAR_LIKELY" : "NOT_LINEAR"}};
}

}  // namespace sumlike
