#include "sumlike/metrization.hpp"

#include "sumlike/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace sumlike {

bool LevelSets::composition_holds() const
{
    return std::all_of(composition_ok.begin(), composition_ok.end(), [](bool b) { return b; });
}

int LevelSets::depth(std::size_t u, std::size_t v) const
{
    int n = 0;
    while (n < L && U[static_cast<std::size_t>(n + 1)].contains(u, v)) ++n;
    return n;
}

ModulusSample truncate_modulus(const ModulusSample& s)
{
    SquareMatrix capped = s.table();
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            capped(i, j) = std::min(capped(i, j), 1.0);
        }
    }
    return ModulusSample(s.name(), s.points(), std::move(capped));
}

LevelSets build_level_sets(const ModulusSample& s, double C, const ToleranceConfig& tol)
{
    if (!(C >= 1.0) || !std::isfinite(C)) {
        fail("level sets need a finite quasi-constant C >= 1, got " + format_real(C));
    }
    const std::size_t n = s.size();
    for (std::size_t u = 0; u < n; ++u) {
        if (s.psi(u, u) > tol.eps_abs) {
            throw Error(ErrorKind::NotEquivalenceInducing,
                        "psi(" + s.label(u) + ", " + s.label(u) + ") = " + format_real(s.psi(u, u)) +
                            " is not zero");
        }
    }

    LevelSets levels;
    levels.C = C;
    levels.B = 2 * C * C + C;

    double smallest = kInfinity;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (s.psi(u, v) > tol.eps_abs) smallest = std::min(smallest, s.psi(u, v));
        }
    }
    levels.L = 1;
    if (std::isfinite(smallest)) {
        const double steps = std::ceil(std::log(1.0 / smallest) / std::log(levels.B));
        levels.L = std::max(1, static_cast<int>(steps) + 1);
    }

    levels.zero_pairs = PairSet(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (s.psi(u, v) <= tol.eps_abs && s.psi(v, u) <= tol.eps_abs) levels.zero_pairs.set(u, v);
        }
    }

    levels.U.reserve(static_cast<std::size_t>(levels.L) + 1);
    levels.U.emplace_back(n, true);
    for (int level = 1; level <= levels.L; ++level) {
        const double bound = std::pow(levels.B, -level);
        PairSet U(n);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = 0; v < n; ++v) {
                if (levels.zero_pairs.contains(u, v) || (s.psi(u, v) < bound && s.psi(v, u) < bound)) {
                    U.set(u, v);
                }
            }
        }
        levels.U.push_back(std::move(U));
    }

    std::vector<char> ok(static_cast<std::size_t>(levels.L), 0);
    parallel_for(ok.size(), [&](std::size_t level) {
        const PairSet& next = levels.U[level + 1];
        ok[level] = next.compose(next).compose(next).subset_of(levels.U[level]) ? 1 : 0;
    });
    levels.composition_ok.assign(ok.begin(), ok.end());
    return levels;
}

SquareMatrix frink_pseudometric(const LevelSets& levels)
{
    if (levels.U.size() != static_cast<std::size_t>(levels.L) + 1 || levels.U.empty()) {
        fail("level sets: expected L + 1 relations");
    }
    const std::size_t n = levels.U.front().points();
    if (levels.U.front().count() != n * n) {
        fail("level sets: U_0 must contain every pair");
    }
    for (std::size_t level = 0; level < levels.U.size(); ++level) {
        const PairSet& U = levels.U[level];
        if (!U.symmetric() || !U.has_diagonal()) {
            fail("level sets: U_" + std::to_string(level) + " must be symmetric and contain the diagonal");
        }
        if (level > 0 && !U.subset_of(levels.U[level - 1])) {
            fail("level sets are not nested at level " + std::to_string(level));
        }
    }

    SquareMatrix d(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            const int depth = levels.depth(u, v);
            const bool zero = depth == levels.L && levels.zero_pairs.contains(u, v);
            d(u, v) = zero ? 0.0 : std::ldexp(1.0, -(depth + 1));
        }
    }
    // All-pairs relaxation: d(u,v) = inf over chains of summed gauge.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double via = d(i, k) + d(k, j);
                if (via < d(i, j)) d(i, j) = via;
            }
        }
    }
    return d;
}

bool is_pseudometric(const SquareMatrix& d, const ToleranceConfig& tol)
{
    const std::size_t n = d.size();
    for (std::size_t u = 0; u < n; ++u) {
        if (std::abs(d(u, u)) > tol.eps_abs) return false;
        for (std::size_t v = 0; v < n; ++v) {
            if (d(u, v) < 0.0 || d(u, v) != d(v, u)) return false;
            for (std::size_t r = 0; r < n; ++r) {
                if (d(u, r) > d(u, v) + d(v, r) + tol.eps_abs) return false;
            }
        }
    }
    return true;
}

bool MetrizationCertificate::all_ok() const
{
    return std::all_of(containment_ok.begin(), containment_ok.end(), [](bool b) { return b; }) &&
           zero_equivalence_ok && sandwich_ok && threshold_ok && pseudometric_ok;
}

MetrizationCertificate certify_sandwich(const ModulusSample& s, const SquareMatrix& d,
                                        const LevelSets& levels, const ToleranceConfig& tol)
{
    const std::size_t n = s.size();
    if (d.size() != n || levels.U.empty() || levels.U.front().points() != n) {
        fail("certificate: sample, distance matrix and level sets disagree in size");
    }
    MetrizationCertificate cert;
    cert.C = levels.C;
    cert.B = levels.B;
    cert.p = std::log2(levels.B);
    cert.L = levels.L;
    cert.points = s.points();
    cert.d = d;
    cert.composition_ok = levels.composition_ok;
    cert.advisory = !levels.composition_holds();
    cert.pseudometric_ok = is_pseudometric(d, tol);

    for (int level = 1; level <= levels.L; ++level) {
        const double radius = std::ldexp(1.0, -level);
        const PairSet& inner = levels.U[static_cast<std::size_t>(level)];
        const PairSet& outer = levels.U[static_cast<std::size_t>(level - 1)];
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u) {
            for (std::size_t v = 0; v < n; ++v) {
                const bool in_ball = d(u, v) < radius;
                if ((inner.contains(u, v) && !in_ball) || (in_ball && !outer.contains(u, v))) {
                    ok = false;
                    break;
                }
            }
        }
        cert.containment_ok.push_back(ok);
        if (!ok) cert.containment_failures.push_back(static_cast<std::size_t>(level));
    }

    const double inner_bound = 1.0 / (levels.B * levels.B);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0; v < n; ++v) {
            if (u == v) continue;
            const double psi = s.psi(u, v);
            const double dist = d(u, v);

            const bool psi_zero = psi <= tol.eps_abs && s.psi(v, u) <= tol.eps_abs;
            if ((dist <= tol.eps_abs) != psi_zero) {
                cert.zero_equivalence_ok = false;
                cert.zero_violations.push_back({s.label(u), s.label(v), psi, dist});
            }

            if (psi > tol.eps_abs && psi < inner_bound) {
                SandwichEntry e{s.label(u), s.label(v), psi, dist, 0.0, 0.0, false};
                const double dp = std::pow(dist, cert.p);
                e.lower = inner_bound * dp;
                e.upper = levels.B * levels.B * dp;
                e.ok = e.lower <= psi * (1 + tol.eps_rel) && psi <= e.upper * (1 + tol.eps_rel);
                cert.sandwich_ok = cert.sandwich_ok && e.ok;
                cert.sandwich.push_back(std::move(e));
            } else if (psi >= inner_bound && dist < 0.125) {
                cert.threshold_ok = false;
                cert.threshold_violations.push_back({s.label(u), s.label(v), psi, dist});
            }
        }
    }
    return cert;
}

MetrizationCertificate metrize(const ModulusSample& s, const ToleranceConfig& tol)
{
    tol.validate();
    const ModulusSample capped = truncate_modulus(s);
    const QuasiConstants q = quasi_constants(capped, tol);
    if (!q.diagonal_ok(tol)) {
        throw Error(ErrorKind::NotEquivalenceInducing,
                    "psi(u,u) = " + format_real(q.c_diag_violation) + " at u = " + q.diag_witness.value_or("?") +
                        "; an equivalence-inducing modulus vanishes on the diagonal");
    }
    if (!std::isfinite(q.c_sym)) {
        throw Error(ErrorKind::NotEquivalenceInducing,
                    "c_sym is INFINITE: psi(" + q.sym_witness->u + ", " + q.sym_witness->v +
                        ") = 0 but the reverse value is positive; no C with psi(v,u) <= C psi(u,v) exists");
    }
    if (!std::isfinite(q.c_tri)) {
        throw Error(ErrorKind::NotEquivalenceInducing,
                    "c_tri is INFINITE at (" + q.tri_witness->u + ", " + q.tri_witness->v + ", " +
                        q.tri_witness->r + "); no C with psi(u,r) <= C (psi(u,v) + psi(v,r)) exists");
    }
    const LevelSets levels = build_level_sets(capped, q.combined(), tol);
    const SquareMatrix d = frink_pseudometric(levels);
    return certify_sandwich(capped, d, levels, tol);
}

// ---------------------------------------------------------------------------
// output

Json to_json(const LevelSets& levels)
{
    Json sizes = Json::array();
    for (const auto& U : levels.U) sizes.push_back(U.count());
    Json comp = Json::array();
    for (bool b : levels.composition_ok) comp.push_back(b);
    return Json{{"C", levels.C}, {"B", levels.B}, {"L", levels.L}, {"level_sizes", sizes}, {"composition_ok", comp}};
}

namespace {

Json issues_to_json(const std::vector<PairIssue>& issues)
{
    Json out = Json::array();
    for (const auto& i : issues) out.push_back(Json{{"u", i.u}, {"v", i.v}, {"psi", i.psi}, {"d", i.d}});
    return out;
}

}  // namespace

Json to_json(const MetrizationCertificate& cert)
{
    Json sandwich = Json::array();
    for (const auto& e : cert.sandwich) {
        sandwich.push_back(Json{{"u", e.u},
                                {"v", e.v},
                                {"psi", e.psi},
                                {"d", e.d},
                                {"lower", e.lower},
                                {"upper", e.upper},
                                {"ok", e.ok}});
    }
    Json dist = Json::array();
    for (const auto& row : cert.d.rows()) dist.push_back(row);
    Json containment = Json::array();
    for (bool b : cert.containment_ok) containment.push_back(b);
    Json composition = Json::array();
    for (bool b : cert.composition_ok) composition.push_back(b);
    return Json{{"C", cert.C},
                {"B", cert.B},
                {"p", cert.p},
                {"L", cert.L},
                {"points", cert.points},
                {"d", dist},
                {"composition_ok", composition},
                {"advisory", cert.advisory},
                {"containment_ok", containment},
                {"zero_equivalence_ok", cert.zero_equivalence_ok},
                {"zero_violations", issues_to_json(cert.zero_violations)},
                {"threshold_ok", cert.threshold_ok},
                {"threshold_violations", issues_to_json(cert.threshold_violations)},
                {"pseudometric_ok", cert.pseudometric_ok},
                {"sandwich_ok", cert.sandwich_ok},
                {"sandwich", sandwich},
                {"all_ok", cert.all_ok()}};
}

void write_distance_csv(std::ostream& os, const std::vector<std::string>& labels, const SquareMatrix& d)
{
    auto quoted = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    };
    for (const auto& l : labels) os << ',' << quoted(l);
    os << '\n';
    char buf[40];
    for (std::size_t i = 0; i < labels.size(); ++i) {
        os << quoted(labels[i]);
        for (std::size_t j = 0; j < labels.size(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", d(i, j));
            os << ',' << buf;
        }
        os << '\n';
    }
}

}  // namespace sumlike
