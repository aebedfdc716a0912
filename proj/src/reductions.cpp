#include "sumlike/reductions.hpp"

#include "sumlike/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace sumlike {

// ---------------------------------------------------------------------------
// pairing

std::uint64_t cantor_pair(std::uint64_t i, std::uint64_t j)
{
    const std::uint64_t s = i + j;
    return s * (s + 1) / 2 + j;
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n)
{
    auto s = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
    while (s * (s + 1) / 2 > n) --s;
    while ((s + 1) * (s + 2) / 2 <= n) ++s;
    const std::uint64_t j = n - s * (s + 1) / 2;
    return {s - j, j};
}

std::uint64_t int_to_nat(std::int64_t k)
{
    return k >= 0 ? 2 * static_cast<std::uint64_t>(k) : 2 * static_cast<std::uint64_t>(-k) - 1;
}

std::int64_t nat_to_int(std::uint64_t n)
{
    return n % 2 == 0 ? static_cast<std::int64_t>(n / 2) : -static_cast<std::int64_t>((n + 1) / 2);
}

std::uint64_t pair_nat_int(std::uint64_t m, std::int64_t k)
{
    return cantor_pair(m, int_to_nat(k));
}

// ---------------------------------------------------------------------------
// clamp

double clamp_entry(double z, std::int64_t k)
{
    const auto kd = static_cast<double>(k);
    if (z < kd) return 0.0;
    if (z < kd + 1.0) return z - kd;
    return 1.0;
}

std::vector<std::vector<double>> clamp_reduce(std::span<const double> z, IntWindow K)
{
    if (K.hi < K.lo) fail("clamp window is empty");
    std::vector<std::vector<double>> rows;
    rows.reserve(z.size());
    for (double zm : z) {
        if (!std::isfinite(zm)) fail("clamp input must be finite");
        std::vector<double> row;
        row.reserve(K.size());
        for (std::int64_t k = K.lo; k <= K.hi; ++k) row.push_back(clamp_entry(zm, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------
// blocks

std::size_t BlockPlan::span() const noexcept
{
    return blocks.empty() ? 0 : blocks.back().end + 1;
}

bool BlockPlan::valid() const
{
    for (std::size_t l = 0; l < blocks.size(); ++l) {
        const Block& b = blocks[l];
        const double cap = std::ldexp(1.0, -b.level);
        if (b.level != static_cast<int>(l) || !(b.start < b.end)) return false;
        if (l + 1 < blocks.size() && !(b.end < blocks[l + 1].start)) return false;
        if (b.weights.size() != b.end - b.start + 1) return false;
        double sum = 0.0;
        for (double w : b.weights) {
            if (!(w >= 0.0 && w < cap)) return false;
            sum += w;
        }
        if (sum != b.sum || !(1.0 <= sum && sum < 1.0 + cap)) return false;
    }
    return true;
}

BlockPlan select_blocks(std::span<const WeightStream> streams, int levels)
{
    if (levels < 0 || static_cast<std::size_t>(levels) > streams.size()) {
        fail("select_blocks: " + std::to_string(levels) + " levels requested but " +
             std::to_string(streams.size()) + " streams supplied");
    }
    BlockPlan plan;
    std::size_t cursor = 0;
    for (int l = 0; l < levels; ++l) {
        const WeightStream& stream = streams[static_cast<std::size_t>(l)];
        if (!stream.backward.empty() && stream.backward.size() != stream.forward.size()) {
            fail("select_blocks: backward weights of level " + std::to_string(l) + " have the wrong length");
        }
        const double cap = std::ldexp(1.0, -l);
        std::size_t start = cursor;
        double sum = 0.0;
        bool closed = false;
        for (std::size_t n = cursor; n < stream.forward.size(); ++n) {
            const double w = stream.forward[n];
            if (!(w >= 0.0) || !std::isfinite(w)) {
                fail("select_blocks: weight at level " + std::to_string(l) + ", coordinate " +
                     std::to_string(n) + " is negative or non-finite");
            }
            if (w >= cap) {
                start = n + 1;
                sum = 0.0;
                continue;
            }
            sum += w;
            if (sum >= 1.0) {
                Block b;
                b.level = l;
                b.start = start;
                b.end = n;
                b.weights.assign(stream.forward.begin() + static_cast<std::ptrdiff_t>(start),
                                 stream.forward.begin() + static_cast<std::ptrdiff_t>(n) + 1);
                const auto& back = stream.backward.empty() ? stream.forward : stream.backward;
                b.reverse_weights.assign(back.begin() + static_cast<std::ptrdiff_t>(start),
                                         back.begin() + static_cast<std::ptrdiff_t>(n) + 1);
                b.sum = sum;
                if (!(sum < 1.0 + cap)) {
                    fail("select_blocks: rounding pushed level " + std::to_string(l) + " sum to " +
                         format_real(sum));
                }
                plan.blocks.push_back(std::move(b));
                cursor = n + 1;
                closed = true;
                break;
            }
        }
        if (!closed) {
            throw Error(ErrorKind::Exhausted,
                        "select_blocks: stream exhausted at level " + std::to_string(l) +
                            " before an admissible block (weights < 2^-" + std::to_string(l) +
                            ") summed to 1");
        }
    }
    return plan;
}

std::vector<Slot> block_reduce(std::span<const double> z, const BlockPlan& plan)
{
    if (z.size() != plan.levels()) {
        fail("block_reduce: z has " + std::to_string(z.size()) + " entries but the plan has " +
             std::to_string(plan.levels()) + " levels");
    }
    std::vector<Slot> out(plan.span());
    for (const Block& b : plan.blocks) {
        const double zl = z[static_cast<std::size_t>(b.level)];
        if (!(zl >= 0.0 && zl <= 1.0)) fail("block_reduce: z entries must lie in [0, 1]");
        double running = 0.0;
        for (std::size_t n = b.start; n <= b.end; ++n) {
            running += b.weights[n - b.start];
            out[n] = Slot{running <= zl ? Side::X : Side::Y, b.level};
        }
    }
    return out;
}

std::vector<std::string> realize_slots(std::span<const Slot> slots,
                                       const std::vector<std::vector<std::string>>& x,
                                       const std::vector<std::vector<std::string>>& y,
                                       std::span<const std::string> filler)
{
    if (filler.size() < slots.size()) fail("realize_slots: not enough filler points");
    std::vector<std::string> out(filler.begin(), filler.end());
    for (std::size_t n = 0; n < slots.size(); ++n) {
        const Slot& s = slots[n];
        if (s.side == Side::Filler) continue;
        const auto& src = s.side == Side::X ? x : y;
        const auto l = static_cast<std::size_t>(s.level);
        if (l >= src.size() || n >= src[l].size()) fail("realize_slots: missing point stream");
        out[n] = src[l][n];
    }
    return out;
}

std::vector<WeightStream> streams_from_family(const FamilyDescription& fam,
                                              const std::vector<std::vector<std::string>>& x,
                                              const std::vector<std::vector<std::string>>& y)
{
    if (x.size() != y.size()) fail("streams_from_family: x and y have different level counts");
    std::vector<WeightStream> out(x.size());
    for (std::size_t l = 0; l < x.size(); ++l) {
        const std::size_t len = std::min({x[l].size(), y[l].size(), fam.size()});
        for (std::size_t n = 0; n < len; ++n) {
            out[l].forward.push_back(fam.coords[n].evaluate(x[l][n], y[l][n]));
            out[l].backward.push_back(fam.coords[n].evaluate(y[l][n], x[l][n]));
        }
    }
    return out;
}

std::vector<LevelMargin> verify_block_inequality(std::span<const double> z, std::span<const double> w,
                                                 const BlockPlan& plan)
{
    const auto sz = block_reduce(z, plan);
    const auto sw = block_reduce(w, plan);
    std::vector<LevelMargin> out;
    for (const Block& b : plan.blocks) {
        LevelMargin m;
        m.level = b.level;
        m.distance = std::abs(z[static_cast<std::size_t>(b.level)] - w[static_cast<std::size_t>(b.level)]);
        m.slack = std::ldexp(1.0, -b.level);
        for (std::size_t n = b.start; n <= b.end; ++n) {
            if (sz[n].side == sw[n].side) continue;
            m.disagreement += sz[n].side == Side::X ? b.weights[n - b.start] : b.reverse_weights[n - b.start];
        }
        m.lower_margin = m.disagreement - (m.distance - m.slack);
        m.upper_margin = (m.distance + m.slack) - m.disagreement;
        m.ok = m.lower_margin > 0.0 && m.upper_margin > 0.0;
        out.push_back(m);
    }
    return out;
}

// ---------------------------------------------------------------------------
// normalization and indicators

SquareMatrix normalize_metric(const SquareMatrix& d, int n)
{
    const double floor_value = std::ldexp(1.0, -n);
    SquareMatrix out(d.size());
    for (std::size_t u = 0; u < d.size(); ++u) {
        for (std::size_t v = 0; v < d.size(); ++v) {
            if (d(u, v) < 0.0 || !std::isfinite(d(u, v))) {
                fail("normalize_metric: distances must be finite and non-negative");
            }
            if (u != v) out(u, v) = d(u, v) <= floor_value ? floor_value : d(u, v);
        }
    }
    return out;
}

ModulusSpec indicator_modulus(const std::vector<std::vector<std::string>>& blocks)
{
    return ModulusSpec(IndicatorModulus{blocks});
}

std::vector<std::string> place_in_product(std::uint64_t i, const std::string& u,
                                          std::span<const std::string> fillers, std::size_t positions)
{
    std::vector<std::string> out;
    out.reserve(positions);
    for (std::size_t p = 0; p < positions; ++p) {
        const auto k = cantor_unpair(p).first;
        if (k == i) {
            out.push_back(u);
        } else if (k < fillers.size()) {
            out.push_back(fillers[k]);
        } else {
            fail("place_in_product: no filler for factor " + std::to_string(k));
        }
    }
    return out;
}

FamilyDescription product_family(const std::vector<std::vector<std::vector<std::string>>>& partitions,
                                 std::size_t positions)
{
    FamilyDescription fam;
    fam.name = "indicator product";
    for (std::size_t p = 0; p < positions; ++p) {
        const auto k = cantor_unpair(p).first;
        if (k >= partitions.size()) {
            fail("product_family: position " + std::to_string(p) + " needs partition " + std::to_string(k));
        }
        fam.coords.push_back(indicator_modulus(partitions[k]));
    }
    return fam;
}

// ---------------------------------------------------------------------------
// Koch curve

KochParams KochParams::from_rho(double rho, int depth)
{
    return KochParams{std::pow(4.0, -rho), rho, depth, 1.0};
}

KochParams KochParams::from_r(double r, int depth)
{
    return KochParams{r, -std::log(r) / std::log(4.0), depth, 1.0};
}

void KochParams::validate(const ToleranceConfig& tol) const
{
    if (!(r >= 0.25 - tol.eps_abs && r <= 0.5 + tol.eps_abs)) {
        fail("Koch ratio r = " + format_real(r) + " must lie in [1/4, 1/2]");
    }
    if (std::abs(r - std::pow(4.0, -rho)) > tol.eps_rel * r) {
        fail("Koch parameters inconsistent: r must equal 4^-rho");
    }
    if (depth < 1 || depth > 64) fail("Koch depth must lie in [1, 64]");
    if (!std::isfinite(interval_offset)) fail("Koch interval offset must be finite");
}

double KochParams::apex_height() const
{
    const double half = 0.5 - r;
    return std::sqrt(std::max(0.0, r * r - half * half));
}

namespace {

Point2 unit_koch(const KochParams& params, double t)
{
    using C = std::complex<double>;
    const double h = params.apex_height();
    const std::array<C, 5> vertex{C(0, 0), C(params.r, 0), C(0.5, h), C(1 - params.r, 0), C(1, 0)};
    if (t >= 1.0) return {1.0, 0.0};
    if (t <= 0.0) return {0.0, 0.0};

    std::vector<int> digits(static_cast<std::size_t>(params.depth));
    double x = t;
    for (auto& d : digits) {
        x *= 4.0;
        d = std::min(3, static_cast<int>(x));
        x -= d;
    }
    C z(x, 0.0);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        const auto i = static_cast<std::size_t>(*it);
        z = vertex[i] + (vertex[i + 1] - vertex[i]) * z;
    }
    return {z.real(), z.imag()};
}

}  // namespace

Point2 koch_point(const KochParams& params, double s)
{
    params.validate();
    if (!std::isfinite(s)) fail("koch_point: s must be finite");
    if (s >= 0.0 && s <= 1.0) return unit_koch(params, s);
    const double i = std::floor(s);
    Point2 p = unit_koch(params, s - i);
    p.x += params.interval_offset * i;
    return p;
}

std::vector<double> koch_interleave(std::span<const double> x, const KochParams& params)
{
    std::vector<double> out;
    out.reserve(2 * x.size());
    for (double xk : x) {
        const Point2 p = koch_point(params, xk);
        out.push_back(p.x);
        out.push_back(p.y);
    }
    return out;
}

HolderEstimate estimate_holder(const KochParams& params, std::span<const std::pair<double, double>> pairs,
                               double q, const ToleranceConfig& tol)
{
    params.validate(tol);
    if (pairs.empty()) fail("estimate_holder: no sample pairs");
    if (!(q > 0.0)) fail("estimate_holder: q must be positive");

    double lo = kInfinity, hi = -kInfinity, closest = kInfinity;
    for (const auto& [s, t] : pairs) {
        lo = std::min({lo, s, t});
        hi = std::max({hi, s, t});
        closest = std::min(closest, std::abs(s - t));
    }
    if (hi > std::floor(lo) + 2.0) {
        fail("estimate_holder: pairs must lie in one window [i-1, i+1]");
    }
    const double resolution = std::pow(4.0, -params.depth);
    if (!(closest > resolution)) {
        fail("estimate_holder: resolution guard violated; min |s-t| = " + format_real(closest) +
             " is not above 4^-depth = " + format_real(resolution));
    }

    struct Row {
        double ratio;
        bool chain_ok;
    };
    std::vector<Row> rows(pairs.size());
    const double two_q = std::pow(2.0, 1.0 / q);
    parallel_for(pairs.size(), [&](std::size_t i) {
        const auto [s, t] = pairs[i];
        const Point2 a = koch_point(params, s);
        const Point2 b = koch_point(params, t);
        const double wx = std::abs(a.x - b.x);
        const double wy = std::abs(a.y - b.y);
        const double n2 = std::hypot(wx, wy);
        const double ninf = std::max(wx, wy);
        const double nq = std::pow(std::pow(wx, q) + std::pow(wy, q), 1.0 / q);
        const bool chain = tol.leq(n2 / std::sqrt(2.0), ninf) && tol.leq(ninf, nq) &&
                           tol.leq(nq, two_q * ninf) && tol.leq(two_q * ninf, two_q * n2);
        rows[i] = {n2 / std::pow(std::abs(s - t), params.rho), chain};
    });

    HolderEstimate h;
    h.q = q;
    h.pairs = pairs.size();
    h.m_lower = kInfinity;
    h.M_upper = -kInfinity;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].ratio < h.m_lower) {
            h.m_lower = rows[i].ratio;
            h.argmin = pairs[i];
        }
        if (rows[i].ratio > h.M_upper) {
            h.M_upper = rows[i].ratio;
            h.argmax = pairs[i];
        }
        if (!rows[i].chain_ok) ++h.norm_chain_violations;
    }
    return h;
}

// ---------------------------------------------------------------------------
// JSON

Json to_json(const BlockPlan& plan)
{
    Json blocks = Json::array();
    for (const Block& b : plan.blocks) {
        blocks.push_back(Json{{"level", b.level},
                              {"start", b.start},
                              {"end", b.end},
                              {"length", b.end - b.start + 1},
                              {"sum", b.sum},
                              {"weights", b.weights}});
    }
    return Json{{"levels", plan.levels()}, {"span", plan.span()}, {"valid", plan.valid()}, {"blocks", blocks}};
}

Json to_json(const LevelMargin& m)
{
    return Json{{"level", m.level},
                {"distance", m.distance},
                {"disagreement", m.disagreement},
                {"slack", m.slack},
                {"lower_margin", m.lower_margin},
                {"upper_margin", m.upper_margin},
                {"ok", m.ok}};
}

Json to_json(const KochParams& params)
{
    return Json{{"r", params.r},
                {"rho", params.rho},
                {"depth", params.depth},
                {"interval_offset", params.interval_offset},
                {"apex_height", params.apex_height()}};
}

Json to_json(const HolderEstimate& h)
{
    return Json{{"m_lower", h.m_lower},
                {"M_upper", h.M_upper},
                {"argmin", Json::array({h.argmin.first, h.argmin.second})},
                {"argmax", Json::array({h.argmax.first, h.argmax.second})},
                {"pairs", h.pairs},
                {"q", h.q},
                {"norm_chain_violations", h.norm_chain_violations},
                {"norm_chain_ok", h.norm_chain_ok()}};
}

}  // namespace sumlike
