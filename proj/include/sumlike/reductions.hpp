/**
 * @file reductions.hpp
 * @brief The explicit maps behind the reducibility arguments, each paired
 *        with a finite check of the inequality that makes it a reduction.
 *
 *  - clamp_reduce:   R^N -> [0,1]^(N x Z), z(m) spread over unit windows k.
 *  - select_blocks / block_reduce / verify_block_inequality:
 *                    [0,1]^N -> prod X_n through blocks with weights < 2^-l
 *                    and block sums in [1, 1 + 2^-l).
 *  - normalize_metric: pseudo-metric d_n -> metric d'_n with the same l_p class.
 *  - indicator_modulus / place_in_product: 0/1 moduli of partitions and
 *                    the embedding of one factor into the product.
 *  - koch_point / koch_interleave / estimate_holder: the rho-Hölder planar
 *                    curve and the interleaving map l_p -> l_q with rho = p/q.
 */

#pragma once

#include "sumlike/core.hpp"
#include "sumlike/json_io.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sumlike {

// ---------------------------------------------------------------------------
// pairing functions

/// Cantor pairing N x N -> N.
std::uint64_t cantor_pair(std::uint64_t i, std::uint64_t j);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t n);
/// Z -> N enumerating 0, -1, 1, -2, 2, ...
std::uint64_t int_to_nat(std::int64_t k);
std::int64_t nat_to_int(std::uint64_t n);
/// N x Z -> N.
std::uint64_t pair_nat_int(std::uint64_t m, std::int64_t k);

// ---------------------------------------------------------------------------
// clamp map

/// Inclusive integer window [lo, hi].
struct IntWindow {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(hi - lo + 1); }
};

/// 0 if z < k, z - k if k <= z < k + 1, 1 if z >= k + 1.
double clamp_entry(double z, std::int64_t k);

/// rows[m][k - K.lo] = clamp_entry(z[m], k).
std::vector<std::vector<double>> clamp_reduce(std::span<const double> z, IntWindow K);

// ---------------------------------------------------------------------------
// blocks

/// Candidate weights psi_n(x_l(n), y_l(n)) of one level over coordinates
/// n = 0, 1, 2, ...; `backward` holds psi_n(y_l(n), x_l(n)) when the
/// modulus is not symmetric (empty = same as forward).
struct WeightStream {
    std::vector<double> forward;
    std::vector<double> backward;
};

struct Block {
    int level = 0;
    std::size_t start = 0;  ///< i_l
    std::size_t end = 0;    ///< j_l (inclusive)
    std::vector<double> weights;
    std::vector<double> reverse_weights;
    double sum = 0.0;
};

struct BlockPlan {
    std::vector<Block> blocks;  ///< one per level, in order

    [[nodiscard]] std::size_t levels() const noexcept { return blocks.size(); }
    /// Coordinates touched (end of the last block + 1).
    [[nodiscard]] std::size_t span() const noexcept;
    /// Re-checks i_l < j_l < i_{l+1}, weights < 2^-l and 1 <= sum < 1 + 2^-l.
    [[nodiscard]] bool valid() const;
};

/// Greedy: level l starts after the previous block, restarts after any
/// weight >= 2^-l, and closes at the first partial sum >= 1. Throws
/// Error(Exhausted) naming the level when its stream runs out.
BlockPlan select_blocks(std::span<const WeightStream> streams, int levels);

enum class Side : std::uint8_t { Filler, X, Y };

struct Slot {
    Side side = Side::Filler;
    int level = -1;
};

/// Within block l the coordinate takes x_l while the running block sum is
/// <= z(l), then y_l; outside blocks the filler.
std::vector<Slot> block_reduce(std::span<const double> z, const BlockPlan& plan);

/// Realize slots as point labels: x[l][n], y[l][n], filler[n].
std::vector<std::string> realize_slots(std::span<const Slot> slots,
                                       const std::vector<std::vector<std::string>>& x,
                                       const std::vector<std::vector<std::string>>& y,
                                       std::span<const std::string> filler);

/// Weight streams psi_n(x_l(n), y_l(n)) read off a family.
std::vector<WeightStream> streams_from_family(const FamilyDescription& fam,
                                              const std::vector<std::vector<std::string>>& x,
                                              const std::vector<std::vector<std::string>>& y);

struct LevelMargin {
    int level = 0;
    double distance = 0.0;      ///< |z(l) - w(l)|
    double disagreement = 0.0;  ///< sum over block coords where the images differ
    double slack = 0.0;         ///< 2^-l
    double lower_margin = 0.0;  ///< disagreement - (distance - 2^-l), must be > 0
    double upper_margin = 0.0;  ///< (distance + 2^-l) - disagreement, must be > 0
    bool ok = false;
};

std::vector<LevelMargin> verify_block_inequality(std::span<const double> z, std::span<const double> w,
                                                 const BlockPlan& plan);

// ---------------------------------------------------------------------------
// metric normalization and indicators

/// d'(u,u) = 0; 2^-n when u != v and d(u,v) <= 2^-n; d(u,v) otherwise.
SquareMatrix normalize_metric(const SquareMatrix& d, int n);

/// INDICATOR spec for a partition; throws on overlapping blocks.
ModulusSpec indicator_modulus(const std::vector<std::vector<std::string>>& blocks);

/// theta_i(u): position p = <k, j> gets u when k == i and fillers[k] otherwise,
/// for p < positions.
std::vector<std::string> place_in_product(std::uint64_t i, const std::string& u,
                                          std::span<const std::string> fillers, std::size_t positions);

/// Coordinate p = <k, j> carries the indicator of partitions[k].
FamilyDescription product_family(const std::vector<std::vector<std::vector<std::string>>>& partitions,
                                 std::size_t positions);

// ---------------------------------------------------------------------------
// Koch curve

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

struct KochParams {
    double r = 0.25;
    double rho = 1.0;
    int depth = 12;
    double interval_offset = 1.0;

    static KochParams from_rho(double rho, int depth = 12);
    static KochParams from_r(double r, int depth = 12);
    /// r in [1/4, 1/2], r = 4^-rho within eps_rel, depth >= 1.
    void validate(const ToleranceConfig& tol = {}) const;
    /// Apex height of the generator: sqrt(r^2 - (1/2 - r)^2).
    [[nodiscard]] double apex_height() const;
};

/// On [0, 1]: the self-similar curve through (0,0), (r,0), (1/2,h), (1-r,0),
/// (1,0), evaluated through `depth` base-4 digits of s with linear
/// interpolation below. On [i, i+1]: shifted by (interval_offset * i, 0).
Point2 koch_point(const KochParams& params, double s);

/// out(2k), out(2k+1) = koch_point(x(k)).
std::vector<double> koch_interleave(std::span<const double> x, const KochParams& params);

struct HolderEstimate {
    double m_lower = 0.0;  ///< min ||K(s)-K(t)||_2 / |s-t|^rho
    double M_upper = 0.0;  ///< max of the same ratio
    std::pair<double, double> argmin{0, 0}, argmax{0, 0};
    std::size_t pairs = 0;
    double q = 1.0;
    std::size_t norm_chain_violations = 0;
    [[nodiscard]] bool norm_chain_ok() const noexcept { return norm_chain_violations == 0; }
};

/// Pairs must be distinct, lie in one window [i-1, i+1], and be farther
/// apart than 4^-depth.
HolderEstimate estimate_holder(const KochParams& params, std::span<const std::pair<double, double>> pairs,
                               double q = 1.0, const ToleranceConfig& tol = {});

Json to_json(const BlockPlan& plan);
Json to_json(const LevelMargin& m);
Json to_json(const KochParams& params);
Json to_json(const HolderEstimate& h);

}  // namespace sumlike
