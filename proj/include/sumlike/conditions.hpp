/**
 * @file conditions.hpp
 * @brief Finite-scale decisions of the structural conditions on psi.
 *
 * - quasi_constants: smallest C with psi(v,u) <= C psi(u,v) and
 *   psi(u,r) <= C (psi(u,v) + psi(v,r)) over a sample.
 * - compare_moduli: smallest A >= 1 with phi <= A psi.
 * - search_l1_witness: greedy tail with every term below c and a large sum.
 * - build_threshold_relation: F_n = {(u,v) : psi_n(u,v) < c} and its
 *   equivalence-relation status.
 * - classify_trichotomy: L1_LIKE / E1_LIKE / E0_LIKE / TRIVIAL / UNDECIDED.
 * - mazur_orlicz_check: doubling and domination constants of f.
 *
 * Ratios with a zero denominator are vacuous when the numerator is at most
 * eps_abs and INFINITE (kInfinity) otherwise.
 */

#pragma once

#include "sumlike/core.hpp"
#include "sumlike/json_io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sumlike {

struct PairWitness {
    std::string u, v;
    double ratio = 0.0;
};

struct TripleWitness {
    std::string u, v, r;
    double ratio = 0.0;
};

struct QuasiConstants {
    double c_diag_violation = 0.0;            ///< max psi(u,u)
    std::optional<std::string> diag_witness;  ///< point attaining it, when > eps_abs
    double c_sym = 1.0;                       ///< >= 1, or kInfinity
    std::optional<PairWitness> sym_witness;   ///< (u, v) maximizing psi(v,u)/psi(u,v)
    double c_tri = 1.0;                       ///< >= 1, or kInfinity
    std::optional<TripleWitness> tri_witness;

    [[nodiscard]] bool finite() const noexcept;
    [[nodiscard]] bool diagonal_ok(const ToleranceConfig& tol) const noexcept
    {
        return c_diag_violation <= tol.eps_abs;
    }
    /// max(c_sym, c_tri): one constant satisfying both inequalities.
    [[nodiscard]] double combined() const noexcept;
};

QuasiConstants quasi_constants(const ModulusSample& s, const ToleranceConfig& tol = {});

/// Minimal A >= 1 with phi(u,v) <= A psi(u,v) over all pairs, or nullopt
/// when no finite A exists. Point sets must agree (order may differ).
std::optional<double> compare_moduli(const ModulusSample& psi, const ModulusSample& phi,
                                     const ToleranceConfig& tol = {});
/// max of both directions, or nullopt if either is unbounded.
std::optional<double> compare_moduli_two_sided(const ModulusSample& psi, const ModulusSample& phi,
                                               const ToleranceConfig& tol = {});

// ---------------------------------------------------------------------------
// (l1) witnesses

struct WitnessTerm {
    std::size_t coord = 0;
    std::string u, v;
    double value = 0.0;
};

struct L1Witness {
    double c = 0.0;
    double target = 0.0;
    double sum = 0.0;
    std::size_t coordinates_scanned = 0;
    std::vector<WitnessTerm> terms;
};

/// Pair of coordinate points with the largest psi value strictly below c.
/// Real-valued coordinates use the supremum over their domain (approached
/// from below when it equals c). nullopt when no pair is below c.
std::optional<WitnessTerm> max_admissible_term(const ModulusSpec& spec, double c);

/// Greedy per-coordinate maximum below c, accumulated until the sum reaches
/// target. `budget` caps the coordinates scanned (0 = all).
std::optional<L1Witness> search_l1_witness(const FamilyDescription& fam, double c, double target,
                                           std::size_t budget = 0);

// ---------------------------------------------------------------------------
// threshold relations

/// Dense boolean relation on n points.
class PairSet {
public:
    PairSet() = default;
    explicit PairSet(std::size_t n, bool fill = false) : n_(n), bits_(n * n, fill ? 1 : 0) {}

    [[nodiscard]] std::size_t points() const noexcept { return n_; }
    [[nodiscard]] bool contains(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
    void set(std::size_t i, std::size_t j, bool v = true) { bits_[i * n_ + j] = v ? 1 : 0; }
    [[nodiscard]] std::size_t count() const;
    [[nodiscard]] bool subset_of(const PairSet& other) const;
    [[nodiscard]] bool symmetric() const;
    [[nodiscard]] bool has_diagonal() const;
    /// Relational composition: (i,k) iff some j has (i,j) in *this and (j,k) in rhs.
    [[nodiscard]] PairSet compose(const PairSet& rhs) const;

    friend bool operator==(const PairSet&, const PairSet&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint8_t> bits_;
};

struct RelationViolation {
    std::string kind;  ///< "reflexive", "symmetric" or "transitive"
    std::string u, v, r;
};

struct ThresholdRelation {
    std::size_t coord = 0;
    double c = 0.0;
    std::vector<std::string> points;
    PairSet pairs;
    bool reflexive = false;
    bool symmetric = false;
    bool transitive = false;
    std::size_t violation_count = 0;
    std::vector<RelationViolation> violations;  ///< first kMaxListed, lexicographic
    std::vector<std::vector<std::string>> classes;  ///< filled when valid
    std::size_t class_count = 0;                  ///< 0 when not valid

    static constexpr std::size_t kMaxListed = 32;

    [[nodiscard]] bool valid() const noexcept { return reflexive && symmetric && transitive; }
};

ThresholdRelation build_threshold_relation(const ModulusSample& s, std::size_t coord, double c);
ThresholdRelation build_threshold_relation(const ModulusSpec& spec, std::size_t coord, double c,
                                           std::size_t grid_points = 11);

// ---------------------------------------------------------------------------
// trichotomy

enum class Branch { L1Like, E1Like, E0Like, Trivial, Undecided };

std::string to_string(Branch b);

struct TrichotomyOptions {
    std::vector<double> c_grid = default_c_grid();
    double target = 1.0;
    std::size_t budget = 0;              ///< coordinates scanned per witness search (0 = all)
    std::size_t class_growth_bound = 16;  ///< finite stand-in for "perfectly many classes"
    std::size_t grid_points = 11;         ///< sampling of real-valued coordinates for F_n

    /// {1, 2^-1, ..., 2^-10}.
    static std::vector<double> default_c_grid();
};

struct TrichotomyReport {
    Branch branch = Branch::Undecided;
    std::optional<L1Witness> l1_witness;
    std::vector<double> witness_found_for;  ///< c values with a witness
    std::optional<double> threshold;        ///< c used for F_n
    std::size_t prefix = 0;                 ///< F_n with n < prefix are not judged
    std::vector<ThresholdRelation> fn_reports;
    std::vector<std::string> narrative;
};

TrichotomyReport classify_trichotomy(const FamilyDescription& fam, const TrichotomyOptions& opts = {},
                                     const ToleranceConfig& tol = {});

// ---------------------------------------------------------------------------
// Mazur-Orlicz

struct ConditionConstant {
    std::string name;
    double value = 0.0;  ///< kInfinity when unbounded by a zero denominator
    bool bounded = true;
    std::optional<double> s, t;  ///< extremal arguments
};

struct MazurOrliczParams {
    double epsilon = kInfinity;  ///< (a) uses s, t < epsilon
    double delta = kInfinity;    ///< (b) uses t < delta
    std::vector<double> rho_list{1.0, 2.0};
    std::vector<double> doubling_grid;  ///< (a') grid; empty = main grid
    double unbounded_threshold = 1e3;   ///< constants above this count as unbounded
};

struct MazurOrliczVerdict {
    ConditionConstant a;        ///< f(s+t) <= C (f(s) + f(t))
    std::vector<ConditionConstant> b;  ///< f(s) <= D f(t) for s < rho t, one per rho
    ConditionConstant a_prime;  ///< f(2s) <= C' f(s)
    ConditionConstant b_prime;  ///< f(s) <= D' f(t) for s < t
    bool linear_likely = false;
};

MazurOrliczVerdict mazur_orlicz_check(const ScalarModulus& f, std::span<const double> grid,
                                      const MazurOrliczParams& params = {},
                                      const ToleranceConfig& tol = {});

// ---------------------------------------------------------------------------
// JSON

Json to_json(const QuasiConstants& q);
Json to_json(const L1Witness& w);
Json to_json(const ThresholdRelation& f, bool include_pairs = false);
Json to_json(const TrichotomyReport& r);
Json to_json(const ConditionConstant& c);
Json to_json(const MazurOrliczVerdict& v);

}  // namespace sumlike
