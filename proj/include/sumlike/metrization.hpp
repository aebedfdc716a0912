/**
 * @file metrization.hpp
 * @brief Turning an equivalence-inducing modulus psi into d^p with a certificate.
 *
 * Pipeline on a finite sample:
 *
 *   psi  --truncate-->  min(psi, 1)
 *        --quasi_constants-->  C
 *        --build_level_sets-->  B = 2C^2 + C,
 *                               U_0 = all pairs,
 *                               U_n = {(u,v) : psi(u,v) < B^-n and psi(v,u) < B^-n}
 *        --frink_pseudometric-->  d = chain infimum of the gauge 2^-(depth+1)
 *        --certify_sandwich-->  B^-2 d^p <= psi <= B^2 d^p  with p = log2 B
 *
 * When U_{n+1} o U_{n+1} o U_{n+1} is contained in U_n for every n, the chain
 * metric satisfies U_n ⊆ {d < 2^-n} ⊆ U_{n-1}, and the sandwich follows.
 */

#pragma once

#include "sumlike/conditions.hpp"
#include "sumlike/core.hpp"

#include <iosfwd>
#include <vector>

namespace sumlike {

struct LevelSets {
    double C = 1.0;
    double B = 3.0;
    int L = 1;                   ///< deepest level
    std::vector<PairSet> U;      ///< U[0..L]
    PairSet zero_pairs;          ///< psi(u,v) <= eps_abs and psi(v,u) <= eps_abs
    std::vector<bool> composition_ok;  ///< [n] : U_{n+1}^3 ⊆ U_n, n = 0..L-1

    [[nodiscard]] bool composition_holds() const;
    /// max{n <= L : (u,v) in U_n}.
    [[nodiscard]] int depth(std::size_t u, std::size_t v) const;
};

/// Entry-wise min(psi, 1). Idempotent.
ModulusSample truncate_modulus(const ModulusSample& s);

/// Throws Error(InvalidInput) when C < 1 and Error(NotEquivalenceInducing)
/// when some psi(u,u) exceeds eps_abs.
LevelSets build_level_sets(const ModulusSample& s, double C, const ToleranceConfig& tol = {});

/// Chain (shortest-path) closure of the one-step gauge. Throws
/// Error(InvalidInput) if the levels are not nested, symmetric, or
/// diagonal-containing.
SquareMatrix frink_pseudometric(const LevelSets& levels);

struct SandwichEntry {
    std::string u, v;
    double psi = 0.0;
    double d = 0.0;
    double lower = 0.0;  ///< B^-2 d^p
    double upper = 0.0;  ///< B^2 d^p
    bool ok = false;
};

struct PairIssue {
    std::string u, v;
    double psi = 0.0;
    double d = 0.0;
};

struct MetrizationCertificate {
    double C = 1.0;
    double B = 3.0;
    double p = 0.0;
    int L = 1;
    std::vector<std::string> points;
    SquareMatrix d;
    std::vector<bool> composition_ok;
    std::vector<bool> containment_ok;  ///< [n-1] for n = 1..L
    std::vector<std::size_t> containment_failures;
    bool zero_equivalence_ok = true;
    std::vector<PairIssue> zero_violations;
    std::vector<SandwichEntry> sandwich;  ///< pairs with 0 < psi < B^-2
    bool sandwich_ok = true;
    bool threshold_ok = true;  ///< psi >= B^-2  =>  d >= 1/8
    std::vector<PairIssue> threshold_violations;
    bool pseudometric_ok = true;
    bool advisory = false;  ///< composition property failed on the sample

    [[nodiscard]] bool all_ok() const;
};

MetrizationCertificate certify_sandwich(const ModulusSample& s, const SquareMatrix& d,
                                        const LevelSets& levels, const ToleranceConfig& tol = {});

/// Full pipeline on min(s, 1). Throws Error(NotEquivalenceInducing) when a
/// quasi-constant is INFINITE or the diagonal is non-zero.
MetrizationCertificate metrize(const ModulusSample& s, const ToleranceConfig& tol = {});

/// Zero diagonal, symmetry and the triangle inequality (up to eps_abs).
bool is_pseudometric(const SquareMatrix& d, const ToleranceConfig& tol = {});

Json to_json(const LevelSets& levels);
Json to_json(const MetrizationCertificate& cert);

/// CSV with a header row and column of point labels, 17 significant digits.
void write_distance_csv(std::ostream& os, const std::vector<std::string>& labels, const SquareMatrix& d);

}  // namespace sumlike
