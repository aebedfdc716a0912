/**
 * @file examples.hpp
 * @brief The zigzag modulus f built from (g, a_n), and a small catalog of
 *        named one-variable moduli.
 *
 * With k_n = g(a_n)/a_n and b_n = 2 k_{n+1} a_{n+1} / (k_n + k_{n+1}):
 *
 *   f(t) = 0                        t = 0
 *          k_{n+1} (2 a_{n+1} - t)  a_{n+1} <= t < b_n
 *          k_n t                    b_n <= t < a_n
 *          g(a_0)                   a_0 <= t
 *          k_M t                    0 < t < a_M
 *
 * f peaks at g(a_n) on every a_n and dips to k_n b_n on every b_n, so
 * f(a_{n+1}) / f(b_n) = (1 + k_{n+1}/k_n) / 2.
 */

#pragma once

#include "sumlike/core.hpp"
#include "sumlike/json_io.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sumlike {

/// Concave generator with g(0) = 0 and g'(0+) = infinity.
struct GFunction {
    enum class Kind { Sqrt, Power };
    Kind kind = Kind::Sqrt;
    double alpha = 0.5;  ///< exponent for Kind::Power, 0 < alpha < 1

    static GFunction sqrt() { return {}; }
    static GFunction power(double alpha);

    double operator()(double x) const;
    [[nodiscard]] std::string name() const;
    void validate() const;
};

struct Example4Spec {
    GFunction g;
    std::vector<double> a;  ///< a_0 > a_1 > ... > a_M > 0

    /// g = sqrt, a_n = 4^-((n+1)^2) for n = 0..M.
    static Example4Spec preset_default(int M = 8);
    /// g = sqrt, a = (1/4, 1/64).
    static Example4Spec two_term();

    [[nodiscard]] std::size_t M() const noexcept { return a.empty() ? 0 : a.size() - 1; }
    [[nodiscard]] std::vector<double> slopes() const;
    [[nodiscard]] std::vector<double> joins() const;
    /// Throws Error(InvalidInput) unless a is positive and strictly
    /// decreasing, k is strictly increasing and a_{n+1} < b_n < a_n.
    void validate() const;
};

PiecewiseModulus build_example4(const Example4Spec& spec, const ToleranceConfig& tol = {});

struct Example4Ratio {
    std::size_t n = 0;
    double direct = 0.0;       ///< f(a_{n+1}) / f(b_n)
    double closed_form = 0.0;  ///< (1 + k_{n+1}/k_n) / 2
    bool agree = false;        ///< within eps_rel
};

/// Requires n < M and f(b_n) > eps_abs.
Example4Ratio example4_ratio(const PiecewiseModulus& f, std::size_t n, const ToleranceConfig& tol = {});

struct InequalityReport {
    std::size_t grid_points = 0;
    std::size_t pairs = 0;
    double max_subadditive_excess = 0.0;  ///< max f(s+t) - f(s) - f(t)
    std::pair<double, double> subadditive_witness{0, 0};
    double max_reverse_excess = 0.0;  ///< max f(s) - f(s+t) - f(t)
    std::pair<double, double> reverse_witness{0, 0};
    std::size_t subadditive_violations = 0;  ///< pairs beyond tolerance
    std::size_t reverse_violations = 0;

    [[nodiscard]] bool ok() const noexcept { return subadditive_violations == 0 && reverse_violations == 0; }
};

/// Every ordered pair (s, t) of grid points; the grid must lie in (0, 2 a_0].
InequalityReport verify_example4_inequalities(const PiecewiseModulus& f, std::span<const double> grid,
                                              const ToleranceConfig& tol = {});

/// Tolerance whose absolute floor sits below the smallest value of f on
/// the grid: eps_abs = min(tol.eps_abs, tol.eps_rel * f(min grid)). Needed
/// because f spans many orders of magnitude near 0.
ToleranceConfig scaled_tolerance(const PiecewiseModulus& f, std::span<const double> grid,
                                 const ToleranceConfig& tol = {});

/// n points geometrically spaced from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

/// All a_n and b_n of f, ascending.
std::vector<double> example4_breakpoints(const PiecewiseModulus& f);

/// Sorted union of two grids without duplicates.
std::vector<double> merge_grids(std::span<const double> a, std::span<const double> b);

// ---------------------------------------------------------------------------
// catalog

/// linear, capped-linear, sqrt, example4-default, example4-two-term.
std::vector<std::string> catalog_names();
ScalarModulus catalog_modulus(const std::string& name);

Json to_json(const GFunction& g);
Json to_json(const Example4Spec& spec);
Json to_json(const Example4Ratio& r);
Json to_json(const InequalityReport& r);
Example4Spec example4_spec_from_json(const Json& j);

}  // namespace sumlike
