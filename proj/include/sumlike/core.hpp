/**
 * @file core.hpp
 * @brief Finite data model for sum-like relations E((X_n, psi_n)_n).
 *
 * A FamilyDescription is a finite truncation (X_n, psi_n)_{n<N}. Each
 * coordinate carries a ModulusSpec: an explicit table, a power law
 * |u-v|^p on an interval, a one-variable modulus f(|u-v|), or the 0/1
 * indicator of a partition. Points are opaque string labels; real-valued
 * coordinates parse their labels as decimal numbers.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sumlike {

enum class ErrorKind {
    InvalidInput,            ///< malformed or inconsistent input data
    NotEquivalenceInducing,  ///< psi fails the quasi-metric conditions
    Exhausted,               ///< a finite truncation cannot realize a construction
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& what)
{
    throw Error(ErrorKind::InvalidInput, what);
}

/// Comparison semantics for every floating-point check in the library.
struct ToleranceConfig {
    double eps_abs = 1e-12;
    double eps_rel = 1e-9;

    void validate() const;
    /// a <= b up to eps_abs + eps_rel * max(|a|, |b|).
    [[nodiscard]] bool leq(double a, double b) const;
    [[nodiscard]] bool near(double a, double b) const;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Dense row-major n x n matrix.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}
    static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    [[nodiscard]] std::vector<std::vector<double>> rows() const;

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// psi restricted to a finite point set.
class ModulusSample {
public:
    ModulusSample() = default;
    /// Throws Error(InvalidInput) on non-square tables, negative or
    /// non-finite entries, or duplicate labels.
    ModulusSample(std::string name, std::vector<std::string> points, SquareMatrix psi);

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const std::vector<std::string>& points() const noexcept { return points_; }
    [[nodiscard]] const SquareMatrix& table() const noexcept { return psi_; }
    [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }
    [[nodiscard]] double psi(std::size_t u, std::size_t v) const { return psi_(u, v); }
    [[nodiscard]] const std::string& label(std::size_t i) const { return points_[i]; }
    [[nodiscard]] std::optional<std::size_t> index_of(std::string_view label) const;

    /// Same labels and values, reordered by `order` (a permutation of indices).
    [[nodiscard]] ModulusSample permuted(std::span<const std::size_t> order) const;

private:
    std::string name_;
    std::vector<std::string> points_;
    SquareMatrix psi_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

/// The zigzag modulus assembled from breakpoints a_0 > ... > a_M > 0,
/// slopes k_0 < ... < k_M and joins a_{n+1} < b_n < a_n:
///
///   f(0) = 0
///   f(t) = k_{n+1} (2 a_{n+1} - t)   for a_{n+1} <= t < b_n
///   f(t) = k_n t                     for b_n <= t < a_n
///   f(t) = cap                       for t >= a_0
///   f(t) = k_M t                     for 0 < t < a_M
///
/// The descending piece is the line through (a_{n+1}, k_{n+1} a_{n+1})
/// with slope -k_{n+1}.
class PiecewiseModulus {
public:
    PiecewiseModulus(std::vector<double> breakpoints, std::vector<double> slopes,
                     std::vector<double> joins, double cap, const ToleranceConfig& tol = {});

    double operator()(double t) const;

    [[nodiscard]] const std::vector<double>& breakpoints() const noexcept { return a_; }
    [[nodiscard]] const std::vector<double>& slopes() const noexcept { return k_; }
    [[nodiscard]] const std::vector<double>& joins() const noexcept { return b_; }
    [[nodiscard]] double cap() const noexcept { return cap_; }
    /// Index M of the last breakpoint.
    [[nodiscard]] std::size_t last_index() const noexcept { return a_.size() - 1; }

    /// Largest gap between the two one-sided limits at any a_n or b_n.
    [[nodiscard]] double continuity_defect() const;

private:
    std::vector<double> a_;
    std::vector<double> k_;
    std::vector<double> b_;
    double cap_;
};

/// f(t) = min(t^exponent, cap).
struct PowerLaw {
    double exponent = 1.0;
    double cap = kInfinity;

    double operator()(double t) const;
};

/// A one-variable modulus f: R+ -> R+ with f(0) = 0.
class ScalarModulus {
public:
    ScalarModulus(PowerLaw f) : impl_(f) {}                 // NOLINT(implicit)
    ScalarModulus(PiecewiseModulus f) : impl_(std::move(f)) {}  // NOLINT(implicit)

    double operator()(double t) const;
    /// Points of [0, width] where f can attain a local maximum (piece
    /// vertices and the right endpoint), ascending.
    [[nodiscard]] std::vector<double> vertices(double width) const;

    [[nodiscard]] const std::variant<PowerLaw, PiecewiseModulus>& impl() const noexcept
    {
        return impl_;
    }

private:
    std::variant<PowerLaw, PiecewiseModulus> impl_;
};

struct Interval {
    double lo = 0.0;
    double hi = 1.0;
    [[nodiscard]] double width() const noexcept { return hi - lo; }
    [[nodiscard]] bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

struct TableModulus {
    ModulusSample sample;
};

/// psi(u, v) = |u - v|^p on a real interval.
struct PowerModulus {
    double p = 1.0;
    Interval domain;
};

/// psi(u, v) = f(|u - v|) on a real interval.
struct FModulus {
    ScalarModulus f;
    Interval domain;
};

/// psi(u, v) = 0 when u, v share a block, 1 otherwise.
struct IndicatorModulus {
    std::vector<std::vector<std::string>> blocks;
};

enum class ModulusKind { Table, Power, F, Indicator };

class ModulusSpec {
public:
    using Variant = std::variant<TableModulus, PowerModulus, FModulus, IndicatorModulus>;

    /// Validates the variant's invariants; throws Error(InvalidInput).
    explicit ModulusSpec(Variant spec);

    [[nodiscard]] ModulusKind kind() const noexcept;
    [[nodiscard]] const Variant& variant() const noexcept { return spec_; }
    [[nodiscard]] bool real_valued() const noexcept;

    /// psi(u, v). Throws Error(InvalidInput) for labels outside the coordinate.
    [[nodiscard]] double evaluate(std::string_view u, std::string_view v) const;
    /// Point identity within this coordinate (numeric for real-valued kinds).
    [[nodiscard]] bool same_point(std::string_view u, std::string_view v) const;

    /// Finite sample of this coordinate. Tables and indicators ignore
    /// `grid_points`; real-valued kinds use an evenly spaced grid of that
    /// many points over the domain.
    [[nodiscard]] ModulusSample sample(std::size_t grid_points = 11) const;
    /// Real-valued kinds only: sample on an explicit grid.
    [[nodiscard]] ModulusSample sample_on(std::span<const double> grid) const;

private:
    Variant spec_;
    std::map<std::string, std::size_t, std::less<>> block_of_;
};

struct FamilyDescription {
    std::string name;
    std::string notes;
    /// Symbolic annotation of the infinite tail ("power", "constant", ...).
    /// Used only in classifier narratives, never in sums.
    std::optional<std::string> tail;
    std::vector<ModulusSpec> coords;

    [[nodiscard]] std::size_t size() const noexcept { return coords.size(); }
    void validate() const;
};

/// Sum over n < N of psi_n(x(n), y(n)), split into the part over
/// coordinates where x(n) == y(n) and the part where they differ.
struct FiniteSum {
    double total = 0.0;
    double diagonal = 0.0;
    double off_diagonal = 0.0;
};

FiniteSum finite_sum(std::span<const std::string> x, std::span<const std::string> y,
                     const FamilyDescription& fam);

/// Shortest decimal representation that parses back to the same double.
std::string format_real(double x);
/// Strict decimal parse; throws Error(InvalidInput).
double parse_real(std::string_view text);

std::vector<double> linear_grid(Interval domain, std::size_t points);

}  // namespace sumlike
