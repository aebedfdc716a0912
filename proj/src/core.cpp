/**
 * @file core.cpp
 * @brief Core data model: samples, moduli, families, finite sums.
 */

#include "sumlike/core.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace sumlike {

// ---------------------------------------------------------------------------
// ToleranceConfig

void ToleranceConfig::validate() const
{
    if (!(eps_abs > 0.0) || !(eps_rel > 0.0) || !std::isfinite(eps_abs) || !std::isfinite(eps_rel)) {
        fail("tolerances must be positive and finite");
    }
}

bool ToleranceConfig::leq(double a, double b) const
{
    return a <= b + eps_abs + eps_rel * std::max(std::abs(a), std::abs(b));
}

bool ToleranceConfig::near(double a, double b) const
{
    return leq(a, b) && leq(b, a);
}

// ---------------------------------------------------------------------------
// SquareMatrix

SquareMatrix SquareMatrix::from_rows(const std::vector<std::vector<double>>& rows)
{
    SquareMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            fail("table is not square: row " + std::to_string(i) + " has " +
                 std::to_string(rows[i].size()) + " entries, expected " + std::to_string(rows.size()));
        }
        for (std::size_t j = 0; j < rows.size(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

std::vector<std::vector<double>> SquareMatrix::rows() const
{
    std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out[i][j] = (*this)(i, j);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// ModulusSample

ModulusSample::ModulusSample(std::string name, std::vector<std::string> points, SquareMatrix psi)
    : name_(std::move(name)), points_(std::move(points)), psi_(std::move(psi))
{
    if (psi_.size() != points_.size()) {
        fail("sample '" + name_ + "': table dimension " + std::to_string(psi_.size()) +
             " does not match " + std::to_string(points_.size()) + " points");
    }
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!index_.emplace(points_[i], i).second) {
            fail("sample '" + name_ + "': duplicate point label '" + points_[i] + "'");
        }
    }
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) {
            const double v = psi_(i, j);
            if (!std::isfinite(v) || v < 0.0) {
                fail("sample '" + name_ + "': psi(" + points_[i] + ", " + points_[j] +
                     ") must be finite and non-negative");
            }
        }
    }
}

std::optional<std::size_t> ModulusSample::index_of(std::string_view label) const
{
    if (auto it = index_.find(label); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

ModulusSample ModulusSample::permuted(std::span<const std::size_t> order) const
{
    if (order.size() != size()) {
        fail("permutation length mismatch");
    }
    std::vector<std::string> labels;
    labels.reserve(size());
    SquareMatrix table(size());
    for (std::size_t i = 0; i < size(); ++i) {
        labels.push_back(points_[order[i]]);
        for (std::size_t j = 0; j < size(); ++j) {
            table(i, j) = psi_(order[i], order[j]);
        }
    }
    return ModulusSample(name_, std::move(labels), std::move(table));
}

// ---------------------------------------------------------------------------
// PiecewiseModulus

PiecewiseModulus::PiecewiseModulus(std::vector<double> breakpoints, std::vector<double> slopes,
                                   std::vector<double> joins, double cap, const ToleranceConfig& tol)
    : a_(std::move(breakpoints)), k_(std::move(slopes)), b_(std::move(joins)), cap_(cap)
{
    if (a_.empty()) {
        fail("piecewise modulus needs at least one breakpoint");
    }
    if (k_.size() != a_.size() || b_.size() + 1 != a_.size()) {
        fail("piecewise modulus: expected " + std::to_string(a_.size()) + " slopes and " +
             std::to_string(a_.size() - 1) + " joins");
    }
    for (std::size_t n = 0; n < a_.size(); ++n) {
        if (!std::isfinite(a_[n]) || !(a_[n] > 0.0)) {
            fail("piecewise modulus: breakpoints must be positive");
        }
        if (!std::isfinite(k_[n]) || !(k_[n] > 0.0)) {
            fail("piecewise modulus: slopes must be positive");
        }
        if (n + 1 < a_.size()) {
            if (!(a_[n + 1] < a_[n])) {
                fail("piecewise modulus: breakpoints must be strictly decreasing");
            }
            if (!(k_[n] < k_[n + 1])) {
                fail("piecewise modulus: slopes must be strictly increasing");
            }
            if (!(a_[n + 1] < b_[n] && b_[n] < a_[n])) {
                fail("piecewise modulus: join b_" + std::to_string(n) + " must lie in (a_" +
                     std::to_string(n + 1) + ", a_" + std::to_string(n) + ")");
            }
        }
    }
    if (!std::isfinite(cap_)) {
        fail("piecewise modulus: cap must be finite");
    }
    const double defect = continuity_defect();
    if (defect > tol.eps_abs + tol.eps_rel * cap_) {
        fail("piecewise modulus is discontinuous (defect " + format_real(defect) + ")");
    }
}

double PiecewiseModulus::operator()(double t) const
{
    if (t <= 0.0) {
        return 0.0;
    }
    if (t >= a_.front()) {
        return cap_;
    }
    if (t < a_.back()) {
        return k_.back() * t;
    }
    // a_{n+1} <= t < a_n; breakpoints are descending.
    const auto it = std::lower_bound(a_.begin(), a_.end(), t, std::greater<>());
    const auto n1 = static_cast<std::size_t>(it - a_.begin());  // first index with a <= t
    const std::size_t n = n1 - 1;
    if (t < b_[n]) {
        return k_[n1] * (2.0 * a_[n1] - t);
    }
    return k_[n] * t;
}

double PiecewiseModulus::continuity_defect() const
{
    double worst = std::abs(k_.front() * a_.front() - cap_);
    for (std::size_t n = 0; n + 1 < a_.size(); ++n) {
        const double descending = k_[n + 1] * (2.0 * a_[n + 1] - b_[n]);
        const double ascending = k_[n] * b_[n];
        worst = std::max(worst, std::abs(descending - ascending));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// ScalarModulus

double PowerLaw::operator()(double t) const
{
    if (t <= 0.0) {
        return 0.0;
    }
    return std::min(std::pow(t, exponent), cap);
}

double ScalarModulus::operator()(double t) const
{
    return std::visit([t](const auto& f) { return f(t); }, impl_);
}

std::vector<double> ScalarModulus::vertices(double width) const
{
    std::vector<double> out;
    if (const auto* pw = std::get_if<PiecewiseModulus>(&impl_)) {
        for (double a : pw->breakpoints()) {
            if (a < width) out.push_back(a);
        }
        for (double b : pw->joins()) {
            if (b < width) out.push_back(b);
        }
    } else if (const auto* pl = std::get_if<PowerLaw>(&impl_)) {
        if (std::isfinite(pl->cap) && pl->cap > 0.0) {
            const double knee = std::pow(pl->cap, 1.0 / pl->exponent);
            if (knee < width) out.push_back(knee);
        }
    }
    out.push_back(width);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// ModulusSpec

namespace {

void validate_domain(const Interval& d)
{
    if (!std::isfinite(d.lo) || !std::isfinite(d.hi) || !(d.lo <= d.hi)) {
        fail("domain must be a finite interval [lo, hi] with lo <= hi");
    }
}

double real_point(std::string_view label, const Interval& domain)
{
    const double x = parse_real(label);
    if (!domain.contains(x)) {
        fail("point " + std::string(label) + " lies outside the domain [" + format_real(domain.lo) +
             ", " + format_real(domain.hi) + "]");
    }
    return x;
}

}  // namespace

ModulusSpec::ModulusSpec(Variant spec) : spec_(std::move(spec))
{
    if (const auto* pm = std::get_if<PowerModulus>(&spec_)) {
        if (!std::isfinite(pm->p) || !(pm->p > 0.0)) {
            fail("power modulus exponent must be positive");
        }
        validate_domain(pm->domain);
    } else if (const auto* fm = std::get_if<FModulus>(&spec_)) {
        validate_domain(fm->domain);
        if (const auto* pl = std::get_if<PowerLaw>(&fm->f.impl())) {
            if (!(pl->exponent > 0.0) || !std::isfinite(pl->exponent) || !(pl->cap > 0.0)) {
                fail("power-law f needs a positive exponent and positive cap");
            }
        }
    } else if (const auto* im = std::get_if<IndicatorModulus>(&spec_)) {
        for (std::size_t b = 0; b < im->blocks.size(); ++b) {
            if (im->blocks[b].empty()) {
                fail("indicator block " + std::to_string(b) + " is empty");
            }
            for (const auto& label : im->blocks[b]) {
                if (!block_of_.emplace(label, b).second) {
                    fail("indicator blocks overlap at label '" + label + "'");
                }
            }
        }
        if (im->blocks.empty()) {
            fail("indicator modulus needs at least one block");
        }
    } else if (const auto* tm = std::get_if<TableModulus>(&spec_)) {
        if (tm->sample.size() == 0) {
            fail("table modulus has no points");
        }
    }
}

ModulusKind ModulusSpec::kind() const noexcept
{
    return static_cast<ModulusKind>(spec_.index());
}

bool ModulusSpec::real_valued() const noexcept
{
    return kind() == ModulusKind::Power || kind() == ModulusKind::F;
}

double ModulusSpec::evaluate(std::string_view u, std::string_view v) const
{
    switch (kind()) {
    case ModulusKind::Table: {
        const auto& s = std::get<TableModulus>(spec_).sample;
        const auto iu = s.index_of(u);
        const auto iv = s.index_of(v);
        if (!iu || !iv) {
            fail("label '" + std::string(iu ? v : u) + "' is not a point of table '" + s.name() + "'");
        }
        return s.psi(*iu, *iv);
    }
    case ModulusKind::Power: {
        const auto& pm = std::get<PowerModulus>(spec_);
        const double gap = std::abs(real_point(u, pm.domain) - real_point(v, pm.domain));
        return gap == 0.0 ? 0.0 : std::pow(gap, pm.p);
    }
    case ModulusKind::F: {
        const auto& fm = std::get<FModulus>(spec_);
        const double value = fm.f(std::abs(real_point(u, fm.domain) - real_point(v, fm.domain)));
        if (value < 0.0) {
            fail("modulus f evaluated negative");
        }
        return value;
    }
    case ModulusKind::Indicator: {
        const auto bu = block_of_.find(u);
        const auto bv = block_of_.find(v);
        if (bu == block_of_.end() || bv == block_of_.end()) {
            fail("label '" + std::string(bu == block_of_.end() ? u : v) +
                 "' is not in any indicator block");
        }
        return bu->second == bv->second ? 0.0 : 1.0;
    }
    }
    return 0.0;
}

bool ModulusSpec::same_point(std::string_view u, std::string_view v) const
{
    if (real_valued()) {
        return parse_real(u) == parse_real(v);
    }
    return u == v;
}

ModulusSample ModulusSpec::sample(std::size_t grid_points) const
{
    switch (kind()) {
    case ModulusKind::Table:
        return std::get<TableModulus>(spec_).sample;
    case ModulusKind::Indicator: {
        std::vector<std::string> labels;
        for (const auto& block : std::get<IndicatorModulus>(spec_).blocks) {
            labels.insert(labels.end(), block.begin(), block.end());
        }
        SquareMatrix table(labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            for (std::size_t j = 0; j < labels.size(); ++j) {
                table(i, j) = evaluate(labels[i], labels[j]);
            }
        }
        return ModulusSample("indicator", std::move(labels), std::move(table));
    }
    case ModulusKind::Power:
        return sample_on(linear_grid(std::get<PowerModulus>(spec_).domain, grid_points));
    case ModulusKind::F:
        return sample_on(linear_grid(std::get<FModulus>(spec_).domain, grid_points));
    }
    return {};
}

ModulusSample ModulusSpec::sample_on(std::span<const double> grid) const
{
    if (!real_valued()) {
        fail("explicit grids apply only to real-valued coordinates");
    }
    std::vector<std::string> labels;
    labels.reserve(grid.size());
    for (double x : grid) {
        labels.push_back(format_real(x));
    }
    SquareMatrix table(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = 0; j < labels.size(); ++j) {
            table(i, j) = evaluate(labels[i], labels[j]);
        }
    }
    return ModulusSample(kind() == ModulusKind::Power ? "power" : "f", std::move(labels),
                         std::move(table));
}

// ---------------------------------------------------------------------------
// FamilyDescription

void FamilyDescription::validate() const
{
    if (coords.empty()) {
        fail("family '" + name + "' has no coordinates");
    }
}

FiniteSum finite_sum(std::span<const std::string> x, std::span<const std::string> y,
                     const FamilyDescription& fam)
{
    if (x.size() != fam.size() || y.size() != fam.size()) {
        fail("point vectors have lengths " + std::to_string(x.size()) + " and " +
             std::to_string(y.size()) + ", family has " + std::to_string(fam.size()) + " coordinates");
    }
    FiniteSum out;
    for (std::size_t n = 0; n < fam.size(); ++n) {
        const double term = fam.coords[n].evaluate(x[n], y[n]);
        if (fam.coords[n].same_point(x[n], y[n])) {
            out.diagonal += term;
        } else {
            out.off_diagonal += term;
        }
        out.total += term;
    }
    return out;
}

// ---------------------------------------------------------------------------
// helpers

std::string format_real(double x)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double parse_real(std::string_view text)
{
    double x = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    const auto res = std::from_chars(first, last, x);
    if (res.ec != std::errc() || res.ptr != last || !std::isfinite(x)) {
        fail("'" + std::string(text) + "' is not a finite real number");
    }
    return x;
}

std::vector<double> linear_grid(Interval domain, std::size_t points)
{
    if (points == 0) {
        fail("grid needs at least one point");
    }
    if (points == 1) {
        return {domain.lo};
    }
    std::vector<double> grid(points);
    const double step = domain.width() / static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = domain.lo + step * static_cast<double>(i);
    }
    grid.back() = domain.hi;
    return grid;
}

}  // namespace sumlike
