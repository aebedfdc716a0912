#include "sumlike/conditions.hpp"
#include "sumlike/examples.hpp"

#include <doctest.h>

#include <cmath>

using namespace sumlike;

TEST_CASE("two-term zigzag arithmetic")
{
    const auto spec = Example4Spec::two_term();
    const auto k = spec.slopes();
    const auto b = spec.joins();
    CHECK(k == std::vector<double>{2, 8});
    // 2 * 8 * (1/64) / (2 + 8) = 1/40
    CHECK(b[0] == doctest::Approx(0.025).epsilon(1e-15));

    const auto f = build_example4(spec);
    CHECK(f(0.0) == 0.0);
    CHECK(f(1.0) == 0.5);
    CHECK(f(b[0]) == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(f(1.0 / 64) == 0.125);

    const auto r = example4_ratio(f, 0);
    CHECK(r.direct == 2.5);
    CHECK(r.closed_form == 2.5);
    CHECK(r.agree);
    CHECK_THROWS_AS(example4_ratio(f, 1), Error);

    // s = t = b_0: f(2 b_0) = 2 * 2 b_0 on the k_0 branch
    CHECK(f(2 * b[0]) <= 2 * f(b[0]) + 1e-15);
}

TEST_CASE("default preset slopes and ratios")
{
    const auto spec = Example4Spec::preset_default();
    REQUIRE(spec.M() == 8u);
    const auto k = spec.slopes();
    const auto b = spec.joins();
    for (std::size_t n = 0; n < k.size(); ++n) {
        CHECK(k[n] == std::ldexp(1.0, static_cast<int>((n + 1) * (n + 1))));
    }
    for (std::size_t n = 0; n + 1 < k.size(); ++n) {
        CHECK(k[n + 1] / k[n] == std::ldexp(1.0, static_cast<int>(2 * n + 3)));
        CHECK(spec.a[n + 1] < b[n]);
        CHECK(b[n] < spec.a[n]);
    }

    const auto f = build_example4(spec);
    CHECK(f.continuity_defect() <= 1e-12);
    const auto grid = log_grid(spec.a.back(), spec.a.front(), 200);
    const auto tol = scaled_tolerance(f, grid);
    CHECK(tol.eps_abs < 1e-30);
    double previous = 0;
    for (std::size_t n = 0; n < f.last_index(); ++n) {
        const auto r = example4_ratio(f, n, tol);
        CHECK(r.direct == doctest::Approx(0.5 * (1 + std::ldexp(1.0, static_cast<int>(2 * n + 3)))).epsilon(1e-12));
        CHECK(r.agree);
        CHECK(r.direct > previous);
        previous = r.direct;
    }
}

TEST_CASE("peaks and valleys")
{
    const auto spec = Example4Spec::preset_default(5);
    const auto f = build_example4(spec);
    const auto k = spec.slopes();
    for (std::size_t n = 0; n < spec.a.size(); ++n) {
        CHECK(f(spec.a[n]) == doctest::Approx(std::sqrt(spec.a[n])).epsilon(1e-12));
    }
    for (std::size_t n = 0; n + 1 < spec.a.size(); ++n) {
        const double bn = f.joins()[n];
        CHECK(f(bn) == doctest::Approx(k[n] * bn).epsilon(1e-12));
        // the descending piece falls from the peak at a_{n+1} to the valley at b_n
        CHECK(f(bn) < f(spec.a[n + 1]));
    }
}

TEST_CASE("subadditivity holds and the reverse inequality fails")
{
    const auto spec = Example4Spec::preset_default();
    const auto f = build_example4(spec);
    const auto grid = log_grid(spec.a.back(), spec.a.front(), 200);
    const auto report = verify_example4_inequalities(f, grid, scaled_tolerance(f, grid));
    CHECK(report.pairs == 40000u);
    CHECK(report.subadditive_violations == 0u);
    CHECK(report.reverse_violations > 0u);
    CHECK_FALSE(report.ok());

    // s just below a_1 sits on the k_1 slope; t and s + t on the k_0 slope.
    // f(s) <= f(s+t) + f(t) reads k_1 s <= k_0 (s + 2t), false for t = b_0.
    const double s = spec.a[1] * (1 - 1e-9);
    const double t = f.joins()[0];
    const auto k = spec.slopes();
    REQUIRE((k[1] - k[0]) * s > 2 * k[0] * t);
    CHECK(f(s) > f(s + t) + f(t));

    const auto two = build_example4(Example4Spec::two_term());
    const auto g2 = log_grid(1.0 / 64, 0.25, 200);
    const auto r2 = verify_example4_inequalities(two, g2);
    CHECK(r2.ok());

    CHECK_THROWS_AS(verify_example4_inequalities(f, std::vector<double>{0.6}), Error);
}

TEST_CASE("domination constant is unbounded")
{
    const auto spec = Example4Spec::preset_default();
    const auto f = build_example4(spec);
    const auto grid = merge_grids(log_grid(spec.a.back(), spec.a.front(), 200), example4_breakpoints(f));
    const auto v = mazur_orlicz_check(ScalarModulus(f), grid, {}, scaled_tolerance(f, grid));
    CHECK_FALSE(v.b_prime.bounded);
    // the largest f(s)/f(t) with s < t is at least the last peak/valley ratio
    CHECK(v.b_prime.value >= 0.5 * (1 + std::ldexp(1.0, 17)));
    CHECK(v.a_prime.bounded);
    CHECK(v.a_prime.value <= 2.0 + 1e-12);
    CHECK_FALSE(v.linear_likely);
}

TEST_CASE("spec validation")
{
    CHECK_THROWS_AS(build_example4(Example4Spec{GFunction::sqrt(), {0.1, 0.2}}), Error);
    CHECK_THROWS_AS(build_example4(Example4Spec{GFunction::sqrt(), {}}), Error);
    CHECK_THROWS_AS(build_example4(Example4Spec{GFunction::sqrt(), {0.5, -0.1}}), Error);
    CHECK_THROWS_AS(GFunction::power(1.0), Error);
    CHECK_THROWS_AS(Example4Spec::preset_default(0), Error);

    const auto f = build_example4(Example4Spec{GFunction::power(0.3), {0.5, 0.05, 0.001}});
    CHECK(f.continuity_defect() < 1e-12);
}

TEST_CASE("spec JSON")
{
    const auto spec = example4_spec_from_json(parse_json(R"({"g": {"type": "power", "alpha": 0.5}, "a": [0.25, 0.015625]})"));
    CHECK(spec.g.kind == GFunction::Kind::Power);
    CHECK(build_example4(spec)(1.0 / 64) == 0.125);
    const auto again = example4_spec_from_json(to_json(spec));
    CHECK(again.a == spec.a);
    CHECK_THROWS_AS(example4_spec_from_json(parse_json(R"({"a": [0.25], "b": 1})")), Error);
    CHECK_THROWS_AS(example4_spec_from_json(parse_json(R"({"g": {"type": "log"}, "a": [0.25]})")), Error);
}

TEST_CASE("grids")
{
    const auto g = log_grid(1e-6, 1.0, 7);
    REQUIRE(g.size() == 7u);
    CHECK(g.front() == 1e-6);
    CHECK(g.back() == 1.0);
    CHECK(g[3] == doctest::Approx(1e-3));
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    CHECK_THROWS_AS(log_grid(0.0, 1.0, 5), Error);

    CHECK(merge_grids(std::vector<double>{1, 3}, std::vector<double>{2, 3}) == std::vector<double>{1, 2, 3});
}

TEST_CASE("catalog")
{
    for (const auto& name : catalog_names()) CHECK_NOTHROW(catalog_modulus(name));
    CHECK(catalog_modulus("capped-linear")(5.0) == 1.0);
    CHECK(catalog_modulus("sqrt")(0.25) == 0.5);
    CHECK(catalog_modulus("example4-two-term")(1.0) == 0.5);
    CHECK_THROWS_AS(catalog_modulus("nope"), Error);

    std::vector<double> grid;
    for (int i = 1; i <= 50; ++i) grid.push_back(i / 50.0);
    CHECK(mazur_orlicz_check(catalog_modulus("linear"), grid).linear_likely);
}
