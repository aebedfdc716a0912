#include "generators.hpp"

#include "sumlike/conditions.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

using namespace sumlike;

namespace {

ModulusSample power_grid(double p, std::size_t n)
{
    std::vector<std::string> pts;
    SquareMatrix psi(n);
    for (std::size_t i = 0; i < n; ++i) {
        pts.push_back(std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
            psi(i, j) = std::pow(std::abs(static_cast<double>(i) - static_cast<double>(j)) / (n - 1), p);
        }
    }
    return {"power", pts, psi};
}

// Brute-force triangle constant over all triples with a positive denominator.
double brute_c_tri(const ModulusSample& s)
{
    double best = 1.0;
    for (std::size_t u = 0; u < s.size(); ++u) {
        for (std::size_t v = 0; v < s.size(); ++v) {
            for (std::size_t r = 0; r < s.size(); ++r) {
                const double den = s.psi(u, v) + s.psi(v, r);
                if (den > 1e-12) best = std::max(best, s.psi(u, r) / den);
            }
        }
    }
    return best;
}

FamilyDescription power_family(std::size_t n)
{
    FamilyDescription fam;
    fam.name = "power";
    for (std::size_t i = 0; i < n; ++i) fam.coords.emplace_back(PowerModulus{1.0, {0, 1}});
    return fam;
}

FamilyDescription indicator_family(std::size_t n, const std::function<std::size_t(std::size_t)>& blocks)
{
    FamilyDescription fam;
    fam.name = "indicators";
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::vector<std::string>> parts;
        for (std::size_t b = 0; b < blocks(i); ++b) parts.push_back({"q" + std::to_string(b)});
        if (blocks(i) == 1) parts.front().push_back("extra");
        fam.coords.emplace_back(IndicatorModulus{parts});
    }
    return fam;
}

}  // namespace

TEST_CASE("quasi constants of |u-v|^p")
{
    for (double p : {0.5, 1.0}) {
        const auto q = quasi_constants(power_grid(p, 20));
        CHECK(q.c_sym == 1.0);
        CHECK(q.c_tri == doctest::Approx(1.0).epsilon(1e-12));
    }
    for (double p : {1.5, 2.0}) {
        const auto s = power_grid(p, 21);
        const auto q = quasi_constants(s);
        CHECK(q.c_tri == doctest::Approx(brute_c_tri(s)).epsilon(1e-12));
        CHECK(q.c_tri == doctest::Approx(std::pow(2.0, p - 1)).epsilon(1e-12));
        REQUIRE(q.tri_witness.has_value());
    }
}

TEST_CASE("quasi constants detect asymmetry and diagonal mass")
{
    const ModulusSample asym("asym", {"a", "b"}, SquareMatrix::from_rows({{0, 0}, {0.5, 0}}));
    const auto q = quasi_constants(asym);
    CHECK(std::isinf(q.c_sym));
    CHECK_FALSE(q.finite());
    REQUIRE(q.sym_witness.has_value());
    CHECK(q.sym_witness->u == "a");
    CHECK(q.sym_witness->v == "b");

    const ModulusSample diag("diag", {"a", "b"}, SquareMatrix::from_rows({{0.25, 1}, {1, 0}}));
    const auto d = quasi_constants(diag);
    CHECK(d.c_diag_violation == 0.25);
    CHECK(d.diag_witness == "a");
    CHECK_FALSE(d.diagonal_ok(ToleranceConfig{}));

    // psi(a,c) > 0 while the two legs through b vanish.
    const ModulusSample tri("tri", {"a", "b", "c"},
                            SquareMatrix::from_rows({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}));
    CHECK(std::isinf(quasi_constants(tri).c_tri));
}

TEST_CASE("property: metrics and snowflakes have unit constants")
{
    gen::Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        const auto s = trial % 2 ? gen::metric_sample(rng, rng.index(2, 15)) : gen::snowflake_sample(rng, rng.index(2, 15));
        const auto q = quasi_constants(s);
        CHECK(q.c_sym == 1.0);
        CHECK(q.c_tri <= 1.0 + 1e-9);
        CHECK(q.c_tri >= 1.0);
    }
}

TEST_CASE("property: constants are invariant under relabeling and at least 1")
{
    gen::Rng rng(202);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = rng.index(2, 10);
        SquareMatrix psi(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) psi(i, j) = i == j ? 0.0 : rng.uniform(0.1, 2.0);
        }
        const ModulusSample s("random", gen::labels(n), psi);
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = n - 1 - i;
        const auto a = quasi_constants(s);
        const auto b = quasi_constants(s.permuted(order));
        CHECK(a.c_sym >= 1.0);
        CHECK(a.c_tri >= 1.0);
        CHECK(a.c_sym == b.c_sym);
        CHECK(a.c_tri == doctest::Approx(b.c_tri).epsilon(1e-15));
        CHECK(a.c_tri == doctest::Approx(brute_c_tri(s)).epsilon(1e-12));
    }
}

TEST_CASE("quasi constants do not depend on the thread count")
{
    gen::Rng rng(5);
    const auto s = gen::snowflake_sample(rng, 30);
    setenv("SUMLIKE_THREADS", "1", 1);
    const auto one = quasi_constants(s);
    setenv("SUMLIKE_THREADS", "4", 1);
    const auto four = quasi_constants(s);
    unsetenv("SUMLIKE_THREADS");
    CHECK(dump_json(to_json(one)) == dump_json(to_json(four)));
}

TEST_CASE("comparison constants")
{
    const auto psi = power_grid(1.0, 6);
    SquareMatrix tripled = psi.table();
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) tripled(i, j) *= 3.0;
    }
    const ModulusSample phi("3psi", psi.points(), tripled);
    CHECK(compare_moduli(psi, phi) == doctest::Approx(3.0));
    CHECK(compare_moduli(phi, psi) == doctest::Approx(1.0));
    CHECK(compare_moduli_two_sided(psi, phi) == doctest::Approx(3.0));

    const ModulusSample zero("zero", psi.points(), SquareMatrix(6));
    CHECK_FALSE(compare_moduli(zero, psi).has_value());
    CHECK(compare_moduli(psi, zero) == doctest::Approx(1.0));
}

TEST_CASE("admissible terms stay strictly below c")
{
    const ModulusSpec power(PowerModulus{1.0, {0, 1}});
    for (double c : {1.0, 0.5, 0.1, std::ldexp(1.0, -10)}) {
        const auto t = max_admissible_term(power, c);
        REQUIRE(t.has_value());
        CHECK(t->value < c);
        CHECK(t->value > c * (1 - 1e-12));
        CHECK(power.evaluate(t->u, t->v) == t->value);
    }
    // the domain bounds the value: |u - v| <= 1
    const auto wide = max_admissible_term(power, 4.0);
    REQUIRE(wide.has_value());
    CHECK(wide->value == 1.0);

    const ModulusSpec table(TableModulus{ModulusSample("t", {"a", "b", "c"},
                                                       SquareMatrix::from_rows({{0, 0.2, 0.7}, {0.3, 0, 0.5}, {0.9, 0.1, 0}}))});
    const auto t = max_admissible_term(table, 0.7);
    REQUIRE(t.has_value());
    CHECK(t->value == 0.5);
    CHECK(t->u == "b");
    CHECK(t->v == "c");

    const ModulusSpec ind(IndicatorModulus{{{"a"}, {"b"}}});
    const auto zero = max_admissible_term(ind, 1.0);
    REQUIRE(zero.has_value());
    CHECK(zero->value == 0.0);
}

TEST_CASE("l1 witness search on power families")
{
    const double c = std::ldexp(1.0, -10);
    // every term is below 2^-10, so 1024 coordinates cannot reach 1
    CHECK_FALSE(search_l1_witness(power_family(1024), c, 1.0).has_value());
    const auto w = search_l1_witness(power_family(1100), c, 1.0);
    REQUIRE(w.has_value());
    CHECK(w->sum >= 1.0);
    CHECK(w->terms.size() == 1025u);
    for (const auto& t : w->terms) CHECK(t.value < c);

    CHECK_FALSE(search_l1_witness(power_family(2048), c, 1.0, 512).has_value());
}

TEST_CASE("threshold relations")
{
    const ModulusSpec ind(IndicatorModulus{{{"a", "b"}, {"c"}, {"d", "e", "f"}}});
    const auto f = build_threshold_relation(ind, 0, 0.5);
    CHECK(f.valid());
    CHECK(f.class_count == 3u);

    // psi < 0.5 links a-b and b-c but not a-c
    const ModulusSample chain("chain", {"a", "b", "c"},
                              SquareMatrix::from_rows({{0, 0.4, 0.8}, {0.4, 0, 0.4}, {0.8, 0.4, 0}}));
    const auto g = build_threshold_relation(chain, 0, 0.5);
    CHECK(g.reflexive);
    CHECK(g.symmetric);
    CHECK_FALSE(g.transitive);
    CHECK(g.class_count == 0u);
    REQUIRE(g.violation_count == 2u);
    CHECK(g.violations.front().kind == "transitive");
    CHECK(g.violations.front().u == "a");
    CHECK(g.violations.front().r == "c");

    const ModulusSample asym("asym", {"a", "b"}, SquareMatrix::from_rows({{0, 0.1}, {0.9, 0}}));
    CHECK_FALSE(build_threshold_relation(asym, 0, 0.5).symmetric);
}

TEST_CASE("property: threshold classes partition the points")
{
    gen::Rng rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        const auto s = gen::indicator_sample(rng, rng.index(1, 20));
        const auto f = build_threshold_relation(s, 0, 0.5);
        REQUIRE(f.valid());
        std::vector<std::string> seen;
        for (const auto& cls : f.classes) seen.insert(seen.end(), cls.begin(), cls.end());
        std::sort(seen.begin(), seen.end());
        auto expected = s.points();
        std::sort(expected.begin(), expected.end());
        CHECK(seen == expected);
        CHECK(f.class_count == f.classes.size());
    }
}

TEST_CASE("trichotomy smoke suite")
{
    CHECK(classify_trichotomy(power_family(2048)).branch == Branch::L1Like);
    CHECK(classify_trichotomy(indicator_family(64, [](std::size_t) { return 1; })).branch == Branch::Trivial);
    CHECK(classify_trichotomy(indicator_family(64, [](std::size_t) { return 2; })).branch == Branch::E0Like);
    CHECK(classify_trichotomy(indicator_family(64, [](std::size_t n) { return n + 1; })).branch == Branch::E1Like);

    // 32 coordinates: witnesses stop below c = 2^-5 and F_n is judged at the
    // smallest grid value. On an 11-point grid (spacing 0.1) F_n is the
    // identity, 11 classes per coordinate.
    CHECK(classify_trichotomy(power_family(32)).branch == Branch::E0Like);
    // At c = 2^-6 with spacing 1/128, F_n links neighbours only and is not transitive.
    TrichotomyOptions fine;
    fine.c_grid = {1.0, std::ldexp(1.0, -6)};
    fine.grid_points = 129;
    const auto r = classify_trichotomy(power_family(32), fine);
    CHECK(r.branch == Branch::Undecided);
    REQUIRE(r.threshold.has_value());
    CHECK(*r.threshold == std::ldexp(1.0, -6));
    CHECK_FALSE(r.narrative.empty());
    CHECK(to_string(Branch::E0Like) == "E0_LIKE");
}

TEST_CASE("Mazur-Orlicz constants")
{
    std::vector<double> grid;
    for (int i = 1; i <= 40; ++i) grid.push_back(i / 40.0);

    const auto lin = mazur_orlicz_check(ScalarModulus(PowerLaw{1.0}), grid);
    CHECK(lin.linear_likely);
    CHECK(lin.a_prime.value == doctest::Approx(2.0));
    CHECK(lin.b_prime.value == 1.0);
    REQUIRE(lin.b.size() == 2u);
    CHECK(lin.b[1].value == doctest::Approx(2.0 - 1.0 / 40 * 0).epsilon(0.05));

    const auto sq = mazur_orlicz_check(ScalarModulus(PowerLaw{2.0}), grid);
    CHECK(sq.a_prime.value == doctest::Approx(4.0));
    CHECK(sq.linear_likely);

    CHECK_THROWS_AS(mazur_orlicz_check(ScalarModulus(PowerLaw{1.0}), std::vector<double>{0.5, 0.25}), Error);
    CHECK_THROWS_AS(mazur_orlicz_check(ScalarModulus(PowerLaw{1.0}), std::vector<double>{0.0, 0.25}), Error);
}
