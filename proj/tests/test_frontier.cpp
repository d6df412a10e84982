#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "dmocno/frontier.hpp"

using namespace dmocno;

namespace {

auto rastrigin_term(double x) -> double
{
    const double d = x - 0.5;
    return d * d - std::cos(20.0 * std::numbers::pi * d);
}

// Straightforward O(n * cap) farthest-point selection: extremes first, then
// the point farthest from the chosen set, ties to the lowest index.
auto naive_thin(const PointSet& points, std::size_t cap) -> PointSet
{
    const std::size_t n = points.size();
    const std::size_t d = points.dim();
    if (n <= cap) {
        return points;
    }
    std::vector<double> lo(d);
    std::vector<double> hi(d);
    std::vector<std::size_t> seeds;
    for (std::size_t j = 0; j < d; ++j) {
        std::size_t a = 0;
        std::size_t b = 0;
        for (std::size_t i = 0; i < n; ++i) {
            a = points[i][j] < points[a][j] ? i : a;
            b = points[i][j] > points[b][j] ? i : b;
        }
        lo[j] = points[a][j];
        hi[j] = points[b][j];
        seeds.push_back(a);
        seeds.push_back(b);
    }
    auto dist = [&](std::size_t x, std::size_t y) {
        double s = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            const double r = hi[j] - lo[j];
            const double u = r > 0 ? (points[x][j] - lo[j]) / r : 0.0;
            const double v = r > 0 ? (points[y][j] - lo[j]) / r : 0.0;
            s += (u - v) * (u - v);
        }
        return s;
    };
    std::vector<char> chosen(n, 0);
    std::size_t count = 0;
    for (auto s : seeds) {
        if (!chosen[s] && count < cap) {
            chosen[s] = 1;
            ++count;
        }
    }
    while (count < cap) {
        std::size_t best = n;
        double best_d = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (chosen[i]) {
                continue;
            }
            double near = std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < n; ++k) {
                if (chosen[k]) {
                    near = std::min(near, dist(i, k));
                }
            }
            if (near > best_d) {
                best_d = near;
                best = i;
            }
        }
        chosen[best] = 1;
        ++count;
    }
    PointSet out(d);
    for (std::size_t i = 0; i < n; ++i) {
        if (chosen[i]) {
            out.push_back(points[i]);
        }
    }
    return out;
}

} // namespace

TEST_CASE("distance optima agree with a dense grid search")
{
    double best_x = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 2'000'000; ++i) {
        const double x = i / 2'000'000.0;
        if (rastrigin_term(x) > best) {
            best = rastrigin_term(x);
            best_x = x;
        }
    }
    for (auto fam : { Family::DTLZ1, Family::DTLZ3 }) {
        const auto opt = distance_optimum(ProblemSpec::with_defaults(fam, true, 3));
        REQUIRE(opt.values.size() == 2);
        CHECK(opt.term == doctest::Approx(best).epsilon(1e-9));
        const double nearest = std::min(std::fabs(opt.values[0] - best_x), std::fabs(opt.values[1] - best_x));
        CHECK(nearest < 1e-5);
        CHECK(opt.values[0] + opt.values[1] == doctest::Approx(1.0));
    }
    const auto d2 = distance_optimum(ProblemSpec::with_defaults(Family::DTLZ2, true, 3));
    CHECK(d2.values == std::vector<double> { 0.0, 1.0 });
    CHECK(d2.term == 0.25);
    const auto classical = distance_optimum(ProblemSpec::with_defaults(Family::DTLZ1, false, 3));
    CHECK(classical.values == std::vector<double> { 0.5 });
    CHECK_THROWS(distance_optimum(ProblemSpec::with_defaults(Family::WFG4, true, 3)));
}

TEST_CASE("bucketed thinning equals the naive selection")
{
    Rng rng(41);
    for (std::size_t dim : { 2U, 3U, 5U }) {
        for (int trial = 0; trial < 4; ++trial) {
            PointSet p(dim);
            std::vector<double> row(dim);
            const std::size_t n = 300 + rng.below(500);
            for (std::size_t i = 0; i < n; ++i) {
                for (auto& v : row) {
                    // a quarter of the coordinates snap to a coarse grid to create ties
                    v = rng.below(4) == 0 ? 0.25 * static_cast<double>(rng.below(5)) : rng.uniform(-3.0, 2.0);
                }
                p.push_back(row);
            }
            const std::size_t cap = 20 + rng.below(80);
            REQUIRE(thin_farthest_point(p, cap) == naive_thin(p, cap));
        }
    }
    const PointSet small { { 1, 2 }, { 2, 1 } };
    CHECK(thin_farthest_point(small, 5) == small);
}

TEST_CASE("Minus-DTLZ2 front lies on the inverted sphere")
{
    const auto spec = ProblemSpec::with_defaults(Family::DTLZ2, true, 3);
    const auto front = sample_front(spec, ObjectiveSubset { 1, 2, 3 }, 20'000, 5, FrontOptions { 2000, {} });
    CHECK_FALSE(front.degenerate);
    CHECK(front.points.size() == 2000);
    // g at the optimum is k * 0.25 with k = 10, so the radius is 3.5
    for (std::size_t i = 0; i < front.points.size(); ++i) {
        double r = 0.0;
        for (double v : front.points[i]) {
            REQUIRE(v <= 0.0);
            r += v * v;
        }
        REQUIRE(std::sqrt(r) == doctest::Approx(3.5).epsilon(1e-12));
    }
    CHECK(nondominated_indices(front.points).size() == front.points.size());
    CHECK(front.ideal == std::vector<double> { -3.5, -3.5, -3.5 });
    CHECK(front.front_hv > 0.0);
    CHECK(front.front_hv < std::pow(1.1, 3.0));
}

TEST_CASE("front sampling is deterministic and validated")
{
    const auto spec = ProblemSpec::with_defaults(Family::WFG6, true, 4);
    const ObjectiveSubset s { 1, 3, 4 };
    const auto a = sample_front(spec, s, 3000, 9, FrontOptions { 500, {} });
    const auto b = sample_front(spec, s, 3000, 9, FrontOptions { 500, {} });
    CHECK(a.points == b.points);
    CHECK(a.front_hv == b.front_hv);
    CHECK(a.points.dim() == 3);
    CHECK_THROWS_AS((void)sample_front(spec, s, 50, 9), std::invalid_argument);
    CHECK_THROWS((void)sample_front(spec, ObjectiveSubset { 5 }, 3000, 9));
    CHECK(sample_point_cloud(spec, s, 777, 1).size() == 777);
    CHECK(sample_point_cloud(spec, s, 777, 1).dim() == 4);
}

TEST_CASE("every Minus front is spread out on each Setting I subset size")
{
    for (auto fam : kAllFamilies) {
        const auto spec = ProblemSpec::with_defaults(fam, true, 6);
        for (const auto& s : { ObjectiveSubset { 2, 4 }, ObjectiveSubset { 2, 3, 5 }, ObjectiveSubset::full(6) }) {
            const auto f = sample_front(spec, s, 4000, 3, FrontOptions { 400, {} });
            INFO(spec.id() << " {" << s.to_string() << "}");
            CHECK_FALSE(f.degenerate);
            CHECK(f.points.size() >= 100);
        }
    }
}

TEST_CASE("classical DTLZ1 collapses on {1,2}, Minus-DTLZ1 does not")
{
    const auto classical = sample_front(ProblemSpec::with_defaults(Family::DTLZ1, false, 3), ObjectiveSubset { 1, 2 },
                                        5000, 1);
    CHECK(classical.degenerate);
    for (std::size_t i = 0; i < classical.points.size(); ++i) {
        CHECK(std::fabs(classical.points[i][0]) <= 1e-9);
        CHECK(std::fabs(classical.points[i][1]) <= 1e-9);
    }
    const auto minus = sample_front(ProblemSpec::with_defaults(Family::DTLZ1, true, 3), ObjectiveSubset { 1, 2 },
                                    5000, 1);
    CHECK_FALSE(minus.degenerate);
    CHECK(minus.points.size() >= 100);
}

TEST_CASE("ideal and nadir")
{
    const PointSet p { { 1, 5 }, { 3, 2 }, { 2, 4 } };
    const auto [ideal, nadir] = ideal_nadir(p);
    CHECK(ideal == std::vector<double> { 1, 2 });
    CHECK(nadir == std::vector<double> { 3, 5 });
    CHECK_THROWS_AS(ideal_nadir(PointSet { { 1, 5 }, { 1, 2 } }), DegenerateFrontError);
    CHECK_THROWS_AS(ideal_nadir(PointSet(2)), DegenerateFrontError);
    CHECK(is_degenerate(PointSet { { 1, 5 } }));
    CHECK(is_degenerate(PointSet { { 1, 5 }, { 1, 2 } }));
    CHECK_FALSE(is_degenerate(p));
}

TEST_CASE("shared objectives are bit-identical across subsets")
{
    Rng rng(42);
    for (bool minus : { false, true }) {
        for (auto fam : kAllFamilies) {
            const auto spec = ProblemSpec::with_defaults(fam, minus, 6);
            const ObjectiveSubset a { 2, 4 };
            const ObjectiveSubset b { 1, 2, 4, 5 };
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<double> x;
                for (const auto& bound : decision_bounds(spec)) {
                    x.push_back(rng.uniform(bound.lower, bound.upper));
                }
                const auto fa = evaluate_subset(spec, x, a).values;
                const auto fb = evaluate_subset(spec, x, b).values;
                REQUIRE(fa[0] == fb[1]);
                REQUIRE(fa[1] == fb[2]);
            }
        }
    }
}

TEST_CASE("inclusion check")
{
    const ObjectiveSubset a { 1, 2 };
    const ObjectiveSubset b { 1, 2, 3 };
    const auto r = verify_inclusion(ProblemSpec(Family::DTLZ2, true, 3, 4), a, b, 6);
    CHECK(r.holds);
    CHECK(r.grid_points == 7 * 7 * 7 * 7);
    CHECK(r.optimal_under_a > 0);
    const auto legacy = verify_inclusion_legacy(3, 2, 3, 6);
    CHECK_FALSE(legacy.holds);
    REQUIRE(legacy.counterexample.has_value());
    CHECK_THROWS(verify_inclusion(ProblemSpec(Family::DTLZ2, true, 3, 4), b, a, 4));
    CHECK_THROWS(verify_inclusion(ProblemSpec::with_defaults(Family::DTLZ2, true, 3), a, b, 4));
}
