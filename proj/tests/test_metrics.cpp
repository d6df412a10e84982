#include <doctest.h>

#include <cmath>
#include <limits>

#include "dmocno/metrics.hpp"

using namespace dmocno;

namespace {

auto snapshot_of(const ReferenceFront& front) -> StageSnapshot
{
    return { 0, front.subset, 10, front.points };
}

} // namespace

TEST_CASE("normalization round trip")
{
    const PointSet p { { 1, 5 }, { 3, 2 } };
    const std::vector<double> ideal { 1, 2 };
    const std::vector<double> nadir { 3, 5 };
    const auto n = normalize(p, ideal, nadir);
    CHECK(n == PointSet { { 0, 1 }, { 1, 0 } });
    CHECK(denormalize(n, ideal, nadir) == p);
    CHECK_THROWS_AS(normalize(p, ideal, std::vector<double> { 1, 5 }), std::invalid_argument);
    CHECK_THROWS_AS(normalize(p, std::vector<double> { 1 }, std::vector<double> { 2 }), std::invalid_argument);
}

TEST_CASE("a front scores one against itself")
{
    const auto front = sample_front(ProblemSpec::with_defaults(Family::WFG4, true, 6), ObjectiveSubset { 1, 2, 4, 5 },
                                    5000, 3, FrontOptions { 800, {} });
    const auto score = stage_score(snapshot_of(front), front, 99);
    CHECK(std::fabs(score.ratio - 1.0) <= 1e-9);
    CHECK(score.standard_error == 0.0);

    HvPolicy mc_policy;
    mc_policy.exact_dim_cap = 2;
    mc_policy.mc_samples = 400'000;
    const auto mc_front = sample_front(ProblemSpec::with_defaults(Family::DTLZ2, true, 3),
                                       ObjectiveSubset { 1, 2, 3 }, 5000, 3, FrontOptions { 500, mc_policy });
    CHECK(mc_front.hv_method.kind == HvMethodKind::MonteCarlo);
    const auto mc = stage_score(snapshot_of(mc_front), mc_front, 12345);
    const double sigma = std::hypot(mc.standard_error, mc_front.hv_standard_error) / mc_front.front_hv;
    CHECK(std::fabs(mc.ratio - 1.0) <= 3.0 * sigma);
}

TEST_CASE("stage ratio edge cases")
{
    const auto front = sample_front(ProblemSpec::with_defaults(Family::DTLZ2, true, 3), ObjectiveSubset { 1, 2 }, 2000,
                                    1, FrontOptions { 300, {} });
    StageSnapshot empty { 0, front.subset, 5, PointSet(2) };
    CHECK(stage_ratio(empty, front, 1) == 0.0);
    // everything beyond the reference box after normalization
    StageSnapshot far { 0, front.subset, 5, PointSet { { 100.0, 100.0 } } };
    CHECK(stage_ratio(far, front, 1) == 0.0);
    // the ideal point dominates the whole front
    StageSnapshot ideal { 0, front.subset, 5, PointSet { { front.ideal[0], front.ideal[1] } } };
    CHECK(stage_ratio(ideal, front, 1) > 1.0);
    StageSnapshot wrong { 0, ObjectiveSubset { 1, 3 }, 5, front.points };
    CHECK_THROWS_AS((void)stage_ratio(wrong, front, 1), std::invalid_argument);

    const auto flat = sample_front(ProblemSpec::with_defaults(Family::DTLZ1, false, 3), ObjectiveSubset { 1, 2 }, 2000,
                                   1, FrontOptions { 300, {} });
    REQUIRE(flat.degenerate);
    CHECK_THROWS_AS((void)stage_ratio(snapshot_of(flat), flat, 1), DegenerateFrontError);
}

TEST_CASE("MHV averages the stage ratios")
{
    const auto spec = ProblemSpec::with_defaults(Family::DTLZ2, true, 3);
    const auto f12 = sample_front(spec, ObjectiveSubset { 1, 2 }, 2000, 1, FrontOptions { 300, {} });
    const auto f123 = sample_front(spec, ObjectiveSubset { 1, 2, 3 }, 2000, 1, FrontOptions { 300, {} });
    std::vector<StageSnapshot> snaps { snapshot_of(f12), snapshot_of(f123),
                                       { 2, f12.subset, 30, PointSet(2) } };
    snaps[1].stage = 1;
    const auto report = mhv(snaps, { &f12, &f123, &f12 }, 5);
    REQUIRE(report.stage_ratios.size() == 3);
    CHECK(report.stage_ratios[2] == 0.0);
    CHECK(report.mhv == doctest::Approx((report.stage_ratios[0] + report.stage_ratios[1]) / 3.0));
    CHECK(report.within_bounds());
    CHECK_THROWS((void)mhv(snaps, { &f12, &f123 }, 5));

    MhvReport high;
    high.stage_ratios = { 1.2 };
    CHECK_FALSE(high.within_bounds());
}

TEST_CASE("run aggregation")
{
    const std::vector<double> v { 1.0, 2.0, 3.0, 4.0 };
    const auto a = aggregate_runs(v);
    CHECK(a.mean == 2.5);
    CHECK(a.standard_deviation == doctest::Approx(std::sqrt(5.0 / 3.0)));
    const std::vector<double> ones(31, 1.0);
    CHECK(aggregate_runs(ones).standard_deviation == 0.0);
    CHECK_THROWS_AS(aggregate_runs(std::vector<double> { 1.0 }), std::invalid_argument);
}

TEST_CASE("cell ranks and Friedman averages")
{
    CHECK(rank_cell(std::vector<double> { 0.1, 0.9, 0.5 }) == std::vector<double> { 3, 1, 2 });
    CHECK(rank_cell(std::vector<double> { 0.5, 0.7, 0.5, 0.2 }) == std::vector<double> { 2.5, 1, 2.5, 4 });
    CHECK(rank_cell(std::vector<double> { 1, 1, 1 }) == std::vector<double> { 2, 2, 2 });

    // A wins everywhere
    const auto two = friedman_ranks({ { 0.9, 0.1 }, { 0.8, 0.5 }, { 0.7, 0.6 } });
    CHECK(two.average_ranks == std::vector<double> { 1.0, 2.0 });

    Rng rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::vector<double>> table(1 + rng.below(12), std::vector<double>(4));
        for (auto& row : table) {
            for (auto& v : row) {
                v = static_cast<double>(rng.below(5)) * 0.1; // ties are common
            }
        }
        const auto r = friedman_ranks(table);
        double avg_sum = 0.0;
        for (double x : r.average_ranks) {
            avg_sum += x;
        }
        CHECK(avg_sum == doctest::Approx(10.0));
        for (const auto& row : r.cell_ranks) {
            CHECK(row[0] + row[1] + row[2] + row[3] == 10.0);
        }
        auto scaled = table;
        const double factor = 0.001 + rng.uniform() * 1000.0;
        for (auto& v : scaled[rng.below(scaled.size())]) {
            v *= factor;
        }
        CHECK(friedman_ranks(scaled).average_ranks == r.average_ranks);
    }
    CHECK_THROWS(friedman_ranks({ { 0.1 } }));
    CHECK_THROWS(friedman_ranks({}));
    CHECK_THROWS(friedman_ranks({ { 0.1, std::numeric_limits<double>::quiet_NaN() } }));
}
