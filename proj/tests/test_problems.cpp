#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dmocno/problems.hpp"
#include "dmocno/wfg.hpp"

using namespace dmocno;

namespace {

constexpr double kPi = std::numbers::pi;

auto random_decision(const ProblemSpec& spec, Rng& rng) -> std::vector<double>
{
    std::vector<double> x;
    for (const auto& b : decision_bounds(spec)) {
        x.push_back(rng.uniform(b.lower, b.upper));
    }
    return x;
}

// Textbook DTLZ, objectives written one product at a time.
auto oracle_dtlz(Family f, int M, const std::vector<double>& x) -> std::vector<double>
{
    const auto n = static_cast<int>(x.size());
    const int k = n - M + 1;
    double g = 0.0;
    for (int i = n - k; i < n; ++i) {
        const double d = x[i] - 0.5;
        if (f == Family::DTLZ1 || f == Family::DTLZ3) {
            g += d * d - std::cos(20.0 * kPi * d);
        } else {
            g += d * d;
        }
    }
    if (f == Family::DTLZ1 || f == Family::DTLZ3) {
        g = 100.0 * (k + g);
    }
    std::vector<double> out(M);
    for (int i = 0; i < M; ++i) {
        double v = f == Family::DTLZ1 ? 0.5 * (1 + g) : 1 + g;
        for (int j = 0; j < M - 1 - i; ++j) {
            const double y = f == Family::DTLZ4 ? std::pow(x[j], 100.0) : x[j];
            v *= f == Family::DTLZ1 ? y : std::cos(y * kPi / 2);
        }
        if (i > 0) {
            const double y = f == Family::DTLZ4 ? std::pow(x[M - 1 - i], 100.0) : x[M - 1 - i];
            v *= f == Family::DTLZ1 ? 1 - y : std::sin(y * kPi / 2);
        }
        out[i] = v;
    }
    return out;
}

// WFG4 straight from the toolkit definitions: s_multi, weighted sums, concave shape.
auto oracle_wfg4(int M, int k, const std::vector<double>& z) -> std::vector<double>
{
    const auto n = static_cast<int>(z.size());
    std::vector<double> y(n);
    for (int i = 0; i < n; ++i) {
        const double v = z[i] / (2.0 * (i + 1));
        const double A = 30;
        const double B = 10;
        const double C = 0.35;
        const double t = std::fabs(v - C) / (2.0 * (std::floor(C - v) + C));
        y[i] = (1 + std::cos((4 * A + 2) * kPi * (0.5 - t)) + 4 * B * t * t) / (B + 2);
    }
    std::vector<double> t(M, 0.0);
    const int per = k / (M - 1);
    for (int i = 0; i < M - 1; ++i) {
        for (int j = i * per; j < (i + 1) * per; ++j) {
            t[i] += y[j] / per;
        }
    }
    for (int j = k; j < n; ++j) {
        t[M - 1] += y[j] / (n - k);
    }
    std::vector<double> f(M);
    for (int m = 1; m <= M; ++m) {
        double h = 1.0;
        if (m == 1) {
            for (int i = 0; i < M - 1; ++i) {
                h *= std::sin(t[i] * kPi / 2);
            }
        } else if (m < M) {
            for (int i = 0; i < M - m; ++i) {
                h *= std::sin(t[i] * kPi / 2);
            }
            h *= std::cos(t[M - m] * kPi / 2);
        } else {
            h = std::cos(t[0] * kPi / 2);
        }
        f[m - 1] = t[M - 1] + 2.0 * m * h;
    }
    return f;
}

} // namespace

TEST_CASE("DTLZ objectives match a textbook transcription")
{
    Rng rng(11);
    for (auto fam : { Family::DTLZ1, Family::DTLZ2, Family::DTLZ3, Family::DTLZ4 }) {
        for (int M : { 2, 3, 6, 10 }) {
            const auto spec = ProblemSpec::with_defaults(fam, false, M);
            for (int trial = 0; trial < 200; ++trial) {
                const auto x = random_decision(spec, rng);
                const auto got = evaluate_full(spec, x).values;
                const auto want = oracle_dtlz(fam, M, x);
                for (int i = 0; i < M; ++i) {
                    REQUIRE(got[i] == doctest::Approx(want[i]).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("WFG4 matches an independent transcription")
{
    Rng rng(12);
    for (int M : { 2, 3, 6, 10 }) {
        const auto spec = ProblemSpec::with_defaults(Family::WFG4, false, M);
        for (int trial = 0; trial < 200; ++trial) {
            const auto z = random_decision(spec, rng);
            const auto got = evaluate_full(spec, z).values;
            const auto want = oracle_wfg4(M, spec.position_params(), z);
            for (int i = 0; i < M; ++i) {
                REQUIRE(std::fabs(got[i] - want[i]) <= 1e-12 * std::max(1.0, std::fabs(want[i])));
            }
        }
    }
}

TEST_CASE("Pareto-optimal distance settings land on the known front shapes")
{
    Rng rng(13);
    for (int M : { 3, 6 }) {
        // DTLZ1: hyperplane sum = 0.5; DTLZ2-4: unit sphere.
        for (auto fam : { Family::DTLZ1, Family::DTLZ2, Family::DTLZ3, Family::DTLZ4 }) {
            const auto spec = ProblemSpec::with_defaults(fam, false, M);
            for (int trial = 0; trial < 50; ++trial) {
                auto x = random_decision(spec, rng);
                for (int i = M - 1; i < spec.n(); ++i) {
                    x[i] = 0.5;
                }
                const auto f = evaluate_full(spec, x).values;
                double s = 0.0;
                for (double v : f) {
                    s += fam == Family::DTLZ1 ? v : v * v;
                }
                REQUIRE(s == doctest::Approx(fam == Family::DTLZ1 ? 0.5 : 1.0).epsilon(1e-12));
            }
        }
        // WFG4-7: distance variables at 0.35 of their range give sum (f_m / 2m)^2 = 1.
        for (auto fam : { Family::WFG4, Family::WFG5, Family::WFG6, Family::WFG7 }) {
            const auto spec = ProblemSpec::with_defaults(fam, false, M);
            for (int trial = 0; trial < 50; ++trial) {
                auto z = random_decision(spec, rng);
                for (int i = spec.position_params(); i < spec.n(); ++i) {
                    z[i] = 2.0 * (i + 1) * 0.35;
                }
                const auto f = evaluate_full(spec, z).values;
                double s = 0.0;
                for (int m = 1; m <= M; ++m) {
                    const double r = f[m - 1] / (2.0 * m);
                    s += r * r;
                }
                REQUIRE(s == doctest::Approx(1.0).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("Minus problems negate every objective")
{
    Rng rng(14);
    for (auto fam : kAllFamilies) {
        const auto plain = ProblemSpec::with_defaults(fam, false, 5);
        const auto minus = ProblemSpec::with_defaults(fam, true, 5);
        CHECK(minus.id() == "minus-" + plain.id());
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = random_decision(plain, rng);
            const auto a = evaluate_full(plain, x).values;
            const auto b = evaluate_full(minus, x).values;
            for (std::size_t i = 0; i < a.size(); ++i) {
                REQUIRE(b[i] == -a[i]);
            }
        }
    }
}

TEST_CASE("subset evaluation is a projection of the full vector")
{
    Rng rng(15);
    const auto spec = ProblemSpec::with_defaults(Family::WFG9, true, 10);
    const ObjectiveSubset s { 2, 5, 9 };
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = random_decision(spec, rng);
        const auto full = evaluate_full(spec, x).values;
        const auto sub = evaluate_subset(spec, x, s);
        CHECK(sub.subset == s);
        REQUIRE(sub.values.size() == 3);
        CHECK(sub.values[0] == full[1]);
        CHECK(sub.values[1] == full[4]);
        CHECK(sub.values[2] == full[8]);
    }
    CHECK_THROWS(evaluate_subset(spec, random_decision(spec, rng), ObjectiveSubset { 11 }));
    CHECK_THROWS(evaluate_subset(spec, random_decision(spec, rng), ObjectiveSubset {}));
    CHECK_THROWS(evaluate_full(spec, std::vector<double>(3, 0.1)));
}

TEST_CASE("problem identifiers and default dimensions")
{
    const auto d1 = ProblemSpec::from_id("minus-dtlz1", 3);
    CHECK(d1.minus());
    CHECK(d1.n() == 7);
    CHECK(d1.distance_count() == 5);
    const auto d2 = ProblemSpec::from_id("dtlz2", 6);
    CHECK(d2.n() == 15);
    const auto w = ProblemSpec::from_id("minus-wfg7", 6);
    CHECK(w.position_params() == 10);
    CHECK(w.n() == 20);
    CHECK(w.tag() == "minus-wfg7_m6_n20_k10");
    CHECK_THROWS(ProblemSpec::from_id("zdt1", 3));
    CHECK_THROWS(ProblemSpec(Family::WFG4, false, 3, 10, 3)); // position params not a multiple of 2
    CHECK(decision_bounds(w)[4].upper == 10.0);
}

TEST_CASE("legacy F1 gives a different f_1 for the same x once m changes")
{
    const std::vector<double> x { 0.5, 0.5, 0.5 };
    CHECK(legacy_f1_g(x, 2) == 0.0);
    CHECK(legacy_f1_g(x, 3) == 0.0);
    CHECK(legacy_f1_evaluate(x, 2).values[0] == 0.5);
    CHECK(legacy_f1_evaluate(x, 3).values[0] == 0.25);
    CHECK_THROWS(legacy_f1_evaluate(x, 4));
}

TEST_CASE("WFG transformation primitives")
{
    CHECK(wfg::s_linear(0.35, 0.35) == doctest::Approx(0.0));
    CHECK(wfg::s_multi(0.35, 30, 10.0, 0.35) == doctest::Approx(0.0));
    CHECK(wfg::s_decept(0.35, 0.35, 0.001, 0.05) == doctest::Approx(0.0));
    CHECK(wfg::b_poly(0.25, 0.5) == doctest::Approx(0.5));
    const std::vector<double> y { 0.2, 0.4, 0.6 };
    CHECK(wfg::r_sum(y) == doctest::Approx(0.4));
    // r_nonsep with A = 1 is the mean.
    CHECK(wfg::r_nonsep(y, 1) == doctest::Approx(0.4));
    // b_param equals y^exponent.
    for (double u : { 0.0, 0.3, 0.7, 1.0 }) {
        CHECK(wfg::b_param(0.6, u, wfg::kParamA, wfg::kParamB, wfg::kParamC)
              == doctest::Approx(std::pow(0.6, wfg::b_param_exponent(u))));
    }
}
