#include <doctest.h>

#include "dmocno/dominance.hpp"

using namespace dmocno;

namespace {

auto brute_dominates(std::span<const double> a, std::span<const double> b) -> bool
{
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        strict = strict || a[i] < b[i];
    }
    return strict;
}

// Coarse values force many ties and duplicates.
auto random_points(std::size_t n, std::size_t dim, Rng& rng) -> PointSet
{
    PointSet p(dim);
    std::vector<double> row(dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (auto& v : row) {
            v = static_cast<double>(rng.below(6));
        }
        p.push_back(row);
    }
    return p;
}

} // namespace

TEST_CASE("dominance relations")
{
    const std::vector<double> a { 1, 2 };
    const std::vector<double> b { 1, 3 };
    CHECK(dominates(a, b));
    CHECK_FALSE(dominates(b, a));
    CHECK_FALSE(dominates(a, a));
    CHECK(weakly_dominates(a, a));
}

TEST_CASE("nondominated indices match a brute-force scan")
{
    Rng rng(21);
    for (std::size_t dim : { 2U, 3U, 4U, 6U }) {
        for (int trial = 0; trial < 40; ++trial) {
            const auto p = random_points(1 + rng.below(120), dim, rng);
            std::vector<std::size_t> want;
            for (std::size_t i = 0; i < p.size(); ++i) {
                bool dominated = false;
                for (std::size_t j = 0; j < p.size() && !dominated; ++j) {
                    dominated = brute_dominates(p[j], p[i]);
                }
                if (!dominated) {
                    want.push_back(i);
                }
            }
            REQUIRE(nondominated_indices(p) == want);

            const auto filtered = nondominated_filter(p);
            for (std::size_t i = 0; i < filtered.size(); ++i) {
                for (std::size_t j = 0; j < filtered.size(); ++j) {
                    if (i != j) {
                        REQUIRE_FALSE(weakly_dominates(filtered[i], filtered[j]));
                    }
                }
            }
        }
    }
}

TEST_CASE("nondominated ranks match repeated peeling")
{
    Rng rng(22);
    for (std::size_t dim : { 2U, 3U, 5U }) {
        for (int trial = 0; trial < 30; ++trial) {
            const auto p = random_points(1 + rng.below(150), dim, rng);
            std::vector<int> want(p.size(), -1);
            std::size_t assigned = 0;
            for (int front = 0; assigned < p.size(); ++front) {
                std::vector<std::size_t> current;
                for (std::size_t i = 0; i < p.size(); ++i) {
                    if (want[i] != -1) {
                        continue;
                    }
                    bool dominated = false;
                    for (std::size_t j = 0; j < p.size() && !dominated; ++j) {
                        dominated = want[j] == -1 && brute_dominates(p[j], p[i]);
                    }
                    if (!dominated) {
                        current.push_back(i);
                    }
                }
                for (auto i : current) {
                    want[i] = front;
                }
                assigned += current.size();
            }
            REQUIRE(nondominated_ranks(p) == want);
        }
    }
}
