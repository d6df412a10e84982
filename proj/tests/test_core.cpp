#include <doctest.h>

#include <set>

#include "dmocno/core.hpp"
#include "dmocno/text.hpp"

using namespace dmocno;

TEST_CASE("subset construction sorts and rejects duplicates")
{
    const ObjectiveSubset s { 5, 2, 4 };
    CHECK(s.to_string() == "2,4,5");
    CHECK(s.to_tag() == "2-4-5");
    CHECK(s.max_index() == 5);
    CHECK(s.position_of(4) == 1);
    CHECK(s.position_of(3) == -1);
    CHECK_THROWS(ObjectiveSubset { 1, 1 });
    CHECK_THROWS(ObjectiveSubset { 0, 1 });
    CHECK(ObjectiveSubset::parse(" 2, 4 ,5") == s);
    CHECK_THROWS(ObjectiveSubset::parse("2,x"));
    CHECK(ObjectiveSubset::full(3) == ObjectiveSubset { 1, 2, 3 });
    CHECK_THROWS_AS(s.check_within(4), std::out_of_range);
    CHECK_NOTHROW(s.check_within(5));
}

TEST_CASE("subset algebra")
{
    const ObjectiveSubset a { 1, 2, 4, 5 };
    const ObjectiveSubset b { 2, 3, 5 };
    CHECK(set_difference(a, b) == ObjectiveSubset { 1, 4 });
    CHECK(set_union(a, b) == ObjectiveSubset { 1, 2, 3, 4, 5 });
    CHECK(ObjectiveSubset { 2, 5 }.is_subset_of(a));
    CHECK_FALSE(b.is_subset_of(a));
    CHECK(set_difference(b, b).empty());
}

TEST_CASE("point sets and projection")
{
    const PointSet p { { 1, 2, 3 }, { 4, 5, 6 } };
    CHECK(p.dim() == 3);
    CHECK(p.size() == 2);
    CHECK(p[1][2] == 6.0);
    const auto q = project(p, ObjectiveSubset { 2, 4, 7 }, ObjectiveSubset { 2, 7 });
    CHECK(q == PointSet { { 1, 3 }, { 4, 6 } });
    CHECK_THROWS(project(p, ObjectiveSubset { 2, 4, 7 }, ObjectiveSubset { 3 }));
    PointSet r(2);
    CHECK_THROWS(r.push_back(std::vector<double> { 1.0 }));
}

TEST_CASE("rng streams are reproducible and bounded")
{
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    Rng c(7);
    for (int i = 0; i < 10000; ++i) {
        const double u = c.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        REQUIRE(c.below(13) < 13);
    }
    std::set<std::uint64_t> seeds;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        seeds.insert(derive_seed(5, i));
    }
    CHECK(seeds.size() == 1000);
}

TEST_CASE("shortest round-trip numbers")
{
    Rng rng(3);
    for (int i = 0; i < 2000; ++i) {
        const double v = (rng.uniform() - 0.5) * std::pow(10.0, static_cast<int>(rng.below(40)) - 20);
        REQUIRE(text::parse_double(text::format_double(v)) == v);
    }
    CHECK(text::format_double(0.5) == "0.5");
    CHECK(text::format_fixed(0.57571, 4) == "0.5757");
    CHECK(text::format_scientific(0.00445, 2) == "4.45e-03");
    CHECK_THROWS(text::parse_double("1.5x"));
    CHECK_THROWS(text::parse_int(""));
}
