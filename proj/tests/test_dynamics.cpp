#include <doctest.h>

#include "dmocno/dynamics.hpp"

using namespace dmocno;

namespace {

auto cardinalities(const ObjectiveSchedule& s) -> std::vector<std::size_t>
{
    std::vector<std::size_t> out;
    for (const auto& subset : s.subsets()) {
        out.push_back(subset.size());
    }
    return out;
}

} // namespace

TEST_CASE("built-in settings have the expected shapes")
{
    const auto one = builtin_setting(Setting::I, 25);
    CHECK(one.m_max() == 6);
    CHECK(cardinalities(one) == std::vector<std::size_t> { 2, 3, 4, 5, 6, 5, 4, 3, 2 });
    CHECK(one.subsets().front() == ObjectiveSubset { 2, 4 });
    CHECK(one.subsets().back() == ObjectiveSubset { 3, 5 });

    const auto two = builtin_setting(Setting::II, 25);
    CHECK(two.m_max() == 10);
    CHECK(cardinalities(two) == std::vector<std::size_t> { 2, 4, 6, 8, 10, 8, 6, 4, 2 });

    const auto three = builtin_setting(Setting::III, 25);
    CHECK(three.m_max() == 10);
    CHECK(cardinalities(three) == std::vector<std::size_t> { 2, 5, 10, 6, 3, 8, 4, 7, 9 });

    // Settings I and II move by exactly one or two objectives per change.
    for (auto [setting, step] : { std::pair { Setting::I, 1U }, std::pair { Setting::II, 2U } }) {
        const auto s = builtin_setting(setting, 10);
        for (std::size_t i = 1; i < s.stage_count(); ++i) {
            const auto d = diff_subsets(s.subsets()[i - 1], s.subsets()[i]);
            CHECK(d.added.size() + d.removed.size() == step);
            CHECK(apply_diff(s.subsets()[i - 1], d) == s.subsets()[i]);
        }
    }
}

TEST_CASE("stage timing")
{
    const auto s = builtin_setting(Setting::I, 25);
    CHECK(s.first_stage_length() == kDefaultWarmup);
    CHECK(s.total_generations() == kDefaultWarmup + 8 * 25);
    CHECK(s.stage_begin(1) == 300);
    CHECK(s.stage_end(1) == 325);
    CHECK(stage_at(s, 0) == StagePointer { 0, 0 });
    CHECK(stage_at(s, 299) == StagePointer { 0, 299 });
    CHECK(stage_at(s, 300) == StagePointer { 1, 0 });
    CHECK(stage_at(s, 499) == StagePointer { 8, 24 });
    CHECK_THROWS_AS(stage_at(s, 500), std::out_of_range);
    CHECK(active_subset(s, 310) == ObjectiveSubset { 2, 4, 5 });

    const ObjectiveSchedule no_warmup({ ObjectiveSubset { 1, 2 }, ObjectiveSubset { 1, 2, 3 } }, 10, 0, 3);
    CHECK(no_warmup.first_stage_length() == 10);
    CHECK(no_warmup.total_generations() == 20);
    CHECK(no_warmup.retimed(7).total_generations() == 14);
}

TEST_CASE("schedule validation")
{
    CHECK_THROWS(ObjectiveSchedule({}, 10, 0, 3));
    CHECK_THROWS(ObjectiveSchedule({ ObjectiveSubset { 1, 4 } }, 10, 0, 3));
    CHECK_THROWS(ObjectiveSchedule({ ObjectiveSubset { 1, 2 } }, 0, 0, 3));
    CHECK_THROWS(ObjectiveSchedule({ ObjectiveSubset { 1 } }, 10, 0, 3));
}

TEST_CASE("schedule text round trip")
{
    for (auto setting : { Setting::I, Setting::II, Setting::III }) {
        const auto s = builtin_setting(setting, 50);
        CHECK(parse_schedule(format_schedule(s)) == s);
    }
    const auto parsed = parse_schedule("# dmocno-schedule v1\n# comment\ntau_t=5\nwarmup=0\n\n2,4\n2, 4,5\n");
    CHECK(parsed.m_max() == 5);
    CHECK(parsed.stage_count() == 2);
    CHECK_THROWS(parse_schedule("# dmocno-schedule v2\ntau_t=5\n1,2\n"));
    CHECK_THROWS(parse_schedule("tau_t=5\n1,2\n"));
    CHECK(parse_setting("II") == Setting::II);
    CHECK_THROWS(parse_setting("IV"));
}
