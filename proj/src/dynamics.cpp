#include "dmocno/dynamics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dmocno/text.hpp"

namespace dmocno {

ObjectiveSchedule::ObjectiveSchedule(std::vector<ObjectiveSubset> subsets, int tau_t, int warmup, int m_max)
    : subsets_(std::move(subsets)), tau_t_(tau_t), warmup_(warmup), m_max_(m_max)
{
    if (subsets_.empty()) {
        throw std::invalid_argument("schedule needs at least one subset");
    }
    if (tau_t_ < 1) {
        throw std::invalid_argument("tau_t must be positive");
    }
    if (warmup_ < 0) {
        throw std::invalid_argument("warmup must be nonnegative");
    }
    if (m_max_ < 2) {
        throw std::invalid_argument("m_max must be at least 2");
    }
    for (std::size_t s = 0; s < subsets_.size(); ++s) {
        const auto& subset = subsets_[s];
        if (subset.size() < 2) {
            throw std::invalid_argument("stage " + std::to_string(s) + " has fewer than 2 objectives");
        }
        subset.check_within(m_max_);
        if (s > 0 && subset == subsets_[s - 1]) {
            throw std::invalid_argument("stage " + std::to_string(s) + " repeats the previous subset");
        }
    }
}

auto ObjectiveSchedule::stage_begin(std::size_t stage) const -> long
{
    if (stage >= subsets_.size()) {
        throw std::out_of_range("stage index out of range");
    }
    if (stage == 0) {
        return 0;
    }
    return first_stage_length() + static_cast<long>(stage - 1) * tau_t_;
}

auto ObjectiveSchedule::stage_end(std::size_t stage) const -> long
{
    if (stage >= subsets_.size()) {
        throw std::out_of_range("stage index out of range");
    }
    return first_stage_length() + static_cast<long>(stage) * tau_t_;
}

auto ObjectiveSchedule::total_generations() const noexcept -> long
{
    return first_stage_length() + static_cast<long>(subsets_.size() - 1) * tau_t_;
}

auto ObjectiveSchedule::retimed(int tau_t) const -> ObjectiveSchedule
{
    return { subsets_, tau_t, warmup_, m_max_ };
}

auto stage_at(const ObjectiveSchedule& schedule, long generation) -> StagePointer
{
    if (generation < 0 || generation >= schedule.total_generations()) {
        throw std::out_of_range("generation " + std::to_string(generation) + " outside schedule of "
                                + std::to_string(schedule.total_generations()) + " generations");
    }
    const long first = schedule.first_stage_length();
    if (generation < first) {
        return { 0, generation };
    }
    const long after = generation - first;
    return { static_cast<std::size_t>(after / schedule.tau_t()) + 1, after % schedule.tau_t() };
}

auto active_subset(const ObjectiveSchedule& schedule, long generation) -> const ObjectiveSubset&
{
    return schedule.subsets()[stage_at(schedule, generation).stage_index];
}

auto setting_name(Setting s) -> std::string_view
{
    switch (s) {
    case Setting::I: return "I";
    case Setting::II: return "II";
    case Setting::III: return "III";
    }
    throw std::invalid_argument("unknown setting");
}

auto parse_setting(std::string_view name) -> Setting
{
    if (name == "I") {
        return Setting::I;
    }
    if (name == "II") {
        return Setting::II;
    }
    if (name == "III") {
        return Setting::III;
    }
    throw std::invalid_argument("unknown setting '" + std::string(name) + "'");
}

auto builtin_setting(Setting which, int tau_t) -> ObjectiveSchedule
{
    using S = ObjectiveSubset;
    switch (which) {
    case Setting::I:
        // one objective added or removed per change
        return { { S { 2, 4 }, S { 2, 4, 5 }, S { 1, 2, 4, 5 }, S { 1, 2, 4, 5, 6 }, S::full(6), S { 2, 3, 4, 5, 6 },
                   S { 2, 3, 4, 5 }, S { 2, 3, 5 }, S { 3, 5 } },
                 tau_t, kDefaultWarmup, 6 };
    case Setting::II:
        // two at a time
        return { { S { 2, 7 }, S { 2, 5, 7, 10 }, S { 1, 2, 5, 6, 7, 10 }, S { 1, 2, 4, 5, 6, 7, 9, 10 }, S::full(10),
                   S { 1, 2, 3, 5, 6, 8, 9, 10 }, S { 2, 3, 5, 6, 9, 10 }, S { 2, 5, 6, 9 }, S { 5, 6 } },
                 tau_t, kDefaultWarmup, 10 };
    case Setting::III:
        // irregular size and direction
        return { { S { 3, 8 }, S { 2, 3, 6, 7, 8 }, S::full(10), S { 1, 3, 5, 6, 7, 10 }, S { 3, 7, 8 },
                   S { 1, 3, 4, 5, 6, 7, 8, 9 }, S { 2, 5, 7, 10 }, S { 1, 2, 4, 5, 6, 9, 10 },
                   S { 1, 2, 3, 4, 5, 6, 7, 8, 10 } },
                 tau_t, kDefaultWarmup, 10 };
    }
    throw std::invalid_argument("unknown setting");
}

auto diff_subsets(const ObjectiveSubset& previous, const ObjectiveSubset& next) -> SubsetDiff
{
    return { set_difference(next, previous), set_difference(previous, next) };
}

auto apply_diff(const ObjectiveSubset& previous, const SubsetDiff& diff) -> ObjectiveSubset
{
    return set_union(set_difference(previous, diff.removed), diff.added);
}

namespace {

constexpr std::string_view kScheduleHeader = "# dmocno-schedule v1";

} // namespace

auto parse_schedule(std::string_view body) -> ObjectiveSchedule
{
    const auto rows = text::lines(body);
    if (rows.empty() || text::trim(rows.front()) != kScheduleHeader) {
        throw FormatError("schedule must start with '" + std::string(kScheduleHeader) + "'");
    }
    int tau_t = -1;
    int warmup = -1;
    int m_max = 0;
    std::vector<ObjectiveSubset> subsets;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto line = text::trim(rows[i]);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (const auto eq = line.find('='); eq != std::string_view::npos) {
            const auto key = text::trim(line.substr(0, eq));
            const auto value = static_cast<int>(text::parse_int(line.substr(eq + 1)));
            if (key == "tau_t") {
                tau_t = value;
            } else if (key == "warmup") {
                warmup = value;
            } else if (key == "m_max") {
                m_max = value;
            } else {
                throw FormatError("unknown schedule key '" + std::string(key) + "'");
            }
            continue;
        }
        try {
            subsets.push_back(ObjectiveSubset::parse(line));
        } catch (const std::exception& e) {
            throw FormatError("bad stage line '" + std::string(line) + "': " + e.what());
        }
    }
    if (tau_t < 0 || warmup < 0) {
        throw FormatError("schedule needs tau_t= and warmup= lines");
    }
    if (m_max == 0) {
        for (const auto& s : subsets) {
            m_max = std::max(m_max, s.max_index());
        }
    }
    return { std::move(subsets), tau_t, warmup, m_max };
}

auto format_schedule(const ObjectiveSchedule& schedule) -> std::string
{
    std::string out(kScheduleHeader);
    out += "\ntau_t=" + std::to_string(schedule.tau_t());
    out += "\nwarmup=" + std::to_string(schedule.warmup());
    out += "\nm_max=" + std::to_string(schedule.m_max()) + "\n";
    for (const auto& s : schedule.subsets()) {
        out += s.to_string() + "\n";
    }
    return out;
}

auto load_schedule(const std::filesystem::path& path) -> ObjectiveSchedule
{
    return parse_schedule(text::read_file(path));
}

} // namespace dmocno
