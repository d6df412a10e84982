#ifndef DMOCNO_DYNAMICS_HPP
#define DMOCNO_DYNAMICS_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dmocno/core.hpp"

namespace dmocno {

/// Warm-up length used by the built-in settings.
inline constexpr int kDefaultWarmup = 300;

/// Ordered objective subsets with their timing.
///
/// Stage 0 runs on subsets[0] for `warmup` generations; every later stage
/// runs for `tau_t` generations. A warm-up of 0 means stage 0 also lasts
/// `tau_t` generations.
class ObjectiveSchedule {
public:
    ObjectiveSchedule(std::vector<ObjectiveSubset> subsets, int tau_t, int warmup, int m_max);

    [[nodiscard]] auto subsets() const noexcept -> const std::vector<ObjectiveSubset>& { return subsets_; }
    [[nodiscard]] auto stage_count() const noexcept -> std::size_t { return subsets_.size(); }
    [[nodiscard]] auto tau_t() const noexcept -> int { return tau_t_; }
    [[nodiscard]] auto warmup() const noexcept -> int { return warmup_; }
    [[nodiscard]] auto m_max() const noexcept -> int { return m_max_; }

    /// Length of stage 0 in generations.
    [[nodiscard]] auto first_stage_length() const noexcept -> long { return warmup_ > 0 ? warmup_ : tau_t_; }
    [[nodiscard]] auto stage_begin(std::size_t stage) const -> long;
    [[nodiscard]] auto stage_end(std::size_t stage) const -> long;
    [[nodiscard]] auto total_generations() const noexcept -> long;

    /// Same subsets with different timing.
    [[nodiscard]] auto retimed(int tau_t) const -> ObjectiveSchedule;

    friend auto operator==(const ObjectiveSchedule&, const ObjectiveSchedule&) -> bool = default;

private:
    std::vector<ObjectiveSubset> subsets_;
    int tau_t_;
    int warmup_;
    int m_max_;
};

struct StagePointer {
    std::size_t stage_index;
    long generations_into_stage;
    friend auto operator==(const StagePointer&, const StagePointer&) -> bool = default;
};

/// Throws std::out_of_range past the schedule end.
[[nodiscard]] auto stage_at(const ObjectiveSchedule& schedule, long generation) -> StagePointer;
[[nodiscard]] auto active_subset(const ObjectiveSchedule& schedule, long generation) -> const ObjectiveSubset&;

enum class Setting { I, II, III };

[[nodiscard]] auto setting_name(Setting s) -> std::string_view; // "I", "II", "III"
[[nodiscard]] auto parse_setting(std::string_view name) -> Setting;
[[nodiscard]] auto builtin_setting(Setting which, int tau_t) -> ObjectiveSchedule;

struct SubsetDiff {
    ObjectiveSubset added;
    ObjectiveSubset removed;
};

[[nodiscard]] auto diff_subsets(const ObjectiveSubset& previous, const ObjectiveSubset& next) -> SubsetDiff;
/// (previous \ removed) ∪ added.
[[nodiscard]] auto apply_diff(const ObjectiveSubset& previous, const SubsetDiff& diff) -> ObjectiveSubset;

/// Schedule text format:
///
///     # dmocno-schedule v1
///     tau_t=50
///     warmup=300
///     m_max=6            (optional; defaults to the largest index used)
///     2,4
///     2,4,5
///
/// Blank lines and other '#' lines are ignored.
[[nodiscard]] auto parse_schedule(std::string_view text) -> ObjectiveSchedule;
[[nodiscard]] auto format_schedule(const ObjectiveSchedule& schedule) -> std::string;
[[nodiscard]] auto load_schedule(const std::filesystem::path& path) -> ObjectiveSchedule;

} // namespace dmocno

#endif
