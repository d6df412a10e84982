#ifndef DMOCNO_HARNESS_CONFIG_HPP
#define DMOCNO_HARNESS_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmocno/dynamics.hpp"
#include "dmocno/frontier.hpp"
#include "dmocno/hypervolume.hpp"
#include "dmocno/optimizer.hpp"
#include "dmocno/problems.hpp"

namespace dmocno::harness {

/// A built-in setting or a schedule file; custom schedules are retimed to every tau_t.
struct SettingRef {
    std::string name;
    std::optional<Setting> builtin;
    std::optional<ObjectiveSchedule> custom;
    std::filesystem::path source; // schedule file of a custom setting

    [[nodiscard]] auto schedule(int tau_t) const -> ObjectiveSchedule;
    [[nodiscard]] auto m_max() const -> int;
};

struct ExperimentConfig {
    std::vector<std::string> problems;
    std::vector<SettingRef> settings;
    std::vector<int> tau_values { 25, 50, 100 };
    std::vector<std::string> algorithms;
    int runs = 31;
    std::uint64_t base_seed = 0;
    std::size_t front_budget = kDefaultFrontBudget;
    std::size_t front_cap = 10'000;
    HvPolicy hv;
    EaConfig ea; // seed unused; every run derives its own
    std::filesystem::path output = "results";

    /// Throws std::invalid_argument on empty lists, unknown identifiers,
    /// duplicate entries or values outside the packing ranges of run_seed.
    void validate() const;
    [[nodiscard]] auto front_options() const -> FrontOptions;
    [[nodiscard]] auto setting(std::string_view name) const -> const SettingRef&;
};

/// Ten Minus problems, Setting I, tau_t {25, 50, 100}, the three baseline
/// algorithms, 31 runs, seed 0.
[[nodiscard]] auto default_config() -> ExperimentConfig;

/// Config text:
///
///     # dmocno-config v1
///     problems = minus-dtlz1, minus-wfg4
///     settings = I, III, mine          (built-in names, section names or schedule paths)
///     tau_t = 25, 50
///     algorithms = rvea-retain, rvea-restart0.5
///     runs = 31
///     base_seed = 7
///     output = results
///     front_budget = 200000
///     front_cap = 10000
///     hv_exact_dim_cap = 6
///     mc_samples = 5000000
///     population = 300
///     eta_c = 20
///     eta_m = 20
///     crossover_probability = 1
///     mutation_probability = 1/n
///
///     [setting]
///     name = mine
///     schedule = schedules/mine.txt
///
/// Relative paths resolve against `base_dir`. Sections not named in
/// `settings` are appended to it. Unknown keys are errors.
[[nodiscard]] auto parse_config(std::string_view text, const std::filesystem::path& base_dir) -> ExperimentConfig;
[[nodiscard]] auto load_config(const std::filesystem::path& path) -> ExperimentConfig;

/// Seed of one run. The coordinates are packed injectively into 64 bits
/// (problem 5, setting 8, tau_t 16, algorithm 21, run 14 bits) and mixed with
/// the base seed by a bijection, so distinct cells never share a seed.
[[nodiscard]] auto run_seed(std::uint64_t base_seed, const ProblemSpec& spec, std::size_t setting_index, int tau_t,
                            const ChangeResponse& algorithm, int run) -> std::uint64_t;
[[nodiscard]] auto run_seed(const ExperimentConfig& config, std::string_view problem, std::string_view setting,
                            int tau_t, std::string_view algorithm, int run) -> std::uint64_t;

/// Sampling seed of the reference front for `subset` of `spec`.
[[nodiscard]] auto front_seed(std::uint64_t base_seed, const ProblemSpec& spec, const ObjectiveSubset& subset)
    -> std::uint64_t;

/// Position used for packing: I = 0, II = 1, III = 2, custom settings 3, 4, ...
/// in configuration order.
[[nodiscard]] auto setting_index(const ExperimentConfig& config, std::string_view name) -> std::size_t;

} // namespace dmocno::harness

#endif
