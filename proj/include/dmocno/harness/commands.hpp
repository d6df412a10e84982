#ifndef DMOCNO_HARNESS_COMMANDS_HPP
#define DMOCNO_HARNESS_COMMANDS_HPP

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dmocno/harness/archives.hpp"
#include "dmocno/harness/config.hpp"
#include "dmocno/metrics.hpp"

namespace dmocno::harness {

/// Hardware concurrency, at least 1.
[[nodiscard]] auto default_jobs() -> unsigned;

/// Runs body(0..count-1) on up to `jobs` threads. After all threads finish,
/// rethrows the exception of the lowest failing index, if any.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

void cmd_list(std::ostream& out);

struct FrontsSummary {
    std::size_t computed = 0;
    std::size_t skipped = 0;
    std::vector<std::string> degenerate; // "dtlz1 m_max=3 subset {1,2}"
};

/// Samples every distinct (problem instance, subset) of the configured
/// settings. Existing archives with matching headers are kept. A degenerate
/// front of a Minus problem is an error; classical ones are archived and reported.
auto cmd_fronts(const ExperimentConfig& config, unsigned jobs, std::ostream& log) -> FrontsSummary;

struct RunSummary {
    std::size_t executed = 0;
    std::size_t skipped = 0;
};

/// Executes every (problem, setting, tau_t, algorithm, run) cell whose record
/// is missing or stale. Throws when a needed front archive is absent.
auto cmd_run(const ExperimentConfig& config, unsigned jobs, std::ostream& log) -> RunSummary;

struct MhvSummary {
    std::vector<MhvTable> tables;
    std::size_t incomplete_cells = 0;
    std::size_t bound_violations = 0; // runs with a stage ratio outside [0, 1 + tolerance]
};

/// Writes <out>/mhv/<setting>.csv (cells), <setting>.txt (human table) and
/// <setting>_runs.csv (per-run MHV and stage ratios).
auto cmd_mhv(const ExperimentConfig& config, unsigned jobs, std::ostream& log) -> MhvSummary;

struct RankSummary {
    std::string setting;
    int tau_t = 0;
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    FriedmanResult ranks;
};

/// Reads the MHV tables and writes <out>/rank/<setting>.csv and .svg. Throws
/// with fewer than two algorithms or when a cell is incomplete.
auto cmd_rank(const ExperimentConfig& config, std::ostream& log) -> std::vector<RankSummary>;

struct FrontPlotRequest {
    std::vector<std::string> problems;      // one panel each, side by side
    int m_max = 3;
    std::optional<ObjectiveSubset> subset;  // defaults to the pair itself
    std::pair<int, int> pair { 1, 2 };
};

/// Scatter of the normalized front projected on the pair. Fronts missing from
/// the archive are sampled on demand with a warning. Returns the SVG path.
auto cmd_front_plot(const ExperimentConfig& config, const FrontPlotRequest& request, std::ostream& log)
    -> std::filesystem::path;

struct VerifyOptions {
    int resolution = 8;
    std::size_t budget = kDefaultFrontBudget;
};

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Inclusion on Minus-DTLZ1/2 (m_max 3, n 4), the legacy F1 counter-check and
/// the classical versus Minus DTLZ1 degeneracy contrast.
auto cmd_verify(const VerifyOptions& options, std::ostream& log) -> std::vector<VerifyCheck>;

} // namespace dmocno::harness

#endif
