#ifndef DMOCNO_METRICS_HPP
#define DMOCNO_METRICS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dmocno/core.hpp"
#include "dmocno/frontier.hpp"

namespace dmocno {

/// Stage ratios may exceed 1 by this much before a run is rejected.
inline constexpr double kRatioTolerance = 0.05;

/// Objective vectors held at the end of one stage (raw objective space).
struct StageSnapshot {
    std::size_t stage = 0;
    ObjectiveSubset subset;
    long generation_end = 0; // generation count when the stage ended
    PointSet points;
    friend auto operator==(const StageSnapshot&, const StageSnapshot&) -> bool = default;
};

/// (f - ideal) / (nadir - ideal) per column; throws std::invalid_argument on
/// a zero or negative range or a dimension mismatch.
[[nodiscard]] auto normalize(const PointSet& points, std::span<const double> ideal, std::span<const double> nadir)
    -> PointSet;
[[nodiscard]] auto denormalize(const PointSet& points, std::span<const double> ideal, std::span<const double> nadir)
    -> PointSet;

struct StageScore {
    double ratio;
    double hv;             // normalized hypervolume of the snapshot
    double standard_error; // of hv; 0 for exact
};

/// HV(normalized snapshot) / front_hv, using the front's method and reference
/// point. Monte Carlo
/// numerators reuse the front's sample count with `seed` as an independent stream.
/// An empty snapshot after clipping scores 0. Throws DegenerateFrontError for a
/// degenerate front and std::invalid_argument when the subsets differ.
[[nodiscard]] auto stage_score(const StageSnapshot& snapshot, const ReferenceFront& front, std::uint64_t seed)
    -> StageScore;
[[nodiscard]] auto stage_ratio(const StageSnapshot& snapshot, const ReferenceFront& front, std::uint64_t seed)
    -> double;

struct MhvReport {
    std::string setting;
    std::string problem;
    int tau_t = 0;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::vector<double> stage_ratios;
    double mhv = 0.0;
    /// Mean of the raw normalized stage hypervolumes; diagnostic only, never reported.
    double mean_stage_hv = 0.0;

    /// Every ratio lies in [0, 1 + kRatioTolerance].
    [[nodiscard]] auto within_bounds() const -> bool;
};

/// One snapshot per stage, matched to fronts by position. Stage s draws its
/// Monte Carlo stream (if any) from derive_seed(seed, s).
[[nodiscard]] auto mhv(const std::vector<StageSnapshot>& snapshots, const std::vector<const ReferenceFront*>& fronts,
                       std::uint64_t seed) -> MhvReport;

struct Aggregate {
    double mean;
    double standard_deviation; // n - 1 denominator
};

/// Throws std::invalid_argument for fewer than two values.
[[nodiscard]] auto aggregate_runs(std::span<const double> values) -> Aggregate;
[[nodiscard]] auto aggregate_runs(const std::vector<MhvReport>& reports) -> Aggregate;

/// Ranks within one cell: 1 for the highest value, ties share the mean rank.
[[nodiscard]] auto rank_cell(std::span<const double> values) -> std::vector<double>;

struct FriedmanResult {
    std::vector<double> average_ranks;           // per algorithm
    std::vector<std::vector<double>> cell_ranks; // per cell, per algorithm
};

/// `table[c][a]` is the mean MHV of algorithm a in cell c. Needs k >= 2
/// algorithms, at least one cell, and no NaN (missing) entries.
[[nodiscard]] auto friedman_ranks(const std::vector<std::vector<double>>& table) -> FriedmanResult;

} // namespace dmocno

#endif
