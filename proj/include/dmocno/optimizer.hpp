#ifndef DMOCNO_OPTIMIZER_HPP
#define DMOCNO_OPTIMIZER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dmocno/core.hpp"
#include "dmocno/dynamics.hpp"
#include "dmocno/metrics.hpp"
#include "dmocno/problems.hpp"

namespace dmocno {

struct Individual {
    std::vector<double> decision;
    std::vector<double> objectives; // on the active subset
    bool stale = false;             // objectives predate the last subset change
    friend auto operator==(const Individual&, const Individual&) -> bool = default;
};

using Population = std::vector<Individual>;

struct EaConfig {
    int population_size = 300;
    double eta_c = 20.0;
    double eta_m = 20.0;
    double crossover_probability = 1.0;
    /// Per-variable mutation probability; a negative value means 1/n.
    double mutation_probability = -1.0;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless population_size >= 4 and even,
    /// probabilities lie in [0, 1] and both distribution indices are >= 0.
    void validate() const;
    [[nodiscard]] auto mutation_rate(int n) const -> double;
};

struct ChangeResponse {
    enum class Strategy { Retain, PartialRestart, InheritanceFill };
    Strategy strategy = Strategy::Retain;
    double fraction = 1.0; // PartialRestart only, in (0, 1]

    static auto retain() -> ChangeResponse { return { Strategy::Retain, 1.0 }; }
    static auto restart(double fraction) -> ChangeResponse;
    static auto inherit() -> ChangeResponse { return { Strategy::InheritanceFill, 1.0 }; }

    /// "rvea-retain", "rvea-restart<f>" (shortest decimal of f), "rvea-inherit".
    [[nodiscard]] auto algorithm_id() const -> std::string;
    /// Accepts the identifiers produced by algorithm_id; "rvea-restart" alone means f = 1.
    static auto parse(std::string_view id) -> ChangeResponse;

    friend auto operator==(const ChangeResponse&, const ChangeResponse&) -> bool = default;
};

/// The three baseline identifiers (full restart as rvea-restart1).
[[nodiscard]] auto known_algorithms() -> std::vector<std::string>;

struct RunRecord {
    std::string problem;
    int m_max = 0;
    std::string setting;
    int tau_t = 0;
    std::string algorithm;
    int run = 0;
    std::uint64_t seed = 0;
    std::vector<StageSnapshot> snapshots;
    double wall_seconds = 0.0; // not part of equality
    friend auto operator==(const RunRecord& a, const RunRecord& b) -> bool
    {
        return a.problem == b.problem && a.m_max == b.m_max && a.setting == b.setting && a.tau_t == b.tau_t
            && a.algorithm == b.algorithm && a.run == b.run && a.seed == b.seed && a.snapshots == b.snapshots;
    }
};

/// Indices (ascending) of the `target` survivors among `candidates`, whose
/// columns are the active objectives: whole nondominated fronts first, then
/// the critical front by reference-direction niching. Equal candidates are
/// resolved in favour of the lower index. Requires target <= candidates.size().
[[nodiscard]] auto environmental_selection(const PointSet& candidates, std::size_t target, Rng& rng)
    -> std::vector<std::size_t>;

/// Re-evaluates every member on `subset` and clears the stale flag.
void evaluate_population(const ProblemSpec& spec, const ObjectiveSubset& subset, Population& population);

/// Applies the strategy for a switch from `old_subset` to `new_subset`; every
/// member of the result is evaluated on `new_subset` and has the same size as
/// the input population.
[[nodiscard]] auto respond_to_change(const ProblemSpec& spec, Population population, const ObjectiveSubset& old_subset,
                                     const ObjectiveSubset& new_subset, const ChangeResponse& response,
                                     const EaConfig& ea, Rng& rng) -> Population;

/// Simulated binary crossover of two parents into two children, bounded.
void sbx_crossover(std::span<const double> p1, std::span<const double> p2, std::span<double> c1, std::span<double> c2,
                   const std::vector<Bound>& bounds, const EaConfig& ea, Rng& rng);
/// Bounded polynomial mutation in place, clamped to the bounds.
void polynomial_mutation(std::span<double> x, const std::vector<Bound>& bounds, const EaConfig& ea, Rng& rng);

/// Full generational run over the schedule. Fills problem, m_max, tau_t,
/// algorithm, seed and snapshots; setting and run are left to the caller.
[[nodiscard]] auto run_dynamic(const ProblemSpec& spec, const ObjectiveSchedule& schedule, const EaConfig& ea,
                               const ChangeResponse& response) -> RunRecord;

} // namespace dmocno

#endif
