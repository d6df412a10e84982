#ifndef DMOCNO_FRONTIER_HPP
#define DMOCNO_FRONTIER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dmocno/core.hpp"
#include "dmocno/dominance.hpp"
#include "dmocno/hypervolume.hpp"
#include "dmocno/problems.hpp"

namespace dmocno {

/// A front without spread in some objective (or fewer than two distinct points).
class DegenerateFrontError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Optimal values of a single DTLZ distance variable.
struct DistanceOptimum {
    std::vector<double> values; // every entry attains the optimum
    double term;                // per-variable contribution to g at the optimum
};

/// Classical: x = 0.5. Minus-DTLZ2/4: {0, 1}. Minus-DTLZ1/3: the two maximizers
/// of (x - 0.5)^2 - cos(20 pi (x - 0.5)), found numerically and cached.
/// Throws std::invalid_argument for WFG families.
[[nodiscard]] auto distance_optimum(const ProblemSpec& spec) -> DistanceOptimum;

struct FrontOptions {
    std::size_t cap = 10'000; // points kept after filtering
    HvPolicy hv;
};

inline constexpr std::size_t kDefaultFrontBudget = 200'000;

struct ReferenceFront {
    ProblemSpec spec;
    ObjectiveSubset subset;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    std::size_t cap = 0;
    double hv_reference = kHvReference;
    int hv_exact_dim_cap = 0;
    std::uint64_t mc_samples = 0;
    PointSet points {}; // raw objective values on `subset`, mutually nondominated
    std::vector<double> ideal {};
    std::vector<double> nadir {};
    bool degenerate = false;
    HvMethod hv_method {};
    double front_hv = 0.0; // hypervolume of the normalized points (0 when degenerate)
    double hv_standard_error = 0.0;
};

/// Decision vectors aimed at the Pareto front of `subset`, evaluated on all
/// m_max objectives. Deterministic in `seed`; `budget` rows are returned.
[[nodiscard]] auto sample_point_cloud(const ProblemSpec& spec, const ObjectiveSubset& subset, std::size_t budget,
                                      std::uint64_t seed) -> PointSet;

/// Nondominated set of the projected point cloud, thinned to `options.cap`,
/// with ideal/nadir and the normalized hypervolume. Throws std::invalid_argument
/// when budget < 100. A degenerate front is flagged rather than rejected.
[[nodiscard]] auto sample_front(const ProblemSpec& spec, const ObjectiveSubset& subset, std::size_t budget,
                                std::uint64_t seed, const FrontOptions& options = {}) -> ReferenceFront;

/// Deterministic farthest-point selection of `cap` rows, seeded with the
/// per-objective extremes; distances use the set's own min-max scaling.
[[nodiscard]] auto thin_farthest_point(const PointSet& points, std::size_t cap) -> PointSet;

/// Componentwise min and max. Throws DegenerateFrontError on an empty set or a
/// zero range in any dimension.
[[nodiscard]] auto ideal_nadir(const PointSet& front) -> std::pair<std::vector<double>, std::vector<double>>;

/// True when fewer than two distinct points exist or some objective has no spread.
[[nodiscard]] auto is_degenerate(const PointSet& front) -> bool;

struct InclusionCounterexample {
    enum class Kind {
        NotOptimalUnderB, // optimal on the smaller subset, dominated on the larger one
        ObjectiveMismatch // a shared objective takes different values under the two subsets
    };
    Kind kind;
    std::vector<double> decision;
    std::vector<double> under_a;
    std::vector<double> under_b;
};

struct InclusionReport {
    bool holds = true;
    std::size_t grid_points = 0;
    std::size_t optimal_under_a = 0;
    std::size_t optimal_under_b = 0;
    /// Whether every A-optimal grid point was also B-optimal, ignoring value mismatches.
    bool decision_inclusion = true;
    std::optional<InclusionCounterexample> counterexample;
};

inline constexpr std::size_t kInclusionGridCap = 5'000'000;

/// Enumerates the decision grid lower + (upper - lower) * i / resolution,
/// i = 0..resolution, and checks that every grid point that is Pareto-optimal
/// under `a` is also Pareto-optimal under `b`, and that shared objectives agree.
/// Requires a to be a subset of b, n <= 6 and resolution <= 12.
[[nodiscard]] auto verify_inclusion(const ProblemSpec& spec, const ObjectiveSubset& a, const ObjectiveSubset& b,
                                    int resolution, std::size_t max_points = kInclusionGridCap) -> InclusionReport;

/// Same check for the time-dependent legacy F1 at m = m_a versus m = m_b on
/// [0, 1]^n, comparing objectives 1..m_a.
[[nodiscard]] auto verify_inclusion_legacy(int n, int m_a, int m_b, int resolution,
                                           std::size_t max_points = kInclusionGridCap) -> InclusionReport;

} // namespace dmocno

#endif
