#ifndef DMOCNO_HYPERVOLUME_HPP
#define DMOCNO_HYPERVOLUME_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "dmocno/core.hpp"

namespace dmocno {

/// Reference value per objective in normalized space.
inline constexpr double kHvReference = 1.1;

/// How front and snapshot hypervolumes are computed by the pipeline.
/// Exact computation on 10k-point fronts stops being affordable past six
/// objectives, so larger subsets are estimated.
struct HvPolicy {
    int exact_dim_cap = 6;
    std::uint64_t mc_samples = 5'000'000;
    double reference = kHvReference;
};

enum class HvMethodKind { Exact, MonteCarlo };

struct HvMethod {
    HvMethodKind kind = HvMethodKind::Exact;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    static auto exact() -> HvMethod { return {}; }
    static auto monte_carlo(std::uint64_t samples, std::uint64_t seed) -> HvMethod
    {
        return { HvMethodKind::MonteCarlo, samples, seed };
    }
    /// Exact up to the policy cap, Monte Carlo above it.
    static auto for_dimension(std::size_t dim, const HvPolicy& policy, std::uint64_t seed) -> HvMethod;

    /// "exact" or "mc:<samples>"; the seed is recorded separately.
    [[nodiscard]] auto describe() const -> std::string;
    static auto parse(std::string_view text, std::uint64_t seed) -> HvMethod;

    friend auto operator==(const HvMethod&, const HvMethod&) -> bool = default;
};

struct McEstimate {
    double value;
    double standard_error;
};

/// Keeps points whose every coordinate lies in the closed box [0, reference].
[[nodiscard]] auto clip_to_box(const PointSet& points, double reference = kHvReference) -> PointSet;

/// Exact dominated volume against (reference, ..., reference), by pivot
/// splitting above three objectives and sweeps below.
/// Points outside the box must be clipped first; throws std::domain_error
/// above `dim_cap` objectives.
[[nodiscard]] auto hv_exact(const PointSet& points, double reference = kHvReference, int dim_cap = 8) -> double;

/// Uniform sampling in [0, reference)^m; throws std::invalid_argument below 1e4 samples.
/// Samples are drawn in fixed chunks with per-chunk seeds, so the result
/// does not depend on how chunks are scheduled.
[[nodiscard]] auto hv_monte_carlo(const PointSet& points, std::uint64_t samples, std::uint64_t seed,
                                  double reference = kHvReference) -> McEstimate;

/// Dispatches on `method`; the standard error is 0 for exact results.
[[nodiscard]] auto compute_hv(const PointSet& points, const HvMethod& method, double reference = kHvReference,
                              int dim_cap = 8) -> McEstimate;

} // namespace dmocno

#endif
