#ifndef DMOCNO_DOMINANCE_HPP
#define DMOCNO_DOMINANCE_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "dmocno/core.hpp"

namespace dmocno {

/// a <= b componentwise and a != b (minimization).
[[nodiscard]] auto dominates(std::span<const double> a, std::span<const double> b) noexcept -> bool;
/// a <= b componentwise.
[[nodiscard]] auto weakly_dominates(std::span<const double> a, std::span<const double> b) noexcept -> bool;

/// Indices of points that no other point dominates, in ascending index order.
/// Duplicates of a nondominated point are all kept.
[[nodiscard]] auto nondominated_indices(const PointSet& points) -> std::vector<std::size_t>;

/// Nondominated points with duplicates collapsed to their first occurrence,
/// in order of first occurrence.
[[nodiscard]] auto nondominated_filter(const PointSet& points) -> PointSet;

/// Front number (0 = nondominated) of every point.
[[nodiscard]] auto nondominated_ranks(const PointSet& points) -> std::vector<int>;

} // namespace dmocno

#endif
