#ifndef DMOCNO_REFERENCE_DIRECTIONS_HPP
#define DMOCNO_REFERENCE_DIRECTIONS_HPP

#include <cstddef>

#include "dmocno/core.hpp"

namespace dmocno {

/// Number of points of the simplex lattice with `divisions` steps in m dimensions.
[[nodiscard]] auto lattice_size(int m, int divisions) -> std::size_t;

/// Every vector of multiples of 1/divisions summing to 1, in lexicographically
/// descending order of the leading coordinates.
[[nodiscard]] auto simplex_lattice(int m, int divisions) -> PointSet;

/// Smallest single-layer lattice with at least `target` points. When that
/// lattice would hold more than 2 * target points, a two-layer lattice is used
/// instead: the largest layer below target plus an inner layer shrunk by half
/// toward the centroid, with the inner granularity just large enough to reach target.
[[nodiscard]] auto reference_lattice(int m, std::size_t target) -> PointSet;

} // namespace dmocno

#endif
