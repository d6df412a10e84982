#include "dmocno/reference_directions.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace dmocno {

auto lattice_size(int m, int divisions) -> std::size_t
{
    if (m < 1 || divisions < 0) {
        throw std::invalid_argument("lattice needs m >= 1 and divisions >= 0");
    }
    // C(divisions + m - 1, m - 1), saturating.
    const auto k = static_cast<std::size_t>(m - 1);
    const auto top = static_cast<std::size_t>(divisions) + k;
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::size_t factor = top - k + i;
        if (result > std::numeric_limits<std::size_t>::max() / factor) {
            return std::numeric_limits<std::size_t>::max();
        }
        result = result * factor / i;
    }
    return result;
}

namespace {

void emit(int m, int divisions, int depth, int remaining, std::vector<int>& counts, PointSet& out)
{
    if (depth == m - 1) {
        counts[static_cast<std::size_t>(depth)] = remaining;
        std::vector<double> row(static_cast<std::size_t>(m));
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = static_cast<double>(counts[j]) / static_cast<double>(divisions);
        }
        out.push_back(row);
        return;
    }
    for (int c = remaining; c >= 0; --c) {
        counts[static_cast<std::size_t>(depth)] = c;
        emit(m, divisions, depth + 1, remaining - c, counts, out);
    }
}

} // namespace

auto simplex_lattice(int m, int divisions) -> PointSet
{
    if (m < 1 || divisions < 1) {
        if (m == 1 && divisions >= 0) {
            return PointSet { { 1.0 } };
        }
        throw std::invalid_argument("lattice needs m >= 1 and divisions >= 1");
    }
    PointSet out(static_cast<std::size_t>(m));
    out.reserve(lattice_size(m, divisions));
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    emit(m, divisions, 0, divisions, counts, out);
    return out;
}

auto reference_lattice(int m, std::size_t target) -> PointSet
{
    if (m < 1 || target == 0) {
        throw std::invalid_argument("reference lattice needs m >= 1 and target >= 1");
    }
    if (m == 1) {
        return PointSet { { 1.0 } };
    }
    int h = 1;
    while (lattice_size(m, h) < target) {
        ++h;
    }
    if (h == 1 || lattice_size(m, h) <= 2 * target) {
        return simplex_lattice(m, h);
    }
    const int outer = h - 1;
    const std::size_t outer_size = lattice_size(m, outer);
    int inner = 1;
    while (inner < outer && outer_size + lattice_size(m, inner) < target) {
        ++inner;
    }
    PointSet out = simplex_lattice(m, outer);
    const PointSet shrink = simplex_lattice(m, inner);
    const double centre = 1.0 / static_cast<double>(m);
    std::vector<double> row(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < shrink.size(); ++i) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = 0.5 * shrink[i][j] + 0.5 * centre;
        }
        out.push_back(row);
    }
    return out;
}

} // namespace dmocno
