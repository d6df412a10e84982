#include "dmocno/hypervolume.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "dmocno/dominance.hpp"
#include "dmocno/text.hpp"

namespace dmocno {

auto HvMethod::for_dimension(std::size_t dim, const HvPolicy& policy, std::uint64_t seed) -> HvMethod
{
    if (static_cast<int>(dim) <= policy.exact_dim_cap) {
        return exact();
    }
    return monte_carlo(policy.mc_samples, seed);
}

auto HvMethod::describe() const -> std::string
{
    if (kind == HvMethodKind::Exact) {
        return "exact";
    }
    return "mc:" + std::to_string(samples);
}

auto HvMethod::parse(std::string_view text, std::uint64_t seed) -> HvMethod
{
    if (text == "exact") {
        return exact();
    }
    if (text.starts_with("mc:")) {
        return monte_carlo(text::parse_u64(text.substr(3)), seed);
    }
    throw FormatError("unknown hypervolume method '" + std::string(text) + "'");
}

auto clip_to_box(const PointSet& points, double reference) -> PointSet
{
    PointSet out(points.dim());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto p = points[i];
        if (std::all_of(p.begin(), p.end(), [&](double v) { return v >= 0.0 && v <= reference; })) {
            out.push_back(p);
        }
    }
    return out;
}

namespace {

// Helpers take row-major buffers and a per-axis upper corner `hi`; every
// point is assumed to lie inside the region already.

auto hv_2d(const std::vector<double>& pts, const std::vector<double>& hi) -> double
{
    const std::size_t n = pts.size() / 2;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t { 0 });
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return pts[2 * a] < pts[2 * b] || (pts[2 * a] == pts[2 * b] && pts[2 * a + 1] < pts[2 * b + 1]);
    });
    double area = 0.0;
    double prev_y = hi[1];
    for (auto i : order) {
        const double x = pts[2 * i];
        const double y = pts[2 * i + 1];
        if (y < prev_y) {
            area += (hi[0] - x) * (prev_y - y);
            prev_y = y;
        }
    }
    return area;
}

// Sweeps along the third axis keeping the dominated area of the (x, y)
// staircase up to date one insertion at a time.
auto hv_3d(const std::vector<double>& pts, const std::vector<double>& hi) -> double
{
    const std::size_t n = pts.size() / 3;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t { 0 });
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[3 * a + 2] < pts[3 * b + 2]; });

    std::map<double, double> stair; // x -> y, x increasing and y decreasing
    double area = 0.0;
    double volume = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = order[k];
        const double x = pts[3 * i];
        const double y = pts[3 * i + 1];

        auto it = stair.lower_bound(x);
        bool covered = false;
        double top = hi[1];
        if (it != stair.begin()) {
            const auto prev = std::prev(it);
            covered = prev->second <= y;
            top = prev->second;
        }
        if (!covered && it != stair.end() && it->first == x && it->second <= y) {
            covered = true;
        }
        if (!covered) {
            double cx = x;
            while (it != stair.end() && it->second >= y) {
                area += (it->first - cx) * (top - y);
                cx = it->first;
                top = it->second;
                it = stair.erase(it);
            }
            area += ((it == stair.end() ? hi[0] : it->first) - cx) * (top - y);
            stair.emplace_hint(it, x, y);
        }
        const double next_z = (k + 1 < n) ? pts[3 * order[k + 1] + 2] : hi[2];
        volume += area * (next_z - pts[3 * i + 2]);
    }
    return volume;
}

// Divide and conquer on a pivot: the pivot's own box is counted, and the rest
// of the region [lo, hi] is cut into d disjoint slabs
//     slab j = { x : x_i >= pivot_i for i < j, x_j < pivot_j },
// each solved recursively with the points that reach into it.
auto hv_region(std::vector<double> pts, std::size_t d, const std::vector<double>& lo, const std::vector<double>& hi)
    -> double
{
    std::size_t n = pts.size() / d;
    if (n == 0) {
        return 0.0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            pts[i * d + j] = std::max(pts[i * d + j], lo[j]);
        }
    }
    if (n > 1) {
        pts = nondominated_filter(PointSet(d, std::move(pts))).flat();
        n = pts.size() / d;
    }
    if (n == 1) {
        double v = 1.0;
        for (std::size_t j = 0; j < d; ++j) {
            v *= hi[j] - pts[j];
        }
        return v;
    }
    if (d == 2) {
        return hv_2d(pts, hi);
    }
    if (d == 3) {
        return hv_3d(pts, hi);
    }

    std::size_t pivot = 0;
    double total = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        double v = 1.0;
        for (std::size_t j = 0; j < d; ++j) {
            v *= hi[j] - pts[i * d + j];
        }
        if (v > total) {
            total = v;
            pivot = i;
        }
    }
    const std::vector<double> pv(pts.begin() + static_cast<std::ptrdiff_t>(pivot * d),
                                 pts.begin() + static_cast<std::ptrdiff_t>(pivot * d + d));
    std::vector<double> slab_lo = lo;
    std::vector<double> slab_hi = hi;
    std::vector<double> inside;
    for (std::size_t j = 0; j < d; ++j) {
        slab_hi[j] = pv[j];
        inside.clear();
        for (std::size_t i = 0; i < n; ++i) {
            const double* p = &pts[i * d];
            if (i != pivot && p[j] < pv[j]) {
                inside.insert(inside.end(), p, p + d);
            }
        }
        if (!inside.empty()) {
            total += hv_region(inside, d, slab_lo, slab_hi);
        }
        slab_hi[j] = hi[j];
        slab_lo[j] = pv[j];
    }
    return total;
}

} // namespace

auto hv_exact(const PointSet& points, double reference, int dim_cap) -> double
{
    const std::size_t d = points.dim();
    if (points.empty()) {
        return 0.0;
    }
    if (static_cast<int>(d) > dim_cap) {
        throw std::domain_error("exact hypervolume is capped at " + std::to_string(dim_cap)
                                + " objectives; use Monte Carlo for " + std::to_string(d));
    }
    for (double v : points.flat()) {
        if (!(v >= 0.0 && v <= reference)) {
            throw std::invalid_argument("hypervolume input must be clipped to the reference box");
        }
    }
    if (d == 1) {
        return reference - *std::min_element(points.flat().begin(), points.flat().end());
    }
    return hv_region(points.flat(), d, std::vector<double>(d, 0.0), std::vector<double>(d, reference));
}

namespace {

constexpr std::uint64_t kMcChunk = 1U << 16U;

} // namespace

auto hv_monte_carlo(const PointSet& points, std::uint64_t samples, std::uint64_t seed, double reference)
    -> McEstimate
{
    if (samples < 10'000) {
        throw std::invalid_argument("Monte Carlo hypervolume needs at least 1e4 samples");
    }
    if (points.empty()) {
        return { 0.0, 0.0 };
    }
    const std::size_t d = points.dim();
    // Sorting on the first coordinate lets each sample stop scanning at the
    // first point whose first coordinate already exceeds its own.
    const auto front = nondominated_filter(points);
    std::vector<std::size_t> order(front.size());
    std::iota(order.begin(), order.end(), std::size_t { 0 });
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return front[a][0] < front[b][0]; });
    std::vector<double> sorted;
    sorted.reserve(front.flat().size());
    for (auto i : order) {
        const auto p = front[i];
        sorted.insert(sorted.end(), p.begin(), p.end());
    }
    const std::size_t n = order.size();

    std::uint64_t hits = 0;
    std::vector<double> u(d);
    const std::uint64_t chunks = (samples + kMcChunk - 1) / kMcChunk;
    for (std::uint64_t c = 0; c < chunks; ++c) {
        Rng rng(derive_seed(seed, c));
        const std::uint64_t count = std::min(kMcChunk, samples - c * kMcChunk);
        for (std::uint64_t s = 0; s < count; ++s) {
            for (auto& v : u) {
                v = reference * rng.uniform();
            }
            for (std::size_t i = 0; i < n; ++i) {
                const double* p = &sorted[i * d];
                if (p[0] > u[0]) {
                    break;
                }
                std::size_t j = 1;
                while (j < d && p[j] <= u[j]) {
                    ++j;
                }
                if (j == d) {
                    ++hits;
                    break;
                }
            }
        }
    }
    const double box = std::pow(reference, static_cast<double>(d));
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    const double se = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
    return { box * frac, se };
}

auto compute_hv(const PointSet& points, const HvMethod& method, double reference, int dim_cap) -> McEstimate
{
    if (method.kind == HvMethodKind::Exact) {
        return { hv_exact(points, reference, dim_cap), 0.0 };
    }
    return hv_monte_carlo(points, method.samples, method.seed, reference);
}

} // namespace dmocno
