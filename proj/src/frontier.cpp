#include "dmocno/frontier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "dmocno/metrics.hpp"
#include "dmocno/wfg.hpp"

namespace dmocno {

namespace {

auto rastrigin_term(double x) -> double
{
    const double d = x - 0.5;
    return d * d - std::cos(20.0 * std::numbers::pi * d);
}

auto rastrigin_slope(double x) -> double
{
    const double d = x - 0.5;
    return 2.0 * d + 20.0 * std::numbers::pi * std::sin(20.0 * std::numbers::pi * d);
}

// Grid search, then bisection on the derivative inside the winning cell's
// neighbourhood.
auto rastrigin_maximizer() -> double
{
    constexpr int kGrid = 100'000;
    int best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kGrid; ++i) {
        const double x = static_cast<double>(i) / kGrid;
        const double v = rastrigin_term(x);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    double lo = static_cast<double>(std::max(best - 1, 0)) / kGrid;
    double hi = static_cast<double>(std::min(best + 1, kGrid)) / kGrid;
    if (rastrigin_slope(lo) < 0.0 || rastrigin_slope(hi) > 0.0) {
        return static_cast<double>(best) / kGrid;
    }
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        (rastrigin_slope(mid) > 0.0 ? lo : hi) = mid;
    }
    const double x = 0.5 * (lo + hi);
    return rastrigin_term(x) >= best_value ? x : static_cast<double>(best) / kGrid;
}

auto uses_rastrigin(Family f) -> bool
{
    return f == Family::DTLZ1 || f == Family::DTLZ3;
}

// Value of a position variable that maximizes the factor it contributes to
// objectives 1..M-j ("a" factor); 1 minus it maximizes the objective M-j+1
// factor ("b" factor). DTLZ1 uses x / (1 - x), the spherical problems and the
// WFG concave shape use cos / sin or sin / cos.
auto a_peak(Family f) -> double
{
    if (is_wfg(f)) {
        return 1.0; // sin(pi/2 x)
    }
    return f == Family::DTLZ1 ? 1.0 : 0.0;
}

struct PositionPlan {
    std::vector<int> free;             // 0-based indices of free shape parameters
    std::vector<double> fixed;         // value for every shape parameter (ignored when free)
};

// Shape parameter j (1-based, 1..M-1) feeds the "a" factor of objectives
// i <= M-j and the "b" factor of objective M-j+1. On the Pareto front of a
// subset S the parameter stays free only if it trades off two members of S;
// otherwise it is pinned where the S objectives it touches are best.
auto plan_positions(const ProblemSpec& spec, const ObjectiveSubset& subset) -> PositionPlan
{
    const int M = spec.m_max();
    const double peak = a_peak(spec.family());
    PositionPlan plan;
    plan.fixed.assign(static_cast<std::size_t>(M - 1), peak);
    for (int j = 1; j <= M - 1; ++j) {
        bool a_role = false;
        for (int i : subset) {
            a_role = a_role || i <= M - j;
        }
        const bool b_role = subset.contains(M - j + 1);
        auto& value = plan.fixed[static_cast<std::size_t>(j - 1)];
        if (a_role && b_role) {
            plan.free.push_back(j - 1);
        } else if (a_role) {
            value = spec.minus() ? peak : 1.0 - peak;
        } else if (b_role) {
            value = spec.minus() ? 1.0 - peak : peak;
        } else {
            value = peak;
        }
    }
    return plan;
}

// ---- WFG: build decision vectors that realize given shape parameters ----

// Inverse of a continuous map on [from, to] that starts at 0 and reaches 1,
// following the first passage through each level.
class FirstPassageInverse {
public:
    template <typename F>
    FirstPassageInverse(F f, double from, double to) : fn_(f), grid_(kGrid + 1), best_(kGrid + 1)
    {
        double running = -std::numeric_limits<double>::infinity();
        for (int i = 0; i <= kGrid; ++i) {
            grid_[static_cast<std::size_t>(i)] = from + (to - from) * static_cast<double>(i) / kGrid;
            running = std::max(running, f(grid_[static_cast<std::size_t>(i)]));
            best_[static_cast<std::size_t>(i)] = running;
        }
        peak_ = find_peak();
    }

    [[nodiscard]] auto operator()(double target) const -> double
    {
        const auto it = std::lower_bound(best_.begin(), best_.end(), target);
        if (it == best_.begin()) {
            return grid_.front();
        }
        if (it == best_.end()) {
            return peak_;
        }
        const auto idx = static_cast<std::size_t>(it - best_.begin());
        double lo = grid_[idx - 1];
        double hi = grid_[idx];
        for (int k = 0; k < 60; ++k) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) {
                break;
            }
            (fn_(mid) < target ? lo : hi) = mid;
        }
        return hi;
    }

private:
    // Targets at or above the grid maximum: refine the best node's
    // neighbourhood, where the map is unimodal.
    [[nodiscard]] auto find_peak() const -> double
    {
        const auto top = static_cast<std::size_t>(std::max_element(best_.begin(), best_.end()) - best_.begin());
        std::size_t first = top;
        while (first > 0 && best_[first - 1] == best_[top]) {
            --first;
        }
        double lo = grid_[first > 0 ? first - 1 : 0];
        double hi = grid_[std::min(first + 1, grid_.size() - 1)];
        for (int k = 0; k < 200; ++k) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            (fn_(m1) < fn_(m2) ? lo : hi) = fn_(m1) < fn_(m2) ? m1 : m2;
        }
        const double x = 0.5 * (lo + hi);
        return fn_(x) >= fn_(grid_[first]) ? x : grid_[first];
    }

    static constexpr int kGrid = 100'000;
    double (*fn_)(double);
    std::vector<double> grid_;
    std::vector<double> best_;
    double peak_ = 0.0;
};

auto multi_4(double y) -> double { return wfg::s_multi(y, 30, 10.0, 0.35); }
auto multi_9(double y) -> double { return wfg::s_multi(y, 30, 95.0, 0.35); }
auto decept(double y) -> double { return wfg::s_decept(y, 0.35, 0.001, 0.05); }
auto linear(double y) -> double { return wfg::s_linear(y, 0.35); }

auto inverse_multi_4() -> const FirstPassageInverse&
{
    static const FirstPassageInverse inv(multi_4, 0.35, 1.0);
    return inv;
}
auto inverse_multi_9() -> const FirstPassageInverse&
{
    static const FirstPassageInverse inv(multi_9, 0.35, 1.0);
    return inv;
}
auto inverse_decept() -> const FirstPassageInverse&
{
    static const FirstPassageInverse inv(decept, 0.35, 1.0);
    return inv;
}
auto inverse_linear() -> const FirstPassageInverse&
{
    static const FirstPassageInverse inv(linear, 0.35, 1.0);
    return inv;
}

auto mean_of(const std::vector<double>& y, std::size_t from, std::size_t to) -> double
{
    return wfg::r_sum(std::span<const double>(y).subspan(from, to - from));
}

auto undo_b_param(double w, double u) -> double
{
    return std::pow(w, 1.0 / wfg::b_param_exponent(u));
}

// `theta` holds the M-1 shape parameters; the distance part is set to its
// optimum (t_M = 0 classical, t_M = 1 Minus). Writes the decision vector z.
void wfg_decision(const ProblemSpec& spec, std::span<const double> theta, std::span<double> z)
{
    const auto n = static_cast<std::size_t>(spec.n());
    const auto k = static_cast<std::size_t>(spec.position_params());
    const auto M = static_cast<std::size_t>(spec.m_max());
    const std::size_t group = k / (M - 1);
    const Family fam = spec.family();
    const bool nonsep = fam == Family::WFG6 || fam == Family::WFG9;

    // Per-variable value wanted after the variable's own transformation chain.
    // r_nonsep over A equal-weight entries reaches a level v exactly when
    // ceil(A/2) entries sit at v and the others at 0.
    std::vector<double> v(n, 0.0);
    auto fill = [&](std::size_t begin, std::size_t count, double level) {
        const std::size_t active = nonsep ? (count + 1) / 2 : count;
        for (std::size_t i = 0; i < count; ++i) {
            v[begin + i] = i < active ? level : 0.0;
        }
    };
    for (std::size_t j = 0; j + 1 < M; ++j) {
        fill(j * group, group, theta[j]);
    }
    fill(k, n - k, spec.minus() ? 1.0 : 0.0);

    std::vector<double> y(n);
    switch (fam) {
    case Family::WFG4:
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = inverse_multi_4()(v[i]);
        }
        break;
    case Family::WFG5:
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = inverse_decept()(v[i]);
        }
        break;
    case Family::WFG6:
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = i < k ? v[i] : inverse_linear()(v[i]);
        }
        break;
    case Family::WFG7:
        for (std::size_t i = k; i < n; ++i) {
            y[i] = inverse_linear()(v[i]);
        }
        for (std::size_t i = k; i-- > 0;) {
            y[i] = undo_b_param(v[i], mean_of(y, i + 1, n));
        }
        break;
    case Family::WFG8:
        for (std::size_t i = 0; i < k; ++i) {
            y[i] = v[i];
        }
        for (std::size_t i = k; i < n; ++i) {
            y[i] = undo_b_param(inverse_linear()(v[i]), mean_of(y, 0, i));
        }
        break;
    case Family::WFG9:
        for (std::size_t i = n; i-- > 0;) {
            const double w = i < k ? inverse_decept()(v[i]) : inverse_multi_9()(v[i]);
            y[i] = i + 1 < n ? undo_b_param(w, mean_of(y, i + 1, n)) : w;
        }
        break;
    default:
        throw std::logic_error("not a WFG family");
    }
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = 2.0 * static_cast<double>(i + 1) * std::clamp(y[i], 0.0, 1.0);
    }
}

// DTLZ decision from shape parameters: DTLZ4 stores theta^(1/alpha).
void dtlz_decision(const ProblemSpec& spec, std::span<const double> theta, double distance, std::span<double> x)
{
    const auto M = static_cast<std::size_t>(spec.m_max());
    for (std::size_t j = 0; j + 1 < M; ++j) {
        x[j] = spec.family() == Family::DTLZ4 ? std::pow(theta[j], 1.0 / kDtlz4Alpha) : theta[j];
    }
    for (std::size_t i = M - 1; i < x.size(); ++i) {
        x[i] = distance;
    }
}

constexpr std::size_t kChunk = 4096;
constexpr std::size_t kThinBucket = 64;

auto normalize_rows(const PointSet& points, const std::vector<double>& lo, const std::vector<double>& hi) -> PointSet
{
    const std::size_t d = points.dim();
    std::vector<double> flat = points.flat();
    for (std::size_t i = 0; i < flat.size(); ++i) {
        const std::size_t j = i % d;
        const double range = hi[j] - lo[j];
        flat[i] = range > 0.0 ? (flat[i] - lo[j]) / range : 0.0;
    }
    return { d, std::move(flat) };
}

} // namespace

auto distance_optimum(const ProblemSpec& spec) -> DistanceOptimum
{
    if (is_wfg(spec.family())) {
        throw std::invalid_argument("distance_optimum is defined for DTLZ problems only");
    }
    if (!spec.minus()) {
        return { { 0.5 }, uses_rastrigin(spec.family()) ? rastrigin_term(0.5) : 0.0 };
    }
    if (!uses_rastrigin(spec.family())) {
        return { { 0.0, 1.0 }, 0.25 };
    }
    static const double x_star = rastrigin_maximizer();
    const double other = 1.0 - x_star;
    return { { std::min(x_star, other), std::max(x_star, other) }, rastrigin_term(x_star) };
}

auto sample_point_cloud(const ProblemSpec& spec, const ObjectiveSubset& subset, std::size_t budget,
                        std::uint64_t seed) -> PointSet
{
    if (subset.empty()) {
        throw std::invalid_argument("objective subset must not be empty");
    }
    subset.check_within(spec.m_max());
    const auto M = static_cast<std::size_t>(spec.m_max());
    const auto n = static_cast<std::size_t>(spec.n());
    const bool wfg_family = is_wfg(spec.family());
    const auto plan = plan_positions(spec, subset);
    const std::size_t free = plan.free.size();
    const double distance = wfg_family ? 0.0 : distance_optimum(spec).values.front();

    // Budget split: a lattice over the free shape parameters, uniform draws
    // on the same face, and a small share of draws over the whole front.
    std::size_t fallback = std::max<std::size_t>(1, budget / 20);
    std::size_t face = budget > fallback ? budget - fallback : 0;
    std::size_t resolution = 0;
    std::size_t lattice = 0;
    if (free == 0) {
        lattice = std::min<std::size_t>(face, 1);
        fallback = budget - lattice;
        face = lattice;
    } else {
        resolution = static_cast<std::size_t>(std::floor(std::pow(0.5 * static_cast<double>(face),
                                                                  1.0 / static_cast<double>(free))));
        if (resolution >= 2) {
            lattice = 1;
            for (std::size_t f = 0; f < free; ++f) {
                lattice *= resolution;
            }
        } else {
            resolution = 0;
        }
    }

    PointSet cloud(M);
    cloud.reserve(budget);
    std::vector<double> theta(M - 1);
    std::vector<double> x(n);
    std::vector<double> f(M);
    auto emit_face = [&]() {
        if (wfg_family) {
            wfg_decision(spec, theta, x);
        } else {
            dtlz_decision(spec, theta, distance, x);
        }
        evaluate_into(spec, x, f);
        cloud.push_back(f);
    };

    std::vector<std::size_t> digits(free, 0);
    for (std::size_t s = 0; s < lattice; ++s) {
        theta = plan.fixed;
        for (std::size_t q = 0; q < free; ++q) {
            theta[static_cast<std::size_t>(plan.free[q])] =
                resolution > 1 ? static_cast<double>(digits[q]) / static_cast<double>(resolution - 1) : 0.0;
        }
        emit_face();
        for (std::size_t q = 0; q < free; ++q) {
            if (++digits[q] < resolution) {
                break;
            }
            digits[q] = 0;
        }
    }

    // Random draws come in fixed-size chunks, each with its own stream.
    const std::size_t random_face = face - lattice;
    const std::size_t total_random = random_face + fallback;
    for (std::size_t c = 0; c * kChunk < total_random; ++c) {
        Rng rng(derive_seed(seed, c));
        const std::size_t end = std::min(total_random, (c + 1) * kChunk);
        for (std::size_t s = c * kChunk; s < end; ++s) {
            if (s < random_face) {
                theta = plan.fixed;
                for (int q : plan.free) {
                    theta[static_cast<std::size_t>(q)] = rng.uniform();
                }
                emit_face();
            } else {
                for (auto& t : theta) {
                    t = rng.uniform();
                }
                emit_face();
            }
        }
    }
    return cloud;
}

auto thin_farthest_point(const PointSet& points, std::size_t cap) -> PointSet
{
    const std::size_t n = points.size();
    if (n <= cap) {
        return points;
    }
    const std::size_t d = points.dim();
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    std::vector<std::size_t> seeds;
    for (std::size_t j = 0; j < d; ++j) {
        std::size_t argmin = 0;
        std::size_t argmax = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (points[i][j] < points[argmin][j]) {
                argmin = i;
            }
            if (points[i][j] > points[argmax][j]) {
                argmax = i;
            }
        }
        lo[j] = points[argmin][j];
        hi[j] = points[argmax][j];
        seeds.push_back(argmin);
        seeds.push_back(argmax);
    }
    const auto scaled = normalize_rows(points, lo, hi);

    // Buckets of nearby points with bounding boxes: a new centre farther from
    // a box than every pending distance inside it cannot change that bucket.
    struct Bucket {
        std::vector<std::size_t> members;
        std::vector<double> lo;
        std::vector<double> hi;
        double best = std::numeric_limits<double>::infinity();
        std::size_t arg = 0;
    };
    std::vector<Bucket> buckets;
    {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t { 0 });
        std::vector<std::pair<std::size_t, std::size_t>> stack { { 0, n } };
        while (!stack.empty()) {
            const auto [b, e] = stack.back();
            stack.pop_back();
            std::vector<double> blo(d, std::numeric_limits<double>::infinity());
            std::vector<double> bhi(d, -std::numeric_limits<double>::infinity());
            for (std::size_t k = b; k < e; ++k) {
                for (std::size_t j = 0; j < d; ++j) {
                    blo[j] = std::min(blo[j], scaled[order[k]][j]);
                    bhi[j] = std::max(bhi[j], scaled[order[k]][j]);
                }
            }
            if (e - b <= kThinBucket) {
                Bucket bucket { { order.begin() + static_cast<std::ptrdiff_t>(b),
                                  order.begin() + static_cast<std::ptrdiff_t>(e) },
                                blo, bhi };
                std::sort(bucket.members.begin(), bucket.members.end());
                bucket.arg = bucket.members.front();
                buckets.push_back(std::move(bucket));
                continue;
            }
            std::size_t axis = 0;
            for (std::size_t j = 1; j < d; ++j) {
                if (bhi[j] - blo[j] > bhi[axis] - blo[axis]) {
                    axis = j;
                }
            }
            const std::size_t mid = b + (e - b) / 2;
            std::nth_element(order.begin() + static_cast<std::ptrdiff_t>(b),
                             order.begin() + static_cast<std::ptrdiff_t>(mid),
                             order.begin() + static_cast<std::ptrdiff_t>(e),
                             [&](std::size_t x, std::size_t y) { return scaled[x][axis] < scaled[y][axis]; });
            stack.emplace_back(b, mid);
            stack.emplace_back(mid, e);
        }
    }

    std::vector<char> chosen(n, 0);
    // Squared distance to the nearest chosen point; -1 once chosen.
    std::vector<double> nearest(n, std::numeric_limits<double>::infinity());
    std::size_t count = 0;
    auto take = [&](std::size_t idx) {
        chosen[idx] = 1;
        nearest[idx] = -1.0;
        ++count;
        const auto p = scaled[idx];
        for (auto& bucket : buckets) {
            double gap = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double diff = std::max({ bucket.lo[j] - p[j], p[j] - bucket.hi[j], 0.0 });
                gap += diff * diff;
            }
            if (gap >= bucket.best && bucket.best != std::numeric_limits<double>::infinity()) {
                continue;
            }
            bucket.best = -2.0;
            for (auto i : bucket.members) {
                if (chosen[i] == 0) {
                    const auto q = scaled[i];
                    double dist = 0.0;
                    for (std::size_t j = 0; j < d; ++j) {
                        const double diff = p[j] - q[j];
                        dist += diff * diff;
                    }
                    nearest[i] = std::min(nearest[i], dist);
                }
                if (nearest[i] > bucket.best) { // members ascend, so ties keep the lowest index
                    bucket.best = nearest[i];
                    bucket.arg = i;
                }
            }
        }
    };
    for (auto idx : seeds) {
        if (chosen[idx] == 0 && count < cap) {
            take(idx);
        }
    }
    while (count < cap) {
        const Bucket* top = nullptr;
        for (const auto& bucket : buckets) {
            if (top == nullptr || bucket.best > top->best || (bucket.best == top->best && bucket.arg < top->arg)) {
                top = &bucket;
            }
        }
        take(top->arg);
    }
    PointSet out(d);
    out.reserve(cap);
    for (std::size_t i = 0; i < n; ++i) {
        if (chosen[i] != 0) {
            out.push_back(points[i]);
        }
    }
    return out;
}

auto is_degenerate(const PointSet& front) -> bool
{
    if (front.size() < 2) {
        return true;
    }
    for (std::size_t j = 0; j < front.dim(); ++j) {
        double lo = front[0][j];
        double hi = lo;
        for (std::size_t i = 1; i < front.size(); ++i) {
            lo = std::min(lo, front[i][j]);
            hi = std::max(hi, front[i][j]);
        }
        if (!(hi > lo)) {
            return true;
        }
    }
    return false;
}

auto ideal_nadir(const PointSet& front) -> std::pair<std::vector<double>, std::vector<double>>
{
    if (front.empty()) {
        throw DegenerateFrontError("ideal/nadir of an empty front");
    }
    const std::size_t d = front.dim();
    std::vector<double> lo(front[0].begin(), front[0].end());
    std::vector<double> hi = lo;
    for (std::size_t i = 1; i < front.size(); ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            lo[j] = std::min(lo[j], front[i][j]);
            hi[j] = std::max(hi[j], front[i][j]);
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        if (!(hi[j] > lo[j])) {
            throw DegenerateFrontError("front has no spread in objective position " + std::to_string(j + 1));
        }
    }
    return { std::move(lo), std::move(hi) };
}

auto sample_front(const ProblemSpec& spec, const ObjectiveSubset& subset, std::size_t budget, std::uint64_t seed,
                  const FrontOptions& options) -> ReferenceFront
{
    if (budget < 100) {
        throw std::invalid_argument("front sampling budget must be at least 100");
    }
    const auto cloud = sample_point_cloud(spec, subset, budget, seed);
    auto front = nondominated_filter(project(cloud, ObjectiveSubset::full(spec.m_max()), subset));
    front = thin_farthest_point(front, options.cap);

    ReferenceFront out { spec, subset };
    out.seed = seed;
    out.budget = budget;
    out.cap = options.cap;
    out.hv_reference = options.hv.reference;
    out.hv_exact_dim_cap = options.hv.exact_dim_cap;
    out.mc_samples = options.hv.mc_samples;
    out.points = std::move(front);
    out.hv_method = HvMethod::for_dimension(subset.size(), options.hv, derive_seed(seed, 0x68760000ULL));
    out.degenerate = is_degenerate(out.points);
    if (out.degenerate) {
        std::vector<double> lo(out.points[0].begin(), out.points[0].end());
        std::vector<double> hi = lo;
        for (std::size_t i = 1; i < out.points.size(); ++i) {
            for (std::size_t j = 0; j < lo.size(); ++j) {
                lo[j] = std::min(lo[j], out.points[i][j]);
                hi[j] = std::max(hi[j], out.points[i][j]);
            }
        }
        out.ideal = std::move(lo);
        out.nadir = std::move(hi);
        return out;
    }
    std::tie(out.ideal, out.nadir) = ideal_nadir(out.points);
    const auto normalized = clip_to_box(normalize(out.points, out.ideal, out.nadir), options.hv.reference);
    const auto hv = compute_hv(normalized, out.hv_method, options.hv.reference);
    out.front_hv = hv.value;
    out.hv_standard_error = hv.standard_error;
    return out;
}

namespace {

struct Grid {
    std::vector<std::vector<double>> decisions;
};

auto enumerate_grid(const std::vector<Bound>& bounds, int resolution, std::size_t max_points) -> Grid
{
    const std::size_t n = bounds.size();
    if (n > 6) {
        throw std::invalid_argument("inclusion check supports at most 6 decision variables");
    }
    if (resolution < 1 || resolution > 12) {
        throw std::invalid_argument("grid resolution must lie in [1, 12]");
    }
    const auto levels = static_cast<std::size_t>(resolution + 1);
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= levels;
        if (total > max_points) {
            throw std::length_error("decision grid exceeds " + std::to_string(max_points) + " points");
        }
    }
    Grid grid;
    grid.decisions.reserve(total);
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t s = 0; s < total; ++s) {
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = bounds[i].lower
                   + (bounds[i].upper - bounds[i].lower) * static_cast<double>(digits[i]) / resolution;
        }
        grid.decisions.push_back(std::move(x));
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < levels) {
                break;
            }
            digits[i] = 0;
        }
    }
    return grid;
}

// `shared[q]` is the position in the b-vector of the q-th a-objective.
template <typename EvalA, typename EvalB>
auto check_inclusion(const Grid& grid, const std::vector<std::size_t>& shared, std::size_t dim_b, EvalA eval_a,
                     EvalB eval_b) -> InclusionReport
{
    const std::size_t dim_a = shared.size();
    PointSet under_a(dim_a);
    PointSet under_b(dim_b);
    under_a.reserve(grid.decisions.size());
    under_b.reserve(grid.decisions.size());
    InclusionReport report;
    report.grid_points = grid.decisions.size();
    std::optional<InclusionCounterexample> mismatch;
    for (const auto& x : grid.decisions) {
        const std::vector<double> fa = eval_a(x);
        const std::vector<double> fb = eval_b(x);
        under_a.push_back(fa);
        under_b.push_back(fb);
        bool agree = true;
        for (std::size_t q = 0; q < dim_a; ++q) {
            agree = agree && fa[q] == fb[shared[q]];
        }
        if (!mismatch && !agree) {
            mismatch = InclusionCounterexample { InclusionCounterexample::Kind::ObjectiveMismatch, x, fa, fb };
        }
    }
    const auto opt_a = nondominated_indices(under_a);
    const auto opt_b = nondominated_indices(under_b);
    report.optimal_under_a = opt_a.size();
    report.optimal_under_b = opt_b.size();
    std::vector<char> b_optimal(grid.decisions.size(), 0);
    for (auto i : opt_b) {
        b_optimal[i] = 1;
    }
    for (auto i : opt_a) {
        if (b_optimal[i] == 0) {
            report.decision_inclusion = false;
            const auto a = under_a[i];
            const auto b = under_b[i];
            report.counterexample = InclusionCounterexample { InclusionCounterexample::Kind::NotOptimalUnderB,
                                                              grid.decisions[i],
                                                              { a.begin(), a.end() },
                                                              { b.begin(), b.end() } };
            break;
        }
    }
    if (!report.counterexample && mismatch) {
        report.counterexample = std::move(mismatch);
    }
    report.holds = report.decision_inclusion && !mismatch;
    return report;
}

} // namespace

auto verify_inclusion(const ProblemSpec& spec, const ObjectiveSubset& a, const ObjectiveSubset& b, int resolution,
                      std::size_t max_points) -> InclusionReport
{
    if (a.empty() || b.empty()) {
        throw std::invalid_argument("inclusion check needs nonempty subsets");
    }
    a.check_within(spec.m_max());
    b.check_within(spec.m_max());
    if (!a.is_subset_of(b)) {
        throw std::invalid_argument("first subset must be contained in the second");
    }
    const auto grid = enumerate_grid(decision_bounds(spec), resolution, max_points);
    std::vector<std::size_t> shared;
    for (int index : a) {
        shared.push_back(static_cast<std::size_t>(b.position_of(index)));
    }
    return check_inclusion(
        grid, shared, b.size(), [&](const std::vector<double>& x) { return evaluate_subset(spec, x, a).values; },
        [&](const std::vector<double>& x) { return evaluate_subset(spec, x, b).values; });
}

auto verify_inclusion_legacy(int n, int m_a, int m_b, int resolution, std::size_t max_points) -> InclusionReport
{
    if (!(2 <= m_a && m_a <= m_b && m_b <= n)) {
        throw std::invalid_argument("legacy inclusion check needs 2 <= m_a <= m_b <= n");
    }
    const std::vector<Bound> bounds(static_cast<std::size_t>(n), Bound { 0.0, 1.0 });
    const auto grid = enumerate_grid(bounds, resolution, max_points);
    std::vector<std::size_t> shared(static_cast<std::size_t>(m_a));
    std::iota(shared.begin(), shared.end(), std::size_t { 0 });
    return check_inclusion(
        grid, shared, static_cast<std::size_t>(m_b),
        [&](const std::vector<double>& x) { return legacy_f1_evaluate(x, m_a).values; },
        [&](const std::vector<double>& x) { return legacy_f1_evaluate(x, m_b).values; });
}

} // namespace dmocno
