#include "dmocno/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dmocno {

namespace {

void check_frame(const PointSet& points, std::span<const double> ideal, std::span<const double> nadir)
{
    if (ideal.size() != nadir.size() || (!points.empty() && points.dim() != ideal.size())) {
        throw std::invalid_argument("normalization frame does not match the point dimension");
    }
    for (std::size_t j = 0; j < ideal.size(); ++j) {
        if (!(nadir[j] > ideal[j])) {
            throw std::invalid_argument("normalization range is empty in objective position " + std::to_string(j + 1));
        }
    }
}

} // namespace

auto normalize(const PointSet& points, std::span<const double> ideal, std::span<const double> nadir) -> PointSet
{
    check_frame(points, ideal, nadir);
    const std::size_t d = ideal.size();
    std::vector<double> flat = points.flat();
    for (std::size_t i = 0; i < flat.size(); ++i) {
        const std::size_t j = i % d;
        flat[i] = (flat[i] - ideal[j]) / (nadir[j] - ideal[j]);
    }
    return { d, std::move(flat) };
}

auto denormalize(const PointSet& points, std::span<const double> ideal, std::span<const double> nadir) -> PointSet
{
    check_frame(points, ideal, nadir);
    const std::size_t d = ideal.size();
    std::vector<double> flat = points.flat();
    for (std::size_t i = 0; i < flat.size(); ++i) {
        const std::size_t j = i % d;
        flat[i] = ideal[j] + flat[i] * (nadir[j] - ideal[j]);
    }
    return { d, std::move(flat) };
}

auto stage_score(const StageSnapshot& snapshot, const ReferenceFront& front, std::uint64_t seed) -> StageScore
{
    if (snapshot.subset != front.subset) {
        throw std::invalid_argument("snapshot subset {" + snapshot.subset.to_string() + "} does not match front {"
                                    + front.subset.to_string() + "}");
    }
    if (front.degenerate || !(front.front_hv > 0.0)) {
        throw DegenerateFrontError("reference front for {" + front.subset.to_string() + "} is degenerate");
    }
    if (snapshot.points.empty()) {
        return { 0.0, 0.0, 0.0 };
    }
    const double reference = front.hv_reference;
    const auto kept = clip_to_box(normalize(snapshot.points, front.ideal, front.nadir), reference);
    if (kept.empty()) {
        return { 0.0, 0.0, 0.0 };
    }
    HvMethod method = front.hv_method;
    method.seed = seed;
    const auto hv = compute_hv(kept, method, reference);
    return { hv.value / front.front_hv, hv.value, hv.standard_error };
}

auto stage_ratio(const StageSnapshot& snapshot, const ReferenceFront& front, std::uint64_t seed) -> double
{
    return stage_score(snapshot, front, seed).ratio;
}

auto MhvReport::within_bounds() const -> bool
{
    return std::all_of(stage_ratios.begin(), stage_ratios.end(),
                       [](double r) { return r >= 0.0 && r <= 1.0 + kRatioTolerance; });
}

auto mhv(const std::vector<StageSnapshot>& snapshots, const std::vector<const ReferenceFront*>& fronts,
         std::uint64_t seed) -> MhvReport
{
    if (snapshots.empty() || snapshots.size() != fronts.size()) {
        throw std::invalid_argument("need one reference front per stage snapshot");
    }
    MhvReport report;
    double ratio_sum = 0.0;
    double hv_sum = 0.0;
    for (std::size_t s = 0; s < snapshots.size(); ++s) {
        if (fronts[s] == nullptr) {
            throw std::invalid_argument("missing reference front for stage " + std::to_string(s));
        }
        const auto score = stage_score(snapshots[s], *fronts[s], derive_seed(seed, s));
        report.stage_ratios.push_back(score.ratio);
        ratio_sum += score.ratio;
        hv_sum += score.hv;
    }
    const auto count = static_cast<double>(snapshots.size());
    report.mhv = ratio_sum / count;
    report.mean_stage_hv = hv_sum / count;
    return report;
}

auto aggregate_runs(std::span<const double> values) -> Aggregate
{
    if (values.size() < 2) {
        throw std::invalid_argument("aggregation needs at least two runs");
    }
    const auto n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values) {
        ss += (v - mean) * (v - mean);
    }
    return { mean, std::sqrt(ss / (n - 1.0)) };
}

auto aggregate_runs(const std::vector<MhvReport>& reports) -> Aggregate
{
    std::vector<double> values;
    values.reserve(reports.size());
    for (const auto& r : reports) {
        values.push_back(r.mhv);
    }
    return aggregate_runs(values);
}

auto rank_cell(std::span<const double> values) -> std::vector<double>
{
    const std::size_t k = values.size();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t { 0 });
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<double> ranks(k);
    std::size_t i = 0;
    while (i < k) {
        std::size_t j = i;
        while (j + 1 < k && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        // positions i..j (0-based) share ranks i+1..j+1
        const double shared = 0.5 * static_cast<double>(i + j + 2);
        for (std::size_t q = i; q <= j; ++q) {
            ranks[order[q]] = shared;
        }
        i = j + 1;
    }
    return ranks;
}

auto friedman_ranks(const std::vector<std::vector<double>>& table) -> FriedmanResult
{
    if (table.empty()) {
        throw std::invalid_argument("Friedman ranking needs at least one cell");
    }
    const std::size_t k = table.front().size();
    if (k < 2) {
        throw std::invalid_argument("Friedman ranking needs at least two algorithms");
    }
    FriedmanResult result;
    result.average_ranks.assign(k, 0.0);
    for (std::size_t c = 0; c < table.size(); ++c) {
        const auto& row = table[c];
        if (row.size() != k) {
            throw std::invalid_argument("cell " + std::to_string(c) + " is missing algorithms");
        }
        if (std::any_of(row.begin(), row.end(), [](double v) { return std::isnan(v); })) {
            throw std::invalid_argument("cell " + std::to_string(c) + " has a missing value");
        }
        auto ranks = rank_cell(row);
        for (std::size_t a = 0; a < k; ++a) {
            result.average_ranks[a] += ranks[a];
        }
        result.cell_ranks.push_back(std::move(ranks));
    }
    for (auto& r : result.average_ranks) {
        r /= static_cast<double>(table.size());
    }
    return result;
}

} // namespace dmocno
