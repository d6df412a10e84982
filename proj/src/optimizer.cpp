#include "dmocno/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "dmocno/dominance.hpp"
#include "dmocno/reference_directions.hpp"
#include "dmocno/text.hpp"

namespace dmocno {

void EaConfig::validate() const
{
    if (population_size < 4 || population_size % 2 != 0) {
        throw std::invalid_argument("population size must be even and at least 4");
    }
    auto probability = [](double p, const char* what) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
        }
    };
    probability(crossover_probability, "crossover probability");
    if (mutation_probability >= 0.0) {
        probability(mutation_probability, "mutation probability");
    }
    if (!(eta_c >= 0.0) || !(eta_m >= 0.0)) {
        throw std::invalid_argument("distribution indices must be non-negative");
    }
}

auto EaConfig::mutation_rate(int n) const -> double
{
    return mutation_probability >= 0.0 ? mutation_probability : 1.0 / static_cast<double>(n);
}

auto ChangeResponse::restart(double fraction) -> ChangeResponse
{
    if (!(fraction > 0.0 && fraction <= 1.0)) {
        throw std::invalid_argument("restart fraction must lie in (0, 1]");
    }
    return { Strategy::PartialRestart, fraction };
}

auto ChangeResponse::algorithm_id() const -> std::string
{
    switch (strategy) {
    case Strategy::Retain: return "rvea-retain";
    case Strategy::PartialRestart: return "rvea-restart" + text::format_double(fraction);
    case Strategy::InheritanceFill: return "rvea-inherit";
    }
    throw std::logic_error("unknown change response");
}

auto ChangeResponse::parse(std::string_view id) -> ChangeResponse
{
    const auto trimmed = text::trim(id);
    if (trimmed == "rvea-retain") {
        return retain();
    }
    if (trimmed == "rvea-inherit") {
        return inherit();
    }
    constexpr std::string_view restart_prefix = "rvea-restart";
    if (trimmed.starts_with(restart_prefix)) {
        const auto rest = trimmed.substr(restart_prefix.size());
        if (rest.empty()) {
            return restart(1.0);
        }
        double f = 0.0;
        try {
            f = text::parse_double(rest);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad restart fraction in algorithm id '" + std::string(trimmed) + "'");
        }
        return restart(f);
    }
    throw std::invalid_argument("unknown algorithm id '" + std::string(trimmed)
                                + "' (expected rvea-retain, rvea-restart<f> or rvea-inherit)");
}

auto known_algorithms() -> std::vector<std::string>
{
    return { "rvea-retain", "rvea-restart1", "rvea-inherit" };
}

// ---- environmental selection ----

namespace {

struct Association {
    std::size_t direction;
    double distance;
};

auto associate(std::span<const double> f, const PointSet& directions, const std::vector<double>& norms2)
    -> Association
{
    Association best { 0, std::numeric_limits<double>::infinity() };
    double ff = 0.0;
    for (double v : f) {
        ff += v * v;
    }
    for (std::size_t r = 0; r < directions.size(); ++r) {
        const auto w = directions[r];
        double fw = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            fw += f[j] * w[j];
        }
        const double d2 = std::max(0.0, ff - fw * fw / norms2[r]);
        if (d2 < best.distance) {
            best = { r, d2 };
        }
    }
    best.distance = std::sqrt(best.distance);
    return best;
}

} // namespace

auto environmental_selection(const PointSet& candidates, std::size_t target, Rng& rng) -> std::vector<std::size_t>
{
    const std::size_t count = candidates.size();
    if (target > count) {
        throw std::invalid_argument("selection target exceeds the number of candidates");
    }
    if (target == count) {
        std::vector<std::size_t> all(count);
        std::iota(all.begin(), all.end(), std::size_t { 0 });
        return all;
    }
    const std::size_t m = candidates.dim();
    const auto ranks = nondominated_ranks(candidates);

    // Bucket by front, keeping index order inside each front.
    const int worst = count == 0 ? 0 : *std::max_element(ranks.begin(), ranks.end());
    std::vector<std::vector<std::size_t>> fronts(static_cast<std::size_t>(worst) + 1);
    for (std::size_t i = 0; i < count; ++i) {
        fronts[static_cast<std::size_t>(ranks[i])].push_back(i);
    }
    std::vector<std::size_t> chosen;
    std::size_t critical = 0;
    for (; critical < fronts.size(); ++critical) {
        if (chosen.size() + fronts[critical].size() > target) {
            break;
        }
        chosen.insert(chosen.end(), fronts[critical].begin(), fronts[critical].end());
    }
    if (chosen.size() == target) {
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }
    const auto& last = fronts[critical];

    // Translate by the ideal point of the considered members and scale by the
    // spread of the first front (falling back to the considered members).
    std::vector<std::size_t> considered = chosen;
    considered.insert(considered.end(), last.begin(), last.end());
    std::vector<double> ideal(m, std::numeric_limits<double>::infinity());
    for (auto i : considered) {
        for (std::size_t j = 0; j < m; ++j) {
            ideal[j] = std::min(ideal[j], candidates[i][j]);
        }
    }
    std::vector<double> scale(m, 0.0);
    std::vector<double> spread(m, 0.0);
    for (auto i : fronts.front()) {
        for (std::size_t j = 0; j < m; ++j) {
            scale[j] = std::max(scale[j], candidates[i][j] - ideal[j]);
        }
    }
    for (auto i : considered) {
        for (std::size_t j = 0; j < m; ++j) {
            spread[j] = std::max(spread[j], candidates[i][j] - ideal[j]);
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (!(scale[j] > 1e-12)) {
            scale[j] = spread[j] > 1e-12 ? spread[j] : 1.0;
        }
    }

    const PointSet directions = reference_lattice(static_cast<int>(m), target);
    std::vector<double> norms2(directions.size());
    for (std::size_t r = 0; r < directions.size(); ++r) {
        double s = 0.0;
        for (double w : directions[r]) {
            s += w * w;
        }
        norms2[r] = s;
    }
    std::vector<double> scaled(m);
    auto place = [&](std::size_t i) {
        for (std::size_t j = 0; j < m; ++j) {
            scaled[j] = (candidates[i][j] - ideal[j]) / scale[j];
        }
        return associate(scaled, directions, norms2);
    };

    std::vector<std::size_t> niche(directions.size(), 0);
    for (auto i : chosen) {
        ++niche[place(i).direction];
    }
    // Pending members of the critical front per direction, nearest first,
    // index order among equals.
    std::vector<std::vector<std::pair<double, std::size_t>>> pending(directions.size());
    for (auto i : last) {
        const auto a = place(i);
        pending[a.direction].emplace_back(a.distance, i);
    }
    for (auto& list : pending) {
        std::stable_sort(list.begin(), list.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        std::reverse(list.begin(), list.end()); // pop from the back
    }

    std::vector<std::size_t> tied;
    while (chosen.size() < target) {
        std::size_t lowest = std::numeric_limits<std::size_t>::max();
        tied.clear();
        for (std::size_t r = 0; r < directions.size(); ++r) {
            if (pending[r].empty()) {
                continue;
            }
            if (niche[r] < lowest) {
                lowest = niche[r];
                tied.clear();
            }
            if (niche[r] == lowest) {
                tied.push_back(r);
            }
        }
        const std::size_t r = tied[rng.below(tied.size())];
        chosen.push_back(pending[r].back().second);
        pending[r].pop_back();
        ++niche[r];
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// ---- variation ----

void sbx_crossover(std::span<const double> p1, std::span<const double> p2, std::span<double> c1, std::span<double> c2,
                   const std::vector<Bound>& bounds, const EaConfig& ea, Rng& rng)
{
    std::copy(p1.begin(), p1.end(), c1.begin());
    std::copy(p2.begin(), p2.end(), c2.begin());
    if (rng.uniform() >= ea.crossover_probability) {
        return;
    }
    const double exponent = 1.0 / (ea.eta_c + 1.0);
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (rng.uniform() >= 0.5 || std::fabs(p1[i] - p2[i]) <= 1e-14) {
            continue;
        }
        const double lo = bounds[i].lower;
        const double hi = bounds[i].upper;
        const double y1 = std::min(p1[i], p2[i]);
        const double y2 = std::max(p1[i], p2[i]);
        const double u = rng.uniform();
        auto spread = [&](double beta) {
            const double alpha = 2.0 - std::pow(beta, -(ea.eta_c + 1.0));
            return u <= 1.0 / alpha ? std::pow(u * alpha, exponent) : std::pow(1.0 / (2.0 - u * alpha), exponent);
        };
        const double bq1 = spread(1.0 + 2.0 * (y1 - lo) / (y2 - y1));
        const double bq2 = spread(1.0 + 2.0 * (hi - y2) / (y2 - y1));
        double a = std::clamp(0.5 * ((y1 + y2) - bq1 * (y2 - y1)), lo, hi);
        double b = std::clamp(0.5 * ((y1 + y2) + bq2 * (y2 - y1)), lo, hi);
        if (rng.uniform() < 0.5) {
            std::swap(a, b);
        }
        c1[i] = a;
        c2[i] = b;
    }
}

void polynomial_mutation(std::span<double> x, const std::vector<Bound>& bounds, const EaConfig& ea, Rng& rng)
{
    const double rate = ea.mutation_rate(static_cast<int>(x.size()));
    const double power = 1.0 / (ea.eta_m + 1.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (rng.uniform() >= rate) {
            continue;
        }
        const double lo = bounds[i].lower;
        const double hi = bounds[i].upper;
        const double range = hi - lo;
        const double d1 = (x[i] - lo) / range;
        const double d2 = (hi - x[i]) / range;
        const double u = rng.uniform();
        double dq = 0.0;
        if (u < 0.5) {
            const double v = 2.0 * u + (1.0 - 2.0 * u) * std::pow(1.0 - d1, ea.eta_m + 1.0);
            dq = std::pow(v, power) - 1.0;
        } else {
            const double v = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(1.0 - d2, ea.eta_m + 1.0);
            dq = 1.0 - std::pow(v, power);
        }
        x[i] = std::clamp(x[i] + dq * range, lo, hi);
    }
}

// ---- population management ----

namespace {

auto random_decision(const std::vector<Bound>& bounds, Rng& rng) -> std::vector<double>
{
    std::vector<double> x(bounds.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = rng.uniform(bounds[i].lower, bounds[i].upper);
    }
    return x;
}

auto objective_matrix(const Population& population, std::size_t m) -> PointSet
{
    PointSet points(m);
    points.reserve(population.size());
    for (const auto& ind : population) {
        points.push_back(ind.objectives);
    }
    return points;
}

void evaluate(const ProblemSpec& spec, const ObjectiveSubset& subset, Individual& ind)
{
    ind.objectives = evaluate_subset(spec, ind.decision, subset).values;
    ind.stale = false;
}

auto select(const Population& pool, std::size_t target, std::size_t m, Rng& rng) -> Population
{
    const auto keep = environmental_selection(objective_matrix(pool, m), target, rng);
    Population out;
    out.reserve(target);
    for (auto i : keep) {
        out.push_back(pool[i]);
    }
    return out;
}

// One generation: random pairing, recombination, mutation, evaluation and
// survival among parents plus offspring.
void step(const ProblemSpec& spec, const ObjectiveSubset& subset, const std::vector<Bound>& bounds,
          const EaConfig& ea, Population& population, Rng& rng)
{
    const std::size_t size = population.size();
    std::vector<std::size_t> order(size);
    std::iota(order.begin(), order.end(), std::size_t { 0 });
    rng.shuffle(order);

    Population pool = population;
    pool.reserve(2 * size);
    for (std::size_t k = 0; k + 1 < size; k += 2) {
        Individual a;
        Individual b;
        a.decision.resize(bounds.size());
        b.decision.resize(bounds.size());
        sbx_crossover(population[order[k]].decision, population[order[k + 1]].decision, a.decision, b.decision,
                      bounds, ea, rng);
        polynomial_mutation(a.decision, bounds, ea, rng);
        polynomial_mutation(b.decision, bounds, ea, rng);
        evaluate(spec, subset, a);
        evaluate(spec, subset, b);
        pool.push_back(std::move(a));
        pool.push_back(std::move(b));
    }
    population = select(pool, size, subset.size(), rng);
}

} // namespace

void evaluate_population(const ProblemSpec& spec, const ObjectiveSubset& subset, Population& population)
{
    for (auto& ind : population) {
        evaluate(spec, subset, ind);
    }
}

auto respond_to_change(const ProblemSpec& spec, Population population, const ObjectiveSubset& old_subset,
                       const ObjectiveSubset& new_subset, const ChangeResponse& response, const EaConfig& ea, Rng& rng)
    -> Population
{
    old_subset.check_within(spec.m_max());
    new_subset.check_within(spec.m_max());
    for (auto& ind : population) {
        ind.stale = true;
    }
    const auto bounds = decision_bounds(spec);
    const std::size_t size = population.size();

    switch (response.strategy) {
    case ChangeResponse::Strategy::Retain:
        break;
    case ChangeResponse::Strategy::PartialRestart: {
        const auto replace = static_cast<std::size_t>(std::llround(response.fraction * static_cast<double>(size)));
        std::vector<std::size_t> order(size);
        std::iota(order.begin(), order.end(), std::size_t { 0 });
        rng.shuffle(order);
        for (std::size_t k = 0; k < std::min(replace, size); ++k) {
            population[order[k]].decision = random_decision(bounds, rng);
        }
        break;
    }
    case ChangeResponse::Strategy::InheritanceFill: {
        evaluate_population(spec, new_subset, population);
        const auto objectives = objective_matrix(population, new_subset.size());
        const auto keep = nondominated_indices(objectives);
        Population kept;
        kept.reserve(size);
        for (auto i : keep) {
            kept.push_back(population[i]);
        }
        if (kept.size() >= size) {
            return select(kept, size, new_subset.size(), rng);
        }
        const std::size_t parents = kept.size();
        while (kept.size() < size) {
            Individual child;
            child.decision = kept[rng.below(parents)].decision;
            polynomial_mutation(child.decision, bounds, ea, rng);
            evaluate(spec, new_subset, child);
            kept.push_back(std::move(child));
        }
        return kept;
    }
    }
    evaluate_population(spec, new_subset, population);
    return population;
}

auto run_dynamic(const ProblemSpec& spec, const ObjectiveSchedule& schedule, const EaConfig& ea,
                 const ChangeResponse& response) -> RunRecord
{
    ea.validate();
    if (schedule.m_max() > spec.m_max()) {
        throw std::invalid_argument("schedule uses more objectives than the problem provides");
    }
    for (const auto& subset : schedule.subsets()) {
        subset.check_within(spec.m_max());
    }
    if (response.strategy == ChangeResponse::Strategy::PartialRestart
        && !(response.fraction > 0.0 && response.fraction <= 1.0)) {
        throw std::invalid_argument("restart fraction must lie in (0, 1]");
    }

    Rng rng(ea.seed);
    const auto bounds = decision_bounds(spec);
    const auto size = static_cast<std::size_t>(ea.population_size);

    RunRecord record;
    record.problem = spec.id();
    record.m_max = spec.m_max();
    record.tau_t = schedule.tau_t();
    record.algorithm = response.algorithm_id();
    record.seed = ea.seed;

    const auto& subsets = schedule.subsets();
    Population population(size);
    for (auto& ind : population) {
        ind.decision = random_decision(bounds, rng);
        evaluate(spec, subsets.front(), ind);
    }
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        if (s > 0) {
            population = respond_to_change(spec, std::move(population), subsets[s - 1], subsets[s], response, ea, rng);
        }
        const long generations = schedule.stage_end(s) - schedule.stage_begin(s);
        for (long g = 0; g < generations; ++g) {
            step(spec, subsets[s], bounds, ea, population, rng);
        }
        record.snapshots.push_back({ s, subsets[s], schedule.stage_end(s),
                                     objective_matrix(population, subsets[s].size()) });
    }
    return record;
}

} // namespace dmocno
