#include "dmocno/harness/commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "dmocno/harness/svg.hpp"
#include "dmocno/text.hpp"

namespace dmocno::harness {

auto default_jobs() -> unsigned
{
    return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body)
{
    std::atomic<std::size_t> next { 0 };
    std::mutex guard;
    std::size_t failed_at = count;
    std::exception_ptr failure;
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            try {
                body(i);
            } catch (...) {
                const std::lock_guard lock(guard);
                if (i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    const auto threads = static_cast<std::size_t>(std::max(1U, jobs));
    if (threads == 1 || count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < std::min(threads, count); ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

namespace {

class Log {
public:
    explicit Log(std::ostream& out) : out_(out) {}
    void line(const std::string& s)
    {
        const std::lock_guard lock(mutex_);
        out_ << s << '\n';
        out_.flush();
    }

private:
    std::ostream& out_;
    std::mutex mutex_;
};

struct FrontJob {
    ProblemSpec spec;
    ObjectiveSubset subset;
};

// Distinct (problem instance, subset) pairs of the configuration, in config order.
auto front_jobs(const ExperimentConfig& config) -> std::vector<FrontJob>
{
    std::vector<FrontJob> jobs;
    std::set<std::pair<std::string, ObjectiveSubset>> seen;
    for (const auto& problem : config.problems) {
        for (const auto& setting : config.settings) {
            const auto spec = ProblemSpec::from_id(problem, setting.m_max());
            const auto schedule = setting.schedule(config.tau_values.front());
            for (const auto& subset : schedule.subsets()) {
                if (seen.insert({ spec.tag(), subset }).second) {
                    jobs.push_back({ spec, subset });
                }
            }
        }
    }
    return jobs;
}

auto describe(const ProblemSpec& spec, const ObjectiveSubset& subset) -> std::string
{
    return spec.id() + " m_max=" + std::to_string(spec.m_max()) + " subset {" + subset.to_string() + "}";
}

struct Cell {
    std::string problem;
    const SettingRef* setting;
    int tau_t;
    std::string algorithm;
};

auto cells_of(const ExperimentConfig& config, const SettingRef& setting) -> std::vector<Cell>
{
    std::vector<Cell> cells;
    for (const auto& problem : config.problems) {
        for (int tau : config.tau_values) {
            for (const auto& algorithm : config.algorithms) {
                cells.push_back({ problem, &setting, tau, algorithm });
            }
        }
    }
    return cells;
}

auto coordinates(const ExperimentConfig& config, const Cell& cell, int run) -> RunRecord
{
    RunRecord r;
    r.problem = cell.problem;
    r.m_max = cell.setting->m_max();
    r.setting = cell.setting->name;
    r.tau_t = cell.tau_t;
    r.algorithm = cell.algorithm;
    r.run = run;
    r.seed = run_seed(config, cell.problem, cell.setting->name, cell.tau_t, cell.algorithm, run);
    return r;
}

auto same_coordinates(const RunRecord& a, const RunRecord& b) -> bool
{
    return a.problem == b.problem && a.m_max == b.m_max && a.setting == b.setting && a.tau_t == b.tau_t
        && a.algorithm == b.algorithm && a.run == b.run && a.seed == b.seed;
}

// A stored record is reusable when it parses and carries the expected
// coordinates and stage subsets.
auto record_is_current(const std::filesystem::path& path, const RunRecord& expected, const ObjectiveSchedule& schedule)
    -> bool
{
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
        return false;
    }
    try {
        const auto stored = load_record(path);
        if (!same_coordinates(stored, expected) || stored.snapshots.size() != schedule.stage_count()) {
            return false;
        }
        for (std::size_t s = 0; s < stored.snapshots.size(); ++s) {
            if (stored.snapshots[s].subset != schedule.subsets()[s]) {
                return false;
            }
        }
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

auto mhv_dir(const ExperimentConfig& config) -> std::filesystem::path
{
    return config.output / "mhv";
}

} // namespace

void cmd_list(std::ostream& out)
{
    out << "problems (default dimensions; m_max comes from the setting):\n";
    for (bool minus : { true, false }) {
        for (auto f : kAllFamilies) {
            const auto spec = ProblemSpec::with_defaults(f, minus, 3);
            out << "  " << spec.id() << '\n';
        }
    }
    out << "settings (warm-up " << kDefaultWarmup << ", then tau_t generations per stage):\n";
    for (auto s : { Setting::I, Setting::II, Setting::III }) {
        const auto schedule = builtin_setting(s, 25);
        out << "  " << setting_name(s) << "  m_max=" << schedule.m_max() << "  ";
        for (std::size_t i = 0; i < schedule.stage_count(); ++i) {
            out << (i == 0 ? "" : " -> ") << '{' << schedule.subsets()[i].to_string() << '}';
        }
        out << '\n';
    }
    out << "  or a schedule file (see README)\n";
    out << "algorithms:\n";
    for (const auto& a : known_algorithms()) {
        out << "  " << a << '\n';
    }
    out << "  rvea-restart<f> restarts a fraction f in (0, 1], e.g. rvea-restart0.5\n";
}

auto cmd_fronts(const ExperimentConfig& config, unsigned jobs, std::ostream& log_stream) -> FrontsSummary
{
    config.validate();
    Log log(log_stream);
    const auto work = front_jobs(config);
    const auto options = config.front_options();
    std::vector<char> computed(work.size(), 0);
    std::vector<char> degenerate(work.size(), 0);
    parallel_for(work.size(), jobs, [&](std::size_t i) {
        const auto& job = work[i];
        const auto seed = front_seed(config.base_seed, job.spec, job.subset);
        const auto path = front_path(config.output, job.spec, job.subset);
        if (front_matches(path, job.spec, job.subset, seed, config.front_budget, options)) {
            degenerate[i] = load_front(path).degenerate ? 1 : 0;
            return;
        }
        const auto start = std::chrono::steady_clock::now();
        const auto front = sample_front(job.spec, job.subset, config.front_budget, seed, options);
        if (front.degenerate && job.spec.minus()) {
            throw DegenerateFrontError("degenerate reference front for " + describe(job.spec, job.subset)
                                       + "; a Minus problem should never collapse");
        }
        text::write_file_atomic(path, format_front(front));
        computed[i] = 1;
        degenerate[i] = front.degenerate ? 1 : 0;
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        log.line("front " + describe(job.spec, job.subset) + ": " + std::to_string(front.points.size())
                 + " points, hv " + text::format_fixed(front.front_hv, 6) + " (" + front.hv_method.describe() + "), "
                 + text::format_fixed(seconds, 1) + " s");
    });
    FrontsSummary summary;
    for (std::size_t i = 0; i < work.size(); ++i) {
        (computed[i] != 0 ? summary.computed : summary.skipped) += 1;
        if (degenerate[i] != 0) {
            const auto what = describe(work[i].spec, work[i].subset);
            summary.degenerate.push_back(what);
            log.line("warning: degenerate front (single Pareto-optimal point) for " + what);
        }
    }
    return summary;
}

auto cmd_run(const ExperimentConfig& config, unsigned jobs, std::ostream& log_stream) -> RunSummary
{
    config.validate();
    Log log(log_stream);
    std::vector<std::string> missing;
    for (const auto& job : front_jobs(config)) {
        const auto path = front_path(config.output, job.spec, job.subset);
        if (!std::filesystem::exists(path)) {
            missing.push_back(path.string());
        }
    }
    if (!missing.empty()) {
        throw std::runtime_error("missing front archive " + missing.front() + " (and "
                                 + std::to_string(missing.size() - 1) + " more); run the fronts command first");
    }

    struct Task {
        Cell cell;
        int run;
    };
    std::vector<Task> tasks;
    for (const auto& setting : config.settings) {
        for (const auto& cell : cells_of(config, setting)) {
            for (int r = 0; r < config.runs; ++r) {
                tasks.push_back({ cell, r });
            }
        }
    }
    std::vector<char> executed(tasks.size(), 0);
    parallel_for(tasks.size(), jobs, [&](std::size_t i) {
        const auto& task = tasks[i];
        const auto expected = coordinates(config, task.cell, task.run);
        const auto schedule = task.cell.setting->schedule(task.cell.tau_t);
        const auto path = record_path(config.output, expected);
        if (record_is_current(path, expected, schedule)) {
            return;
        }
        const auto spec = ProblemSpec::from_id(task.cell.problem, schedule.m_max());
        EaConfig ea = config.ea;
        ea.seed = expected.seed;
        const auto start = std::chrono::steady_clock::now();
        auto record = run_dynamic(spec, schedule, ea, ChangeResponse::parse(task.cell.algorithm));
        record.setting = expected.setting;
        record.run = expected.run;
        record.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        text::write_file_atomic(path, format_record(record));
        text::write_file_atomic(timing_path(path), "# dmocno-timing v1\nwall_seconds="
                                                        + text::format_fixed(record.wall_seconds, 3) + '\n');
        executed[i] = 1;
        log.line("run " + record.setting + " " + record.problem + " tau=" + std::to_string(record.tau_t) + " "
                 + record.algorithm + " #" + std::to_string(record.run) + ": "
                 + text::format_fixed(record.wall_seconds, 1) + " s");
    });
    RunSummary summary;
    for (auto e : executed) {
        (e != 0 ? summary.executed : summary.skipped) += 1;
    }
    return summary;
}

auto cmd_mhv(const ExperimentConfig& config, unsigned jobs, std::ostream& log_stream) -> MhvSummary
{
    config.validate();
    Log log(log_stream);
    MhvSummary summary;

    // Fronts are loaded once and shared read-only by the workers.
    std::map<std::pair<std::string, ObjectiveSubset>, ReferenceFront> fronts;
    for (const auto& job : front_jobs(config)) {
        const auto path = front_path(config.output, job.spec, job.subset);
        if (!std::filesystem::exists(path)) {
            throw std::runtime_error("missing front archive " + path.string() + "; run the fronts command first");
        }
        fronts.emplace(std::make_pair(job.spec.tag(), job.subset), load_front(path));
    }

    for (const auto& setting : config.settings) {
        const auto cells = cells_of(config, setting);
        struct Outcome {
            bool present = false;
            bool degenerate = false;
            MhvReport report;
        };
        const auto runs = static_cast<std::size_t>(config.runs);
        std::vector<Outcome> outcomes(cells.size() * runs);
        parallel_for(outcomes.size(), jobs, [&](std::size_t i) {
            const auto& cell = cells[i / runs];
            const int run = static_cast<int>(i % runs);
            const auto expected = coordinates(config, cell, run);
            const auto path = record_path(config.output, expected);
            if (!std::filesystem::exists(path)) {
                return;
            }
            const auto record = load_record(path);
            const auto schedule = cell.setting->schedule(cell.tau_t);
            if (!record_is_current(path, expected, schedule)) {
                throw FormatError(path.string() + " does not match the configuration; rerun the run command");
            }
            const auto spec = ProblemSpec::from_id(cell.problem, schedule.m_max());
            std::vector<const ReferenceFront*> stage_fronts;
            for (const auto& snap : record.snapshots) {
                stage_fronts.push_back(&fronts.at({ spec.tag(), snap.subset }));
            }
            auto& out = outcomes[i];
            out.present = true;
            try {
                out.report = mhv(record.snapshots, stage_fronts, derive_seed(record.seed, 0x6d687600ULL));
            } catch (const DegenerateFrontError&) {
                out.degenerate = true;
                return;
            }
            out.report.setting = record.setting;
            out.report.problem = record.problem;
            out.report.tau_t = record.tau_t;
            out.report.algorithm = record.algorithm;
            out.report.seed = record.seed;
        });

        MhvTable table;
        table.setting = setting.name;
        std::string raw = "# dmocno-mhv-runs v1\n# setting=" + setting.name
            + "\nproblem,tau_t,algorithm,run,seed,mhv,within_bounds,stage_ratios\n";
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto& cell = cells[c];
            MhvCell row;
            row.problem = cell.problem;
            row.tau_t = cell.tau_t;
            row.algorithm = cell.algorithm;
            row.expected_runs = config.runs;
            std::vector<double> values;
            bool degenerate = false;
            bool violation = false;
            for (std::size_t r = 0; r < runs; ++r) {
                const auto& o = outcomes[c * runs + r];
                if (!o.present) {
                    continue;
                }
                ++row.runs;
                if (o.degenerate) {
                    degenerate = true;
                    continue;
                }
                values.push_back(o.report.mhv);
                const bool ok = o.report.within_bounds();
                if (!ok) {
                    violation = true;
                    ++summary.bound_violations;
                }
                std::string ratios;
                for (std::size_t s = 0; s < o.report.stage_ratios.size(); ++s) {
                    ratios += (s == 0 ? "" : ";") + text::format_double(o.report.stage_ratios[s]);
                }
                raw += cell.problem + ',' + std::to_string(cell.tau_t) + ',' + cell.algorithm + ','
                    + std::to_string(r) + ',' + std::to_string(o.report.seed) + ','
                    + text::format_double(o.report.mhv) + ',' + (ok ? "1" : "0") + ',' + ratios + '\n';
            }
            if (values.size() >= 2) {
                const auto agg = aggregate_runs(values);
                row.mean = agg.mean;
                row.std = agg.standard_deviation;
            } else {
                row.mean = values.empty() ? std::nan("") : values.front();
                row.std = std::nan("");
            }
            if (degenerate) {
                row.status = "degenerate-front";
            } else if (violation) {
                row.status = "bound-violation";
            } else if (row.runs < row.expected_runs) {
                row.status = "incomplete";
            } else {
                row.status = "ok";
            }
            if (!row.complete()) {
                ++summary.incomplete_cells;
                log.line("cell " + setting.name + " " + row.problem + " tau=" + std::to_string(row.tau_t) + " "
                         + row.algorithm + ": " + row.status + " (" + std::to_string(row.runs) + "/"
                         + std::to_string(row.expected_runs) + " runs)");
            }
            table.cells.push_back(std::move(row));
        }
        // Winner flag: best complete mean per (problem, tau_t); ties all win.
        std::map<std::pair<std::string, int>, double> best;
        for (const auto& row : table.cells) {
            if (row.complete()) {
                auto [it, inserted] = best.try_emplace({ row.problem, row.tau_t }, row.mean);
                if (!inserted) {
                    it->second = std::max(it->second, row.mean);
                }
            }
        }
        for (auto& row : table.cells) {
            row.winner = row.complete() && row.mean == best.at({ row.problem, row.tau_t });
        }
        const auto dir = mhv_dir(config);
        text::write_file_atomic(dir / (setting.name + ".csv"), format_mhv_table(table));
        text::write_file_atomic(dir / (setting.name + ".txt"), format_mhv_summary(table));
        text::write_file_atomic(dir / (setting.name + "_runs.csv"), raw);
        log.line("mhv table for setting " + setting.name + ": " + (dir / (setting.name + ".csv")).string());
        summary.tables.push_back(std::move(table));
    }
    return summary;
}

auto cmd_rank(const ExperimentConfig& config, std::ostream& log_stream) -> std::vector<RankSummary>
{
    config.validate();
    Log log(log_stream);
    std::vector<RankSummary> all;
    for (const auto& setting : config.settings) {
        const auto path = mhv_dir(config) / (setting.name + ".csv");
        if (!std::filesystem::exists(path)) {
            throw std::runtime_error("missing MHV table " + path.string() + "; run the mhv command first");
        }
        const auto table = parse_mhv_table(text::read_file(path));
        std::vector<std::string> algorithms;
        std::vector<std::string> problems;
        std::vector<int> taus;
        std::map<std::tuple<std::string, int, std::string>, const MhvCell*> at;
        for (const auto& c : table.cells) {
            if (std::find(algorithms.begin(), algorithms.end(), c.algorithm) == algorithms.end()) {
                algorithms.push_back(c.algorithm);
            }
            if (std::find(problems.begin(), problems.end(), c.problem) == problems.end()) {
                problems.push_back(c.problem);
            }
            if (std::find(taus.begin(), taus.end(), c.tau_t) == taus.end()) {
                taus.push_back(c.tau_t);
            }
            at[{ c.problem, c.tau_t, c.algorithm }] = &c;
        }
        if (algorithms.size() < 2) {
            throw std::invalid_argument("Friedman ranking needs at least two algorithms (setting " + setting.name
                                        + " has " + std::to_string(algorithms.size()) + ")");
        }
        const double k = static_cast<double>(algorithms.size());
        const double expected_sum = k * (k + 1.0) / 2.0;
        std::string out = "# dmocno-rank v1\n# setting=" + setting.name + "\n# average ranks (1 = best MHV)\n";
        out += "tau_t,algorithm,average_rank\n";
        std::string detail = "# per-cell ranks\n# tau_t,problem";
        for (const auto& a : algorithms) {
            detail += ',' + a;
        }
        detail += ",rank_sum\n";
        bool sums_ok = true;
        std::vector<BarSeries> series;
        for (const auto& a : algorithms) {
            series.push_back({ a, {} });
        }
        std::vector<std::string> groups;
        for (int tau : taus) {
            std::vector<std::vector<double>> grid;
            for (const auto& p : problems) {
                std::vector<double> row;
                for (const auto& a : algorithms) {
                    const auto it = at.find({ p, tau, a });
                    if (it == at.end() || !it->second->complete()) {
                        throw std::runtime_error("cannot rank setting " + setting.name + ": cell " + p + " tau="
                                                 + std::to_string(tau) + " " + a + " is "
                                                 + (it == at.end() ? "missing" : it->second->status));
                    }
                    row.push_back(it->second->mean);
                }
                grid.push_back(std::move(row));
            }
            auto result = friedman_ranks(grid);
            for (std::size_t a = 0; a < algorithms.size(); ++a) {
                out += std::to_string(tau) + ',' + algorithms[a] + ',' + text::format_double(result.average_ranks[a])
                    + '\n';
                series[a].values.push_back(result.average_ranks[a]);
            }
            for (std::size_t p = 0; p < problems.size(); ++p) {
                double sum = 0.0;
                detail += "# " + std::to_string(tau) + ',' + problems[p];
                for (double r : result.cell_ranks[p]) {
                    detail += ',' + text::format_double(r);
                    sum += r;
                }
                sums_ok = sums_ok && std::fabs(sum - expected_sum) < 1e-9;
                detail += ',' + text::format_double(sum) + '\n';
            }
            groups.push_back("tau_t=" + std::to_string(tau));
            all.push_back({ setting.name, tau, algorithms, problems, std::move(result) });
        }
        out += detail;
        out += "# rank sums equal k(k+1)/2 = " + text::format_double(expected_sum) + " in every cell: "
            + (sums_ok ? "yes" : "NO") + '\n';
        const auto dir = config.output / "rank";
        text::write_file_atomic(dir / (setting.name + ".csv"), out);
        text::write_file_atomic(dir / (setting.name + ".svg"),
                                bar_chart_svg("Friedman average rank of MHV, setting " + setting.name, groups, series,
                                              "average rank (lower is better)"));
        log.line("rank summary for setting " + setting.name + ": " + (dir / (setting.name + ".csv")).string());
    }
    return all;
}

auto cmd_front_plot(const ExperimentConfig& config, const FrontPlotRequest& request, std::ostream& log_stream)
    -> std::filesystem::path
{
    Log log(log_stream);
    if (request.problems.empty()) {
        throw std::invalid_argument("front-plot needs at least one problem");
    }
    const auto subset = request.subset.value_or(ObjectiveSubset { request.pair.first, request.pair.second });
    const int px = subset.position_of(request.pair.first);
    const int py = subset.position_of(request.pair.second);
    if (px < 0 || py < 0 || px == py) {
        throw std::invalid_argument("objective pair must name two distinct members of the subset {"
                                    + subset.to_string() + "}");
    }
    std::vector<ScatterPanel> panels;
    std::string stem = "front";
    for (const auto& id : request.problems) {
        const auto spec = ProblemSpec::from_id(id, request.m_max);
        subset.check_within(spec.m_max());
        const auto path = front_path(config.output, spec, subset);
        ReferenceFront front = [&] {
            if (std::filesystem::exists(path)) {
                return load_front(path);
            }
            log.line("warning: no archive for " + describe(spec, subset) + "; sampling it now");
            return sample_front(spec, subset, config.front_budget, front_seed(config.base_seed, spec, subset),
                                config.front_options());
        }();
        ScatterPanel panel;
        panel.title = id + "  (m_max=" + std::to_string(spec.m_max()) + ", subset {" + subset.to_string() + "})";
        panel.x_label = "f" + std::to_string(request.pair.first) + " (normalized)";
        panel.y_label = "f" + std::to_string(request.pair.second) + " (normalized)";
        const auto x = static_cast<std::size_t>(px);
        const auto y = static_cast<std::size_t>(py);
        auto scale = [&](std::size_t j, double v) {
            const double range = front.nadir[j] - front.ideal[j];
            return range > 0.0 ? (v - front.ideal[j]) / range : v - front.ideal[j];
        };
        for (std::size_t i = 0; i < front.points.size(); ++i) {
            panel.points.push_back({ scale(x, front.points[i][x]), scale(y, front.points[i][y]) });
        }
        panel.note = front.degenerate
            ? "degenerate: " + std::to_string(front.points.size()) + " point(s), no spread"
            : std::to_string(front.points.size()) + " nondominated points";
        panels.push_back(std::move(panel));
        stem += "_" + id;
    }
    stem += "_m" + std::to_string(request.m_max) + "_s" + subset.to_tag() + "_f" + std::to_string(request.pair.first)
        + "-" + std::to_string(request.pair.second) + ".svg";
    const auto out = config.output / "plots" / stem;
    text::write_file_atomic(out, scatter_svg(panels));
    log.line("plot written to " + out.string());
    return out;
}

} // namespace dmocno::harness
