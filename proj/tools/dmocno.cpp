#include <CLI11.hpp>

#include <iostream>

#include "dmocno/harness/commands.hpp"
#include "dmocno/text.hpp"

using namespace dmocno;
using namespace dmocno::harness;

int main(int argc, char** argv)
{
    CLI::App app { "Benchmarks and evaluation for dynamic multi-objective optimization with a changing number of "
                   "objectives" };
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    unsigned jobs = default_jobs();
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    app.add_option("--config", config_path, "experiment configuration file");
    app.add_option("--jobs", jobs, "worker threads (never changes results)")->check(CLI::PositiveNumber);
    app.add_option("--out", out_dir, "output directory (overrides the config)");
    app.add_option("--seed", seed, "base seed (overrides the config)");

    auto* list = app.add_subcommand("list", "problems, settings and algorithms");
    auto* fronts = app.add_subcommand("fronts", "sample and archive reference fronts");
    auto* run = app.add_subcommand("run", "execute all experiment cells");
    auto* mhv = app.add_subcommand("mhv", "MHV tables from the run records");
    auto* rank = app.add_subcommand("rank", "Friedman ranks from the MHV tables");
    auto* plot = app.add_subcommand("front-plot", "scatter of a front on two objectives");
    auto* verify = app.add_subcommand("verify", "inclusion and degeneracy property checks");

    FrontPlotRequest plot_request;
    std::string plot_subset;
    std::vector<int> plot_pair { 1, 2 };
    plot->add_option("--problem", plot_request.problems, "problem id; repeat for side-by-side panels")->required();
    plot->add_option("--m-max", plot_request.m_max, "number of objectives of the problem instance")
        ->check(CLI::Range(2, 10));
    plot->add_option("--subset", plot_subset, "front subset such as 1,2,3 (default: the pair)");
    plot->add_option("--pair", plot_pair, "two objective indices")->expected(2)->delimiter(',');

    VerifyOptions verify_options;
    verify->add_option("--resolution", verify_options.resolution, "grid steps per decision variable")
        ->check(CLI::Range(1, 12));
    verify->add_option("--budget", verify_options.budget, "front sampling budget")->check(CLI::Range(100, 100'000'000));

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            cmd_list(std::cout);
            return 0;
        }
        if (verify->parsed()) {
            const auto checks = cmd_verify(verify_options, std::cout);
            for (const auto& c : checks) {
                if (!c.passed) {
                    return 1;
                }
            }
            return 0;
        }

        ExperimentConfig config = config_path.empty() ? default_config() : load_config(config_path);
        if (!out_dir.empty()) {
            config.output = out_dir;
        }
        if (seed) {
            config.base_seed = *seed;
        }
        config.validate();

        if (fronts->parsed()) {
            const auto s = cmd_fronts(config, jobs, std::cerr);
            std::cout << "fronts: " << s.computed << " computed, " << s.skipped << " up to date, "
                      << s.degenerate.size() << " degenerate\n";
        } else if (run->parsed()) {
            const auto s = cmd_run(config, jobs, std::cerr);
            std::cout << "runs: " << s.executed << " executed, " << s.skipped << " up to date\n";
        } else if (mhv->parsed()) {
            const auto s = cmd_mhv(config, jobs, std::cerr);
            for (const auto& t : s.tables) {
                std::cout << format_mhv_summary(t) << '\n';
            }
            if (s.bound_violations > 0) {
                std::cerr << "error: " << s.bound_violations << " run(s) have a stage ratio above "
                          << text::format_fixed(1.0 + kRatioTolerance, 2) << '\n';
                return 1;
            }
            if (s.incomplete_cells > 0) {
                std::cerr << s.incomplete_cells << " cell(s) incomplete\n";
                return 2;
            }
        } else if (rank->parsed()) {
            for (const auto& r : cmd_rank(config, std::cerr)) {
                std::cout << "setting " << r.setting << ", tau_t=" << r.tau_t << ":";
                for (std::size_t a = 0; a < r.algorithms.size(); ++a) {
                    std::cout << "  " << r.algorithms[a] << " " << text::format_fixed(r.ranks.average_ranks[a], 2);
                }
                std::cout << '\n';
            }
        } else if (plot->parsed()) {
            if (!plot_subset.empty()) {
                plot_request.subset = ObjectiveSubset::parse(plot_subset);
            }
            plot_request.pair = { plot_pair.at(0), plot_pair.at(1) };
            std::cout << cmd_front_plot(config, plot_request, std::cerr).string() << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
