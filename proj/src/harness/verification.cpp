#include <cmath>

#include "dmocno/harness/commands.hpp"
#include "dmocno/text.hpp"

namespace dmocno::harness {

namespace {

auto inclusion_detail(const InclusionReport& r) -> std::string
{
    std::string s = std::to_string(r.grid_points) + " grid points, " + std::to_string(r.optimal_under_a)
        + " optimal on the smaller subset, " + std::to_string(r.optimal_under_b) + " on the larger";
    if (r.counterexample) {
        s += r.counterexample->kind == InclusionCounterexample::Kind::NotOptimalUnderB
            ? "; counterexample: optimal on the smaller subset but dominated on the larger"
            : "; counterexample: shared objectives disagree (" + text::join_doubles(r.counterexample->under_a)
                + " vs " + text::join_doubles(r.counterexample->under_b) + ")";
    }
    return s;
}

} // namespace

auto cmd_verify(const VerifyOptions& options, std::ostream& log) -> std::vector<VerifyCheck>
{
    std::vector<VerifyCheck> checks;
    auto report = [&](VerifyCheck check) {
        log << (check.passed ? "PASS " : "FAIL ") << check.name << ": " << check.detail << '\n';
        checks.push_back(std::move(check));
    };

    const ObjectiveSubset small { 1, 2 };
    const ObjectiveSubset large { 1, 2, 3 };
    for (auto family : { Family::DTLZ2, Family::DTLZ1 }) {
        const ProblemSpec spec(family, true, 3, 4);
        const auto r = verify_inclusion(spec, small, large, options.resolution);
        report({ "inclusion " + spec.id() + " {1,2} in {1,2,3}", r.holds, inclusion_detail(r) });
    }
    {
        const auto r = verify_inclusion_legacy(3, 2, 3, options.resolution);
        report({ "legacy F1 m=2 vs m=3 breaks inclusion", !r.holds, inclusion_detail(r) });
    }

    const ProblemSpec classical = ProblemSpec::with_defaults(Family::DTLZ1, false, 3);
    const ProblemSpec minus = ProblemSpec::with_defaults(Family::DTLZ1, true, 3);
    {
        const auto f = sample_front(classical, small, options.budget, 1);
        double farthest = 0.0;
        for (std::size_t i = 0; i < f.points.size(); ++i) {
            farthest = std::max({ farthest, std::fabs(f.points[i][0]), std::fabs(f.points[i][1]) });
        }
        report({ "dtlz1 {1,2} collapses to the origin", f.degenerate && farthest <= 1e-9,
                 std::to_string(f.points.size()) + " nondominated point(s), max |f| = "
                     + text::format_scientific(farthest, 2) });
    }
    {
        const auto f = sample_front(minus, small, options.budget, 1);
        report({ "minus-dtlz1 {1,2} front is spread out", !f.degenerate && f.points.size() >= 100,
                 std::to_string(f.points.size()) + " nondominated points, normalized hv "
                     + text::format_fixed(f.front_hv, 4) });
    }
    return checks;
}

} // namespace dmocno::harness
