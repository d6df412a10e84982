#include "dmocno/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "dmocno/text.hpp"

namespace dmocno::harness {

auto SettingRef::schedule(int tau_t) const -> ObjectiveSchedule
{
    if (builtin) {
        return builtin_setting(*builtin, tau_t);
    }
    if (!custom) {
        throw std::logic_error("setting '" + name + "' has no schedule");
    }
    return custom->retimed(tau_t);
}

auto SettingRef::m_max() const -> int
{
    return builtin ? builtin_setting(*builtin, 1).m_max() : custom->m_max();
}

namespace {

constexpr std::string_view kHeader = "# dmocno-config v1";

auto builtin_ref(Setting s) -> SettingRef
{
    return { std::string(setting_name(s)), s, std::nullopt, {} };
}

auto is_builtin_name(std::string_view name) -> bool
{
    return name == "I" || name == "II" || name == "III";
}

auto list_of(std::string_view value) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (auto item : text::split(value, ',')) {
        item = text::trim(item);
        if (!item.empty()) {
            out.emplace_back(item);
        }
    }
    return out;
}

auto positive_int(std::string_view key, std::string_view value) -> long long
{
    const auto v = text::parse_int(value);
    if (v <= 0) {
        throw std::invalid_argument(std::string(key) + " must be positive");
    }
    return v;
}

auto family_index(Family f) -> std::uint64_t
{
    const auto it = std::find(kAllFamilies.begin(), kAllFamilies.end(), f);
    return static_cast<std::uint64_t>(it - kAllFamilies.begin());
}

// 0 retain, 1 inherit, 2 + f * 1e6 for restart(f).
auto algorithm_code(const ChangeResponse& response) -> std::uint64_t
{
    switch (response.strategy) {
    case ChangeResponse::Strategy::Retain: return 0;
    case ChangeResponse::Strategy::InheritanceFill: return 1;
    case ChangeResponse::Strategy::PartialRestart: {
        const double scaled = response.fraction * 1e6;
        const double rounded = std::round(scaled);
        if (std::fabs(scaled - rounded) > 1e-6 * std::max(1.0, scaled)) {
            throw std::invalid_argument("restart fractions are limited to 6 decimals");
        }
        return 2 + static_cast<std::uint64_t>(rounded);
    }
    }
    throw std::logic_error("unknown change response");
}

auto fnv1a(std::string_view s) -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

void ExperimentConfig::validate() const
{
    if (problems.empty() || settings.empty() || tau_values.empty() || algorithms.empty()) {
        throw std::invalid_argument("problems, settings, tau_t and algorithms must all be nonempty");
    }
    auto no_duplicates = [](auto values, const char* what) {
        std::sort(values.begin(), values.end());
        if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
            throw std::invalid_argument(std::string("duplicate entry in ") + what);
        }
    };
    no_duplicates(problems, "problems");
    no_duplicates(tau_values, "tau_t");
    std::vector<std::string> names;
    for (const auto& s : settings) {
        names.push_back(s.name);
    }
    no_duplicates(names, "settings");
    std::vector<std::uint64_t> codes;
    for (const auto& a : algorithms) {
        codes.push_back(algorithm_code(ChangeResponse::parse(a)));
        if (ChangeResponse::parse(a).algorithm_id() != a) {
            throw std::invalid_argument("algorithm '" + a + "' should be written as '"
                                        + ChangeResponse::parse(a).algorithm_id() + "'");
        }
    }
    no_duplicates(codes, "algorithms");
    for (const auto& p : problems) {
        (void)ProblemSpec::from_id(p, 3);
    }
    for (int tau : tau_values) {
        if (tau <= 0 || tau >= (1 << 16)) {
            throw std::invalid_argument("tau_t values must lie in [1, 65535]");
        }
    }
    if (runs < 1 || runs >= (1 << 14)) {
        throw std::invalid_argument("runs must lie in [1, 16383]");
    }
    if (settings.size() > 250) {
        throw std::invalid_argument("at most 250 settings");
    }
    if (front_budget < 100 || front_cap < 2) {
        throw std::invalid_argument("front_budget must be >= 100 and front_cap >= 2");
    }
    if (hv.exact_dim_cap < 1 || hv.exact_dim_cap > 8) {
        throw std::invalid_argument("hv_exact_dim_cap must lie in [1, 8]");
    }
    if (hv.mc_samples < 10'000) {
        throw std::invalid_argument("mc_samples must be at least 10000");
    }
    ea.validate();
}

auto ExperimentConfig::front_options() const -> FrontOptions
{
    return { front_cap, hv };
}

auto ExperimentConfig::setting(std::string_view name) const -> const SettingRef&
{
    for (const auto& s : settings) {
        if (s.name == name) {
            return s;
        }
    }
    throw std::invalid_argument("unknown setting '" + std::string(name) + "'");
}

auto default_config() -> ExperimentConfig
{
    ExperimentConfig c;
    for (auto f : kAllFamilies) {
        c.problems.push_back("minus-" + std::string(family_name(f)));
    }
    c.settings.push_back(builtin_ref(Setting::I));
    c.algorithms = { "rvea-retain", "rvea-restart1", "rvea-inherit" };
    return c;
}

auto parse_config(std::string_view text, const std::filesystem::path& base_dir) -> ExperimentConfig
{
    ExperimentConfig c = default_config();
    const auto all = text::lines(text);
    std::size_t first = 0;
    while (first < all.size() && text::trim(all[first]).empty()) {
        ++first;
    }
    if (first == all.size() || text::trim(all[first]) != kHeader) {
        throw FormatError("configuration must start with '" + std::string(kHeader) + "'");
    }

    std::vector<std::string> listed;
    bool settings_given = false;
    struct Section {
        std::string name;
        std::filesystem::path schedule;
        std::size_t line;
    };
    std::vector<Section> sections;
    bool in_section = false;

    for (std::size_t i = first + 1; i < all.size(); ++i) {
        const auto line = text::trim(all[i]);
        const auto where = " (line " + std::to_string(i + 1) + ")";
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (line == "[setting]") {
            sections.push_back({ {}, {}, i + 1 });
            in_section = true;
            continue;
        }
        if (line.front() == '[') {
            throw FormatError("unknown section " + std::string(line) + where);
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw FormatError("expected key = value" + where);
        }
        const std::string key(text::trim(line.substr(0, eq)));
        const auto value = text::trim(line.substr(eq + 1));
        try {
            if (in_section) {
                if (key == "name") {
                    sections.back().name = std::string(value);
                } else if (key == "schedule") {
                    sections.back().schedule = base_dir / std::filesystem::path(std::string(value));
                } else {
                    throw FormatError("unknown setting key '" + key + "'");
                }
                continue;
            }
            if (key == "problems") {
                c.problems = list_of(value);
            } else if (key == "settings") {
                listed = list_of(value);
                settings_given = true;
            } else if (key == "tau_t") {
                c.tau_values.clear();
                for (const auto& v : list_of(value)) {
                    c.tau_values.push_back(static_cast<int>(positive_int(key, v)));
                }
            } else if (key == "algorithms") {
                c.algorithms = list_of(value);
            } else if (key == "runs") {
                c.runs = static_cast<int>(positive_int(key, value));
            } else if (key == "base_seed") {
                c.base_seed = text::parse_u64(value);
            } else if (key == "output") {
                c.output = base_dir / std::filesystem::path(std::string(value));
            } else if (key == "front_budget") {
                c.front_budget = static_cast<std::size_t>(positive_int(key, value));
            } else if (key == "front_cap") {
                c.front_cap = static_cast<std::size_t>(positive_int(key, value));
            } else if (key == "hv_exact_dim_cap") {
                c.hv.exact_dim_cap = static_cast<int>(positive_int(key, value));
            } else if (key == "mc_samples") {
                c.hv.mc_samples = static_cast<std::uint64_t>(positive_int(key, value));
            } else if (key == "population") {
                c.ea.population_size = static_cast<int>(positive_int(key, value));
            } else if (key == "eta_c") {
                c.ea.eta_c = text::parse_double(value);
            } else if (key == "eta_m") {
                c.ea.eta_m = text::parse_double(value);
            } else if (key == "crossover_probability") {
                c.ea.crossover_probability = text::parse_double(value);
            } else if (key == "mutation_probability") {
                c.ea.mutation_probability = value == "1/n" ? -1.0 : text::parse_double(value);
            } else {
                throw FormatError("unknown key '" + key + "'");
            }
        } catch (const std::exception& e) {
            throw FormatError(std::string(e.what()) + where);
        }
    }

    c.settings.clear();
    if (!settings_given) {
        listed = { "I" };
        if (!sections.empty()) {
            listed.clear();
        }
    }
    for (const auto& s : sections) {
        if (s.name.empty() || s.schedule.empty()) {
            throw FormatError("[setting] at line " + std::to_string(s.line) + " needs name and schedule");
        }
        if (is_builtin_name(s.name)) {
            throw FormatError("custom setting may not be named " + s.name);
        }
        if (std::find(listed.begin(), listed.end(), s.name) == listed.end()) {
            listed.push_back(s.name);
        }
    }
    for (const auto& entry : listed) {
        if (is_builtin_name(entry)) {
            c.settings.push_back(builtin_ref(parse_setting(entry)));
            continue;
        }
        const auto section = std::find_if(sections.begin(), sections.end(),
                                          [&](const Section& s) { return s.name == entry; });
        SettingRef ref;
        if (section != sections.end()) {
            ref.name = section->name;
            ref.source = section->schedule;
        } else {
            ref.source = base_dir / std::filesystem::path(entry);
            ref.name = ref.source.stem().string();
        }
        ref.custom = load_schedule(ref.source);
        c.settings.push_back(std::move(ref));
    }
    c.validate();
    return c;
}

auto load_config(const std::filesystem::path& path) -> ExperimentConfig
{
    return parse_config(text::read_file(path), path.parent_path());
}

auto setting_index(const ExperimentConfig& config, std::string_view name) -> std::size_t
{
    std::size_t custom = 0;
    for (const auto& s : config.settings) {
        if (s.name == name) {
            return s.builtin ? static_cast<std::size_t>(*s.builtin) : 3 + custom;
        }
        if (!s.builtin) {
            ++custom;
        }
    }
    throw std::invalid_argument("unknown setting '" + std::string(name) + "'");
}

auto run_seed(std::uint64_t base_seed, const ProblemSpec& spec, std::size_t setting_index, int tau_t,
              const ChangeResponse& algorithm, int run) -> std::uint64_t
{
    const std::uint64_t problem = family_index(spec.family()) * 2 + (spec.minus() ? 1 : 0);
    const std::uint64_t code = algorithm_code(algorithm);
    if (setting_index >= (1U << 8U) || tau_t <= 0 || tau_t >= (1 << 16) || code >= (1U << 21U) || run < 0
        || run >= (1 << 14)) {
        throw std::invalid_argument("run coordinates exceed the seed packing ranges");
    }
    const std::uint64_t packed = problem | (static_cast<std::uint64_t>(setting_index) << 5U)
        | (static_cast<std::uint64_t>(tau_t) << 13U) | (code << 29U) | (static_cast<std::uint64_t>(run) << 50U);
    return mix64(packed ^ mix64(base_seed));
}

auto run_seed(const ExperimentConfig& config, std::string_view problem, std::string_view setting, int tau_t,
              std::string_view algorithm, int run) -> std::uint64_t
{
    const auto& ref = config.setting(setting);
    return run_seed(config.base_seed, ProblemSpec::from_id(problem, ref.m_max()), setting_index(config, setting),
                    tau_t, ChangeResponse::parse(algorithm), run);
}

auto front_seed(std::uint64_t base_seed, const ProblemSpec& spec, const ObjectiveSubset& subset) -> std::uint64_t
{
    return derive_seed(base_seed, fnv1a(spec.tag() + "|" + subset.to_string()));
}

} // namespace dmocno::harness
