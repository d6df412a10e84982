#include "dmocno/harness/archives.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dmocno/text.hpp"

namespace dmocno::harness {

namespace {

constexpr std::string_view kFrontHeader = "# dmocno-front v1";
constexpr std::string_view kRecordHeader = "# dmocno-run v1";
constexpr std::string_view kMhvHeader = "# dmocno-mhv v1";

using Header = std::map<std::string, std::string, std::less<>>;

// Splits "key=value key2=value2" (space separated) into the map.
void parse_pairs(std::string_view line, Header& out)
{
    for (auto token : text::split(line, ' ')) {
        token = text::trim(token);
        if (token.empty()) {
            continue;
        }
        const auto eq = token.find('=');
        if (eq == std::string_view::npos) {
            throw FormatError("expected key=value, got '" + std::string(token) + "'");
        }
        out[std::string(token.substr(0, eq))] = std::string(token.substr(eq + 1));
    }
}

struct Reader {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;

    Reader(std::string_view text, std::string_view header) : lines(text::lines(text))
    {
        while (pos < lines.size() && text::trim(lines[pos]).empty()) {
            ++pos;
        }
        if (pos == lines.size()) {
            throw FormatError("empty file");
        }
        const auto first = text::trim(lines[pos]);
        if (first != header) {
            const auto kind = header.substr(0, header.rfind(' '));
            if (first.starts_with(kind)) {
                throw FormatError("unsupported version '" + std::string(first) + "' (this build reads '"
                                  + std::string(header) + "')");
            }
            throw FormatError("expected '" + std::string(header) + "', got '" + std::string(first) + "'");
        }
        ++pos;
    }

    [[nodiscard]] auto done() const -> bool { return pos >= lines.size(); }

    // Consumes "# key=value" lines that are not stage markers.
    auto header() -> Header
    {
        Header h;
        while (pos < lines.size()) {
            const auto line = text::trim(lines[pos]);
            if (line.empty()) {
                ++pos;
                continue;
            }
            if (!line.starts_with("# ") || line.starts_with("# stage=")) {
                break;
            }
            const auto body = line.substr(2);
            const auto eq = body.find('=');
            if (eq == std::string_view::npos) {
                ++pos; // free comment
                continue;
            }
            h[std::string(body.substr(0, eq))] = std::string(body.substr(eq + 1));
            ++pos;
        }
        return h;
    }

    auto rows(std::size_t count, std::size_t dim) -> PointSet
    {
        PointSet out(dim);
        out.reserve(count);
        for (std::size_t r = 0; r < count; ++r) {
            if (pos >= lines.size()) {
                throw FormatError("file ends after " + std::to_string(r) + " of " + std::to_string(count) + " rows");
            }
            const auto values = text::parse_doubles(lines[pos]);
            if (values.size() != dim) {
                throw FormatError("row " + std::to_string(pos + 1) + " has " + std::to_string(values.size())
                                  + " values, expected " + std::to_string(dim));
            }
            out.push_back(values);
            ++pos;
        }
        return out;
    }
};

auto need(const Header& h, std::string_view key) -> const std::string&
{
    const auto it = h.find(key);
    if (it == h.end()) {
        throw FormatError("missing header field '" + std::string(key) + "'");
    }
    return it->second;
}

auto as_int(const Header& h, std::string_view key) -> int
{
    return static_cast<int>(text::parse_int(need(h, key)));
}

auto as_size(const Header& h, std::string_view key) -> std::size_t
{
    return static_cast<std::size_t>(text::parse_u64(need(h, key)));
}

auto vector_text(const std::vector<double>& v) -> std::string
{
    return text::join_doubles(v);
}

auto vector_of(const std::string& s) -> std::vector<double>
{
    return s.empty() ? std::vector<double> {} : text::parse_doubles(s);
}

void write_rows(std::string& out, const PointSet& points)
{
    for (std::size_t i = 0; i < points.size(); ++i) {
        out += text::join_doubles(points[i]);
        out += '\n';
    }
}

auto spec_from(const Header& h) -> ProblemSpec
{
    const auto base = ProblemSpec::from_id(need(h, "problem"), as_int(h, "m_max"));
    return { base.family(), base.minus(), base.m_max(), as_int(h, "n"), as_int(h, "position_params") };
}

auto padded(int value, int width) -> std::string
{
    auto s = std::to_string(value);
    return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(s.size()))), '0') + s;
}

} // namespace

auto front_path(const std::filesystem::path& out, const ProblemSpec& spec, const ObjectiveSubset& subset)
    -> std::filesystem::path
{
    return out / "fronts" / spec.tag() / (subset.to_tag() + ".front");
}

auto record_path(const std::filesystem::path& out, const RunRecord& c) -> std::filesystem::path
{
    const auto spec = ProblemSpec::from_id(c.problem, c.m_max);
    return out / "runs" / c.setting / spec.tag() / ("tau" + std::to_string(c.tau_t)) / c.algorithm
        / ("run" + padded(c.run, 3) + ".record");
}

auto timing_path(const std::filesystem::path& record) -> std::filesystem::path
{
    auto p = record;
    p += ".timing";
    return p;
}

auto format_front(const ReferenceFront& f) -> std::string
{
    std::string out(kFrontHeader);
    out += '\n';
    auto kv = [&](std::string_view key, const std::string& value) {
        out += "# ";
        out += key;
        out += '=';
        out += value;
        out += '\n';
    };
    kv("problem", f.spec.id());
    kv("m_max", std::to_string(f.spec.m_max()));
    kv("n", std::to_string(f.spec.n()));
    kv("position_params", std::to_string(f.spec.position_params()));
    kv("subset", f.subset.to_string());
    kv("seed", std::to_string(f.seed));
    kv("budget", std::to_string(f.budget));
    kv("cap", std::to_string(f.cap));
    kv("hv_reference", text::format_double(f.hv_reference));
    kv("hv_exact_dim_cap", std::to_string(f.hv_exact_dim_cap));
    kv("mc_samples", std::to_string(f.mc_samples));
    kv("hv_method", f.hv_method.describe());
    kv("hv_seed", std::to_string(f.hv_method.seed));
    kv("front_hv", text::format_double(f.front_hv));
    kv("hv_standard_error", text::format_double(f.hv_standard_error));
    kv("degenerate", f.degenerate ? "1" : "0");
    kv("ideal", vector_text(f.ideal));
    kv("nadir", vector_text(f.nadir));
    kv("rows", std::to_string(f.points.size()));
    write_rows(out, f.points);
    return out;
}

auto parse_front(std::string_view text) -> ReferenceFront
{
    Reader reader(text, kFrontHeader);
    const auto h = reader.header();
    ReferenceFront f { spec_from(h), ObjectiveSubset::parse(need(h, "subset")) };
    f.seed = text::parse_u64(need(h, "seed"));
    f.budget = as_size(h, "budget");
    f.cap = as_size(h, "cap");
    f.hv_reference = text::parse_double(need(h, "hv_reference"));
    f.hv_exact_dim_cap = as_int(h, "hv_exact_dim_cap");
    f.mc_samples = text::parse_u64(need(h, "mc_samples"));
    f.hv_method = HvMethod::parse(need(h, "hv_method"), text::parse_u64(need(h, "hv_seed")));
    f.front_hv = text::parse_double(need(h, "front_hv"));
    f.hv_standard_error = text::parse_double(need(h, "hv_standard_error"));
    f.degenerate = need(h, "degenerate") == "1";
    f.ideal = vector_of(need(h, "ideal"));
    f.nadir = vector_of(need(h, "nadir"));
    f.points = reader.rows(as_size(h, "rows"), f.subset.size());
    f.subset.check_within(f.spec.m_max());
    if (!f.degenerate && (f.ideal.size() != f.subset.size() || f.nadir.size() != f.subset.size())) {
        throw FormatError("ideal/nadir length does not match the subset");
    }
    return f;
}

auto load_front(const std::filesystem::path& path) -> ReferenceFront
{
    try {
        return parse_front(text::read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

auto front_matches(const std::filesystem::path& path, const ProblemSpec& spec, const ObjectiveSubset& subset,
                   std::uint64_t seed, std::size_t budget, const FrontOptions& options) -> bool
{
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) {
        return false;
    }
    try {
        const auto f = load_front(path);
        return f.spec == spec && f.subset == subset && f.seed == seed && f.budget == budget && f.cap == options.cap
            && f.hv_reference == options.hv.reference && f.hv_exact_dim_cap == options.hv.exact_dim_cap
            && f.mc_samples == options.hv.mc_samples;
    } catch (const std::exception&) {
        return false;
    }
}

auto format_record(const RunRecord& r) -> std::string
{
    std::string out(kRecordHeader);
    out += '\n';
    out += "# problem=" + r.problem + '\n';
    out += "# m_max=" + std::to_string(r.m_max) + '\n';
    out += "# setting=" + r.setting + '\n';
    out += "# tau_t=" + std::to_string(r.tau_t) + '\n';
    out += "# algorithm=" + r.algorithm + '\n';
    out += "# run=" + std::to_string(r.run) + '\n';
    out += "# seed=" + std::to_string(r.seed) + '\n';
    out += "# stages=" + std::to_string(r.snapshots.size()) + '\n';
    for (const auto& s : r.snapshots) {
        out += "# stage=" + std::to_string(s.stage) + " subset=" + s.subset.to_string()
            + " generation_end=" + std::to_string(s.generation_end) + " rows=" + std::to_string(s.points.size())
            + '\n';
        write_rows(out, s.points);
    }
    return out;
}

auto parse_record(std::string_view text) -> RunRecord
{
    Reader reader(text, kRecordHeader);
    const auto h = reader.header();
    RunRecord r;
    r.problem = need(h, "problem");
    r.m_max = as_int(h, "m_max");
    r.setting = need(h, "setting");
    r.tau_t = as_int(h, "tau_t");
    r.algorithm = need(h, "algorithm");
    r.run = as_int(h, "run");
    r.seed = text::parse_u64(need(h, "seed"));
    const auto stages = as_size(h, "stages");
    for (std::size_t s = 0; s < stages; ++s) {
        while (!reader.done() && text::trim(reader.lines[reader.pos]).empty()) {
            ++reader.pos;
        }
        if (reader.done() || !text::trim(reader.lines[reader.pos]).starts_with("# stage=")) {
            throw FormatError("missing stage " + std::to_string(s) + " block");
        }
        Header sh;
        parse_pairs(text::trim(reader.lines[reader.pos]).substr(2), sh);
        ++reader.pos;
        StageSnapshot snap;
        snap.stage = as_size(sh, "stage");
        snap.subset = ObjectiveSubset::parse(need(sh, "subset"));
        snap.generation_end = static_cast<long>(text::parse_int(need(sh, "generation_end")));
        snap.points = reader.rows(as_size(sh, "rows"), snap.subset.size());
        if (snap.stage != s) {
            throw FormatError("stage blocks out of order");
        }
        r.snapshots.push_back(std::move(snap));
    }
    return r;
}

auto load_record(const std::filesystem::path& path) -> RunRecord
{
    try {
        return parse_record(text::read_file(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

auto format_mhv_table(const MhvTable& table) -> std::string
{
    std::string out(kMhvHeader);
    out += "\n# setting=" + table.setting + '\n';
    out += "problem,tau_t,algorithm,runs,expected_runs,status,mean,std,winner\n";
    for (const auto& c : table.cells) {
        out += c.problem + ',' + std::to_string(c.tau_t) + ',' + c.algorithm + ',' + std::to_string(c.runs) + ','
            + std::to_string(c.expected_runs) + ',' + c.status + ',' + text::format_double(c.mean) + ','
            + text::format_double(c.std) + ',' + (c.winner ? "1" : "0") + '\n';
    }
    return out;
}

auto parse_mhv_table(std::string_view text) -> MhvTable
{
    Reader reader(text, kMhvHeader);
    const auto h = reader.header();
    MhvTable table;
    table.setting = need(h, "setting");
    bool columns = false;
    for (; !reader.done(); ++reader.pos) {
        const auto line = text::trim(reader.lines[reader.pos]);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!columns) {
            columns = true; // column names
            continue;
        }
        const auto f = text::split(line, ',');
        if (f.size() != 9) {
            throw FormatError("MHV row " + std::to_string(reader.pos + 1) + " has " + std::to_string(f.size())
                              + " fields, expected 9");
        }
        MhvCell c;
        c.problem = std::string(f[0]);
        c.tau_t = static_cast<int>(text::parse_int(f[1]));
        c.algorithm = std::string(f[2]);
        c.runs = static_cast<int>(text::parse_int(f[3]));
        c.expected_runs = static_cast<int>(text::parse_int(f[4]));
        c.status = std::string(f[5]);
        c.mean = text::parse_double(f[6]);
        c.std = text::parse_double(f[7]);
        c.winner = f[8] == "1";
        table.cells.push_back(std::move(c));
    }
    return table;
}

auto format_mhv_summary(const MhvTable& table) -> std::string
{
    std::vector<std::string> algorithms;
    std::vector<std::pair<std::string, int>> rows;
    std::map<std::tuple<std::string, int, std::string>, const MhvCell*> at;
    for (const auto& c : table.cells) {
        if (std::find(algorithms.begin(), algorithms.end(), c.algorithm) == algorithms.end()) {
            algorithms.push_back(c.algorithm);
        }
        const std::pair<std::string, int> key { c.problem, c.tau_t };
        if (std::find(rows.begin(), rows.end(), key) == rows.end()) {
            rows.push_back(key);
        }
        at[{ c.problem, c.tau_t, c.algorithm }] = &c;
    }
    auto cell_text = [](const MhvCell* c) -> std::string {
        if (c == nullptr) {
            return "-";
        }
        std::string s;
        if (std::isnan(c->mean)) {
            s = "n/a";
        } else {
            s = text::format_fixed(c->mean, 4) + " (" + text::format_scientific(c->std, 2) + ")";
        }
        if (c->winner) {
            s += " *";
        }
        if (!c->complete()) {
            s += " [" + c->status + " " + std::to_string(c->runs) + "/" + std::to_string(c->expected_runs) + "]";
        }
        return s;
    };
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> head { "problem", "tau_t" };
    head.insert(head.end(), algorithms.begin(), algorithms.end());
    grid.push_back(head);
    for (const auto& [problem, tau] : rows) {
        std::vector<std::string> line { problem, std::to_string(tau) };
        for (const auto& a : algorithms) {
            const auto it = at.find({ problem, tau, a });
            line.push_back(cell_text(it == at.end() ? nullptr : it->second));
        }
        grid.push_back(line);
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& line : grid) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            width[i] = std::max(width[i], line[i].size());
        }
    }
    std::string out = "Setting " + table.setting + ": mean (std) of MHV over runs; * = best complete mean per row\n";
    for (const auto& line : grid) {
        std::string l;
        for (std::size_t i = 0; i < line.size(); ++i) {
            l += line[i];
            if (i + 1 < line.size()) {
                l += std::string(width[i] - line[i].size() + 2, ' ');
            }
        }
        out += l + '\n';
    }
    return out;
}

} // namespace dmocno::harness
