#ifndef DMOCNO_HARNESS_ARCHIVES_HPP
#define DMOCNO_HARNESS_ARCHIVES_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dmocno/frontier.hpp"
#include "dmocno/optimizer.hpp"

namespace dmocno::harness {

// Every file starts with "# dmocno-<kind> v1"; readers reject other kinds and versions.
// Numbers in archives use the shortest text that reads back to the same double.

/// <out>/fronts/<spec tag>/<subset tag>.front
[[nodiscard]] auto front_path(const std::filesystem::path& out, const ProblemSpec& spec, const ObjectiveSubset& subset)
    -> std::filesystem::path;
/// <out>/runs/<setting>/<spec tag>/tau<t>/<algorithm>/run<NNN>.record
[[nodiscard]] auto record_path(const std::filesystem::path& out, const RunRecord& coordinates)
    -> std::filesystem::path;
/// Wall-clock sidecar of a record; kept apart so records stay byte-reproducible.
[[nodiscard]] auto timing_path(const std::filesystem::path& record) -> std::filesystem::path;

[[nodiscard]] auto format_front(const ReferenceFront& front) -> std::string;
[[nodiscard]] auto parse_front(std::string_view text) -> ReferenceFront;
[[nodiscard]] auto load_front(const std::filesystem::path& path) -> ReferenceFront;

/// True when the archive at `path` exists and its header matches every
/// sampling parameter given here.
[[nodiscard]] auto front_matches(const std::filesystem::path& path, const ProblemSpec& spec,
                                 const ObjectiveSubset& subset, std::uint64_t seed, std::size_t budget,
                                 const FrontOptions& options) -> bool;

/// Record text: a header with the coordinates, then per stage a
/// "# stage=<s> subset=<a,b> generation_end=<g> rows=<r>" line and r objective rows.
[[nodiscard]] auto format_record(const RunRecord& record) -> std::string;
[[nodiscard]] auto parse_record(std::string_view text) -> RunRecord;
[[nodiscard]] auto load_record(const std::filesystem::path& path) -> RunRecord;

/// One row of the per-cell MHV table.
struct MhvCell {
    std::string problem;
    int tau_t = 0;
    std::string algorithm;
    int runs = 0;          // runs that contributed
    int expected_runs = 0; // runs requested by the configuration
    double mean = 0.0;     // NaN when fewer than two runs
    double std = 0.0;
    bool winner = false;   // best complete mean for (problem, tau_t)
    std::string status;    // "ok", "incomplete", "degenerate-front", "bound-violation"

    [[nodiscard]] auto complete() const -> bool { return status == "ok"; }
};

struct MhvTable {
    std::string setting;
    std::vector<MhvCell> cells;
};

[[nodiscard]] auto format_mhv_table(const MhvTable& table) -> std::string;
[[nodiscard]] auto parse_mhv_table(std::string_view text) -> MhvTable;
/// Human-readable table: "0.5757 (4.45e-03)" per cell, winners starred.
[[nodiscard]] auto format_mhv_summary(const MhvTable& table) -> std::string;

} // namespace dmocno::harness

#endif
