#ifndef DMOCNO_TEXT_HPP
#define DMOCNO_TEXT_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dmocno {

/// Malformed or unsupported file contents.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace text {

auto trim(std::string_view s) -> std::string_view;
auto split(std::string_view s, char sep) -> std::vector<std::string_view>;
auto lines(std::string_view s) -> std::vector<std::string_view>;

auto parse_int(std::string_view s) -> long long;
auto parse_u64(std::string_view s) -> std::uint64_t;
auto parse_double(std::string_view s) -> double;
auto parse_doubles(std::string_view csv) -> std::vector<double>;

/// Shortest text that round-trips to the same double (at most 17 significant digits).
auto format_double(double value) -> std::string;
/// Fixed notation with `decimals` digits after the point.
auto format_fixed(double value, int decimals) -> std::string;
/// Scientific notation such as "4.45e-03".
auto format_scientific(double value, int decimals) -> std::string;
auto join_doubles(std::span<const double> values) -> std::string;

auto read_file(const std::filesystem::path& path) -> std::string;
/// Writes through a unique temporary file followed by a rename.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

} // namespace text
} // namespace dmocno

#endif
