#include "dmocno/text.hpp"

#include <array>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

namespace dmocno::text {

auto trim(std::string_view s) -> std::string_view
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

auto split(std::string_view s, char sep) -> std::vector<std::string_view>
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        auto next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

auto lines(std::string_view s) -> std::vector<std::string_view>
{
    auto out = split(s, '\n');
    for (auto& line : out) {
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
    }
    if (!out.empty() && out.back().empty()) {
        out.pop_back();
    }
    return out;
}

auto parse_int(std::string_view s) -> long long
{
    s = trim(s);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw FormatError("expected an integer, got '" + std::string(s) + "'");
    }
    return value;
}

auto parse_u64(std::string_view s) -> std::uint64_t
{
    s = trim(s);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw FormatError("expected an unsigned integer, got '" + std::string(s) + "'");
    }
    return value;
}

auto parse_double(std::string_view s) -> double
{
    s = trim(s);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw FormatError("expected a number, got '" + std::string(s) + "'");
    }
    return value;
}

auto parse_doubles(std::string_view csv) -> std::vector<double>
{
    std::vector<double> out;
    if (trim(csv).empty()) {
        return out;
    }
    for (auto token : split(csv, ',')) {
        out.push_back(parse_double(token));
    }
    return out;
}

auto format_double(double value) -> std::string
{
    std::array<char, 64> buffer {};
    auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    if (ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    return { buffer.data(), ptr };
}

auto format_fixed(double value, int decimals) -> std::string
{
    std::array<char, 512> buffer {};
    auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::fixed,
                                   decimals);
    if (ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    std::string out(buffer.data(), ptr);
    if (out.starts_with("-") && out.find_first_not_of("-0.") == std::string::npos) {
        out.erase(0, 1); // no "-0.0000"
    }
    return out;
}

auto format_scientific(double value, int decimals) -> std::string
{
    std::array<char, 64> buffer {};
    auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                   std::chars_format::scientific, decimals);
    if (ec != std::errc()) {
        throw std::runtime_error("number formatting failed");
    }
    return { buffer.data(), ptr };
}

auto join_doubles(std::span<const double> values) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += format_double(values[i]);
    }
    return out;
}

auto read_file(const std::filesystem::path& path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents)
{
    static std::atomic<unsigned long> counter { 0 };
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    const auto id = std::hash<std::thread::id> {}(std::this_thread::get_id());
    auto tmp = path;
    tmp += ".tmp." + std::to_string(id) + "." + std::to_string(counter.fetch_add(1));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) {
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

} // namespace dmocno::text
