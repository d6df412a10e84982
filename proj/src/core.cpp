#include "dmocno/core.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace dmocno {

namespace {

__extension__ using u128 = unsigned __int128;

void normalize_indices(std::vector<int>& indices)
{
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
        throw std::invalid_argument("objective subset contains a repeated index");
    }
    if (!indices.empty() && indices.front() < 1) {
        throw std::out_of_range("objective indices are 1-based; got " + std::to_string(indices.front()));
    }
}

} // namespace

ObjectiveSubset::ObjectiveSubset(std::initializer_list<int> indices)
    : indices_(indices)
{
    normalize_indices(indices_);
}

ObjectiveSubset::ObjectiveSubset(std::vector<int> indices)
    : indices_(std::move(indices))
{
    normalize_indices(indices_);
}

auto ObjectiveSubset::full(int m) -> ObjectiveSubset
{
    std::vector<int> all(static_cast<std::size_t>(std::max(m, 0)));
    for (int i = 0; i < m; ++i) {
        all[static_cast<std::size_t>(i)] = i + 1;
    }
    return ObjectiveSubset(std::move(all));
}

auto ObjectiveSubset::parse(std::string_view text) -> ObjectiveSubset
{
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        auto token = text.substr(pos, comma - pos);
        while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) {
            token.remove_prefix(1);
        }
        while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) {
            token.remove_suffix(1);
        }
        if (token.empty()) {
            if (comma == text.size() && out.empty()) {
                break;
            }
            throw std::invalid_argument("empty entry in objective subset '" + std::string(text) + "'");
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw std::invalid_argument("bad objective index '" + std::string(token) + "'");
        }
        out.push_back(value);
        pos = comma + 1;
    }
    return ObjectiveSubset(std::move(out));
}

auto ObjectiveSubset::contains(int index) const noexcept -> bool
{
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

auto ObjectiveSubset::position_of(int index) const noexcept -> int
{
    auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
    if (it == indices_.end() || *it != index) {
        return -1;
    }
    return static_cast<int>(it - indices_.begin());
}

auto ObjectiveSubset::is_subset_of(const ObjectiveSubset& other) const noexcept -> bool
{
    return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(), indices_.end());
}

void ObjectiveSubset::check_within(int m_max) const
{
    if (!indices_.empty() && indices_.back() > m_max) {
        throw std::out_of_range("objective index " + std::to_string(indices_.back()) + " exceeds m_max="
                                + std::to_string(m_max));
    }
}

auto ObjectiveSubset::to_string() const -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(indices_[i]);
    }
    return out;
}

auto ObjectiveSubset::to_tag() const -> std::string
{
    auto text = to_string();
    std::replace(text.begin(), text.end(), ',', '-');
    return text;
}

auto set_difference(const ObjectiveSubset& a, const ObjectiveSubset& b) -> ObjectiveSubset
{
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return ObjectiveSubset(std::move(out));
}

auto set_union(const ObjectiveSubset& a, const ObjectiveSubset& b) -> ObjectiveSubset
{
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return ObjectiveSubset(std::move(out));
}

PointSet::PointSet(std::size_t dim, std::vector<double> flat)
    : dim_(dim), data_(std::move(flat))
{
    if (dim_ == 0 ? !data_.empty() : data_.size() % dim_ != 0) {
        throw std::invalid_argument("flat point buffer is not a multiple of the dimension");
    }
}

PointSet::PointSet(std::initializer_list<std::initializer_list<double>> rows)
{
    for (const auto& r : rows) {
        if (dim_ == 0) {
            dim_ = r.size();
        }
        push_back(std::span<const double>(r.begin(), r.size()));
    }
}

void PointSet::push_back(std::span<const double> row)
{
    if (row.size() != dim_) {
        throw std::invalid_argument("point of dimension " + std::to_string(row.size()) + " pushed into a set of dimension "
                                    + std::to_string(dim_));
    }
    data_.insert(data_.end(), row.begin(), row.end());
}

auto project(const PointSet& points, const ObjectiveSubset& source, const ObjectiveSubset& target) -> PointSet
{
    if (points.dim() != source.size()) {
        throw std::invalid_argument("point dimension does not match the source subset");
    }
    std::vector<std::size_t> columns;
    columns.reserve(target.size());
    for (int index : target) {
        auto pos = source.position_of(index);
        if (pos < 0) {
            throw std::invalid_argument("objective " + std::to_string(index) + " is not part of the source subset");
        }
        columns.push_back(static_cast<std::size_t>(pos));
    }
    PointSet out(target.size());
    out.reserve(points.size());
    std::vector<double> buffer(target.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto row = points[i];
        for (std::size_t c = 0; c < columns.size(); ++c) {
            buffer[c] = row[columns[c]];
        }
        out.push_back(buffer);
    }
    return out;
}

auto Rng::below(std::uint64_t bound) -> std::uint64_t
{
    if (bound == 0) {
        throw std::invalid_argument("Rng::below requires a positive bound");
    }
    // Lemire's nearly-divisionless rejection.
    auto x = engine_();
    auto m = static_cast<u128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            x = engine_();
            m = static_cast<u128>(x) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64U);
}

} // namespace dmocno
