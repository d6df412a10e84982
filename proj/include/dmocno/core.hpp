#ifndef DMOCNO_CORE_HPP
#define DMOCNO_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dmocno {

/// Sorted set of distinct 1-based objective indices.
///
/// An empty set is a valid value (it appears as the result of a subset
/// difference); callers that need a nonempty active set check `empty()`.
class ObjectiveSubset {
public:
    ObjectiveSubset() = default;
    ObjectiveSubset(std::initializer_list<int> indices);
    explicit ObjectiveSubset(std::vector<int> indices);

    /// Every index from 1 to m inclusive.
    static auto full(int m) -> ObjectiveSubset;
    /// Parses "2,4,5" (whitespace tolerant).
    static auto parse(std::string_view text) -> ObjectiveSubset;

    [[nodiscard]] auto size() const noexcept -> std::size_t { return indices_.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return indices_.empty(); }
    [[nodiscard]] auto indices() const noexcept -> std::span<const int> { return indices_; }
    [[nodiscard]] auto operator[](std::size_t i) const -> int { return indices_[i]; }
    [[nodiscard]] auto begin() const noexcept { return indices_.begin(); }
    [[nodiscard]] auto end() const noexcept { return indices_.end(); }

    [[nodiscard]] auto contains(int index) const noexcept -> bool;
    [[nodiscard]] auto max_index() const noexcept -> int { return indices_.empty() ? 0 : indices_.back(); }
    /// Position of `index` inside the subset, or -1.
    [[nodiscard]] auto position_of(int index) const noexcept -> int;
    [[nodiscard]] auto is_subset_of(const ObjectiveSubset& other) const noexcept -> bool;

    /// Throws std::out_of_range unless every index lies in [1, m_max].
    void check_within(int m_max) const;

    /// "2,4,5"
    [[nodiscard]] auto to_string() const -> std::string;
    /// "2-4-5", safe inside file names.
    [[nodiscard]] auto to_tag() const -> std::string;

    friend auto operator==(const ObjectiveSubset&, const ObjectiveSubset&) -> bool = default;
    friend auto operator<=>(const ObjectiveSubset&, const ObjectiveSubset&) = default;

private:
    std::vector<int> indices_;
};

auto set_difference(const ObjectiveSubset& a, const ObjectiveSubset& b) -> ObjectiveSubset;
auto set_union(const ObjectiveSubset& a, const ObjectiveSubset& b) -> ObjectiveSubset;

/// Row-major set of points of a fixed dimension.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t dim) : dim_(dim) {}
    PointSet(std::size_t dim, std::vector<double> flat);
    PointSet(std::initializer_list<std::initializer_list<double>> rows);

    [[nodiscard]] auto dim() const noexcept -> std::size_t { return dim_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return dim_ == 0 ? 0 : data_.size() / dim_; }
    [[nodiscard]] auto empty() const noexcept -> bool { return size() == 0; }

    [[nodiscard]] auto operator[](std::size_t i) const -> std::span<const double>
    {
        return { data_.data() + i * dim_, dim_ };
    }
    [[nodiscard]] auto row(std::size_t i) -> std::span<double> { return { data_.data() + i * dim_, dim_ }; }

    void push_back(std::span<const double> row);
    void reserve(std::size_t rows) { data_.reserve(rows * dim_); }
    void clear() noexcept { data_.clear(); }

    [[nodiscard]] auto flat() const noexcept -> const std::vector<double>& { return data_; }

    friend auto operator==(const PointSet&, const PointSet&) -> bool = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

/// Keeps the columns whose 1-based objective index is in `target`, given
/// that the columns of `points` correspond to `source`.
auto project(const PointSet& points, const ObjectiveSubset& source, const ObjectiveSubset& target) -> PointSet;

/// splitmix64 finalizer; a bijection on 64-bit words.
constexpr auto mix64(std::uint64_t z) noexcept -> std::uint64_t
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

/// Stream seed for sub-task `index` of a job seeded with `seed`.
constexpr auto derive_seed(std::uint64_t seed, std::uint64_t index) noexcept -> std::uint64_t
{
    return mix64(mix64(seed) ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// Seeded generator with portable (library-independent) real and integer draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    auto next_u64() -> std::uint64_t { return engine_(); }
    /// Uniform in [0, 1).
    auto uniform() -> double { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53; }
    auto uniform(double lo, double hi) -> double { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [0, bound).
    auto below(std::uint64_t bound) -> std::uint64_t;

    template <typename T>
    void shuffle(std::vector<T>& values)
    {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace dmocno

#endif
