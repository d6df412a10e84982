#include "dmocno/dominance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace dmocno {

auto weakly_dominates(std::span<const double> a, std::span<const double> b) noexcept -> bool
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

auto dominates(std::span<const double> a, std::span<const double> b) noexcept -> bool
{
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        strict = strict || a[i] < b[i];
    }
    return strict;
}

namespace {

auto lex_order(const PointSet& points) -> std::vector<std::size_t>
{
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t { 0 });
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto pa = points[a];
        const auto pb = points[b];
        return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
    });
    return order;
}

auto same(std::span<const double> a, std::span<const double> b) -> bool
{
    return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

// Static k-d tree over all candidate points in which points are switched on
// as they enter the archive. Each node keeps the componentwise minimum of its
// active points, so a query for "some active q <= p" skips every subtree
// whose minimum already exceeds p in one coordinate.
class DominanceIndex {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    DominanceIndex(const PointSet& points, const std::vector<std::size_t>& ids)
        : points_(points), dim_(points.dim()), active_(points.size(), 0), leaf_of_(points.size(), 0)
    {
        items_ = ids;
        build(0, items_.size(), npos);
    }

    void activate(std::size_t id)
    {
        active_[id] = 1;
        const auto p = points_[id];
        for (std::size_t node = leaf_of_[id]; node != npos; node = nodes_[node].parent) {
            double* lo = &mins_[node * dim_];
            bool changed = false;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (p[j] < lo[j]) {
                    lo[j] = p[j];
                    changed = true;
                }
            }
            if (!changed) {
                break;
            }
        }
    }

    [[nodiscard]] auto find_weak_dominator(std::span<const double> p) const -> std::size_t
    {
        return query(0, p);
    }

private:
    static constexpr std::size_t kLeafSize = 8;

    struct Node {
        std::size_t begin;
        std::size_t end;
        std::size_t left;
        std::size_t right;
        std::size_t parent;
    };

    auto build(std::size_t begin, std::size_t end, std::size_t parent) -> std::size_t
    {
        const std::size_t node = nodes_.size();
        nodes_.push_back({ begin, end, npos, npos, parent });
        mins_.resize(mins_.size() + dim_, std::numeric_limits<double>::infinity());
        if (end - begin <= kLeafSize) {
            for (std::size_t i = begin; i < end; ++i) {
                leaf_of_[items_[i]] = node;
            }
            return node;
        }
        std::size_t axis = 0;
        double widest = -1.0;
        for (std::size_t j = 0; j < dim_; ++j) {
            double lo = std::numeric_limits<double>::infinity();
            double hi = -lo;
            for (std::size_t i = begin; i < end; ++i) {
                lo = std::min(lo, points_[items_[i]][j]);
                hi = std::max(hi, points_[items_[i]][j]);
            }
            if (hi - lo > widest) {
                widest = hi - lo;
                axis = j;
            }
        }
        const std::size_t mid = begin + (end - begin) / 2;
        std::nth_element(items_.begin() + static_cast<std::ptrdiff_t>(begin),
                         items_.begin() + static_cast<std::ptrdiff_t>(mid),
                         items_.begin() + static_cast<std::ptrdiff_t>(end),
                         [&](std::size_t a, std::size_t b) { return points_[a][axis] < points_[b][axis]; });
        const auto left = build(begin, mid, node);
        const auto right = build(mid, end, node);
        nodes_[node].left = left;
        nodes_[node].right = right;
        return node;
    }

    [[nodiscard]] auto query(std::size_t node, std::span<const double> p) const -> std::size_t
    {
        const double* lo = &mins_[node * dim_];
        for (std::size_t j = 0; j < dim_; ++j) {
            if (lo[j] > p[j]) {
                return npos;
            }
        }
        const auto& n = nodes_[node];
        if (n.left == npos) {
            for (std::size_t i = n.begin; i < n.end; ++i) {
                const auto id = items_[i];
                if (active_[id] != 0 && weakly_dominates(points_[id], p)) {
                    return id;
                }
            }
            return npos;
        }
        if (const auto hit = query(n.left, p); hit != npos) {
            return hit;
        }
        return query(n.right, p);
    }

    const PointSet& points_;
    std::size_t dim_;
    std::vector<std::size_t> items_;
    std::vector<Node> nodes_;
    std::vector<double> mins_;
    std::vector<char> active_;
    std::vector<std::size_t> leaf_of_;
};

// Walks points in lexicographic order. A point can only be dominated by one
// that precedes it, and if it is dominated at all then some earlier
// nondominated point dominates it, so checking the archive suffices.
// `keep_duplicates` decides what happens to exact copies of archived points.
auto sweep(const PointSet& points, bool keep_duplicates) -> std::vector<std::size_t>
{
    std::vector<std::size_t> kept;
    if (points.empty()) {
        return kept;
    }
    const auto order = lex_order(points);
    const std::size_t dim = points.dim();

    if (dim == 2) {
        double best_y = std::numeric_limits<double>::infinity();
        std::size_t last = order.front();
        bool have_last = false;
        for (auto idx : order) {
            const auto p = points[idx];
            if (p[1] < best_y) {
                best_y = p[1];
                last = idx;
                have_last = true;
                kept.push_back(idx);
            } else if (keep_duplicates && have_last && same(p, points[last])) {
                kept.push_back(idx);
            }
        }
    } else if (points.size() < 4096) {
        std::vector<std::size_t> archive;
        for (auto idx : order) {
            const auto p = points[idx];
            const auto hit = std::find_if(archive.begin(), archive.end(),
                                          [&](std::size_t a) { return weakly_dominates(points[a], p); });
            if (hit == archive.end()) {
                archive.push_back(idx);
                kept.push_back(idx);
            } else if (keep_duplicates && same(points[*hit], p)) {
                kept.push_back(idx);
            }
        }
    } else {
        DominanceIndex index(points, order);
        for (auto idx : order) {
            const auto p = points[idx];
            const auto hit = index.find_weak_dominator(p);
            if (hit == DominanceIndex::npos) {
                index.activate(idx);
                kept.push_back(idx);
            } else if (keep_duplicates && same(points[hit], p)) {
                kept.push_back(idx);
            }
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace

auto nondominated_indices(const PointSet& points) -> std::vector<std::size_t>
{
    return sweep(points, true);
}

auto nondominated_filter(const PointSet& points) -> PointSet
{
    PointSet out(points.dim());
    const auto kept = sweep(points, false);
    out.reserve(kept.size());
    for (auto idx : kept) {
        out.push_back(points[idx]);
    }
    return out;
}

auto nondominated_ranks(const PointSet& points) -> std::vector<int>
{
    const std::size_t n = points.size();
    std::vector<int> rank(n, 0);
    std::vector<int> dominated_by(n, 0);
    std::vector<std::vector<std::size_t>> dominating(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(points[i], points[j])) {
                dominating[i].push_back(j);
                ++dominated_by[j];
            } else if (dominates(points[j], points[i])) {
                dominating[j].push_back(i);
                ++dominated_by[i];
            }
        }
    }
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        if (dominated_by[i] == 0) {
            current.push_back(i);
        }
    }
    int front = 0;
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto i : current) {
            rank[i] = front;
            for (auto j : dominating[i]) {
                if (--dominated_by[j] == 0) {
                    next.push_back(j);
                }
            }
        }
        current = std::move(next);
        ++front;
    }
    return rank;
}

} // namespace dmocno
