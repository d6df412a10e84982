#ifndef DMOCNO_PROBLEMS_HPP
#define DMOCNO_PROBLEMS_HPP

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dmocno/core.hpp"

namespace dmocno {

enum class Family { DTLZ1, DTLZ2, DTLZ3, DTLZ4, WFG4, WFG5, WFG6, WFG7, WFG8, WFG9 };

inline constexpr std::array<Family, 10> kAllFamilies {
    Family::DTLZ1, Family::DTLZ2, Family::DTLZ3, Family::DTLZ4, Family::WFG4,
    Family::WFG5,  Family::WFG6,  Family::WFG7,  Family::WFG8,  Family::WFG9,
};

/// DTLZ4 bias exponent.
inline constexpr double kDtlz4Alpha = 100.0;

[[nodiscard]] auto family_name(Family f) -> std::string_view; // "dtlz1", "wfg9"
[[nodiscard]] auto is_wfg(Family f) noexcept -> bool;

/// Immutable definition of a maximum-objective test problem.
///
/// DTLZ problems split the n variables into m_max - 1 position variables and
/// k = n - m_max + 1 distance variables. WFG problems use `position_params`
/// position-related variables (a multiple of m_max - 1) followed by
/// n - position_params distance-related variables.
class ProblemSpec {
public:
    ProblemSpec(Family family, bool minus, int m_max, int n, int position_params = 0);

    /// Community-default dimensions: DTLZ1/3 k=5, DTLZ2/4 k=10,
    /// WFG position_params = 2(m_max - 1) and 10 distance variables.
    [[nodiscard]] static auto with_defaults(Family family, bool minus, int m_max) -> ProblemSpec;
    /// Parses identifiers such as "minus-dtlz1" or "wfg7" with default dimensions.
    [[nodiscard]] static auto from_id(std::string_view id, int m_max) -> ProblemSpec;

    [[nodiscard]] auto family() const noexcept -> Family { return family_; }
    [[nodiscard]] auto minus() const noexcept -> bool { return minus_; }
    [[nodiscard]] auto m_max() const noexcept -> int { return m_max_; }
    [[nodiscard]] auto n() const noexcept -> int { return n_; }
    [[nodiscard]] auto position_params() const noexcept -> int { return position_params_; }
    /// Number of variables that shape the front (m_max - 1 for DTLZ, position_params for WFG).
    [[nodiscard]] auto position_count() const noexcept -> int;
    [[nodiscard]] auto distance_count() const noexcept -> int { return n_ - position_count(); }

    /// "minus-dtlz2"
    [[nodiscard]] auto id() const -> std::string;
    /// "minus-dtlz2_m6_n15" (WFG adds "_k<position_params>"); unique per spec.
    [[nodiscard]] auto tag() const -> std::string;

    friend auto operator==(const ProblemSpec&, const ProblemSpec&) -> bool = default;

private:
    Family family_;
    bool minus_;
    int m_max_;
    int n_;
    int position_params_;
};

/// Objective values together with the objective indices they belong to.
struct ObjectiveVector {
    std::vector<double> values;
    ObjectiveSubset subset;
};

struct Bound {
    double lower;
    double upper;
    friend auto operator==(const Bound&, const Bound&) -> bool = default;
};

[[nodiscard]] auto decision_bounds(const ProblemSpec& spec) -> std::vector<Bound>;

/// All m_max objective values; no time or schedule state is involved.
[[nodiscard]] auto evaluate_full(const ProblemSpec& spec, std::span<const double> x) -> ObjectiveVector;

/// Writes the m_max objective values into `out` (size m_max) without allocating the subset.
void evaluate_into(const ProblemSpec& spec, std::span<const double> x, std::span<double> out);

/// Projection of evaluate_full onto `subset`, in ascending index order.
[[nodiscard]] auto evaluate_subset(const ProblemSpec& spec, std::span<const double> x, const ObjectiveSubset& subset)
    -> ObjectiveVector;

/// Time-dependent DTLZ1-style F1 in which m enters the objective definitions.
/// Kept only to demonstrate that the same x gets a different f_1 once m changes.
[[nodiscard]] auto legacy_f1_evaluate(std::span<const double> x, int m) -> ObjectiveVector;
/// The g term of the legacy F1 at a given m.
[[nodiscard]] auto legacy_f1_g(std::span<const double> x, int m) -> double;

} // namespace dmocno

#endif
