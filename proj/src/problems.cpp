#include "dmocno/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dmocno/wfg.hpp"

namespace dmocno {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

auto dtlz_rastrigin_g(std::span<const double> distance) -> double
{
    double sum = 0.0;
    for (double xi : distance) {
        const double d = xi - 0.5;
        sum += d * d - std::cos(20.0 * std::numbers::pi * d);
    }
    return 100.0 * (static_cast<double>(distance.size()) + sum);
}

auto dtlz_sphere_g(std::span<const double> distance) -> double
{
    double sum = 0.0;
    for (double xi : distance) {
        const double d = xi - 0.5;
        sum += d * d;
    }
    return sum;
}

void dtlz_linear(std::span<const double> x, int M, double g, std::span<double> f)
{
    for (int m = 1; m <= M; ++m) {
        double value = 0.5 * (1.0 + g);
        for (int i = 1; i <= M - m; ++i) {
            value *= x[static_cast<std::size_t>(i - 1)];
        }
        if (m != 1) {
            value *= 1.0 - x[static_cast<std::size_t>(M - m)];
        }
        f[static_cast<std::size_t>(m - 1)] = value;
    }
}

// theta holds the (possibly biased) position values fed to cos/sin.
void dtlz_spherical(std::span<const double> theta, int M, double g, std::span<double> f)
{
    for (int m = 1; m <= M; ++m) {
        double value = 1.0 + g;
        for (int i = 1; i <= M - m; ++i) {
            value *= std::cos(theta[static_cast<std::size_t>(i - 1)] * kHalfPi);
        }
        if (m != 1) {
            value *= std::sin(theta[static_cast<std::size_t>(M - m)] * kHalfPi);
        }
        f[static_cast<std::size_t>(m - 1)] = value;
    }
}

void evaluate_dtlz(const ProblemSpec& spec, std::span<const double> x, std::span<double> f)
{
    const int M = spec.m_max();
    const auto position = x.first(static_cast<std::size_t>(M - 1));
    const auto distance = x.subspan(static_cast<std::size_t>(M - 1));
    switch (spec.family()) {
    case Family::DTLZ1:
        dtlz_linear(position, M, dtlz_rastrigin_g(distance), f);
        break;
    case Family::DTLZ2:
        dtlz_spherical(position, M, dtlz_sphere_g(distance), f);
        break;
    case Family::DTLZ3:
        dtlz_spherical(position, M, dtlz_rastrigin_g(distance), f);
        break;
    case Family::DTLZ4: {
        std::vector<double> biased(position.begin(), position.end());
        for (double& v : biased) {
            v = std::pow(v, kDtlz4Alpha);
        }
        dtlz_spherical(biased, M, dtlz_sphere_g(distance), f);
        break;
    }
    default:
        throw std::logic_error("not a DTLZ family");
    }
}

// Group reduction shared by WFG4/5/7/8 (r_sum) and WFG6/9 (r_nonsep).
auto wfg_reduce(std::span<const double> t, int k, int M, bool nonseparable) -> std::vector<double>
{
    const auto n = static_cast<int>(t.size());
    const int group = k / (M - 1);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(M));
    for (int i = 1; i <= M - 1; ++i) {
        auto slice = t.subspan(static_cast<std::size_t>((i - 1) * group), static_cast<std::size_t>(group));
        out.push_back(nonseparable ? wfg::r_nonsep(slice, group) : wfg::r_sum(slice));
    }
    auto tail = t.subspan(static_cast<std::size_t>(k));
    out.push_back(nonseparable ? wfg::r_nonsep(tail, n - k) : wfg::r_sum(tail));
    return out;
}

void evaluate_wfg(const ProblemSpec& spec, std::span<const double> z, std::span<double> f)
{
    const int M = spec.m_max();
    const int k = spec.position_params();
    const auto n = static_cast<std::size_t>(spec.n());
    const auto ku = static_cast<std::size_t>(k);

    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = z[i] / (2.0 * static_cast<double>(i + 1));
    }

    std::vector<double> t;
    switch (spec.family()) {
    case Family::WFG4:
        for (double& v : y) {
            v = wfg::s_multi(v, 30, 10.0, 0.35);
        }
        t = wfg_reduce(y, k, M, false);
        break;
    case Family::WFG5:
        for (double& v : y) {
            v = wfg::s_decept(v, 0.35, 0.001, 0.05);
        }
        t = wfg_reduce(y, k, M, false);
        break;
    case Family::WFG6:
        for (std::size_t i = ku; i < n; ++i) {
            y[i] = wfg::s_linear(y[i], 0.35);
        }
        t = wfg_reduce(y, k, M, true);
        break;
    case Family::WFG7: {
        std::vector<double> t1 = y;
        for (std::size_t i = 0; i < ku; ++i) {
            const double u = wfg::r_sum(std::span<const double>(y).subspan(i + 1));
            t1[i] = wfg::b_param(y[i], u, wfg::kParamA, wfg::kParamB, wfg::kParamC);
        }
        for (std::size_t i = ku; i < n; ++i) {
            t1[i] = wfg::s_linear(t1[i], 0.35);
        }
        t = wfg_reduce(t1, k, M, false);
        break;
    }
    case Family::WFG8: {
        std::vector<double> t1 = y;
        for (std::size_t i = ku; i < n; ++i) {
            const double u = wfg::r_sum(std::span<const double>(y).first(i));
            t1[i] = wfg::b_param(y[i], u, wfg::kParamA, wfg::kParamB, wfg::kParamC);
        }
        for (std::size_t i = ku; i < n; ++i) {
            t1[i] = wfg::s_linear(t1[i], 0.35);
        }
        t = wfg_reduce(t1, k, M, false);
        break;
    }
    case Family::WFG9: {
        std::vector<double> t1 = y;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double u = wfg::r_sum(std::span<const double>(y).subspan(i + 1));
            t1[i] = wfg::b_param(y[i], u, wfg::kParamA, wfg::kParamB, wfg::kParamC);
        }
        for (std::size_t i = 0; i < n; ++i) {
            t1[i] = i < ku ? wfg::s_decept(t1[i], 0.35, 0.001, 0.05) : wfg::s_multi(t1[i], 30, 95.0, 0.35);
        }
        t = wfg_reduce(t1, k, M, true);
        break;
    }
    default:
        throw std::logic_error("not a WFG family");
    }

    // A_i = 1 for WFG4-9, so x_i = t_i; D = 1, S_m = 2m.
    const double x_last = t.back();
    std::vector<double> h(static_cast<std::size_t>(M));
    wfg::concave_shape(std::span<const double>(t).first(static_cast<std::size_t>(M - 1)), h);
    for (int m = 1; m <= M; ++m) {
        f[static_cast<std::size_t>(m - 1)] = x_last + 2.0 * m * h[static_cast<std::size_t>(m - 1)];
    }
}

void check_length(const ProblemSpec& spec, std::span<const double> x)
{
    if (static_cast<int>(x.size()) != spec.n()) {
        throw std::invalid_argument("decision vector has " + std::to_string(x.size()) + " entries but " + spec.id()
                                    + " expects n=" + std::to_string(spec.n()));
    }
}

} // namespace

auto family_name(Family f) -> std::string_view
{
    switch (f) {
    case Family::DTLZ1: return "dtlz1";
    case Family::DTLZ2: return "dtlz2";
    case Family::DTLZ3: return "dtlz3";
    case Family::DTLZ4: return "dtlz4";
    case Family::WFG4: return "wfg4";
    case Family::WFG5: return "wfg5";
    case Family::WFG6: return "wfg6";
    case Family::WFG7: return "wfg7";
    case Family::WFG8: return "wfg8";
    case Family::WFG9: return "wfg9";
    }
    throw std::logic_error("unknown family");
}

auto is_wfg(Family f) noexcept -> bool
{
    return f >= Family::WFG4;
}

ProblemSpec::ProblemSpec(Family family, bool minus, int m_max, int n, int position_params)
    : family_(family), minus_(minus), m_max_(m_max), n_(n), position_params_(position_params)
{
    if (m_max < 2) {
        throw std::invalid_argument("m_max must be at least 2");
    }
    if (n < m_max) {
        throw std::invalid_argument("n must be at least m_max");
    }
    if (is_wfg(family)) {
        if (position_params <= 0 || position_params % (m_max - 1) != 0) {
            throw std::invalid_argument("WFG position_params must be a positive multiple of m_max - 1");
        }
        if (position_params >= n) {
            throw std::invalid_argument("WFG position_params must be smaller than n");
        }
    } else if (position_params != 0) {
        throw std::invalid_argument("position_params is only meaningful for WFG problems");
    }
}

auto ProblemSpec::with_defaults(Family family, bool minus, int m_max) -> ProblemSpec
{
    if (m_max < 2) {
        throw std::invalid_argument("m_max must be at least 2");
    }
    if (is_wfg(family)) {
        const int k = 2 * (m_max - 1);
        return { family, minus, m_max, k + 10, k };
    }
    const int k_dist = (family == Family::DTLZ1 || family == Family::DTLZ3) ? 5 : 10;
    return { family, minus, m_max, m_max + k_dist - 1, 0 };
}

auto ProblemSpec::from_id(std::string_view id, int m_max) -> ProblemSpec
{
    bool minus = false;
    constexpr std::string_view prefix = "minus-";
    if (id.starts_with(prefix)) {
        minus = true;
        id.remove_prefix(prefix.size());
    }
    for (Family f : kAllFamilies) {
        if (family_name(f) == id) {
            return with_defaults(f, minus, m_max);
        }
    }
    throw std::invalid_argument("unknown problem identifier '" + std::string(id) + "'");
}

auto ProblemSpec::position_count() const noexcept -> int
{
    return is_wfg(family_) ? position_params_ : m_max_ - 1;
}

auto ProblemSpec::id() const -> std::string
{
    return (minus_ ? std::string("minus-") : std::string()) + std::string(family_name(family_));
}

auto ProblemSpec::tag() const -> std::string
{
    auto out = id() + "_m" + std::to_string(m_max_) + "_n" + std::to_string(n_);
    if (is_wfg(family_)) {
        out += "_k" + std::to_string(position_params_);
    }
    return out;
}

auto decision_bounds(const ProblemSpec& spec) -> std::vector<Bound>
{
    std::vector<Bound> bounds(static_cast<std::size_t>(spec.n()));
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        bounds[i] = { 0.0, is_wfg(spec.family()) ? 2.0 * static_cast<double>(i + 1) : 1.0 };
    }
    return bounds;
}

void evaluate_into(const ProblemSpec& spec, std::span<const double> x, std::span<double> out)
{
    check_length(spec, x);
    if (static_cast<int>(out.size()) != spec.m_max()) {
        throw std::invalid_argument("objective buffer must hold m_max values");
    }
    if (is_wfg(spec.family())) {
        evaluate_wfg(spec, x, out);
    } else {
        evaluate_dtlz(spec, x, out);
    }
    if (spec.minus()) {
        for (double& v : out) {
            v = -v;
        }
    }
}

auto evaluate_full(const ProblemSpec& spec, std::span<const double> x) -> ObjectiveVector
{
    ObjectiveVector result { std::vector<double>(static_cast<std::size_t>(spec.m_max())),
                             ObjectiveSubset::full(spec.m_max()) };
    evaluate_into(spec, x, result.values);
    return result;
}

auto evaluate_subset(const ProblemSpec& spec, std::span<const double> x, const ObjectiveSubset& subset)
    -> ObjectiveVector
{
    if (subset.empty()) {
        throw std::invalid_argument("objective subset must not be empty");
    }
    subset.check_within(spec.m_max());
    std::vector<double> full(static_cast<std::size_t>(spec.m_max()));
    evaluate_into(spec, x, full);
    ObjectiveVector result { {}, subset };
    result.values.reserve(subset.size());
    for (int index : subset) {
        result.values.push_back(full[static_cast<std::size_t>(index - 1)]);
    }
    return result;
}

} // namespace dmocno
