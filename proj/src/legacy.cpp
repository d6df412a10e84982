#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dmocno/problems.hpp"

namespace dmocno {

namespace {

void check_legacy_args(std::span<const double> x, int m)
{
    const auto n = static_cast<int>(x.size());
    if (m < 2 || m > n) {
        throw std::out_of_range("legacy F1 needs 2 <= m <= n; got m=" + std::to_string(m) + ", n=" + std::to_string(n));
    }
}

} // namespace

auto legacy_f1_g(std::span<const double> x, int m) -> double
{
    check_legacy_args(x, m);
    const auto n = static_cast<int>(x.size());
    double sum = 0.0;
    for (int i = m; i <= n; ++i) {
        const double d = x[static_cast<std::size_t>(i - 1)] - 0.5;
        sum += d * d - std::cos(20.0 * std::numbers::pi * d);
    }
    return 100.0 * (n - m + 1 + sum);
}

auto legacy_f1_evaluate(std::span<const double> x, int m) -> ObjectiveVector
{
    const double scale = std::pow(1.0 + legacy_f1_g(x, m), 0.5);
    auto xi = [&](int i) { return x[static_cast<std::size_t>(i - 1)]; };

    ObjectiveVector result { std::vector<double>(static_cast<std::size_t>(m)), ObjectiveSubset::full(m) };
    for (int j = 1; j <= m; ++j) {
        double value = scale;
        if (j == m) {
            value *= 1.0 - xi(1);
        } else {
            for (int i = 1; i <= m - j; ++i) {
                value *= xi(i);
            }
            if (j != 1) {
                value *= 1.0 - xi(m - j + 1);
            }
        }
        result.values[static_cast<std::size_t>(j - 1)] = value;
    }
    return result;
}

} // namespace dmocno
