#include "dmocno/wfg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dmocno::wfg {

auto correct_to_01(double a, double epsilon) -> double
{
    if (a <= 0.0 && a >= -epsilon) {
        return 0.0;
    }
    if (a >= 1.0 && a <= 1.0 + epsilon) {
        return 1.0;
    }
    return a;
}

auto b_poly(double y, double alpha) -> double
{
    return correct_to_01(std::pow(y, alpha));
}

auto b_flat(double y, double A, double B, double C) -> double
{
    const double tmp1 = std::min(0.0, std::floor(y - B)) * A * (B - y) / B;
    const double tmp2 = std::min(0.0, std::floor(C - y)) * (1.0 - A) * (y - C) / (1.0 - C);
    return correct_to_01(A + tmp1 - tmp2);
}

auto b_param_exponent(double u, double A, double B, double C) -> double
{
    const double v = A - (1.0 - 2.0 * u) * std::fabs(std::floor(0.5 - u) + A);
    return B + (C - B) * v;
}

auto b_param(double y, double u, double A, double B, double C) -> double
{
    return correct_to_01(std::pow(y, b_param_exponent(u, A, B, C)));
}

auto s_linear(double y, double A) -> double
{
    return correct_to_01(std::fabs(y - A) / std::fabs(std::floor(A - y) + A));
}

auto s_decept(double y, double A, double B, double C) -> double
{
    const double tmp1 = std::floor(y - A + B) * (1.0 - C + (A - B) / B) / (A - B);
    const double tmp2 = std::floor(A + B - y) * (1.0 - C + (1.0 - A - B) / B) / (1.0 - A - B);
    return correct_to_01(1.0 + (std::fabs(y - A) - B) * (tmp1 + tmp2 + 1.0 / B));
}

auto s_multi(double y, int A, double B, double C) -> double
{
    const double tmp1 = std::fabs(y - C) / (2.0 * (std::floor(C - y) + C));
    const double tmp2 = (4.0 * A + 2.0) * std::numbers::pi * (0.5 - tmp1);
    return correct_to_01((1.0 + std::cos(tmp2) + 4.0 * B * tmp1 * tmp1) / (B + 2.0));
}

auto r_sum(std::span<const double> y, std::span<const double> w) -> double
{
    if (y.size() != w.size() || y.empty()) {
        throw std::invalid_argument("r_sum needs matching, nonempty inputs");
    }
    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        numerator += w[i] * y[i];
        denominator += w[i];
    }
    return correct_to_01(numerator / denominator);
}

auto r_sum(std::span<const double> y) -> double
{
    if (y.empty()) {
        throw std::invalid_argument("r_sum needs a nonempty input");
    }
    double numerator = 0.0;
    for (double v : y) {
        numerator += v;
    }
    return correct_to_01(numerator / static_cast<double>(y.size()));
}

auto r_nonsep(std::span<const double> y, int A) -> double
{
    const auto len = static_cast<int>(y.size());
    if (len == 0 || A < 1 || len % A != 0) {
        throw std::invalid_argument("r_nonsep needs |y| to be a positive multiple of A");
    }
    double numerator = 0.0;
    for (int j = 0; j < len; ++j) {
        numerator += y[static_cast<std::size_t>(j)];
        for (int k = 0; k <= A - 2; ++k) {
            numerator += std::fabs(y[static_cast<std::size_t>(j)] - y[static_cast<std::size_t>((j + k + 1) % len)]);
        }
    }
    const double tmp = std::ceil(A / 2.0);
    const double denominator = len * tmp * (1.0 + 2.0 * A - 2.0 * tmp) / A;
    return correct_to_01(numerator / denominator);
}

void concave_shape(std::span<const double> x, std::span<double> h)
{
    const std::size_t M = h.size();
    const double half_pi = std::numbers::pi / 2.0;
    for (std::size_t m = 1; m <= M; ++m) {
        double value = 1.0;
        for (std::size_t i = 1; i <= M - m; ++i) {
            value *= std::sin(x[i - 1] * half_pi);
        }
        if (m != 1) {
            value *= std::cos(x[M - m] * half_pi);
        }
        h[m - 1] = correct_to_01(value);
    }
}

} // namespace dmocno::wfg
