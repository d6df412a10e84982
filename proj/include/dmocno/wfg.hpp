#ifndef DMOCNO_WFG_HPP
#define DMOCNO_WFG_HPP

#include <span>
#include <vector>

namespace dmocno::wfg {

// Transformation functions of the WFG toolkit. All map into [0, 1].

auto correct_to_01(double a, double epsilon = 1.0e-10) -> double;

auto b_poly(double y, double alpha) -> double;
auto b_flat(double y, double A, double B, double C) -> double;
auto b_param(double y, double u, double A, double B, double C) -> double;

auto s_linear(double y, double A) -> double;
auto s_decept(double y, double A, double B, double C) -> double;
auto s_multi(double y, int A, double B, double C) -> double;

auto r_sum(std::span<const double> y, std::span<const double> w) -> double;
/// r_sum with unit weights.
auto r_sum(std::span<const double> y) -> double;
auto r_nonsep(std::span<const double> y, int A) -> double;

/// Concave shape h_1..h_M evaluated at x_1..x_{M-1}.
void concave_shape(std::span<const double> x, std::span<double> h);

/// Exponent range used by b_param in WFG7-9.
inline constexpr double kParamA = 0.98 / 49.98;
inline constexpr double kParamB = 0.02;
inline constexpr double kParamC = 50.0;

/// The b_param exponent for a given u (so that b_param(y, u) = y^exponent).
auto b_param_exponent(double u, double A = kParamA, double B = kParamB, double C = kParamC) -> double;

} // namespace dmocno::wfg

#endif
