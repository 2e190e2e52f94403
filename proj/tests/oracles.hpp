#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's evaluation paths.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "teichcurve/series.hpp"

namespace teichcurve::testing {

using C = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

inline CuspFormCoeffs random_cusp_form(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<C> a(n);
  for (auto& v : a) v = {u(rng), u(rng)};
  return CuspFormCoeffs(std::move(a));
}

inline std::vector<C> random_complex(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<C> a(n);
  for (auto& v : a) v = {u(rng), u(rng)};
  return a;
}

/// sum_n a_n exp(2 pi i n z) (k-th derivative), term by term in ascending order.
inline C direct_periodic_sum(const std::vector<C>& a, C z, int k = 0) {
  C s{};
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double n = static_cast<double>(j + 1);
    s += a[j] * std::pow(C(0.0, 2.0 * pi * n), k) * std::exp(C(0.0, 2.0 * pi * n) * z);
  }
  return s;
}

/// Second-order centered difference of f along the real direction.
template <typename F>
C fd_dx(F&& f, C z, double h) {
  return (f(z + h) - f(z - h)) / (2.0 * h);
}

/// sigma_w written through its fixed-point normal form: rotation
/// e^{i t} (zeta - w)/(1 - conj(w) zeta) with the rotation fixed by sigma(1) = 1.
inline C moebius_reference(C w, C zeta) {
  const C base1 = (1.0 - w) / (1.0 - std::conj(w));
  const C rot = 1.0 / base1;
  return rot * (zeta - w) / (1.0 - std::conj(w) * zeta);
}

/// Lift of x -> arg sigma_w(e^{2 pi i x}) / 2 pi tracked by continuous unwrapping
/// along `steps` equal steps from 0 to x.
inline double tracked_moebius_lift(C w, double x, int steps) {
  double prev = 0.0;  // arg at x = 0 is 0
  double acc = 0.0;
  for (int k = 1; k <= steps; ++k) {
    const double xk = x * k / steps;
    const double a = std::arg(moebius_reference(w, std::polar(1.0, 2.0 * pi * xk)));
    double d = a - prev;
    while (d > pi) d -= 2.0 * pi;
    while (d <= -pi) d += 2.0 * pi;
    acc += d;
    prev = a;
  }
  return acc / (2.0 * pi);
}

}  // namespace teichcurve::testing
