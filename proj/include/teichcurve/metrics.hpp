#pragma once

#include <vector>

#include "teichcurve/bers_map.hpp"
#include "teichcurve/series.hpp"

namespace teichcurve {

/// Tensor grid over the truncated strip (0, 1) x (0, y_max): midpoint rule in
/// x, Gauss-Legendre in y.
struct QuadratureSpec {
  double y_max = 10.0;
  int nx = 64;
  int ny = 512;

  void validate() const;
};

struct QuadratureResult {
  Complex value;
  /// Analytic bound on the neglected strip y > y_max.
  double tail_bound = 0.0;
};

struct MetricReport {
  Complex tz_closed;
  Complex tz_quadrature;
  double vk = 0.0;
  double ratio = 0.0;
  double tail_bound = 0.0;
};

/// <mu_1, mu_2>_TZ = integral over the strip of mu_1 conj(mu_2), mu_k = -2 y^2 conj(phi_k):
///   (3 / 32 pi^5) sum conj(alpha_n) alpha'_n / n^5.
Complex tz_inner(const CuspFormCoeffs& phi1, const CuspFormCoeffs& phi2);

QuadratureResult tz_quadrature(const CuspFormCoeffs& phi1, const CuspFormCoeffs& phi2,
                               const QuadratureSpec& spec);

/// Gauss-Legendre nodes and weights on (a, b).
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendreRule gauss_legendre(int n, double a, double b);

/// ||v||^2_VK = sum_{n >= 1} n |c_n|^2.
double vk_norm_sq(const CircleVectorField& c);

/// sum_{n >= 1} n c_n conj(c'_n).
Complex vk_inner(const CircleVectorField& c1, const CircleVectorField& c2);

/// vk_norm_sq(D0P(phi)) / Re tz_inner(phi, phi); 2 pi / 3 for every nonzero phi.
/// Throws DegenerateInputError for phi = 0.
double vk_tz_ratio(const CuspFormCoeffs& phi);

/// Partial sums sum_{n <= k} |alpha_n|^2 n^{-s}, k = 1..k_max (k_max <= N).
std::vector<double> decay_partial_sums(const CuspFormCoeffs& phi, double s, int k_max);

MetricReport metric_report(const CuspFormCoeffs& phi, const QuadratureSpec& spec);

}  // namespace teichcurve
