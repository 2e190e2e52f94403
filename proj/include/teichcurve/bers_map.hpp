#pragma once

#include <vector>

#include "teichcurve/beltrami.hpp"
#include "teichcurve/series.hpp"

namespace teichcurve {

/// Tangent vector sum_{|n| <= N} c_n e^{in theta} d/dtheta at the identity of
/// the circle-homeomorphism space. Only c_0 (real) and c_1..c_N are stored;
/// c_{-n} = conj(c_n) holds by construction.
class CircleVectorField {
 public:
  CircleVectorField() = default;
  CircleVectorField(double c0, std::vector<Complex> positive_modes)
      : c0_(c0), positive_(std::move(positive_modes)) {}

  /// Builds from a full list c_{-N}..c_N. Throws DomainError unless
  /// c_{-n} = conj(c_n) and Im c_0 = 0 within `tolerance` (relative to max |c_n|).
  static CircleVectorField from_full(std::span<const Complex> c, double tolerance = 1e-12);

  int order() const { return static_cast<int>(positive_.size()); }
  Complex c(int n) const;
  double c0() const { return c0_; }

  /// c_{-N}..c_N in ascending index order.
  std::vector<Complex> full() const;

  /// sum_n c_n, zero for fields that fix the point 1.
  Complex mode_sum() const;

 private:
  double c0_ = 0.0;
  std::vector<Complex> positive_;
};

/// Tangent vector (lambda, a) to the universal Teichmuller curve at the origin.
struct CurveTangent {
  HarmonicBeltramiDisc lambda;
  Complex a;

  std::vector<Complex> betas() const { return lambda.betas(); }
};

/// Disc automorphism sigma_w(zeta) = ((1 - conj w)/(1 - w)) (zeta - w)/(1 - zeta conj w),
/// sending w to 0 and fixing 1.
class MoebiusDisc {
 public:
  explicit MoebiusDisc(Complex w);
  Complex w() const { return w_; }

 private:
  Complex w_;
};

Complex moebius_apply(const MoebiusDisc& m, Complex zeta);

/// Derivative at the origin of the boundary Bers map:
///   c_n = (i / 4 pi^2) alpha_n / n^3,  c_0 = (1 / 4 pi^2 i)(sum alpha_n/n^3 - sum conj(alpha_n)/n^3).
CircleVectorField d0_P(const CuspFormCoeffs& phi);

/// Derivative at the origin of the Bers isomorphism onto the curve:
///   beta_n = -(1 / 4 pi^2) alpha_n / n^3 for n >= 2,  a = -conj(alpha_1) / 4 pi^2.
CurveTangent d0_B(const CuspFormCoeffs& phi);

/// max_{2 <= n <= N} |beta_n - i c_n| between d0_B and d0_P.
double beta_c_consistency(const CuspFormCoeffs& phi);

}  // namespace teichcurve
