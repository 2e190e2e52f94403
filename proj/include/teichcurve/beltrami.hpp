#pragma once

#include "teichcurve/series.hpp"

namespace teichcurve {

/// Harmonic Beltrami differential mu(z) = -2 y^2 conj(phi(z)) on the upper
/// half-plane, periodic under z -> z + 1.
class HarmonicBeltramiUHP {
 public:
  HarmonicBeltramiUHP() = default;
  /// Logs a warning to std::clog when sup_norm_bound() > 1. Tangent vectors
  /// need no unit-ball bound, so this never throws.
  explicit HarmonicBeltramiUHP(CuspFormCoeffs phi);

  const CuspFormCoeffs& phi() const { return phi_; }

  /// Triangle-inequality bound sum |alpha_n| sup_y 2 y^2 exp(-2 pi n y)
  ///   = sum |alpha_n| 2 / (e^2 pi^2 n^2)  on ||mu||_inf.
  double sup_norm_bound() const;

 private:
  CuspFormCoeffs phi_;
};

/// Harmonic Beltrami differential lambda(z) = -((1 - |z|^2)^2 / 2) conj(phi_lambda(z))
/// on the unit disc.
class HarmonicBeltramiDisc {
 public:
  HarmonicBeltramiDisc() = default;
  explicit HarmonicBeltramiDisc(DiscTaylorCoeffs phi_lambda) : phi_lambda_(std::move(phi_lambda)) {}

  static HarmonicBeltramiDisc from_betas(std::span<const Complex> betas) {
    return HarmonicBeltramiDisc(disc_quadratic_differential_from_betas(betas));
  }

  const DiscTaylorCoeffs& phi_lambda() const { return phi_lambda_; }
  /// beta_2..beta_N (requires a quadratic differential starting at z^0).
  std::vector<Complex> betas() const { return betas_from_disc_quadratic_differential(phi_lambda_); }

 private:
  DiscTaylorCoeffs phi_lambda_;
};

/// mu(z) for Im z > 0.
Complex eval_mu(const HarmonicBeltramiUHP& mu, Complex z);

/// lambda(z) for |z| <= 1; exactly zero (up to rounding of 1 - |z|^2) on the circle.
Complex eval_lambda(const HarmonicBeltramiDisc& lam, Complex z);

/// nu(w) with nu(p(z)) conj(p'(z)) / p'(z) = mu(z), p(z) = exp(2 pi i z), using
/// the principal preimage z = log(w) / (2 pi i). Requires 0 < |w| < 1.
Complex pushdown_covering(const HarmonicBeltramiUHP& mu, Complex w);

/// Same quantity evaluated through an explicit preimage z (Im z > 0); any
/// translate z + k gives the same value.
Complex pushdown_via_preimage(const HarmonicBeltramiUHP& mu, Complex z);

}  // namespace teichcurve
