#include "teichcurve/beltrami.hpp"

#include <cmath>
#include <iostream>

#include "teichcurve/errors.hpp"

namespace teichcurve {

HarmonicBeltramiUHP::HarmonicBeltramiUHP(CuspFormCoeffs phi) : phi_(std::move(phi)) {
  const double bound = sup_norm_bound();
  if (bound > 1.0) {
    std::clog << "warning: Beltrami differential bound " << bound
              << " exceeds 1 (fine for tangent vectors)\n";
  }
}

double HarmonicBeltramiUHP::sup_norm_bound() const {
  const double e2 = std::exp(2.0);
  double s = 0.0;
  for (int n = 1; n <= phi_.order(); ++n) {
    s += std::abs(phi_.alpha(n)) * 2.0 / (e2 * kPi * kPi * n * n);
  }
  return s;
}

Complex eval_mu(const HarmonicBeltramiUHP& mu, Complex z) {
  if (z.imag() <= 0.0) throw DomainError("mu is defined on the open upper half-plane");
  const double y = z.imag();
  return -2.0 * y * y * std::conj(eval_cusp_form(mu.phi(), z));
}

Complex eval_lambda(const HarmonicBeltramiDisc& lam, Complex z) {
  if (std::abs(z) > 1.0 + 1e-12) throw DomainError("lambda is defined on the closed unit disc");
  const double r = std::abs(z);
  const double s = (1.0 - r) * (1.0 + r);
  return -(s * s / 2.0) * std::conj(eval_series(lam.phi_lambda(), z, 0));
}

Complex pushdown_via_preimage(const HarmonicBeltramiUHP& mu, Complex z) {
  // p'(z) / conj(p'(z)) = -q / conj(q) with q = exp(2 pi i z).
  const Complex q = std::exp(2.0 * kPi * kI * z);
  const Complex dp = 2.0 * kPi * kI * q;
  return eval_mu(mu, z) * dp / std::conj(dp);
}

Complex pushdown_covering(const HarmonicBeltramiUHP& mu, Complex w) {
  const double r = std::abs(w);
  if (r == 0.0 || r >= 1.0) throw DomainError("pushdown requires 0 < |w| < 1");
  const Complex z = std::log(w) / (2.0 * kPi * kI);
  return pushdown_via_preimage(mu, z);
}

}  // namespace teichcurve
