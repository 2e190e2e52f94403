#include "teichcurve/variation.hpp"

#include <algorithm>
#include <cmath>

#include "teichcurve/errors.hpp"

namespace teichcurve {

UHPVariationField UHPVariationField::from_cusp_form(const CuspFormCoeffs& phi) {
  auto potential = third_antiderivative(phi);
  const Complex c = -eval_series(potential, Complex{}, 0);
  return UHPVariationField{std::move(potential), c};
}

Complex eval_w_dot(const UHPVariationField& field, Complex z) {
  if (z.imag() < 0.0) throw DomainError("w_dot is defined on the closed upper half-plane");
  const Complex phi0 = eval_series(field.potential, z, 0);
  const Complex phi1 = eval_series(field.potential, z, 1);
  const Complex phi2 = eval_series(field.potential, z, 2);
  const Complex d = z - std::conj(z);
  const Complex c = field.const_term;
  // Holomorphic-plus-conjugate part first: exact cancellation at z = 0.
  const Complex sym = std::conj(phi0) + phi0 + c + std::conj(c);
  return (d * d / 2.0) * std::conj(phi2) + d * std::conj(phi1) + sym;
}

double dbar_residual_uhp(const HarmonicBeltramiUHP& mu, Complex z, double h) {
  if (h <= 0.0) throw DomainError("finite-difference step must be positive");
  if (z.imag() - h <= 0.0) throw DomainError("finite-difference stencil leaves the upper half-plane");
  const auto field = UHPVariationField::from_cusp_form(mu.phi());
  const auto w = [&](Complex p) { return eval_w_dot(field, p); };
  return std::abs(fd_dbar(w, z, h) - eval_mu(mu, z));
}

DiscVariationField::DiscVariationField(std::vector<Complex> betas, Complex a1)
    : betas_(std::move(betas)), potential_(disc_potential_from_betas(betas_)), a1_(a1) {
  if (std::abs(a1.real()) > 1e-14 * std::max(1.0, std::abs(a1))) {
    throw DomainError("a1 must be purely imaginary");
  }
}

Complex eval_omega_dot_disc(const DiscVariationField& field, Complex z) {
  if (std::abs(z) > 1.0 + 1e-12) throw DomainError("omega_dot is defined on the closed unit disc");
  const auto& pot = field.potential();
  const Complex phi0 = eval_series(pot, z, 0);
  const Complex phi1 = eval_series(pot, z, 1);
  const Complex phi2 = eval_series(pot, z, 2);
  const double s = 1.0 - std::norm(z);
  return -(s * s / 2.0) * std::conj(phi2) - z * s * std::conj(phi1) -
         z * z * std::conj(phi0) + phi0 + field.a1() * z;
}

Complex omega_dot_boundary(const DiscVariationField& field, double theta) {
  const auto betas = field.betas();
  Complex sum{};
  for (std::size_t k = 0; k < betas.size(); ++k) {
    const double n = static_cast<double>(k + 2);
    sum += -std::conj(betas[k]) * std::polar(1.0, (1.0 - n) * theta);
    sum += betas[k] * std::polar(1.0, (n + 1.0) * theta);
  }
  return sum + field.a1() * std::polar(1.0, theta);
}

double dbar_residual_disc(const DiscVariationField& field, Complex z, double h) {
  if (h <= 0.0) throw DomainError("finite-difference step must be positive");
  if (std::abs(z) + h >= 1.0) throw DomainError("finite-difference stencil leaves the unit disc");
  const auto lam = field.beltrami();
  const auto w = [&](Complex p) { return eval_omega_dot_disc(field, p); };
  return std::abs(fd_dbar(w, z, h) - eval_lambda(lam, z));
}

Complex eval_v_dot(const CircleVectorField& c, double theta) {
  Complex s{};
  for (int n = -c.order(); n <= c.order(); ++n) s += c.c(n) * std::polar(1.0, n * theta);
  return kI * std::polar(1.0, theta) * s;
}

double chain_residual(const CuspFormCoeffs& phi, double x) {
  const auto field = UHPVariationField::from_cusp_form(phi);
  const auto c = d0_P(phi);
  const Complex dp = 2.0 * kPi * kI * std::polar(1.0, 2.0 * kPi * x);
  return std::abs(eval_v_dot(c, 2.0 * kPi * x) - dp * eval_w_dot(field, Complex{x, 0.0}));
}

Complex derive_a1(const CuspFormCoeffs& phi) {
  const double c0 = d0_P(phi).c0();
  const Complex a = d0_B(phi).a;
  return kI * c0 - a + std::conj(a);
}

DiscVariationField moebius_corrected_disc_field(const CuspFormCoeffs& phi) {
  const auto c = d0_P(phi);
  std::vector<Complex> betas;
  for (int n = 2; n <= c.order(); ++n) betas.push_back(kI * c.c(n));
  return DiscVariationField(std::move(betas), derive_a1(phi));
}

double moebius_match_residual(const CuspFormCoeffs& phi, int points) {
  if (points < 1) throw DomainError("need at least one boundary point");
  const auto c = d0_P(phi);
  const Complex a = d0_B(phi).a;
  const auto field = moebius_corrected_disc_field(phi);
  double worst = 0.0;
  for (int k = 0; k < points; ++k) {
    const double theta = 2.0 * kPi * k / points;
    const Complex z = std::polar(1.0, theta);
    const Complex corrected =
        -a + (a - std::conj(a)) * z + std::conj(a) * z * z + eval_omega_dot_disc(field, z);
    worst = std::max(worst, std::abs(corrected - eval_v_dot(c, theta)));
  }
  return worst;
}

}  // namespace teichcurve
