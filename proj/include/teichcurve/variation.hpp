#pragma once

#include <vector>

#include "teichcurve/beltrami.hpp"
#include "teichcurve/bers_map.hpp"
#include "teichcurve/series.hpp"

namespace teichcurve {

/// First-order variation w_dot of the normalized solution of the Beltrami
/// equation for t*mu on the upper half-plane (Ahlfors' formula):
///   w_dot(z) = ((z - zb)^2 / 2) conj(Phi'') + (z - zb) conj(Phi') + conj(Phi) + Phi + c + conj(c)
/// with c = -Phi(0), so that w_dot vanishes at 0 and 1.
struct UHPVariationField {
  PeriodicPotential potential;
  Complex const_term;

  static UHPVariationField from_cusp_form(const CuspFormCoeffs& phi);
};

/// Disc-model variation field
///   omega_dot(z) = -((1-|z|^2)^2 / 2) conj(Phi'') - z (1-|z|^2) conj(Phi') - z^2 conj(Phi) + Phi + a1 z
/// where Phi = Phi_lambda = sum beta_n z^{n+1}. a1 must be purely imaginary.
class DiscVariationField {
 public:
  DiscVariationField(std::vector<Complex> betas, Complex a1);

  const DiscTaylorCoeffs& potential() const { return potential_; }
  std::span<const Complex> betas() const { return betas_; }
  Complex a1() const { return a1_; }
  HarmonicBeltramiDisc beltrami() const { return HarmonicBeltramiDisc::from_betas(betas_); }

 private:
  std::vector<Complex> betas_;
  DiscTaylorCoeffs potential_;
  Complex a1_;
};

/// Default step for the finite-difference d-bar oracle.
inline constexpr double kDefaultFdStep = 1e-3;

Complex eval_w_dot(const UHPVariationField& field, Complex z);

/// Centered finite-difference Wirtinger derivative d/dzbar of f at z:
///   ((f(z+h) - f(z-h)) + i (f(z+ih) - f(z-ih))) / (4h).
template <typename F>
Complex fd_dbar(F&& f, Complex z, double h) {
  const Complex ih{0.0, h};
  return ((f(z + h) - f(z - h)) + kI * (f(z + ih) - f(z - ih))) / (4.0 * h);
}

/// |FD d/dzbar w_dot(z) - mu(z)|; the stencil must stay in the upper half-plane.
double dbar_residual_uhp(const HarmonicBeltramiUHP& mu, Complex z, double h);

Complex eval_omega_dot_disc(const DiscVariationField& field, Complex z);

/// Closed form on the circle: -sum conj(beta_n) z^{1-n} + sum beta_n z^{n+1} + a1 z, z = e^{i theta}.
Complex omega_dot_boundary(const DiscVariationField& field, double theta);

/// |FD d/dzbar omega_dot(z) - lambda(z)|; the stencil must stay inside the disc.
double dbar_residual_disc(const DiscVariationField& field, Complex z, double h);

/// v_dot(e^{i theta}) = i e^{i theta} sum_n c_n e^{i n theta}.
Complex eval_v_dot(const CircleVectorField& c, double theta);

/// |v_dot(D0P(phi))(2 pi x) - p'(x) w_dot(x)| with p'(x) = 2 pi i e^{2 pi i x}.
double chain_residual(const CuspFormCoeffs& phi, double x);

/// a1 = i c_0 - a + conj(a), from matching the z^1 coefficient of the
/// Moebius-corrected disc field against v_dot.
Complex derive_a1(const CuspFormCoeffs& phi);

/// Disc field with beta_n = i c_n (n >= 2) taken from D0P(phi) and a1 from derive_a1.
DiscVariationField moebius_corrected_disc_field(const CuspFormCoeffs& phi);

/// sup over `points` equispaced boundary points of
///   |(-a + (a - conj a) z + conj(a) z^2 + omega_dot(z)) - v_dot(theta)|.
double moebius_match_residual(const CuspFormCoeffs& phi, int points = 128);

}  // namespace teichcurve
