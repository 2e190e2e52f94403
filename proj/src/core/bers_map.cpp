#include "teichcurve/bers_map.hpp"

#include <algorithm>
#include <cmath>

#include "teichcurve/errors.hpp"

namespace teichcurve {

CircleVectorField CircleVectorField::from_full(std::span<const Complex> c, double tolerance) {
  if (c.size() % 2 != 1) throw DomainError("circle field needs an odd number of modes -N..N");
  const int n_max = static_cast<int>(c.size() / 2);
  double scale = 0.0;
  for (const auto& v : c) scale = std::max(scale, std::abs(v));
  const double tol = tolerance * std::max(scale, 1.0);

  const Complex c0 = c[n_max];
  if (std::abs(c0.imag()) > tol) throw DomainError("circle field c_0 must be real");
  std::vector<Complex> positive(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const Complex cp = c[n_max + n];
    const Complex cm = c[n_max - n];
    if (std::abs(cm - std::conj(cp)) > tol) {
      throw DomainError("circle field violates c_{-n} = conj(c_n)");
    }
    positive[n - 1] = cp;
  }
  return CircleVectorField(c0.real(), std::move(positive));
}

Complex CircleVectorField::c(int n) const {
  if (n == 0) return c0_;
  const int m = std::abs(n);
  if (m > order()) return {};
  return n > 0 ? positive_[m - 1] : std::conj(positive_[m - 1]);
}

std::vector<Complex> CircleVectorField::full() const {
  std::vector<Complex> out;
  out.reserve(2 * positive_.size() + 1);
  for (int n = -order(); n <= order(); ++n) out.push_back(c(n));
  return out;
}

Complex CircleVectorField::mode_sum() const {
  Complex s = c0_;
  for (int n = 1; n <= order(); ++n) s += c(n) + c(-n);
  return s;
}

MoebiusDisc::MoebiusDisc(Complex w) : w_(w) {
  if (std::abs(w) >= 1.0) throw DomainError("Moebius parameter must lie in the open disc");
}

Complex moebius_apply(const MoebiusDisc& m, Complex zeta) {
  const Complex w = m.w();
  const Complex den = (1.0 - w) * (1.0 - zeta * std::conj(w));
  if (den == Complex{}) throw DomainError("zeta is the pole of sigma_w");
  // Written as one quotient so that numerator and denominator coincide
  // bitwise at zeta = 1.
  return ((1.0 - std::conj(w)) * (zeta - w)) / den;
}

CircleVectorField d0_P(const CuspFormCoeffs& phi) {
  const double k = 4.0 * kPi * kPi;
  std::vector<Complex> positive(phi.order());
  Complex s{};
  for (int n = 1; n <= phi.order(); ++n) {
    const double n3 = static_cast<double>(n) * n * n;
    const Complex t = phi.alpha(n) / n3;
    positive[n - 1] = kI / k * t;
    s += t;
  }
  // (1 / (4 pi^2 i)) (S - conj S) is real.
  const double c0 = (s - std::conj(s)).imag() / k;
  return CircleVectorField(c0, std::move(positive));
}

CurveTangent d0_B(const CuspFormCoeffs& phi) {
  const double k = 4.0 * kPi * kPi;
  std::vector<Complex> betas;
  for (int n = 2; n <= phi.order(); ++n) {
    const double n3 = static_cast<double>(n) * n * n;
    betas.push_back(-(phi.alpha(n) / n3) / k);
  }
  return CurveTangent{HarmonicBeltramiDisc::from_betas(betas), -std::conj(phi.alpha(1)) / k};
}

double beta_c_consistency(const CuspFormCoeffs& phi) {
  const auto c = d0_P(phi);
  const auto betas = d0_B(phi).betas();
  double worst = 0.0;
  for (std::size_t k = 0; k < betas.size(); ++k) {
    const int n = static_cast<int>(k) + 2;
    worst = std::max(worst, std::abs(betas[k] - kI * c.c(n)));
  }
  return worst;
}

}  // namespace teichcurve
