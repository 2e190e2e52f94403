#include "teichcurve/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "teichcurve/errors.hpp"

namespace teichcurve {
namespace {

// |z| may exceed 1 by a few ulps when z is built as exp(i theta).
constexpr double kDiscSlack = 1e-12;

void check_order(int derivative_order) {
  if (derivative_order < 0 || derivative_order > kMaxDerivativeOrder) {
    throw UnsupportedError("derivative order " + std::to_string(derivative_order) +
                           " is not supported (0..3)");
  }
}

// sum_{n=1}^{N} c_n q^n by Horner's scheme, highest index first.
Complex horner_in_q(std::span<const Complex> c, Complex q) {
  Complex acc{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + *it;
  return acc * q;
}

double falling_factorial(int n, int k) {
  double r = 1.0;
  for (int j = 0; j < k; ++j) r *= static_cast<double>(n - j);
  return r;
}

}  // namespace

bool CuspFormCoeffs::is_zero() const {
  return std::all_of(alphas_.begin(), alphas_.end(),
                     [](Complex a) { return a == Complex{}; });
}

DiscTaylorCoeffs::DiscTaylorCoeffs(int start_index, std::vector<Complex> gammas)
    : start_(start_index), gammas_(std::move(gammas)) {
  if (start_ < 0) throw DomainError("disc Taylor series must start at a non-negative power");
}

DiscTaylorCoeffs disc_potential_from_betas(std::span<const Complex> betas) {
  return DiscTaylorCoeffs(3, {betas.begin(), betas.end()});
}

DiscTaylorCoeffs disc_quadratic_differential_from_betas(std::span<const Complex> betas) {
  std::vector<Complex> c(betas.size());
  for (std::size_t k = 0; k < betas.size(); ++k) {
    const double n = static_cast<double>(k + 2);
    c[k] = (n * n * n - n) * betas[k];
  }
  return DiscTaylorCoeffs(0, std::move(c));
}

std::vector<Complex> betas_from_disc_quadratic_differential(const DiscTaylorCoeffs& phi_lambda) {
  if (phi_lambda.start_index() != 0) {
    throw DomainError("quadratic differential must start at z^0");
  }
  std::vector<Complex> betas;
  betas.reserve(phi_lambda.coeffs().size());
  for (int p = 0; p < phi_lambda.end_index(); ++p) {
    const double n = p + 2;
    betas.push_back(phi_lambda.coeff(p) / (n * n * n - n));
  }
  return betas;
}

Complex eval_cusp_form(const CuspFormCoeffs& phi, Complex z) {
  if (z.imag() < 0.0) throw DomainError("cusp form evaluated below the real axis");
  if (phi.order() == 0) return {};
  const Complex q = std::exp(2.0 * kPi * kI * z);
  return horner_in_q(phi.coeffs(), q);
}

PeriodicPotential third_antiderivative(const CuspFormCoeffs& phi) {
  const Complex scale = kI / (8.0 * kPi * kPi * kPi);
  std::vector<Complex> g(phi.coeffs().size());
  for (int n = 1; n <= phi.order(); ++n) {
    const double n3 = static_cast<double>(n) * n * n;
    g[n - 1] = scale * phi.alpha(n) / n3;
  }
  return PeriodicPotential(std::move(g));
}

std::vector<Complex> differentiate_coeffs(const PeriodicPotential& series, int derivative_order) {
  check_order(derivative_order);
  std::vector<Complex> d(series.coeffs().begin(), series.coeffs().end());
  for (int n = 1; n <= series.order(); ++n) {
    const Complex factor = 2.0 * kPi * kI * static_cast<double>(n);
    for (int k = 0; k < derivative_order; ++k) d[n - 1] *= factor;
  }
  return d;
}

Complex eval_series(const PeriodicPotential& series, Complex z, int derivative_order) {
  check_order(derivative_order);
  if (z.imag() < 0.0) throw DomainError("periodic series evaluated below the real axis");
  if (series.order() == 0) return {};
  const auto d = differentiate_coeffs(series, derivative_order);
  return horner_in_q(d, std::exp(2.0 * kPi * kI * z));
}

Complex eval_series(const DiscTaylorCoeffs& series, Complex z, int derivative_order) {
  check_order(derivative_order);
  if (std::abs(z) > 1.0 + kDiscSlack) throw DomainError("disc series evaluated outside the closed disc");
  // Powers n < derivative_order vanish under differentiation.
  const int lo = std::max(series.start_index(), derivative_order);
  Complex acc{};
  for (int n = series.end_index() - 1; n >= lo; --n) {
    acc = acc * z + falling_factorial(n, derivative_order) * series.coeff(n);
  }
  // acc now holds sum c'_n z^{n - lo}; restore the lowest power.
  const int shift = lo - derivative_order;
  for (int k = 0; k < shift; ++k) acc *= z;
  return acc;
}

}  // namespace teichcurve
