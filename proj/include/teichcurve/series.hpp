#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace teichcurve {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

// Largest term-wise derivative order supported by eval_series.
inline constexpr int kMaxDerivativeOrder = 3;

/// Truncated cusp form phi(z) = sum_{n=1}^{N} alpha_n exp(2 pi i n z) on the
/// upper half-plane. Coefficients are 1-indexed in the accessors.
class CuspFormCoeffs {
 public:
  CuspFormCoeffs() = default;
  explicit CuspFormCoeffs(std::vector<Complex> alphas) : alphas_(std::move(alphas)) {}

  int order() const { return static_cast<int>(alphas_.size()); }

  /// alpha_n for n >= 1; zero beyond the truncation.
  Complex alpha(int n) const {
    return (n >= 1 && n <= order()) ? alphas_[n - 1] : Complex{};
  }

  std::span<const Complex> coeffs() const { return alphas_; }

  bool is_zero() const;

 private:
  std::vector<Complex> alphas_;
};

/// Periodic series sum_{n=1}^{N} gamma_n exp(2 pi i n z); holds the third
/// antiderivative of a cusp form.
class PeriodicPotential {
 public:
  PeriodicPotential() = default;
  explicit PeriodicPotential(std::vector<Complex> gammas) : gammas_(std::move(gammas)) {}

  int order() const { return static_cast<int>(gammas_.size()); }
  Complex coeff(int n) const {
    return (n >= 1 && n <= order()) ? gammas_[n - 1] : Complex{};
  }
  std::span<const Complex> coeffs() const { return gammas_; }

 private:
  std::vector<Complex> gammas_;
};

/// Polynomial sum_{n >= start} gamma_n z^n on the closed unit disc.
class DiscTaylorCoeffs {
 public:
  DiscTaylorCoeffs() = default;
  DiscTaylorCoeffs(int start_index, std::vector<Complex> gammas);

  int start_index() const { return start_; }
  /// One past the highest power present.
  int end_index() const { return start_ + static_cast<int>(gammas_.size()); }
  Complex coeff(int power) const {
    return (power >= start_ && power < end_index()) ? gammas_[power - start_] : Complex{};
  }
  std::span<const Complex> coeffs() const { return gammas_; }

 private:
  int start_ = 0;
  std::vector<Complex> gammas_;
};

// Builders for the disc objects parameterized by beta_2..beta_N:
//   Phi_lambda(z) = sum beta_n z^{n+1},   phi_lambda(z) = sum (n^3 - n) beta_n z^{n-2}.
// `betas[k]` holds beta_{k+2}.
DiscTaylorCoeffs disc_potential_from_betas(std::span<const Complex> betas);
DiscTaylorCoeffs disc_quadratic_differential_from_betas(std::span<const Complex> betas);

/// Recovers beta_2..beta_N from a quadratic differential built by
/// disc_quadratic_differential_from_betas (start index must be 0).
std::vector<Complex> betas_from_disc_quadratic_differential(const DiscTaylorCoeffs& phi_lambda);

/// phi(z). Evaluation on the real axis is allowed; Im z < 0 throws DomainError.
Complex eval_cusp_form(const CuspFormCoeffs& phi, Complex z);

/// Phi_mu with coefficients (i / 8 pi^3) alpha_n / n^3, so that Phi_mu''' = phi.
PeriodicPotential third_antiderivative(const CuspFormCoeffs& phi);

/// Term-wise derivative of the given order (0..3) at z.
Complex eval_series(const PeriodicPotential& series, Complex z, int derivative_order = 0);
Complex eval_series(const DiscTaylorCoeffs& series, Complex z, int derivative_order = 0);

/// Coefficients of the term-wise derivative of a periodic series, so that
/// derivative coefficients can be compared directly with a cusp form.
std::vector<Complex> differentiate_coeffs(const PeriodicPotential& series, int derivative_order);

}  // namespace teichcurve
