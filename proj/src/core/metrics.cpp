#include "teichcurve/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "teichcurve/beltrami.hpp"
#include "teichcurve/errors.hpp"

namespace teichcurve {
namespace {

// Pairwise summation over a fixed binary tree; the result depends only on the
// input order.
Complex pairwise_sum(std::span<const Complex> v) {
  if (v.empty()) return {};
  if (v.size() == 1) return v[0];
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// integral_Y^inf y^4 exp(-b y) dy = exp(-bY) sum_{k=0}^{4} (4!/k!) Y^k / b^{5-k}
double y4_exp_tail(double y_max, double b) {
  double s = 0.0;
  double fact_ratio = 24.0;  // 4!/k!
  for (int k = 0; k <= 4; ++k) {
    s += fact_ratio * std::pow(y_max, k) / std::pow(b, 5 - k);
    if (k < 4) fact_ratio /= (k + 1);
  }
  return std::exp(-b * y_max) * s;
}

double l1_norm(const CuspFormCoeffs& phi) {
  double s = 0.0;
  for (const auto& a : phi.coeffs()) s += std::abs(a);
  return s;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(y_max > 0.0)) throw DomainError("quadrature cutoff y_max must be positive");
  if (nx < 4 || ny < 4) throw DomainError("quadrature needs nx >= 4 and ny >= 4");
}

Complex tz_inner(const CuspFormCoeffs& phi1, const CuspFormCoeffs& phi2) {
  const int n_common = std::min(phi1.order(), phi2.order());
  Complex s{};
  for (int n = 1; n <= n_common; ++n) {
    s += std::conj(phi1.alpha(n)) * phi2.alpha(n) / std::pow(static_cast<double>(n), 5);
  }
  return 3.0 / (32.0 * std::pow(kPi, 5)) * s;
}

GaussLegendreRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("Gauss-Legendre needs at least one node");
  GaussLegendreRule rule{std::vector<double>(n), std::vector<double>(n)};
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton on P_n starting from the Chebyshev-like guess.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

QuadratureResult tz_quadrature(const CuspFormCoeffs& phi1, const CuspFormCoeffs& phi2,
                               const QuadratureSpec& spec) {
  spec.validate();
  const HarmonicBeltramiUHP mu1(phi1);
  const HarmonicBeltramiUHP mu2(phi2);
  const auto rule = gauss_legendre(spec.ny, 0.0, spec.y_max);

  std::vector<Complex> rows(spec.ny);
  std::vector<Complex> row(spec.nx);
  for (int iy = 0; iy < spec.ny; ++iy) {
    const double y = rule.nodes[iy];
    for (int ix = 0; ix < spec.nx; ++ix) {
      const Complex z{(ix + 0.5) / spec.nx, y};
      row[ix] = eval_mu(mu1, z) * std::conj(eval_mu(mu2, z));
    }
    rows[iy] = rule.weights[iy] * pairwise_sum(row) / static_cast<double>(spec.nx);
  }

  // |mu_1 conj(mu_2)| <= 4 y^4 (sum |alpha_n|)(sum |alpha'_m|) exp(-4 pi y) for y > 0.
  const double tail = 4.0 * l1_norm(phi1) * l1_norm(phi2) * y4_exp_tail(spec.y_max, 4.0 * kPi);
  return {pairwise_sum(rows), tail};
}

double vk_norm_sq(const CircleVectorField& c) {
  double s = 0.0;
  for (int n = 1; n <= c.order(); ++n) s += n * std::norm(c.c(n));
  return s;
}

Complex vk_inner(const CircleVectorField& c1, const CircleVectorField& c2) {
  const int n_common = std::min(c1.order(), c2.order());
  Complex s{};
  for (int n = 1; n <= n_common; ++n) s += static_cast<double>(n) * c1.c(n) * std::conj(c2.c(n));
  return s;
}

double vk_tz_ratio(const CuspFormCoeffs& phi) {
  if (phi.is_zero()) throw DegenerateInputError("metric ratio is undefined for the zero cusp form");
  return vk_norm_sq(d0_P(phi)) / tz_inner(phi, phi).real();
}

std::vector<double> decay_partial_sums(const CuspFormCoeffs& phi, double s, int k_max) {
  if (k_max < 0 || k_max > phi.order()) throw DomainError("k_max must lie in 0..N");
  std::vector<double> out;
  out.reserve(k_max);
  double acc = 0.0;
  for (int n = 1; n <= k_max; ++n) {
    acc += std::norm(phi.alpha(n)) * std::pow(static_cast<double>(n), -s);
    out.push_back(acc);
  }
  return out;
}

MetricReport metric_report(const CuspFormCoeffs& phi, const QuadratureSpec& spec) {
  MetricReport r;
  r.tz_closed = tz_inner(phi, phi);
  const auto quad = tz_quadrature(phi, phi, spec);
  r.tz_quadrature = quad.value;
  r.tail_bound = quad.tail_bound;
  r.vk = vk_norm_sq(d0_P(phi));
  r.ratio = vk_tz_ratio(phi);
  return r;
}

}  // namespace teichcurve
