#include "teichcurve/boundary_maps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

#include "teichcurve/errors.hpp"

namespace teichcurve {
namespace {

// Winding totals are integers in exact arithmetic; this absorbs rounding.
constexpr double kWindingSlack = 1e-9;

// Wraps d into (-1/2, 1/2].
double wrap_half(double d) { return d - std::ceil(d - 0.5); }

double frac(double v) {
  double f = v - std::floor(v);
  return f >= 1.0 ? 0.0 : f;
}

// Node m of the periodic extension of the first `count` samples:
// abscissa x_{m mod K} + floor(m / K), displacement u - x.
struct PeriodicNode {
  double x;
  double displacement;
};

PeriodicNode periodic_node(const std::vector<MapSample>& s, int count, int m) {
  const int shift = (m >= 0) ? m / count : -((-m + count - 1) / count);
  const int base = m - shift * count;
  return {s[base].x + shift, s[base].y - s[base].x};
}

}  // namespace

SampledCircleMap::SampledCircleMap(std::vector<MapSample> samples) : samples_(std::move(samples)) {
  if (samples_.empty()) throw InvalidMapError("circle map has no samples");
  if (samples_.front().x != 0.0 || samples_.front().y != 0.0) {
    throw InvalidMapError("circle map must contain the anchor sample (0, 0)");
  }
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    const auto& s = samples_[k];
    if (!(s.x >= 0.0 && s.x < 1.0) || !(s.y >= 0.0 && s.y < 1.0)) {
      throw InvalidMapError("circle map sample " + std::to_string(k) + " outside [0, 1)");
    }
    if (k > 0 && !(s.x > samples_[k - 1].x)) {
      throw InvalidMapError("circle map abscissae must be strictly increasing");
    }
  }
}

SampledLineMap::SampledLineMap(std::vector<MapSample> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2) throw InvalidMapError("line map needs at least the samples at 0 and 1");
  if (samples_.front().x != 0.0 || samples_.front().y != 0.0) {
    throw InvalidMapError("line map must satisfy u(0) = 0");
  }
  if (samples_.back().x != 1.0 || samples_.back().y != 1.0) {
    throw InvalidMapError("line map must satisfy u(1) = 1");
  }
  for (std::size_t k = 1; k < samples_.size(); ++k) {
    if (!(samples_[k].x > samples_[k - 1].x)) {
      throw InvalidMapError("line map abscissae must be strictly increasing");
    }
    if (!(samples_[k].y > samples_[k - 1].y)) {
      throw InvalidMapError("line map values must be strictly increasing");
    }
  }
}

double SampledLineMap::operator()(double x, Interpolation mode) const {
  const double n = std::floor(x);
  const double f = x - n;
  const int count = static_cast<int>(samples_.size()) - 1;  // unique nodes in [0, 1)
  auto it = std::upper_bound(samples_.begin(), samples_.begin() + count, f,
                             [](double v, const MapSample& s) { return v < s.x; });
  const int j = static_cast<int>(it - samples_.begin()) - 1;

  if (mode == Interpolation::linear) {
    const auto& a = samples_[j];
    const auto& b = samples_[j + 1];
    return n + a.y + (b.y - a.y) * (f - a.x) / (b.x - a.x);
  }

  std::array<PeriodicNode, 4> nodes;
  for (int k = 0; k < 4; ++k) nodes[k] = periodic_node(samples_, count, j - 1 + k);
  double d = 0.0;
  for (int k = 0; k < 4; ++k) {
    double w = 1.0;
    for (int l = 0; l < 4; ++l) {
      if (l != k) w *= (f - nodes[l].x) / (nodes[k].x - nodes[l].x);
    }
    d += w * nodes[k].displacement;
  }
  return n + f + d;
}

SampledCircleMap sample_moebius(const MoebiusDisc& m, int count) {
  if (count < 1) throw DomainError("need at least one sample");
  std::vector<MapSample> s;
  s.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double x = static_cast<double>(k) / count;
    const Complex image = moebius_apply(m, std::polar(1.0, 2.0 * kPi * x));
    s.push_back({x, frac(std::arg(image) / (2.0 * kPi))});
  }
  return SampledCircleMap(std::move(s));
}

SampledLineMap lift_circle_map(const SampledCircleMap& eta) {
  const auto& s = eta.samples();
  const std::size_t count = s.size();

  // Signed steps between consecutive images, closing back to the anchor.
  std::vector<double> steps(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double next = (k + 1 < count) ? s[k + 1].y : 0.0;
    steps[k] = wrap_half(next - s[k].y);
  }

  const bool all_forward = std::all_of(steps.begin(), steps.end(), [](double d) { return d > 0.0; });
  if (!all_forward) {
    double forward_total = 0.0;
    for (double d : steps) forward_total += d > 0.0 ? d : d + 1.0;
    if (std::abs(forward_total - 1.0) < kWindingSlack) {
      throw BranchAmbiguityError("samples too sparse: a step subtends half a turn or more");
    }
    throw InvalidMapError("circle map is not orientation preserving");
  }
  if (std::any_of(steps.begin(), steps.end(), [](double d) { return d >= 0.5; })) {
    throw BranchAmbiguityError("samples too sparse: a step subtends half a turn");
  }
  double total = 0.0;
  for (double d : steps) total += d;
  if (std::abs(total - 1.0) > kWindingSlack) {
    throw InvalidMapError("circle map winds " + std::to_string(std::lround(total)) + " times");
  }

  // u_k = y_k + m_k with integer m_k, so descending recovers y_k bit-for-bit.
  std::vector<MapSample> lifted;
  lifted.reserve(count + 1);
  double winding = 0.0;
  lifted.push_back({s[0].x, s[0].y});
  for (std::size_t k = 1; k < count; ++k) {
    winding += std::round(steps[k - 1] - (s[k].y - s[k - 1].y));
    lifted.push_back({s[k].x, s[k].y + winding});
  }
  lifted.push_back({1.0, 1.0});
  return SampledLineMap(std::move(lifted));
}

SampledCircleMap descend_line_map(const SampledLineMap& u) {
  const auto& s = u.samples();
  std::vector<MapSample> out;
  out.reserve(s.size() - 1);
  for (std::size_t k = 0; k + 1 < s.size(); ++k) out.push_back({s[k].x, frac(s[k].y)});
  return SampledCircleMap(std::move(out));
}

double eval_circle_map(const SampledLineMap& lifted, double x, Interpolation mode) {
  return frac(lifted(x, mode));
}

namespace {

double qs_over_line(const SampledLineMap& u, std::span<const QsProbe> probes, Interpolation mode,
                    double t_max) {
  if (probes.empty()) throw DomainError("quasisymmetry estimate needs at least one probe");
  double worst = 1.0;
  for (const auto& p : probes) {
    if (!(p.t > 0.0 && p.t < t_max)) throw DomainError("probe step outside the admissible range");
    const double here = u(p.x, mode);
    const double forward = u(p.x + p.t, mode) - here;
    const double backward = here - u(p.x - p.t, mode);
    if (!(forward > 0.0) || !(backward > 0.0)) {
      throw InvalidMapError("degenerate quasisymmetry quotient");
    }
    const double r = forward / backward;
    worst = std::max({worst, r, 1.0 / r});
  }
  return worst;
}

}  // namespace

double qs_ratio_estimate(const SampledCircleMap& eta, std::span<const QsProbe> probes,
                         Interpolation mode) {
  return qs_over_line(lift_circle_map(eta), probes, mode, 0.25);
}

double qs_ratio_estimate(const SampledLineMap& u, std::span<const QsProbe> probes,
                         Interpolation mode) {
  return qs_over_line(u, probes, mode, HUGE_VAL);
}

std::vector<QsProbe> random_probes(int count, std::uint64_t seed, double t_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<QsProbe> probes;
  probes.reserve(count);
  while (static_cast<int>(probes.size()) < count) {
    const double x = unit(rng);
    const double t = t_max * unit(rng);
    if (t > 0.0) probes.push_back({x, t});
  }
  return probes;
}

namespace {

double hom_residual(const SampledLineMap& l1, const SampledLineMap& l2, const SampledLineMap& l12,
                    int grid, Interpolation mode) {
  if (grid < 1) throw DomainError("grid must contain at least one point");
  double worst = 0.0;
  for (int j = 0; j < grid; ++j) {
    const double x = static_cast<double>(j) / grid;
    worst = std::max(worst, std::abs(l12(x, mode) - l1(l2(x, mode), mode)));
  }
  return worst;
}

}  // namespace

double group_hom_residual(const SampledCircleMap& eta1, const SampledCircleMap& eta2, int grid,
                          Interpolation mode) {
  const auto l1 = lift_circle_map(eta1);
  const auto l2 = lift_circle_map(eta2);
  std::vector<MapSample> composed;
  composed.reserve(eta2.samples().size());
  for (const auto& s : l2.samples()) {
    if (s.x >= 1.0) break;
    composed.push_back({s.x, frac(l1(s.y, mode))});
  }
  const auto l12 = lift_circle_map(SampledCircleMap(std::move(composed)));
  return hom_residual(l1, l2, l12, grid, mode);
}

double group_hom_residual(const SampledCircleMap& eta1, const SampledCircleMap& eta2,
                          const SampledCircleMap& composite, int grid, Interpolation mode) {
  return hom_residual(lift_circle_map(eta1), lift_circle_map(eta2), lift_circle_map(composite), grid,
                      mode);
}

}  // namespace teichcurve
