#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "teichcurve/bers_map.hpp"

namespace teichcurve {

/// One sample (x, y) of a boundary map.
struct MapSample {
  double x;
  double y;
};

enum class Interpolation {
  linear,
  cubic,  // local 4-point Lagrange on the periodic displacement u(x) - x
};

/// Orientation-preserving circle homeomorphism e^{2 pi i x} -> e^{2 pi i y}
/// fixing 1, given in angular coordinates. x strictly increasing in [0, 1),
/// y in [0, 1), first sample (0, 0). Monotonicity of the lifted angles is
/// checked by lift_circle_map.
class SampledCircleMap {
 public:
  explicit SampledCircleMap(std::vector<MapSample> samples);
  const std::vector<MapSample>& samples() const { return samples_; }

 private:
  std::vector<MapSample> samples_;
};

/// Increasing homeomorphism u of [0, 1] with u(0) = 0, u(1) = 1, extended to
/// the line by u(x + 1) = u(x) + 1.
class SampledLineMap {
 public:
  explicit SampledLineMap(std::vector<MapSample> samples);
  const std::vector<MapSample>& samples() const { return samples_; }

  /// u(x) for any real x via the periodic extension.
  double operator()(double x, Interpolation mode = Interpolation::linear) const;

 private:
  std::vector<MapSample> samples_;
};

/// Samples e^{2 pi i x} -> sigma_w(e^{2 pi i x}) at x_k = k / count.
SampledCircleMap sample_moebius(const MoebiusDisc& m, int count);

/// Lift through the covering x -> e^{2 pi i x}: u(0) = 0, u(1) = 1, p o u = eta o p at
/// the samples. Throws InvalidMapError for non-monotone data and
/// BranchAmbiguityError when a step subtends half a turn or more.
SampledLineMap lift_circle_map(const SampledCircleMap& eta);

/// x -> u(x) mod 1; the inverse of lift_circle_map on sample points.
SampledCircleMap descend_line_map(const SampledLineMap& u);

/// eta(x) in [0, 1) for any x, by interpolating the lift.
double eval_circle_map(const SampledLineMap& lifted, double x, Interpolation mode);

/// Probe (x, t) for the quasisymmetry quotient (u(x+t) - u(x)) / (u(x) - u(x-t)).
struct QsProbe {
  double x;
  double t;
};

/// max over probes of max(r, 1/r). Circle maps are evaluated through their lift
/// and require 0 < t < 1/4; line maps require t > 0. A lower bound for the
/// quasisymmetry constant.
double qs_ratio_estimate(const SampledCircleMap& eta, std::span<const QsProbe> probes,
                         Interpolation mode = Interpolation::linear);
double qs_ratio_estimate(const SampledLineMap& u, std::span<const QsProbe> probes,
                         Interpolation mode = Interpolation::linear);

/// Uniform random probes x in [0, 1), t in (0, t_max).
std::vector<QsProbe> random_probes(int count, std::uint64_t seed, double t_max = 0.25);

/// sup over x_j = j / grid of |lift(eta1 o eta2)(x) - lift(eta1)(lift(eta2)(x))|,
/// with eta1 o eta2 formed from the samples of eta2 pushed through eta1.
double group_hom_residual(const SampledCircleMap& eta1, const SampledCircleMap& eta2, int grid,
                          Interpolation mode = Interpolation::cubic);

/// Same residual against an independently sampled composite eta1 o eta2.
double group_hom_residual(const SampledCircleMap& eta1, const SampledCircleMap& eta2,
                          const SampledCircleMap& composite, int grid,
                          Interpolation mode = Interpolation::cubic);

}  // namespace teichcurve
