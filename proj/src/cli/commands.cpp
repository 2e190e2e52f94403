#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>

#include "teichcurve/cli.hpp"
#include "teichcurve/teichcurve.hpp"

namespace teichcurve::cli {
namespace {

constexpr std::uint64_t kDefaultSeed = 42;
// FD residuals below this are rounding noise; no order is asserted there.
constexpr double kDbarFloor = 1e-10;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("TEICHCURVE_SEED");
  if (s == nullptr || *s == '\0') return kDefaultSeed;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ParseError("TEICHCURVE_SEED must be a non-negative integer");
  }
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "teichcurve";
  for (const auto& a : args) s += " " + a;
  return s;
}

double relative(double num, double scale) { return scale > 0.0 ? num / scale : num; }

double max_abs(std::span<const Complex> v) {
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

struct Loaded {
  CuspFormCoeffs phi;
  std::string digest;
};

Loaded load_cusp_form(const std::string& path) {
  const std::string text = read_file(path);
  return {to_cusp_form(parse_coeffs_file(text)), sha256_hex(text)};
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string command;
  std::string report_path;

  int finish(const Report& r) const {
    const std::string json = r.to_json();
    out << json;
    if (!report_path.empty()) write_file(report_path, json);
    return r.passed() ? kPass : kVerificationFailed;
  }
};

// ---------------------------------------------------------------- ratio-check

struct RatioOptions {
  std::string coeffs;
  QuadratureSpec spec;
  double tol = 1e-12;
  double quad_tol = 1e-6;
};

int cmd_ratio_check(const Context& ctx, const RatioOptions& o) {
  const auto in = load_cusp_form(o.coeffs);
  if (in.phi.is_zero()) {
    ctx.err << "error: the zero cusp form has no metric ratio\n";
    return kDegenerateInput;
  }
  const auto m = metric_report(in.phi, o.spec);
  const double expected = 2.0 * kPi / 3.0;

  Report r(ctx.command);
  r.set_input_digest(in.digest);
  r.add("order", static_cast<long long>(in.phi.order()));
  r.add("y_max", o.spec.y_max);
  r.add("nx", static_cast<long long>(o.spec.nx));
  r.add("ny", static_cast<long long>(o.spec.ny));
  r.add("tz_closed", m.tz_closed);
  r.add("tz_quadrature", m.tz_quadrature);
  r.add("tail_bound", m.tail_bound);
  r.add("vk", m.vk);
  r.add("ratio", m.ratio);
  r.add("expected_ratio", expected);
  r.add("ratio_abs_error", std::abs(m.ratio - expected));
  r.add_verdict("ratio_relative_error", std::abs(m.ratio - expected) / expected, o.tol);
  const double quad_err = std::abs(m.tz_quadrature - m.tz_closed) / std::abs(m.tz_closed);
  r.add_verdict("quadrature_relative_error", quad_err,
                std::max(o.quad_tol, m.tail_bound / std::abs(m.tz_closed)));
  return ctx.finish(r);
}

// ------------------------------------------------------------ derivative-map

struct DerivativeOptions {
  std::string coeffs;
  std::string target = "circle";
  std::string out;
  double sum_tol = 1e-12;
  double beta_tol = 1e-14;
};

int cmd_derivative_map(const Context& ctx, const DerivativeOptions& o) {
  const auto in = load_cusp_form(o.coeffs);
  const auto c = d0_P(in.phi);
  const auto curve = d0_B(in.phi);
  const auto full = c.full();

  Report r(ctx.command);
  r.set_input_digest(in.digest);
  r.add("target", o.target);
  r.add("order", static_cast<long long>(in.phi.order()));

  CoeffsFile emitted;
  if (o.target == "circle") {
    emitted = CoeffsFile{"circle-field", -c.order(), full, std::nullopt};
  } else {
    emitted = CoeffsFile{"disc-taylor", 2, curve.betas(), curve.a};
    r.add("a", curve.a);
  }
  r.add("c0", c.c0());
  const double sum_res = relative(std::abs(c.mode_sum()), max_abs(full));
  r.add_verdict("mode_sum_relative", sum_res, o.sum_tol);
  const auto betas = curve.betas();
  r.add_verdict("beta_c_relative", relative(beta_c_consistency(in.phi), max_abs(betas)), o.beta_tol);

  std::vector<std::vector<Report::Value>> rows;
  for (std::size_t k = 0; k < emitted.coefficients.size(); ++k) {
    rows.push_back({static_cast<long long>(emitted.start_index + static_cast<int>(k)),
                    emitted.coefficients[k]});
  }
  r.add_table("coefficients", {"index", "value"}, std::move(rows));

  if (!o.out.empty()) write_file(o.out, format_coeffs_file(emitted));
  return ctx.finish(r);
}

// --------------------------------------------------------------------- verify

struct VerifyOptions {
  std::string coeffs;
  std::string suite = "all";
  double h = kDefaultFdStep;
  int grid = 128;
  int points = 20;
  double chain_tol = 1e-9;
  double match_tol = 1e-9;
  double norm_tol = 1e-14;
};

void suite_chain(Report& r, const CuspFormCoeffs& phi, const VerifyOptions& o) {
  const auto field = UHPVariationField::from_cusp_form(phi);
  std::vector<std::vector<Report::Value>> rows;
  double worst = 0.0;
  for (int j = 0; j < o.grid; ++j) {
    const double x = static_cast<double>(j) / o.grid;
    const double res = chain_residual(phi, x);
    worst = std::max(worst, res);
    rows.push_back({x, res});
  }
  r.add_table("chain", {"x", "residual"}, std::move(rows));
  r.add_verdict("chain_max_residual", worst, o.chain_tol);
  const double norm = std::max(std::abs(eval_w_dot(field, 0.0)), std::abs(eval_w_dot(field, 1.0)));
  r.add_verdict("w_dot_normalization", norm, o.norm_tol);
}

void suite_dbar(Report& r, const CuspFormCoeffs& phi, const VerifyOptions& o, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const HarmonicBeltramiUHP mu(phi);
  const auto disc = moebius_corrected_disc_field(phi);
  const double h = o.h;

  std::vector<std::vector<Report::Value>> rows;
  double worst_ratio_dev = 0.0;
  double min_ratio = HUGE_VAL, max_ratio = -HUGE_VAL;
  bool any_ratio = false;
  auto record = [&](const std::string& model, Complex z, double r1, double r2) {
    const bool floored = r2 < kDbarFloor;
    const double ratio = floored ? 4.0 : r1 / r2;
    if (!floored) {
      any_ratio = true;
      min_ratio = std::min(min_ratio, ratio);
      max_ratio = std::max(max_ratio, ratio);
      worst_ratio_dev = std::max(worst_ratio_dev, std::abs(ratio - 4.0));
    }
    rows.push_back({model, z, r1, r2, floored ? Report::Value{std::string("floor")} : Report::Value{ratio}});
  };
  for (int k = 0; k < o.points; ++k) {
    const Complex z{unit(rng), 0.1 + 0.9 * unit(rng)};
    record("uhp", z, dbar_residual_uhp(mu, z, h), dbar_residual_uhp(mu, z, h / 2));
  }
  for (int k = 0; k < o.points; ++k) {
    const Complex z = std::polar(0.9 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
    record("disc", z, dbar_residual_disc(disc, z, h), dbar_residual_disc(disc, z, h / 2));
  }
  r.add_table("dbar", {"model", "z", "residual_h", "residual_h_half", "order_ratio"}, std::move(rows));
  r.add("h", h);
  r.add("residual_floor", kDbarFloor);
  if (any_ratio) {
    r.add_range_verdict("dbar_order_ratio_min", min_ratio, 3.5, 4.5);
    r.add_range_verdict("dbar_order_ratio_max", max_ratio, 3.5, 4.5);
  } else {
    r.add("dbar_order_ratio", std::string("all residuals below floor"));
  }
}

void suite_moebius(Report& r, const CuspFormCoeffs& phi, const VerifyOptions& o) {
  const Complex a1 = derive_a1(phi);
  r.add("a1", a1);
  r.add("a", d0_B(phi).a);
  r.add_verdict("a1_real_part", std::abs(a1.real()), o.norm_tol);
  r.add_verdict("moebius_match_max_residual", moebius_match_residual(phi, o.grid), o.match_tol);
}

int cmd_verify(const Context& ctx, const VerifyOptions& o) {
  const auto in = load_cusp_form(o.coeffs);
  if (o.grid < 1 || o.points < 0 || !(o.h > 0.0)) throw ParseError("grid, points and h must be positive");
  Report r(ctx.command);
  r.set_input_digest(in.digest);
  r.add("suite", o.suite);
  const bool all = o.suite == "all";
  if (all || o.suite == "chain") suite_chain(r, in.phi, o);
  if (all || o.suite == "dbar") suite_dbar(r, in.phi, o, seed_from_env());
  if (all || o.suite == "moebius-match") suite_moebius(r, in.phi, o);
  return ctx.finish(r);
}

// ----------------------------------------------------------------------- lift

struct LiftOptions {
  std::string map;
  std::string map2;
  std::string mode = "lift";
  std::string out;
  int grid = 10000;
  double roundtrip_tol = 1e-12;
  double hom_tol = 1e-9;
};

int cmd_lift(const Context& ctx, const LiftOptions& o) {
  const std::string text = read_file(o.map);
  const auto samples = parse_map_csv(text);
  Report r(ctx.command);
  r.set_input_digest(sha256_hex(text));
  r.add("mode", o.mode);
  r.add("samples", static_cast<long long>(samples.size()));

  std::vector<MapSample> emitted;
  if (o.mode == "lift") {
    const auto u = lift_circle_map(SampledCircleMap(samples));
    emitted = u.samples();
  } else if (o.mode == "descend") {
    const auto eta = descend_line_map(SampledLineMap(samples));
    emitted = eta.samples();
  } else if (o.mode == "roundtrip") {
    const SampledCircleMap eta(samples);
    const auto u = lift_circle_map(eta);
    const auto back = descend_line_map(u);
    double worst = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
      worst = std::max({worst, std::abs(back.samples()[k].y - samples[k].y),
                        std::abs(back.samples()[k].x - samples[k].x)});
    }
    // Periodicity of the lift at the sample points.
    double periodic = 0.0;
    for (const auto& s : u.samples()) periodic = std::max(periodic, std::abs(u(s.x + 1.0) - u(s.x) - 1.0));
    r.add_verdict("roundtrip_max_residual", worst, o.roundtrip_tol);
    r.add_verdict("lift_periodicity_residual", periodic, o.roundtrip_tol);
    emitted = u.samples();
  } else {
    if (o.map2.empty()) throw ParseError("hom-check needs --map2");
    const std::string text2 = read_file(o.map2);
    r.set_input_digest(sha256_hex(text2));
    const SampledCircleMap eta1(samples);
    const SampledCircleMap eta2(parse_map_csv(text2));
    r.add("grid", static_cast<long long>(o.grid));
    r.add_verdict("group_hom_residual", group_hom_residual(eta1, eta2, o.grid), o.hom_tol);
    const auto l1 = lift_circle_map(eta1);
    for (const auto& s : lift_circle_map(eta2).samples()) {
      emitted.push_back({s.x, l1(s.y, Interpolation::cubic)});
    }
  }
  if (!o.out.empty()) write_file(o.out, format_map_csv(emitted));
  return ctx.finish(r);
}

// ------------------------------------------------------------------- qs-check

struct QsOptions {
  std::string map;
  int probes = 1000;
  std::string model = "circle";
  std::string interp = "linear";
};

int cmd_qs_check(const Context& ctx, const QsOptions& o) {
  const std::string text = read_file(o.map);
  const auto samples = parse_map_csv(text);
  const auto seed = seed_from_env();
  const auto mode = o.interp == "cubic" ? Interpolation::cubic : Interpolation::linear;
  if (o.probes < 1) throw ParseError("--probes must be positive");

  double m = 0.0;
  if (o.model == "circle") {
    m = qs_ratio_estimate(SampledCircleMap(samples), random_probes(o.probes, seed, 0.25), mode);
  } else {
    m = qs_ratio_estimate(SampledLineMap(samples), random_probes(o.probes, seed, 0.5), mode);
  }
  Report r(ctx.command);
  r.set_input_digest(sha256_hex(text));
  r.add("model", o.model);
  r.add("interpolation", o.interp);
  r.add("probes", static_cast<long long>(o.probes));
  r.add("seed", static_cast<long long>(seed));
  r.add("qs_lower_bound", m);
  r.add_verdict("qs_lower_bound_finite", std::isfinite(m) ? 0.0 : 1.0, 0.0);
  return ctx.finish(r);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bers isomorphism toolkit: derivative maps, metrics and boundary lifts", "teichcurve"};
  app.require_subcommand(1);
  std::string report_path;
  app.add_option("--report", report_path, "Also write the JSON report to this path");

  RatioOptions ratio;
  auto* c_ratio = app.add_subcommand("ratio-check", "Velling-Kirillov / Takhtajan-Zograf ratio");
  c_ratio->add_option("--coeffs", ratio.coeffs, "uhp-cusp coefficient file")->required();
  c_ratio->add_option("--ymax", ratio.spec.y_max, "Quadrature cutoff height");
  c_ratio->add_option("--nx", ratio.spec.nx, "Quadrature points in x");
  c_ratio->add_option("--ny", ratio.spec.ny, "Gauss-Legendre points in y");
  c_ratio->add_option("--tol", ratio.tol, "Relative tolerance on the ratio");
  c_ratio->add_option("--quad-tol", ratio.quad_tol, "Relative tolerance quadrature vs closed form");

  DerivativeOptions deriv;
  auto* c_deriv = app.add_subcommand("derivative-map", "Derivative of the Bers map at the origin");
  c_deriv->add_option("--coeffs", deriv.coeffs, "uhp-cusp coefficient file")->required();
  c_deriv->add_option("--target", deriv.target, "circle | curve")->check(CLI::IsMember({"circle", "curve"}));
  c_deriv->add_option("--out", deriv.out, "Output coefficient file");

  VerifyOptions verify;
  auto* c_verify = app.add_subcommand("verify", "Residual suites for the variation formulas");
  c_verify->set_help_flag("--help", "Print this help message and exit");
  c_verify->add_option("--coeffs", verify.coeffs, "uhp-cusp coefficient file")->required();
  c_verify->add_option("--suite", verify.suite, "dbar | chain | moebius-match | all")
      ->check(CLI::IsMember({"dbar", "chain", "moebius-match", "all"}));
  c_verify->add_option("--h", verify.h, "Finite-difference step");
  c_verify->add_option("--grid", verify.grid, "Boundary / real-line grid size");
  c_verify->add_option("--points", verify.points, "Random interior points per model (dbar)");
  c_verify->add_option("--chain-tol", verify.chain_tol, "Tolerance for the chain identity");
  c_verify->add_option("--match-tol", verify.match_tol, "Tolerance for the Moebius-corrected match");

  LiftOptions lift;
  auto* c_lift = app.add_subcommand("lift", "Covering lifts of sampled circle maps");
  c_lift->add_option("--map", lift.map, "CSV map (x,y)")->required();
  c_lift->add_option("--map2", lift.map2, "Second CSV map for hom-check");
  c_lift->add_option("--mode", lift.mode, "lift | descend | roundtrip | hom-check")
      ->check(CLI::IsMember({"lift", "descend", "roundtrip", "hom-check"}));
  c_lift->add_option("--out", lift.out, "Output CSV");
  c_lift->add_option("--grid", lift.grid, "Grid size for hom-check");
  c_lift->add_option("--tol", lift.hom_tol, "Tolerance for hom-check");

  QsOptions qs;
  auto* c_qs = app.add_subcommand("qs-check", "Probe-based quasisymmetry lower bound");
  c_qs->add_option("--map", qs.map, "CSV map (x,y)")->required();
  c_qs->add_option("--probes", qs.probes, "Number of random probes");
  c_qs->add_option("--model", qs.model, "circle | line")->check(CLI::IsMember({"circle", "line"}));
  c_qs->add_option("--interp", qs.interp, "linear | cubic")->check(CLI::IsMember({"linear", "cubic"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  const Context ctx{out, err, join(args), report_path};
  try {
    if (c_ratio->parsed()) return cmd_ratio_check(ctx, ratio);
    if (c_deriv->parsed()) return cmd_derivative_map(ctx, deriv);
    if (c_verify->parsed()) return cmd_verify(ctx, verify);
    if (c_lift->parsed()) return cmd_lift(ctx, lift);
    if (c_qs->parsed()) return cmd_qs_check(ctx, qs);
  } catch (const BranchAmbiguityError& e) {
    err << "error: " << e.what() << "\n";
    return kBranchAmbiguity;
  } catch (const DegenerateInputError& e) {
    err << "error: " << e.what() << "\n";
    return kDegenerateInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace teichcurve::cli
