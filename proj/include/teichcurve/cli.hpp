#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "teichcurve/boundary_maps.hpp"
#include "teichcurve/errors.hpp"
#include "teichcurve/series.hpp"

namespace teichcurve::cli {

// Stable process exit codes.
enum ExitCode : int {
  kPass = 0,
  kVerificationFailed = 1,
  kInputError = 2,
  kDegenerateInput = 3,
  kBranchAmbiguity = 4,
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Coefficient file: {"model": ..., "start_index": k, "coefficients": [[re, im], ...]}.
/// Curve tangents additionally carry "a": [re, im].
struct CoeffsFile {
  std::string model;  // "uhp-cusp" | "disc-taylor" | "circle-field"
  int start_index = 1;
  std::vector<Complex> coefficients;
  std::optional<Complex> a;
};

CoeffsFile parse_coeffs_file(std::string_view text);
std::string format_coeffs_file(const CoeffsFile& file);

CuspFormCoeffs to_cusp_form(const CoeffsFile& file);
CoeffsFile from_cusp_form(const CuspFormCoeffs& phi);

/// Two-column CSV with header "x,y".
std::vector<MapSample> parse_map_csv(std::string_view text);
std::string format_map_csv(const std::vector<MapSample>& samples);

/// Shortest-free fixed formatting used everywhere in reports: %.17g.
std::string format_double(double v);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

/// Deterministic machine-readable report; fields keep insertion order.
class Report {
 public:
  using Value = std::variant<double, Complex, long long, std::string, bool>;

  explicit Report(std::string command) : command_(std::move(command)) {}

  void set_input_digest(std::string digest) { digests_.push_back(std::move(digest)); }
  void add(std::string name, Value v) { results_.emplace_back(std::move(name), std::move(v)); }
  void add_table(std::string name, std::vector<std::string> columns,
                 std::vector<std::vector<Value>> rows);
  /// Records `value <= tolerance` and returns whether it held.
  bool add_verdict(std::string name, double value, double tolerance);
  /// Records a verdict whose check is a closed interval [lo, hi].
  bool add_range_verdict(std::string name, double value, double lo, double hi);

  bool passed() const;
  std::string to_json() const;

 private:
  struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
  };
  struct Verdict {
    std::string name;
    double value;
    std::string tolerance;  // rendered criterion, e.g. "<= 1e-12"
    bool pass;
  };

  std::string command_;
  std::vector<std::string> digests_;
  std::vector<std::pair<std::string, Value>> results_;
  std::vector<Table> tables_;
  std::vector<Verdict> verdicts_;
};

/// Entry point shared by the teichcurve executable and the tests. `args`
/// excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace teichcurve::cli
