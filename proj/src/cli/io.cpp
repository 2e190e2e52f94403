#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>

#include "teichcurve/cli.hpp"

namespace teichcurve::cli {
namespace {

using nlohmann::json;

Complex parse_pair(const json& v) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ParseError("coefficients must be [re, im] number pairs");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

std::string render(const Report::Value& v) {
  struct Visitor {
    std::string operator()(double d) const { return format_double(d); }
    std::string operator()(Complex c) const {
      return "[" + format_double(c.real()) + ", " + format_double(c.imag()) + "]";
    }
    std::string operator()(long long i) const { return std::to_string(i); }
    std::string operator()(const std::string& s) const { return json_string(s); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
  };
  return std::visit(Visitor{}, v);
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

CoeffsFile parse_coeffs_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("coefficient file must be a JSON object");
  if (!doc.contains("model") || !doc["model"].is_string()) throw ParseError("missing \"model\"");
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array()) {
    throw ParseError("missing \"coefficients\" array");
  }

  CoeffsFile f;
  f.model = doc["model"].get<std::string>();
  if (f.model != "uhp-cusp" && f.model != "disc-taylor" && f.model != "circle-field") {
    throw ParseError("unknown model \"" + f.model + "\"");
  }
  for (const auto& c : doc["coefficients"]) f.coefficients.push_back(parse_pair(c));

  const int n = static_cast<int>(f.coefficients.size());
  if (doc.contains("start_index")) {
    if (!doc["start_index"].is_number_integer()) throw ParseError("start_index must be an integer");
    f.start_index = doc["start_index"].get<int>();
  } else {
    f.start_index = f.model == "circle-field" ? -(n / 2) : (f.model == "uhp-cusp" ? 1 : 0);
  }
  if (f.model == "uhp-cusp" && f.start_index != 1) throw ParseError("uhp-cusp files start at index 1");
  if (f.model == "circle-field" && (n % 2 != 1 || f.start_index != -(n / 2))) {
    throw ParseError("circle-field files hold c_{-N}..c_N with start_index -N");
  }
  if (f.model == "disc-taylor" && f.start_index < 0) throw ParseError("disc-taylor start_index must be >= 0");
  if (doc.contains("a")) f.a = parse_pair(doc["a"]);
  return f;
}

std::string format_coeffs_file(const CoeffsFile& f) {
  std::ostringstream os;
  os << "{\n  \"model\": " << json_string(f.model) << ",\n  \"start_index\": " << f.start_index
     << ",\n  \"coefficients\": [";
  for (std::size_t k = 0; k < f.coefficients.size(); ++k) {
    os << (k ? ",\n    " : "\n    ") << "[" << format_double(f.coefficients[k].real()) << ", "
       << format_double(f.coefficients[k].imag()) << "]";
  }
  os << (f.coefficients.empty() ? "]" : "\n  ]");
  if (f.a) os << ",\n  \"a\": [" << format_double(f.a->real()) << ", " << format_double(f.a->imag()) << "]";
  os << "\n}\n";
  return os.str();
}

CuspFormCoeffs to_cusp_form(const CoeffsFile& file) {
  if (file.model != "uhp-cusp") throw ParseError("expected a uhp-cusp coefficient file");
  return CuspFormCoeffs(file.coefficients);
}

CoeffsFile from_cusp_form(const CuspFormCoeffs& phi) {
  return CoeffsFile{"uhp-cusp", 1, {phi.coeffs().begin(), phi.coeffs().end()}, std::nullopt};
}

std::vector<MapSample> parse_map_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  std::vector<MapSample> samples;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line != "x,y") throw ParseError("map CSV must start with the header \"x,y\"");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("line " + std::to_string(line_no) + ": expected x,y");
    try {
      std::size_t used_x = 0, used_y = 0;
      const std::string xs = line.substr(0, comma), ys = line.substr(comma + 1);
      const double x = std::stod(xs, &used_x);
      const double y = std::stod(ys, &used_y);
      if (used_x != xs.size() || used_y != ys.size()) throw std::invalid_argument("trailing text");
      samples.push_back({x, y});
    } catch (const std::logic_error&) {
      throw ParseError("line " + std::to_string(line_no) + ": not a number pair");
    }
  }
  if (!header) throw ParseError("empty map CSV");
  return samples;
}

std::string format_map_csv(const std::vector<MapSample>& samples) {
  std::string out = "x,y\n";
  for (const auto& s : samples) out += format_double(s.x) + "," + format_double(s.y) + "\n";
  return out;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 0xf];
  }
  return hex;
}

void Report::add_table(std::string name, std::vector<std::string> columns,
                       std::vector<std::vector<Value>> rows) {
  tables_.push_back({std::move(name), std::move(columns), std::move(rows)});
}

bool Report::add_verdict(std::string name, double value, double tolerance) {
  const bool pass = value <= tolerance;
  verdicts_.push_back({std::move(name), value, "<= " + format_double(tolerance), pass});
  return pass;
}

bool Report::add_range_verdict(std::string name, double value, double lo, double hi) {
  const bool pass = value >= lo && value <= hi;
  verdicts_.push_back(
      {std::move(name), value, "in [" + format_double(lo) + ", " + format_double(hi) + "]", pass});
  return pass;
}

bool Report::passed() const {
  for (const auto& v : verdicts_) {
    if (!v.pass) return false;
  }
  return true;
}

std::string Report::to_json() const {
  std::ostringstream os;
  os << "{\n  \"command\": " << json_string(command_) << ",\n  \"input_digest\": [";
  for (std::size_t k = 0; k < digests_.size(); ++k) os << (k ? ", " : "") << json_string(digests_[k]);
  os << "],\n  \"results\": {";
  for (std::size_t k = 0; k < results_.size(); ++k) {
    os << (k ? ",\n    " : "\n    ") << json_string(results_[k].first) << ": " << render(results_[k].second);
  }
  os << (results_.empty() ? "}" : "\n  }") << ",\n  \"tables\": {";
  for (std::size_t t = 0; t < tables_.size(); ++t) {
    const auto& tab = tables_[t];
    os << (t ? ",\n    " : "\n    ") << json_string(tab.name) << ": {\"columns\": [";
    for (std::size_t c = 0; c < tab.columns.size(); ++c) os << (c ? ", " : "") << json_string(tab.columns[c]);
    os << "], \"rows\": [";
    for (std::size_t r = 0; r < tab.rows.size(); ++r) {
      os << (r ? ",\n      [" : "\n      [");
      for (std::size_t c = 0; c < tab.rows[r].size(); ++c) os << (c ? ", " : "") << render(tab.rows[r][c]);
      os << "]";
    }
    os << (tab.rows.empty() ? "]}" : "\n    ]}");
  }
  os << (tables_.empty() ? "}" : "\n  }") << ",\n  \"verdicts\": [";
  for (std::size_t k = 0; k < verdicts_.size(); ++k) {
    const auto& v = verdicts_[k];
    os << (k ? ",\n    " : "\n    ") << "{\"name\": " << json_string(v.name)
       << ", \"value\": " << format_double(v.value) << ", \"tolerance\": " << json_string(v.tolerance)
       << ", \"pass\": " << (v.pass ? "true" : "false") << "}";
  }
  os << (verdicts_.empty() ? "]" : "\n  ]") << ",\n  \"status\": \"" << (passed() ? "PASS" : "FAIL")
     << "\"\n}\n";
  return os.str();
}

}  // namespace teichcurve::cli
