// Command line front end: every library operation as a subcommand with
// machine-readable output. Numeric payload goes to stdout (JSON or CSV,
// 17 significant digits), the human summary to stderr.
//
// Exit codes: 0 success / verdict passed, 1 verdict failed, 2 usage or
// configuration error, 3 numeric failure.

#include <cinttypes>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ptoep/bergman.hpp"
#include "ptoep/geometry.hpp"
#include "ptoep/matrix.hpp"
#include "ptoep/multiindex.hpp"
#include "ptoep/quadrature.hpp"
#include "ptoep/rng.hpp"
#include "ptoep/symbol.hpp"
#include "ptoep/toeplitz.hpp"

namespace {

using namespace ptoep;
using Complex = std::complex<double>;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  if (!std::isfinite(v)) throw NumericFailure("non-finite value in output");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class JsonWriter {
 public:
  void begin_object() { separator(); out_ += '{'; frames_.push_back(false); }
  void end_object() { frames_.pop_back(); out_ += '}'; }
  void begin_array() { separator(); out_ += '['; frames_.push_back(false); }
  void end_array() { frames_.pop_back(); out_ += ']'; }

  void key(std::string_view name) {
    separator();
    out_ += '"';
    append_escaped(name);
    out_ += "\":";
    after_key_ = true;
  }

  void number(double v) { separator(); out_ += format_double(v); }
  void integer(std::int64_t v) { separator(); out_ += std::to_string(v); }
  void unsigned_integer(std::uint64_t v) { separator(); out_ += std::to_string(v); }
  void boolean(bool v) { separator(); out_ += v ? "true" : "false"; }

  void string(std::string_view v) {
    separator();
    out_ += '"';
    append_escaped(v);
    out_ += '"';
  }

  void complex_value(const Complex& c) {
    begin_object();
    key("re");
    number(c.real());
    key("im");
    number(c.imag());
    end_object();
  }

  std::string take() {
    out_ += '\n';
    return std::move(out_);
  }

 private:
  void separator() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!frames_.empty()) {
      if (frames_.back()) out_ += ',';
      frames_.back() = true;
    }
  }

  void append_escaped(std::string_view text) {
    for (char c : text) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
  }

  std::string out_;
  std::vector<bool> frames_;
  bool after_key_ = false;
};

struct Options {
  int n = 1;
  int m = 0;
  int radial_points = 64;
  int angular_points = 0;  // 0 = default for the weight
  std::uint64_t seed = 12345;
  double tol = -1.0;  // per-command default when negative
  std::string format = "json";
  std::string out_path;
  std::string symbol;
  std::string symbol2;
  bool assert_radial = false;
  std::vector<double> radii;
  int grid = 8;
  int trials = 200;
  int samples = 100;
};

void add_space_flags(CLI::App* cmd, Options& opts) {
  cmd->add_option("--n", opts.n, "complex dimension (>= 1)");
  cmd->add_option("--m", opts.m, "weight (>= 0)");
  cmd->add_option("--radial-points", opts.radial_points, "radial quadrature points per axis");
  cmd->add_option("--angular-points", opts.angular_points,
                  "angular quadrature points per axis (default max(4m+4, 8))");
}

void add_output_flags(CLI::App* cmd, Options& opts) {
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts.out_path, "write the payload to this file instead of stdout");
}

QuadConfig resolve_quadrature(const Options& opts) {
  validate(SpaceParams{opts.n, opts.m});
  QuadConfig config = QuadConfig::defaults_for_weight(opts.m);
  config.radial_points = opts.radial_points;
  if (opts.angular_points > 0) config.angular_points = opts.angular_points;
  if (config.radial_points < 2 || config.radial_points > 512) {
    throw std::invalid_argument("--radial-points must lie in [2, 512]");
  }
  const int angular_floor = std::max(2, 2 * opts.m + 2);
  if (config.angular_points < angular_floor) {
    throw std::invalid_argument("--angular-points must be at least max(2, 2m+2) = " +
                                std::to_string(angular_floor));
  }
  return config;
}

double resolve_tol(const Options& opts, double fallback) {
  if (opts.tol < 0.0) return fallback;
  if (opts.tol == 0.0) throw std::invalid_argument("--tol must be positive");
  return opts.tol;
}

void emit(const Options& opts, std::string payload) {
  if (opts.out_path.empty()) {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + opts.out_path + "'");
  file.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

void json_header(JsonWriter& json, const char* command, const Options& opts,
                 const QuadConfig& config) {
  json.key("command");
  json.string(command);
  json.key("n");
  json.integer(opts.n);
  json.key("m");
  json.integer(opts.m);
  json.key("radial_points");
  json.integer(config.radial_points);
  json.key("angular_points");
  json.integer(config.angular_points);
}

void json_matrix(JsonWriter& json, const char* name, const ComplexMatrix& matrix) {
  json.key(name);
  json.begin_array();
  for (int i = 0; i < matrix.size; ++i) {
    json.begin_array();
    for (int j = 0; j < matrix.size; ++j) json.complex_value(matrix.at(i, j));
    json.end_array();
  }
  json.end_array();
}

std::string csv_matrix(const ComplexMatrix& matrix) {
  std::string out = "row,col,re,im\n";
  for (int i = 0; i < matrix.size; ++i) {
    for (int j = 0; j < matrix.size; ++j) {
      out += std::to_string(i) + "," + std::to_string(j) + "," +
             format_double(matrix.at(i, j).real()) + "," +
             format_double(matrix.at(i, j).imag()) + "\n";
    }
  }
  return out;
}

std::string csv_indexed_rows(const std::vector<MultiIndex>& indices,
                             const std::vector<Complex>& values, int n) {
  std::string out;
  for (int j = 1; j <= n; ++j) {
    out += "p" + std::to_string(j) + ",";
  }
  out += "re,im\n";
  for (size_t i = 0; i < indices.size(); ++i) {
    for (int j = 0; j < n; ++j) out += std::to_string(indices[i][j]) + ",";
    out += format_double(values[i].real()) + "," + format_double(values[i].imag()) + "\n";
  }
  return out;
}

double max_identity_deviation(const ComplexMatrix& matrix) {
  double deviation = 0.0;
  for (int i = 0; i < matrix.size; ++i) {
    for (int j = 0; j < matrix.size; ++j) {
      const Complex expected = i == j ? Complex(1, 0) : Complex(0, 0);
      deviation = std::max(deviation, std::abs(matrix.at(i, j) - expected));
    }
  }
  return deviation;
}

int cmd_gram(const Options& opts) {
  const QuadConfig config = resolve_quadrature(opts);
  const SpaceParams params{opts.n, opts.m};
  const double threshold = resolve_tol(opts, 1e-8);
  const ComplexMatrix gram = gram_matrix(params, config);
  const double deviation = max_identity_deviation(gram);
  const bool pass = deviation <= threshold;

  if (opts.format == "csv") {
    emit(opts, csv_matrix(gram));
  } else {
    JsonWriter json;
    json.begin_object();
    json_header(json, "gram", opts, config);
    json.key("dimension");
    json.integer(gram.size);
    json.key("max_deviation");
    json.number(deviation);
    json.key("threshold");
    json.number(threshold);
    json.key("pass");
    json.boolean(pass);
    json_matrix(json, "matrix", gram);
    json.end_object();
    emit(opts, json.take());
  }
  std::fprintf(stderr, "gram n=%d m=%d: max|G-I| = %s (threshold %s) -> %s\n", opts.n,
               opts.m, format_double(deviation).c_str(), format_double(threshold).c_str(),
               pass ? "pass" : "FAIL");
  return pass ? kExitOk : kExitVerdictFail;
}

int cmd_gamma(const Options& opts) {
  const QuadConfig config = resolve_quadrature(opts);
  const SpaceParams params{opts.n, opts.m};
  const SymbolExpr expr = SymbolExpr::parse(opts.symbol, opts.n);
  const GammaSequence gamma = gamma_sequence(expr, params, config, opts.assert_radial);
  const auto indices = enumerate_indices(params);
  const bool syntactic = expr.radiality() == Radiality::kSyntacticallyRadial;

  if (opts.format == "csv") {
    emit(opts, csv_indexed_rows(indices, gamma.values, opts.n));
  } else {
    JsonWriter json;
    json.begin_object();
    json_header(json, "gamma", opts, config);
    json.key("symbol");
    json.string(expr.source());
    json.key("radial_check");
    json.string(syntactic ? "syntactic" : "numeric");
    json.key("rows");
    json.begin_array();
    for (size_t i = 0; i < indices.size(); ++i) {
      json.begin_object();
      json.key("p");
      json.begin_array();
      for (int j = 0; j < opts.n; ++j) json.integer(indices[i][j]);
      json.end_array();
      json.key("re");
      json.number(gamma.values[i].real());
      json.key("im");
      json.number(gamma.values[i].imag());
      json.end_object();
    }
    json.end_array();
    json.end_object();
    emit(opts, json.take());
  }
  std::fprintf(stderr, "gamma '%s' n=%d m=%d: %zu values (%s radial check)\n",
               expr.source().c_str(), opts.n, opts.m, gamma.values.size(),
               syntactic ? "syntactic" : "numeric");
  return kExitOk;
}

int cmd_toeplitz(const Options& opts) {
  const QuadConfig config = resolve_quadrature(opts);
  const SpaceParams params{opts.n, opts.m};
  const SymbolExpr expr = SymbolExpr::parse(opts.symbol, opts.n);
  const ComplexMatrix matrix = toeplitz_matrix(expr, params, config);

  const double diag_defect = diagonality_defect(matrix);
  const double herm_defect = hermiticity_defect(matrix);
  const double norm = operator_norm(matrix);

  bool radial = expr.radiality() == Radiality::kSyntacticallyRadial;
  double gamma_gap = -1.0;
  if (radial || opts.assert_radial) {
    try {
      const GammaSequence gamma = gamma_sequence(expr, params, config, opts.assert_radial);
      gamma_gap = 0.0;
      for (int i = 0; i < matrix.size; ++i) {
        gamma_gap = std::max(gamma_gap,
                             std::abs(matrix.at(i, i) - gamma.values[static_cast<size_t>(i)]));
      }
      radial = true;
    } catch (const NotRadialError&) {
      radial = false;
    }
  }

  if (opts.format == "csv") {
    emit(opts, csv_matrix(matrix));
  } else {
    JsonWriter json;
    json.begin_object();
    json_header(json, "toeplitz", opts, config);
    json.key("symbol");
    json.string(expr.source());
    json.key("diagonality_defect");
    json.number(diag_defect);
    json.key("hermiticity_defect");
    json.number(herm_defect);
    json.key("operator_norm");
    json.number(norm);
    if (radial) {
      json.key("max_diag_vs_gamma");
      json.number(gamma_gap);
    }
    json_matrix(json, "matrix", matrix);
    json.end_object();
    emit(opts, json.take());
  }
  std::fprintf(stderr,
               "toeplitz '%s' n=%d m=%d: diagonality %s, hermiticity %s, norm %s%s%s\n",
               expr.source().c_str(), opts.n, opts.m, format_double(diag_defect).c_str(),
               format_double(herm_defect).c_str(), format_double(norm).c_str(),
               radial ? ", diag-vs-gamma " : "",
               radial ? format_double(gamma_gap).c_str() : "");
  return kExitOk;
}

int cmd_commute(const Options& opts) {
  const QuadConfig config = resolve_quadrature(opts);
  const SpaceParams params{opts.n, opts.m};
  const double threshold = resolve_tol(opts, 1e-9);
  const SymbolExpr a = SymbolExpr::parse(opts.symbol, opts.n);
  const SymbolExpr b = SymbolExpr::parse(opts.symbol2, opts.n);
  const ComplexMatrix ta = toeplitz_matrix(a, params, config);
  const ComplexMatrix tb = toeplitz_matrix(b, params, config);
  const ComplexMatrix bracket = commutator(ta, tb);
  const double norm = frobenius_norm(bracket);
  const bool commuting = norm <= threshold;

  if (opts.format == "csv") {
    std::string out = "metric,value\n";
    out += "frobenius_norm," + format_double(norm) + "\n";
    out += "threshold," + format_double(threshold) + "\n";
    out += std::string("commuting,") + (commuting ? "1" : "0") + "\n";
    emit(opts, out);
  } else {
    JsonWriter json;
    json.begin_object();
    json_header(json, "commute", opts, config);
    json.key("symbol");
    json.string(a.source());
    json.key("symbol2");
    json.string(b.source());
    json.key("frobenius_norm");
    json.number(norm);
    json.key("threshold");
    json.number(threshold);
    json.key("commuting");
    json.boolean(commuting);
    json_matrix(json, "commutator", bracket);
    json.end_object();
    emit(opts, json.take());
  }
  std::fprintf(stderr, "commute n=%d m=%d: ||[T_a,T_b]||_F = %s -> %s\n", opts.n, opts.m,
               format_double(norm).c_str(), commuting ? "commuting" : "not commuting");
  return commuting ? kExitOk : kExitVerdictFail;
}

int cmd_project(const Options& opts) {
  const QuadConfig config = resolve_quadrature(opts);
  const SpaceParams params{opts.n, opts.m};
  const SymbolExpr expr = SymbolExpr::parse(opts.symbol, opts.n);
  const CoefficientVector coefficients = analyze(as_function(expr), params, config);
  const auto indices = enumerate_indices(params);

  if (opts.format == "csv") {
    emit(opts, csv_indexed_rows(indices, coefficients.values, opts.n));
  } else {
    JsonWriter json;
    json.begin_object();
    json_header(json, "project", opts, config);
    json.key("symbol");
    json.string(expr.source());
    json.key("rows");
    json.begin_array();
    for (size_t i = 0; i < indices.size(); ++i) {
      json.begin_object();
      json.key("p");
      json.begin_array();
      for (int j = 0; j < opts.n; ++j) json.integer(indices[i][j]);
      json.end_array();
      json.key("re");
      json.number(coefficients.values[i].real());
      json.key("im");
      json.number(coefficients.values[i].imag());
      json.end_object();
    }
    json.end_array();
    json.end_object();
    emit(opts, json.take());
  }
  std::fprintf(stderr, "project '%s' n=%d m=%d: %zu coefficients\n", expr.source().c_str(),
               opts.n, opts.m, coefficients.values.size());
  return kExitOk;
}

int cmd_orbit(const Options& opts) {
  OrbitSpec spec{opts.radii};
  validate(spec);
  const int n = static_cast<int>(opts.radii.size()) - 1;
  const auto points = sample_orbit(spec, opts.grid);

  if (opts.format == "json") {
    JsonWriter json;
    json.begin_object();
    json.key("command");
    json.string("orbit");
    json.key("radii");
    json.begin_array();
    for (double r : opts.radii) json.number(r);
    json.end_array();
    json.key("grid");
    json.integer(opts.grid);
    json.key("points");
    json.begin_array();
    for (const auto& z : points) {
      json.begin_array();
      for (const Complex& zj : z) json.complex_value(zj);
      json.end_array();
    }
    json.end_array();
    json.end_object();
    emit(opts, json.take());
  } else {
    std::string out;
    for (int j = 1; j <= n; ++j) {
      out += "z" + std::to_string(j) + "_re,z" + std::to_string(j) + "_im";
      out += (j < n) ? "," : "\n";
    }
    for (const auto& z : points) {
      for (int j = 0; j < n; ++j) {
        out += format_double(z[static_cast<size_t>(j)].real()) + "," +
               format_double(z[static_cast<size_t>(j)].imag());
        out += (j + 1 < n) ? "," : "\n";
      }
    }
    emit(opts, out);
  }
  std::fprintf(stderr, "orbit n=%d grid=%d: %zu points\n", n, opts.grid, points.size());
  return kExitOk;
}

int cmd_geomcheck(const Options& opts) {
  if (opts.n < 1) throw std::invalid_argument("--n must be >= 1");
  if (opts.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  const double tolerance = resolve_tol(opts, 1e-10);

  Rng rng(opts.seed);
  double max_lagrangian = 0.0;
  double max_orthogonality = 0.0;
  for (int trial = 0; trial < opts.samples; ++trial) {
    const auto z = rng.nonzero_point(opts.n, 3.0);
    max_lagrangian = std::max(max_lagrangian, lagrangian_defect(z));
    max_orthogonality = std::max(max_orthogonality, frame_orthogonality_defect(z));
  }
  const bool pass = max_lagrangian <= tolerance && max_orthogonality <= tolerance;

  if (opts.format == "csv") {
    std::string out = "metric,value\n";
    out += "lagrangian_defect," + format_double(max_lagrangian) + "\n";
    out += "orthogonality_defect," + format_double(max_orthogonality) + "\n";
    out += "tolerance," + format_double(tolerance) + "\n";
    out += std::string("pass,") + (pass ? "1" : "0") + "\n";
    emit(opts, out);
  } else {
    JsonWriter json;
    json.begin_object();
    json.key("command");
    json.string("geomcheck");
    json.key("n");
    json.integer(opts.n);
    json.key("seed");
    json.unsigned_integer(opts.seed);
    json.key("samples");
    json.integer(opts.samples);
    json.key("lagrangian_defect");
    json.number(max_lagrangian);
    json.key("orthogonality_defect");
    json.number(max_orthogonality);
    json.key("tolerance");
    json.number(tolerance);
    json.key("pass");
    json.boolean(pass);
    json.end_object();
    emit(opts, json.take());
  }
  std::fprintf(stderr, "geomcheck n=%d: lagrangian %s, orthogonality %s -> %s\n", opts.n,
               format_double(max_lagrangian).c_str(), format_double(max_orthogonality).c_str(),
               pass ? "pass" : "FAIL");
  return pass ? kExitOk : kExitVerdictFail;
}

int cmd_invariance(const Options& opts) {
  if (opts.n < 1) throw std::invalid_argument("--n must be >= 1");
  if (opts.trials < 1) throw std::invalid_argument("--trials must be >= 1");
  const double tolerance = resolve_tol(opts, 1e-10);
  const SymbolExpr expr = SymbolExpr::parse(opts.symbol, opts.n);
  const InvarianceReport report = check_torus_invariance(expr, opts.trials, opts.seed, tolerance);
  const bool syntactic = expr.radiality() == Radiality::kSyntacticallyRadial;

  if (opts.format == "csv") {
    std::string out = "metric,value\n";
    out += std::string("syntactically_radial,") + (syntactic ? "1" : "0") + "\n";
    out += std::string("invariant,") + (report.invariant ? "1" : "0") + "\n";
    out += "max_deviation," + format_double(report.max_deviation) + "\n";
    out += "tolerance," + format_double(tolerance) + "\n";
    emit(opts, out);
  } else {
    JsonWriter json;
    json.begin_object();
    json.key("command");
    json.string("invariance");
    json.key("n");
    json.integer(opts.n);
    json.key("symbol");
    json.string(expr.source());
    json.key("trials");
    json.integer(opts.trials);
    json.key("seed");
    json.unsigned_integer(opts.seed);
    json.key("tolerance");
    json.number(tolerance);
    json.key("syntactically_radial");
    json.boolean(syntactic);
    json.key("invariant");
    json.boolean(report.invariant);
    json.key("max_deviation");
    json.number(report.max_deviation);
    json.end_object();
    emit(opts, json.take());
  }
  std::fprintf(stderr, "invariance '%s' n=%d: max deviation %s -> %s\n", expr.source().c_str(),
               opts.n, format_double(report.max_deviation).c_str(),
               report.invariant ? "invariant" : "not invariant");
  return report.invariant ? kExitOk : kExitVerdictFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toeplitz operators on weighted Bergman spaces of complex projective space"};
  app.require_subcommand(1);

  Options opts;

  CLI::App* gram = app.add_subcommand("gram", "Gram matrix of the normalized monomial basis");
  add_space_flags(gram, opts);
  add_output_flags(gram, opts);
  gram->add_option("--tol", opts.tol, "pass threshold on max|G-I| (default 1e-8)");

  CLI::App* gamma = app.add_subcommand("gamma", "eigenvalue table of a separately radial symbol");
  add_space_flags(gamma, opts);
  add_output_flags(gamma, opts);
  gamma->add_option("--symbol", opts.symbol, "symbol expression")->required();
  gamma->add_flag("--assert-radial", opts.assert_radial,
                  "accept a general-looking symbol after a numeric invariance check");

  CLI::App* toeplitz = app.add_subcommand("toeplitz", "Toeplitz matrix and diagnostics");
  add_space_flags(toeplitz, opts);
  add_output_flags(toeplitz, opts);
  toeplitz->add_option("--symbol", opts.symbol, "symbol expression")->required();
  toeplitz->add_flag("--assert-radial", opts.assert_radial,
                     "also report the diagonal-vs-gamma gap after a numeric check");

  CLI::App* commute = app.add_subcommand("commute", "commutator of two Toeplitz operators");
  add_space_flags(commute, opts);
  add_output_flags(commute, opts);
  commute->add_option("--symbol", opts.symbol, "first symbol")->required();
  commute->add_option("--symbol2", opts.symbol2, "second symbol")->required();
  commute->add_option("--tol", opts.tol, "commutativity threshold (default 1e-9)");

  CLI::App* project = app.add_subcommand("project", "Bergman projection coefficients of a symbol");
  add_space_flags(project, opts);
  add_output_flags(project, opts);
  project->add_option("--symbol", opts.symbol, "symbol expression")->required();

  CLI::App* orbit = app.add_subcommand("orbit", "chart samples of a torus orbit");
  add_output_flags(orbit, opts);
  orbit->add_option("--radii", opts.radii, "n+1 positive radii with unit square sum")
      ->required()
      ->delimiter(',');
  orbit->add_option("--grid", opts.grid, "angular samples per coordinate (default 8)");
  opts.format = "json";
  orbit->parse_complete_callback([&opts, orbit] {
    if (orbit->count("--format") == 0) opts.format = "csv";  // point clouds default to CSV
  });

  CLI::App* geomcheck = app.add_subcommand("geomcheck", "Lagrangian and orthogonality defects");
  geomcheck->add_option("--n", opts.n, "complex dimension (>= 1)");
  geomcheck->add_option("--seed", opts.seed, "sampling seed");
  geomcheck->add_option("--samples", opts.samples, "number of sampled points (default 100)");
  geomcheck->add_option("--tol", opts.tol, "defect tolerance (default 1e-10)");
  add_output_flags(geomcheck, opts);

  CLI::App* invariance = app.add_subcommand("invariance", "numeric torus-invariance check");
  invariance->add_option("--n", opts.n, "complex dimension (>= 1)");
  invariance->add_option("--symbol", opts.symbol, "symbol expression")->required();
  invariance->add_option("--trials", opts.trials, "number of random trials (default 200)");
  invariance->add_option("--seed", opts.seed, "sampling seed");
  invariance->add_option("--tol", opts.tol, "deviation tolerance (default 1e-10)");
  add_output_flags(invariance, opts);

  gamma->add_option("--seed", opts.seed, "seed (reserved for config reporting)");
  toeplitz->add_option("--seed", opts.seed, "seed (reserved for config reporting)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gram->parsed()) return cmd_gram(opts);
    if (gamma->parsed()) return cmd_gamma(opts);
    if (toeplitz->parsed()) return cmd_toeplitz(opts);
    if (commute->parsed()) return cmd_commute(opts);
    if (project->parsed()) return cmd_project(opts);
    if (orbit->parsed()) return cmd_orbit(opts);
    if (geomcheck->parsed()) return cmd_geomcheck(opts);
    if (invariance->parsed()) return cmd_invariance(opts);
  } catch (const ParseError& e) {
    std::cerr << "symbol error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotRadialError& e) {
    std::cerr << "radiality error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EvalError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}
