#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ptoep {

// Syntactic verdict on whether an expression can only depend on the radial
// data (r_1..r_n, rho2). Radial is sound but not complete: abs(z1)^2 is a
// radial function yet is flagged General because it mentions z1.
enum class Radiality { kSyntacticallyRadial, kSyntacticallyGeneral, kUnknown };

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, size_t byte_offset)
      : std::runtime_error(message + " (at byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
  size_t offset;
};

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parsed symbol a(z) on C^n.
//
// Grammar (see docs/symbol-grammar.md): infix +, -, *, /, unary -, integer
// powers with ^ (right-associative, the exponent must fold to an integer
// constant), functions exp, sin, cos, sqrt, atan, re, im, conj, abs,
// variables z1..zn (complex), r1..rn (= |z_j|), rho2 (= sum |z_j|^2).
class SymbolExpr {
 public:
  SymbolExpr() = default;

  // Throws ParseError with the byte offset of the problem.
  static SymbolExpr parse(const std::string& text, int n);

  // r_j evaluates as |z_j| and rho2 as sum |z_j|^2; throws EvalError on
  // division by zero and on non-real arguments to sqrt/atan.
  std::complex<double> eval(std::span<const std::complex<double>> z) const;

  Radiality radiality() const { return radiality_; }
  int dim() const { return n_; }
  const std::string& source() const { return source_; }

  // Fully parenthesized rendering; parse(str()) reproduces the same tree.
  std::string str() const;

  bool same_tree(const SymbolExpr& other) const;

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  int n_ = 0;
  Radiality radiality_ = Radiality::kUnknown;
  std::string source_;
};

// Callable view for the integration layer.
std::function<std::complex<double>(std::span<const std::complex<double>>)>
as_function(const SymbolExpr& expr);

// Diagonal torus action (t, z) -> (e^{i t_1} z_1, ..., e^{i t_n} z_n).
using TorusElement = std::vector<double>;

std::vector<std::complex<double>> apply_torus(std::span<const double> angles,
                                              std::span<const std::complex<double>> z);

struct InvarianceReport {
  bool invariant = false;
  double max_deviation = 0.0;
};

// Draws `trials` pairs (t, z) with z in the polydisk of radius 3 and all
// coordinates nonzero, and compares a(tz) with a(z). Deterministic for a
// fixed seed (per trial: n torus angles, then modulus/phase per coordinate).
InvarianceReport check_torus_invariance(const SymbolExpr& expr, int trials,
                                        std::uint64_t seed, double tol);

}  // namespace ptoep
