#include "doctest.h"
#include "ptoep/symbol.hpp"

#include <complex>
#include <vector>

using namespace ptoep;
using Complex = std::complex<double>;

namespace {
Complex eval_at(const SymbolExpr& e, std::initializer_list<Complex> z) {
  std::vector<Complex> pt(z);
  return e.eval(pt);
}
}  // namespace

TEST_CASE("parse classifies radiality") {
  CHECK(SymbolExpr::parse("r1^2/(1+rho2)", 2).radiality() == Radiality::kSyntacticallyRadial);
  CHECK(SymbolExpr::parse("re(z1)/(1+rho2)", 1).radiality() == Radiality::kSyntacticallyGeneral);
  CHECK(SymbolExpr::parse("1", 3).radiality() == Radiality::kSyntacticallyRadial);
  // radial function, but mentions z1, so the syntactic scan stays general
  CHECK(SymbolExpr::parse("abs(z1)^2", 1).radiality() == Radiality::kSyntacticallyGeneral);
}

TEST_CASE("eval basics") {
  auto e = SymbolExpr::parse("r1^2/(1+rho2)", 2);
  CHECK(eval_at(e, {Complex(1, 0), Complex(0, 0)}).real() == doctest::Approx(0.5).epsilon(1e-15));

  CHECK(eval_at(SymbolExpr::parse("1", 2), {Complex(3, 1), Complex(0, 2)}) == Complex(1, 0));
  CHECK(eval_at(SymbolExpr::parse("re(z1)", 1), {Complex(2, 3)}) == Complex(2, 0));
  CHECK(eval_at(SymbolExpr::parse("im(z1)", 1), {Complex(2, 3)}) == Complex(3, 0));
  CHECK(eval_at(SymbolExpr::parse("conj(z1)", 1), {Complex(2, 3)}) == Complex(2, -3));
  CHECK(eval_at(SymbolExpr::parse("abs(z1)", 1), {Complex(3, 4)}).real() == doctest::Approx(5.0));
  CHECK(eval_at(SymbolExpr::parse("exp(-rho2)", 1), {Complex(0, 0)}) == Complex(1, 0));
  CHECK(eval_at(SymbolExpr::parse("2^3^2", 1), {Complex(0, 0)}).real() ==
        512.0);  // right-associative
  CHECK(eval_at(SymbolExpr::parse("r1^-2", 1), {Complex(2, 0)}).real() ==
        doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("eval errors") {
  CHECK_THROWS_AS(eval_at(SymbolExpr::parse("1/r1", 1), {Complex(0, 0)}), EvalError);
  CHECK_THROWS_AS(eval_at(SymbolExpr::parse("sqrt(re(z1))", 1), {Complex(-1, 0)}), EvalError);
  CHECK_THROWS_AS(eval_at(SymbolExpr::parse("sqrt(z1)", 1), {Complex(0, 1)}), EvalError);
  CHECK_THROWS_AS(eval_at(SymbolExpr::parse("atan(z1)", 1), {Complex(1, 1)}), EvalError);
}

TEST_CASE("parse errors carry offsets") {
  CHECK_THROWS_AS(SymbolExpr::parse("1 +", 1), ParseError);
  CHECK_THROWS_AS(SymbolExpr::parse("(1+r1", 1), ParseError);
  CHECK_THROWS_AS(SymbolExpr::parse("bogus(r1)", 1), ParseError);
  CHECK_THROWS_AS(SymbolExpr::parse("r1^r1", 1), ParseError);  // non-constant exponent
  CHECK_THROWS_AS(SymbolExpr::parse("r1^1.5", 1), ParseError);
  CHECK_THROWS_AS(SymbolExpr::parse("1 2", 1), ParseError);

  try {
    SymbolExpr::parse("1/(1+z3)", 2);
    FAIL("expected out-of-range variable to throw");
  } catch (const ParseError& err) {
    CHECK(err.offset == 5);
  }
}

TEST_CASE("apply torus") {
  const std::vector<double> t1{M_PI};
  const std::vector<Complex> z1{Complex(1, 0)};
  auto out = apply_torus(t1, z1);
  CHECK(out[0].real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(std::abs(out[0].imag()) < 1e-15);

  const std::vector<double> t0{0.0, 0.0};
  const std::vector<Complex> z2{Complex(0.3, -0.4), Complex(2, 1)};
  out = apply_torus(t0, z2);
  CHECK(out[0] == z2[0]);
  CHECK(out[1] == z2[1]);

  const std::vector<double> t2{M_PI / 2, 0.0};
  const std::vector<Complex> z3{Complex(1, 0), Complex(2, 0)};
  out = apply_torus(t2, z3);
  CHECK(out[0].imag() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(out[0].real()) < 1e-15);
  CHECK(out[1] == Complex(2, 0));

  // moduli survive exactly up to rounding
  for (size_t j = 0; j < z3.size(); ++j) {
    CHECK(std::abs(out[j]) == doctest::Approx(std::abs(z3[j])).epsilon(1e-15));
  }
}

TEST_CASE("torus invariance checker") {
  auto radial = SymbolExpr::parse("r1^2/(1+rho2)", 2);
  auto report = check_torus_invariance(radial, 200, 7, 1e-10);
  CHECK(report.invariant);
  CHECK(report.max_deviation <= 1e-10);

  auto general = SymbolExpr::parse("re(z1)/(1+rho2)", 1);
  report = check_torus_invariance(general, 200, 7, 1e-10);
  CHECK_FALSE(report.invariant);
  CHECK(report.max_deviation > 1e-3);  // t=(pi), z=(1) style witnesses abound

  report = check_torus_invariance(SymbolExpr::parse("1", 1), 10, 1, 1e-12);
  CHECK(report.invariant);
}

TEST_CASE("determinism of the checker") {
  auto e = SymbolExpr::parse("im(z2)*r1", 2);
  auto a = check_torus_invariance(e, 50, 1234, 1e-10);
  auto b = check_torus_invariance(e, 50, 1234, 1e-10);
  CHECK(a.max_deviation == b.max_deviation);
  auto c = check_torus_invariance(e, 50, 4321, 1e-10);
  CHECK(a.max_deviation != c.max_deviation);
}

TEST_CASE("print-parse fixpoint") {
  const char* corpus[] = {
      "1",
      "r1^2/(1+rho2)",
      "exp(-rho2)",
      "1/(1+rho2)^2",
      "re(z1)/(1+rho2)",
      "conj(z2)*z1 - 0.25",
      "sqrt(1+r2^2)*cos(r1)",
      "atan(rho2)/(2 - r1)",
      "-(z1 + z2)^3",
      "1.5e-3*r1 + 2e2",
  };
  for (const char* text : corpus) {
    auto first = SymbolExpr::parse(text, 2);
    auto second = SymbolExpr::parse(first.str(), 2);
    CHECK(first.same_tree(second));
    CHECK(first.str() == second.str());
  }
}

TEST_CASE("radial expressions are torus invariant for any seed") {
  const char* radial_corpus[] = {
      "1", "1/(1+rho2)", "r1^2/(1+rho2)", "exp(-rho2)", "1/(1+rho2)^2",
      "sqrt(1+r1^2)", "cos(r2)*atan(rho2)",
  };
  for (const char* text : radial_corpus) {
    auto e = SymbolExpr::parse(text, 2);
    REQUIRE(e.radiality() == Radiality::kSyntacticallyRadial);
    for (std::uint64_t seed : {1ull, 99ull, 20250811ull}) {
      CHECK(check_torus_invariance(e, 100, seed, 1e-10).invariant);
    }
  }
}

TEST_CASE("radial eval commutes with the torus action pointwise") {
  auto e = SymbolExpr::parse("r1^2*r2^2/(1+rho2)^2 + exp(-rho2)", 2);
  const std::vector<Complex> z{Complex(0.7, -0.2), Complex(-1.1, 0.4)};
  const std::vector<double> t{1.234, -0.618};
  const Complex before = e.eval(z);
  const Complex after = e.eval(apply_torus(t, z));
  CHECK(std::abs(after - before) <= 1e-12 * std::abs(before));
}
