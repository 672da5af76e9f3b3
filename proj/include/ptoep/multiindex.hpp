#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ptoep {

// Parameters of the weighted space: complex dimension n >= 1 of the chart
// C^n and weight m >= 0. The basis index set is J_n(m) = {p : |p| <= m}.
struct SpaceParams {
  int n = 1;
  int m = 0;

  bool operator==(const SpaceParams&) const = default;
};

// Dense matrices beyond this size are rejected up front.
inline constexpr std::int64_t kDimensionCap = 1'000'000;

// Multi-index p = (p_1, ..., p_n) of non-negative integers.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries);  // rejects negative entries

  int size() const { return static_cast<int>(entries_.size()); }
  int degree() const;  // |p|
  int operator[](int j) const { return entries_[static_cast<size_t>(j)]; }
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const MultiIndex&) const = default;

 private:
  std::vector<int> entries_;
};

std::string to_string(const MultiIndex& p);

// Repo-wide basis order: total degree ascending, ties broken so that within a
// degree the lexicographically larger index comes first ((1,0) before (0,1)).
bool graded_lex_less(const MultiIndex& a, const MultiIndex& b);

// Throws std::invalid_argument for n < 1 or m < 0, std::overflow_error when
// C(n+m, n) exceeds kDimensionCap.
void validate(const SpaceParams& params);

// All p with |p| <= m in graded-lex order; this order indexes every matrix
// row/column and coefficient vector in the library.
std::vector<MultiIndex> enumerate_indices(const SpaceParams& params);

// |J_n(m)| = C(n+m, n).
std::int64_t dimension(const SpaceParams& params);

double factorial(int k);      // table up to 64, exp(lgamma) beyond
double log_factorial(int k);

// <z^p, z^p>_m = p! (m-|p|)! / m!. Rejects |p| > m.
double basis_norm_sq(const MultiIndex& p, const SpaceParams& params);

// c_p = m! / (p! (m-|p|)!), the squared normalizing factor of the monomial
// basis; basis_norm_sq(p) * normalization_constant(p) == 1.
double normalization_constant(const MultiIndex& p, const SpaceParams& params);

}  // namespace ptoep
