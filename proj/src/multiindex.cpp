#include "ptoep/multiindex.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ptoep {

namespace {

std::array<double, 65> make_factorial_table() {
  std::array<double, 65> table{};
  long double acc = 1.0L;
  table[0] = 1.0;
  for (int k = 1; k <= 64; ++k) {
    acc *= static_cast<long double>(k);
    table[static_cast<size_t>(k)] = static_cast<double>(acc);
  }
  return table;
}

const std::array<double, 65> kFactorialTable = make_factorial_table();

void require_admissible(const MultiIndex& p, const SpaceParams& params) {
  validate(params);
  if (p.size() != params.n) {
    throw std::invalid_argument("multi-index length does not match n");
  }
  if (p.degree() > params.m) {
    throw std::invalid_argument("multi-index degree exceeds weight m");
  }
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw std::invalid_argument("multi-index entries must be non-negative");
  }
}

int MultiIndex::degree() const {
  return std::accumulate(entries_.begin(), entries_.end(), 0);
}

std::string to_string(const MultiIndex& p) {
  std::string out = "(";
  for (int j = 0; j < p.size(); ++j) {
    if (j > 0) out += ",";
    out += std::to_string(p[j]);
  }
  out += ")";
  return out;
}

bool graded_lex_less(const MultiIndex& a, const MultiIndex& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // within a degree the lexicographically larger index comes first
  return a.entries() > b.entries();
}

void validate(const SpaceParams& params) {
  if (params.n < 1) throw std::invalid_argument("n must be >= 1");
  if (params.m < 0) throw std::invalid_argument("m must be >= 0");
  dimension(params);  // enforces the cap
}

std::int64_t dimension(const SpaceParams& params) {
  if (params.n < 1 || params.m < 0) {
    throw std::invalid_argument("invalid space parameters");
  }
  // C(n+m, n) multiplicatively over the smaller factor
  const std::int64_t k = std::min<std::int64_t>(params.n, params.m);
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result = result * (static_cast<std::int64_t>(params.n) + params.m - k + i) / i;
    if (result > kDimensionCap) {
      throw std::overflow_error("dimension C(n+m, n) exceeds the supported cap");
    }
  }
  return result;
}

namespace {

void emit_degree(int remaining, int slots, std::vector<int>& prefix,
                 std::vector<MultiIndex>& out) {
  if (slots == 1) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int head = remaining; head >= 0; --head) {
    prefix.push_back(head);
    emit_degree(remaining - head, slots - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_indices(const SpaceParams& params) {
  validate(params);
  std::vector<MultiIndex> out;
  out.reserve(static_cast<size_t>(dimension(params)));
  std::vector<int> prefix;
  prefix.reserve(static_cast<size_t>(params.n));
  for (int d = 0; d <= params.m; ++d) {
    emit_degree(d, params.n, prefix, out);
  }
  return out;
}

double factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial of negative argument");
  if (k <= 64) return kFactorialTable[static_cast<size_t>(k)];
  return std::exp(std::lgamma(static_cast<double>(k) + 1.0));
}

double log_factorial(int k) {
  if (k < 0) throw std::invalid_argument("factorial of negative argument");
  if (k <= 64) return std::log(kFactorialTable[static_cast<size_t>(k)]);
  return std::lgamma(static_cast<double>(k) + 1.0);
}

double basis_norm_sq(const MultiIndex& p, const SpaceParams& params) {
  require_admissible(p, params);
  if (params.m <= 64) {
    double num = factorial(params.m - p.degree());
    for (int j = 0; j < p.size(); ++j) num *= factorial(p[j]);
    return num / factorial(params.m);
  }
  double log_value = log_factorial(params.m - p.degree()) - log_factorial(params.m);
  for (int j = 0; j < p.size(); ++j) log_value += log_factorial(p[j]);
  return std::exp(log_value);
}

double normalization_constant(const MultiIndex& p, const SpaceParams& params) {
  require_admissible(p, params);
  if (params.m <= 64) {
    double den = factorial(params.m - p.degree());
    for (int j = 0; j < p.size(); ++j) den *= factorial(p[j]);
    return factorial(params.m) / den;
  }
  return 1.0 / basis_norm_sq(p, params);
}

}  // namespace ptoep
