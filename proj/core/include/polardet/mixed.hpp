#pragma once

#include "polardet/budget.hpp"
#include "polardet/exact.hpp"
#include "polardet/toeplitz.hpp"

#include <map>
#include <string>
#include <vector>

namespace polardet {

// Coefficients gamma(n_1,...,n_K) of det(x_1 A_1 + ... + x_K A_K), keyed by
// multi-index with sum n. For Gram inputs every value is a nonnegative
// integer (a sum of squared minor moduli); arbitrary inputs may produce
// complex values, kept exactly.
struct GammaTable {
  int n = 0;
  int K = 0;
  std::map<std::vector<int>, GaussianInt> entries;

  const GaussianInt& at(const std::vector<int>& idx) const;
  GaussianRat evaluate(const std::vector<Rat>& ts) const;

  // {"n":..,"K":..,"entries":{"n1,n2,...,nK":"value",...}}, keys in
  // lexicographic order, values as decimal strings.
  std::string to_json() const;
};

// gamma by Binet-Cauchy over the factors: sum over all ordered K-tuples of
// column choices (idx_k columns from factor k) of |det(S_1|...|S_K)|^2. An
// index exceeding a factor's column count gives the empty sum, zero.
Int gamma_binet_cauchy(const std::vector<ExactMat>& factors,
                       const std::vector<int>& idx, Budget* budget = nullptr);
Int gamma_binet_cauchy(const std::vector<RectToeplitz>& factors,
                       const std::vector<int>& idx, Budget* budget = nullptr);

// Full table by multilinear expansion over columns: K^n column assignments,
// each contributing one determinant.
GammaTable gamma_multilinear(const std::vector<ExactMat>& as,
                             Budget* budget = nullptr);

// Polarized determinant D_n(A_1,...,A_n) of exactly n matrices by
// finite-difference extraction: (1/n!) sum_{T subset {1..n}} (-1)^{n-|T|}
// det(sum_{i in T} A_i). Throws std::domain_error if the alternating sum is
// not real (hermitian arguments always are).
Rat mixed_discriminant(const std::vector<ExactMat>& as, Budget* budget = nullptr);

// gamma via the mixed discriminant with slot repetitions:
// (n!/(n_1!...n_K!)) * D_n(A_1 repeated n_1 times, ...).
Rat gamma_from_mixed(const std::vector<ExactMat>& as, const std::vector<int>& idx,
                     Budget* budget = nullptr);

}  // namespace polardet
