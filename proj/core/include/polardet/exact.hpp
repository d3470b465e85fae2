#pragma once

#include "polardet/budget.hpp"
#include "polardet/matrix.hpp"

#include <string>
#include <vector>

namespace polardet {

// Fraction-free (Bareiss) determinant over Gaussian integers: every division
// is exact and checked. Pivoting takes the first nonzero entry in column
// order. For input tagged hermitian/gram a nonzero imaginary part in the
// result is a kernel bug and throws std::domain_error.
GaussianInt det_exact(const ExactMat& a);

// Rational path: clears the common denominator, runs the integer kernel, and
// divides by its n-th power. Same hermitian assertion.
GaussianRat det_exact(const RatMat& a);

// True iff every entry is 0 or 1 and in each column the 1s occupy a
// contiguous run of rows.
bool is_interval_col(const ExactMat& m);

struct TuViolation {
  std::vector<int> cols;
  std::string det;
};

struct TuReport {
  uint64_t minors = 0;
  uint64_t plus_one = 0;
  uint64_t minus_one = 0;
  uint64_t zero = 0;
  std::vector<TuViolation> out_of_range;

  bool ok() const { return out_of_range.empty(); }
};

// Enumerates all C(cols, rows) maximal square submatrices of an interval
// matrix and tallies their determinants; anything outside {-1,0,1} lands in
// out_of_range. Throws std::invalid_argument if the input is not
// interval-column.
TuReport check_tu_minors(const ExactMat& m, Budget* budget = nullptr);

struct Mod2Result {
  Int det_interval;   // det S
  Int det_congruent;  // det S'
  bool holds;         // |det S'| >= |det S|
};

// Lemma pairing: S a {0,1} interval-column square matrix, sp integer with
// sp == S mod 2 entrywise. Throws std::invalid_argument when the pairing
// preconditions fail.
Mod2Result mod2_dominance(const ExactMat& s, const ExactMat& sp);

// --- column-subset enumeration ---------------------------------------------

// First k-combination {0,1,...,k-1}; empty for k == 0.
std::vector<int> first_combination(int k);

// Advances c to the next k-combination of {0..m-1} in lexicographic order.
// Returns false when c was the last one.
bool next_combination(std::vector<int>& c, int m);

// Lexicographic rank -> combination, for sharded minor enumeration.
std::vector<int> unrank_combination(int m, int k, Int rank);

// One ordered K-tuple of column choices (S_1,...,S_K): cols[k] indexes into
// the k-th factor matrix, strictly increasing within each block.
struct MinorSelection {
  std::vector<std::vector<int>> cols;
};

// All ordered K-tuples of column subsets, block-major lexicographic (the
// first block is the most significant digit, subsets within a block in
// lexicographic order). Random access by rank gives shard ranges that
// partition the space without shared iterator state.
class SelectionSpace {
 public:
  // col_counts[k] = number of columns of M_k, take[k] = n_k.
  SelectionSpace(std::vector<int> col_counts, std::vector<int> take);

  const Int& count() const { return count_; }
  MinorSelection at(Int rank) const;

  // In-place successor in enumeration order; false after the last element.
  bool advance(MinorSelection& sel) const;

 private:
  std::vector<int> col_counts_;
  std::vector<int> take_;
  std::vector<Int> block_counts_;
  Int count_;
};

}  // namespace polardet
