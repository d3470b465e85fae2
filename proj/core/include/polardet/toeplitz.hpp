#pragma once

#include "polardet/matrix.hpp"
#include "polardet/poly.hpp"

#include <optional>
#include <vector>

namespace polardet {

// The n x (n + deg f) banded matrix with entry(i,j) = coefficient of z^{j-i}
// in f (0-based). Constant along diagonals by construction.
struct RectToeplitz {
  SparsePoly source;
  int n = 0;
  int cols = 0;

  GaussianInt entry(int i, int j) const { return source.coeff_at(long(j) - i); }
  ExactMat to_mat() const;
};

RectToeplitz toeplitz_rect(const SparsePoly& f, int n);

// M * M^*, exact; hermitian with diagonal entries equal to the squared row
// norms (= sum_j |c_j|^2 for a rectangular Toeplitz factor).
ExactMat gram(const RectToeplitz& m);
ExactMat gram(const ExactMat& m);

// The n x n Toeplitz matrix of the symbol psi = sum_k t_k |f_k|^2:
// entry(i,j) = psi_hat(j-i) with psi_hat = sum_k t_k * autocorrelation(f_k).
RatMat toeplitz_symbol(const std::vector<SparsePoly>& fs,
                       const std::vector<Rat>& ts, int n);

// Witness of the first entrywise discrepancy between the symbol matrix and
// the weighted sum of Gram matrices; disengaged when they agree exactly.
struct DecompositionMismatch {
  int i = 0;
  int j = 0;
  GaussianRat lhs;
  GaussianRat rhs;
};

std::optional<DecompositionMismatch> assert_decomposition(
    const std::vector<SparsePoly>& fs, const std::vector<Rat>& ts, int n);

// Ordered list of (weight, Gram matrix) terms sharing dimension n, with the
// generating polynomial kept for reports.
struct GramSystem {
  struct Term {
    Rat weight;
    ExactMat a;
    SparsePoly source;
  };

  int n = 0;
  std::vector<Term> terms;

  // Gram matrices of the f_k themselves.
  static GramSystem build(const std::vector<SparsePoly>& fs,
                          const std::vector<Rat>& ts, int n);
  // Gram matrices of the term-count-matched Dirichlet kernels D_{N_k}.
  static GramSystem dirichlet_counterpart(const std::vector<SparsePoly>& fs,
                                          const std::vector<Rat>& ts, int n);

  RatMat weighted_sum() const;
  GaussianRat det() const;
};

}  // namespace polardet
