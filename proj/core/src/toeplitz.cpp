#include "polardet/toeplitz.hpp"

#include "polardet/exact.hpp"

#include <stdexcept>

namespace polardet {

ExactMat RectToeplitz::to_mat() const {
  ExactMat m(n, cols);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = entry(i, j);
  return m;
}

RectToeplitz toeplitz_rect(const SparsePoly& f, int n) {
  if (n < 1) throw std::invalid_argument("toeplitz_rect: n >= 1 required");
  f.validate();
  RectToeplitz t;
  t.source = f;
  t.n = n;
  t.cols = n + int(f.degree());
  return t;
}

ExactMat gram(const ExactMat& m) {
  ExactMat a(m.rows(), m.rows(), MatTag::gram);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.rows(); ++j) {
      GaussianInt s;
      for (int l = 0; l < m.cols(); ++l) s += m.at(i, l) * m.at(j, l).conj();
      a.at(i, j) = std::move(s);
    }
  return a;
}

ExactMat gram(const RectToeplitz& m) { return gram(m.to_mat()); }

RatMat toeplitz_symbol(const std::vector<SparsePoly>& fs,
                       const std::vector<Rat>& ts, int n) {
  if (fs.empty() || fs.size() != ts.size())
    throw std::invalid_argument("toeplitz_symbol: empty or mismatched families");
  if (n < 1) throw std::invalid_argument("toeplitz_symbol: n >= 1 required");
  std::map<long, GaussianRat> symbol;
  for (size_t k = 0; k < fs.size(); ++k) {
    for (const auto& [lag, value] : autocorrelation(fs[k])) {
      GaussianRat term(value);
      term.re *= ts[k];
      term.im *= ts[k];
      symbol[lag] += term;
    }
  }
  RatMat t(n, n, MatTag::hermitian);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto it = symbol.find(long(j) - i);
      if (it != symbol.end()) t.at(i, j) = it->second;
    }
  return t;
}

std::optional<DecompositionMismatch> assert_decomposition(
    const std::vector<SparsePoly>& fs, const std::vector<Rat>& ts, int n) {
  const RatMat lhs = toeplitz_symbol(fs, ts, n);
  const RatMat rhs = GramSystem::build(fs, ts, n).weighted_sum();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(lhs.at(i, j) == rhs.at(i, j)))
        return DecompositionMismatch{i, j, lhs.at(i, j), rhs.at(i, j)};
  return std::nullopt;
}

GramSystem GramSystem::build(const std::vector<SparsePoly>& fs,
                             const std::vector<Rat>& ts, int n) {
  if (fs.empty() || fs.size() != ts.size())
    throw std::invalid_argument("gram system: empty or mismatched families");
  GramSystem g;
  g.n = n;
  for (size_t k = 0; k < fs.size(); ++k) {
    if (ts[k] < 0) throw std::invalid_argument("gram system: negative weight");
    g.terms.push_back({ts[k], gram(toeplitz_rect(fs[k], n)), fs[k]});
  }
  return g;
}

GramSystem GramSystem::dirichlet_counterpart(const std::vector<SparsePoly>& fs,
                                             const std::vector<Rat>& ts, int n) {
  std::vector<SparsePoly> ds;
  ds.reserve(fs.size());
  for (const auto& f : fs) ds.push_back(dirichlet(f.terms()));
  return build(ds, ts, n);
}

RatMat GramSystem::weighted_sum() const {
  RatMat sum(n, n, MatTag::gram);
  for (const auto& term : terms) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        GaussianRat v(term.a.at(i, j));
        v.re *= term.weight;
        v.im *= term.weight;
        sum.at(i, j) += v;
      }
  }
  return sum;
}

GaussianRat GramSystem::det() const { return det_exact(weighted_sum()); }

}  // namespace polardet
