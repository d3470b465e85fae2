#include "polardet/mixed.hpp"

#include <nlohmann/json.hpp>

#include <numeric>
#include <stdexcept>

namespace polardet {

const GaussianInt& GammaTable::at(const std::vector<int>& idx) const {
  auto it = entries.find(idx);
  if (it == entries.end()) throw std::out_of_range("gamma table: unknown index");
  return it->second;
}

GaussianRat GammaTable::evaluate(const std::vector<Rat>& ts) const {
  if (int(ts.size()) != K)
    throw std::invalid_argument("gamma table: weight count != K");
  GaussianRat total;
  for (const auto& [idx, value] : entries) {
    Rat mono = 1;
    for (int k = 0; k < K; ++k)
      for (int p = 0; p < idx[size_t(k)]; ++p) mono *= ts[size_t(k)];
    GaussianRat term(value);
    term.re *= mono;
    term.im *= mono;
    total += term;
  }
  return total;
}

std::string GammaTable::to_json() const {
  nlohmann::ordered_json entries_json;
  for (const auto& [idx, value] : entries) {
    std::string key;
    for (size_t k = 0; k < idx.size(); ++k) {
      if (k) key += ',';
      key += std::to_string(idx[k]);
    }
    entries_json[key] = value.str();
  }
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["K"] = K;
  doc["entries"] = std::move(entries_json);
  return doc.dump();
}

Int gamma_binet_cauchy(const std::vector<ExactMat>& factors,
                       const std::vector<int>& idx, Budget* budget) {
  if (factors.empty() || factors.size() != idx.size())
    throw std::invalid_argument("gamma: factor/index count mismatch");
  const int n = std::accumulate(idx.begin(), idx.end(), 0);
  std::vector<int> col_counts;
  for (const auto& m : factors) {
    if (m.rows() != n)
      throw std::invalid_argument("gamma: factor row count != sum of indices");
    col_counts.push_back(m.cols());
  }
  for (int k : idx)
    if (k < 0) throw std::invalid_argument("gamma: negative index");

  const SelectionSpace space(col_counts, idx);
  if (space.count() == 0) return 0;  // empty sum by convention

  Int total = 0;
  MinorSelection sel = space.at(0);
  do {
    if (budget) budget->spend();
    ExactMat block(n, n);
    int offset = 0;
    for (size_t k = 0; k < factors.size(); ++k) {
      for (size_t c = 0; c < sel.cols[k].size(); ++c)
        for (int i = 0; i < n; ++i)
          block.at(i, offset + int(c)) = factors[k].at(i, sel.cols[k][c]);
      offset += int(sel.cols[k].size());
    }
    total += det_exact(block).norm2();
  } while (space.advance(sel));
  return total;
}

Int gamma_binet_cauchy(const std::vector<RectToeplitz>& factors,
                       const std::vector<int>& idx, Budget* budget) {
  std::vector<ExactMat> ms;
  ms.reserve(factors.size());
  for (const auto& f : factors) ms.push_back(f.to_mat());
  return gamma_binet_cauchy(ms, idx, budget);
}

GammaTable gamma_multilinear(const std::vector<ExactMat>& as, Budget* budget) {
  if (as.empty()) throw std::invalid_argument("gamma table: no matrices");
  const int K = int(as.size());
  const int n = as[0].rows();
  for (const auto& a : as)
    if (!a.square() || a.rows() != n)
      throw std::invalid_argument("gamma table: matrices must share dimension n");

  GammaTable table;
  table.n = n;
  table.K = K;

  // Seed every composition of n into K parts so structural zeros are visible.
  std::vector<int> idx(size_t(K), 0);
  const auto seed = [&](auto&& self, int slot, int left) -> void {
    if (slot == K - 1) {
      idx[size_t(slot)] = left;
      table.entries.emplace(idx, GaussianInt(0));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      idx[size_t(slot)] = v;
      self(self, slot + 1, left - v);
    }
  };
  seed(seed, 0, n);

  // K^n column assignments, odometer order with column n-1 fastest.
  std::vector<int> assign(size_t(n), 0);
  std::vector<int> counts(size_t(K));
  for (;;) {
    if (budget) budget->spend();
    ExactMat m(n, n);
    std::fill(counts.begin(), counts.end(), 0);
    for (int j = 0; j < n; ++j) {
      const ExactMat& src = as[size_t(assign[size_t(j)])];
      ++counts[size_t(assign[size_t(j)])];
      for (int i = 0; i < n; ++i) m.at(i, j) = src.at(i, j);
    }
    table.entries[counts] += det_exact(m);

    int j = n - 1;
    while (j >= 0 && assign[size_t(j)] == K - 1) assign[size_t(j--)] = 0;
    if (j < 0) break;
    ++assign[size_t(j)];
  }
  return table;
}

Rat mixed_discriminant(const std::vector<ExactMat>& as, Budget* budget) {
  if (as.empty()) throw std::invalid_argument("mixed discriminant: no matrices");
  const int n = as[0].rows();
  if (int(as.size()) != n)
    throw std::invalid_argument("mixed discriminant: needs exactly n matrices");
  for (const auto& a : as)
    if (!a.square() || a.rows() != n)
      throw std::invalid_argument("mixed discriminant: dimension mismatch");

  GaussianInt acc;
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    if (budget) budget->spend();
    ExactMat sum(n, n);
    int bits = 0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        sum += as[size_t(i)];
        ++bits;
      }
    }
    const GaussianInt d = det_bareiss_dispatch(sum);
    if ((n - bits) % 2 == 0) acc += d;
    else acc -= d;
  }
  if (acc.im != 0)
    throw std::domain_error(
        "mixed discriminant: non-real alternating sum (non-hermitian inputs?)");
  return Rat(acc.re) / Rat(factorial(n));
}

Rat gamma_from_mixed(const std::vector<ExactMat>& as, const std::vector<int>& idx,
                     Budget* budget) {
  if (as.size() != idx.size())
    throw std::invalid_argument("gamma: matrix/index count mismatch");
  const int n = std::accumulate(idx.begin(), idx.end(), 0);
  std::vector<ExactMat> slots;
  slots.reserve(size_t(n));
  Int denom = 1;
  for (size_t k = 0; k < as.size(); ++k) {
    if (idx[k] < 0) throw std::invalid_argument("gamma: negative index");
    denom *= factorial(idx[k]);
    for (int r = 0; r < idx[k]; ++r) slots.push_back(as[k]);
  }
  const Rat d = mixed_discriminant(slots, budget);
  return d * Rat(factorial(n)) / Rat(denom);
}

}  // namespace polardet
