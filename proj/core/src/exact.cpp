#include "polardet/exact.hpp"

#include <boost/multiprecision/integer.hpp>

#include <stdexcept>
#include <utility>

namespace polardet {

namespace {

template <typename T>
T det_bareiss(Mat<T> a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) return T(1);
  int sign = 1;
  T prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i) {
      if (!a.at(i, k).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return T(0);
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a.at(i, j) =
            (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)).div_exact(prev);
      }
      a.at(i, k) = T(0);
    }
    prev = a.at(k, k);
  }
  T det = a.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

}  // namespace

GaussianInt det_exact(const ExactMat& a) {
  GaussianInt d = det_bareiss(a);
  if ((a.tag() == MatTag::hermitian || a.tag() == MatTag::gram) && d.im != 0) {
    throw std::domain_error("hermitian determinant with nonzero imaginary part: " +
                            d.str());
  }
  return d;
}

GaussianRat det_exact(const RatMat& a) {
  if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
  const int n = a.rows();
  // Scale to Gaussian integers, run the fraction-free kernel, undo the scale.
  Int scale = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const GaussianRat& z = a.at(i, j);
      scale = boost::multiprecision::lcm(scale, Int(denominator(z.re)));
      scale = boost::multiprecision::lcm(scale, Int(denominator(z.im)));
    }
  ExactMat b(n, n, a.tag());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const GaussianRat& z = a.at(i, j);
      b.at(i, j) = GaussianInt(Int(Rat(z.re * scale)), Int(Rat(z.im * scale)));
    }
  const GaussianInt d = det_exact(b);
  Rat denom = 1;
  for (int i = 0; i < n; ++i) denom *= scale;
  return {Rat(d.re) / denom, Rat(d.im) / denom};
}

bool is_interval_col(const ExactMat& m) {
  for (int j = 0; j < m.cols(); ++j) {
    int run_state = 0;  // 0: before run, 1: in run, 2: after run
    for (int i = 0; i < m.rows(); ++i) {
      const GaussianInt& e = m.at(i, j);
      if (!e.is_real() || (e.re != 0 && e.re != 1)) return false;
      if (e.re == 1) {
        if (run_state == 2) return false;
        run_state = 1;
      } else if (run_state == 1) {
        run_state = 2;
      }
    }
  }
  return true;
}

TuReport check_tu_minors(const ExactMat& m, Budget* budget) {
  if (!is_interval_col(m))
    throw std::invalid_argument("check_tu_minors: input is not interval-column");
  const int n = m.rows();
  TuReport report;
  if (n > m.cols()) return report;  // no maximal square minors
  std::vector<int> cols = first_combination(n);
  do {
    if (budget) budget->spend();
    ExactMat sub = m.select_columns(cols);
    const GaussianInt d = det_exact(sub);
    ++report.minors;
    if (d == GaussianInt(1)) ++report.plus_one;
    else if (d == GaussianInt(-1)) ++report.minus_one;
    else if (d.is_zero()) ++report.zero;
    else report.out_of_range.push_back({cols, d.str()});
  } while (next_combination(cols, m.cols()));
  return report;
}

Mod2Result mod2_dominance(const ExactMat& s, const ExactMat& sp) {
  if (!s.square() || !sp.square() || s.rows() != sp.rows())
    throw std::invalid_argument("mod2_dominance: dimension mismatch");
  if (!is_interval_col(s))
    throw std::invalid_argument("mod2_dominance: S is not interval-column");
  for (int i = 0; i < s.rows(); ++i)
    for (int j = 0; j < s.cols(); ++j) {
      if (!sp.at(i, j).is_real())
        throw std::invalid_argument("mod2_dominance: S' must have integer entries");
      if (!congruent_mod2(s.at(i, j), sp.at(i, j)))
        throw std::invalid_argument("mod2_dominance: S' != S mod 2 at (" +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    ")");
    }
  const GaussianInt ds = det_exact(s);
  const GaussianInt dsp = det_exact(sp);
  Mod2Result r;
  r.det_interval = ds.re;
  r.det_congruent = dsp.re;
  r.holds = boost::multiprecision::abs(r.det_congruent) >=
            boost::multiprecision::abs(r.det_interval);
  return r;
}

std::vector<int> first_combination(int k) {
  std::vector<int> c(size_t(k));
  for (int i = 0; i < k; ++i) c[size_t(i)] = i;
  return c;
}

bool next_combination(std::vector<int>& c, int m) {
  const int k = int(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[size_t(i)] < m - k + i) {
      ++c[size_t(i)];
      for (int j = i + 1; j < k; ++j) c[size_t(j)] = c[size_t(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> unrank_combination(int m, int k, Int rank) {
  if (rank < 0 || rank >= binomial(m, k))
    throw std::out_of_range("combination rank");
  std::vector<int> c;
  c.reserve(size_t(k));
  int lo = 0;
  for (int remaining = k; remaining > 0; --remaining) {
    for (int v = lo;; ++v) {
      const Int block = binomial(m - v - 1, remaining - 1);
      if (rank < block) {
        c.push_back(v);
        lo = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return c;
}

SelectionSpace::SelectionSpace(std::vector<int> col_counts, std::vector<int> take)
    : col_counts_(std::move(col_counts)), take_(std::move(take)) {
  if (col_counts_.size() != take_.size() || col_counts_.empty())
    throw std::invalid_argument("selection space: mismatched block lists");
  count_ = 1;
  for (size_t k = 0; k < take_.size(); ++k) {
    if (take_[k] < 0) throw std::invalid_argument("selection space: negative take");
    block_counts_.push_back(binomial(col_counts_[k], take_[k]));
    count_ *= block_counts_.back();
  }
}

MinorSelection SelectionSpace::at(Int rank) const {
  if (rank < 0 || rank >= count_) throw std::out_of_range("selection rank");
  const size_t K = take_.size();
  std::vector<Int> digits(K);
  for (size_t k = K; k-- > 0;) {
    digits[k] = rank % block_counts_[k];
    rank /= block_counts_[k];
  }
  MinorSelection sel;
  sel.cols.reserve(K);
  for (size_t k = 0; k < K; ++k)
    sel.cols.push_back(unrank_combination(col_counts_[k], take_[k], digits[k]));
  return sel;
}

bool SelectionSpace::advance(MinorSelection& sel) const {
  for (size_t k = take_.size(); k-- > 0;) {
    if (next_combination(sel.cols[k], col_counts_[k])) return true;
    sel.cols[k] = first_combination(take_[k]);
  }
  return false;
}

}  // namespace polardet
