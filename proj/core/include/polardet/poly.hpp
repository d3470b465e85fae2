#pragma once

#include "polardet/gaussian.hpp"

#include <map>
#include <string>
#include <vector>

namespace polardet {

enum class FamilyTag { littlewood, dirichlet, gapped };

// Polynomial c_0 + c_1 z^{m_1} + ... + c_{N-1} z^{m_{N-1}} with strictly
// increasing nonnegative support starting at 0 and nonzero Gaussian-integer
// coefficients.
struct SparsePoly {
  std::vector<long> support;
  std::vector<GaussianInt> coeffs;
  FamilyTag family = FamilyTag::gapped;

  int terms() const { return int(support.size()); }  // N
  long degree() const { return support.back(); }

  // Coefficient of z^e (zero off the support).
  GaussianInt coeff_at(long e) const;

  // Throws std::invalid_argument when a family invariant is broken:
  // support[0] != 0, unsorted support, a zero coefficient, non-(+-1)
  // coefficients under the littlewood tag, non-one coefficients or gaps under
  // the dirichlet tag.
  void validate() const;

  // Text format, e.g. "1+z-z^3" or "1+(0+1i)z^2". parse() round-trips str()
  // bit-exactly.
  std::string str() const;
  static SparsePoly parse(const std::string& text);

  bool operator==(const SparsePoly& o) const {
    return support == o.support && coeffs == o.coeffs;
  }
};

// 1 + z + ... + z^{N-1}. Throws on N < 1.
SparsePoly dirichlet(int N);

// All sign patterns over L(N) with c_0 = +1 (2^{N-1} polynomials; -f is
// redundant since |f| = |-f| on the circle). Order: the signs of
// (c_1,...,c_{N-1}) run as a binary counter with c_{N-1} the fastest digit
// and bit 0 mapping to +1. Random access by rank keeps shards and resumed
// runs deterministic without shared iterator state.
class LittlewoodRange {
 public:
  explicit LittlewoodRange(int N);

  Int count() const { return count_; }
  SparsePoly at(const Int& rank) const;

  int N() const { return n_terms_; }

 private:
  int n_terms_;
  Int count_;
};

// Gapped-family enumeration: support {0, m_1 < ... < m_{N-1}} within
// [0, max_degree], c_0 = +1, remaining coefficients drawn from coeff_set
// (order given = enumeration order). Rank order is support-major: supports in
// lexicographic (combinadic) order, then coefficients as a base-|coeff_set|
// counter with the last coefficient fastest.
class GappedRange {
 public:
  // Throws std::invalid_argument if some coefficient has |c|^2 < 1 (not an
  // L~ member) or N-1 > max_degree.
  GappedRange(int N, int max_degree, std::vector<GaussianInt> coeff_set);

  Int count() const { return count_; }
  SparsePoly at(Int rank) const;

  int N() const { return n_terms_; }
  int max_degree() const { return max_degree_; }
  const std::vector<GaussianInt>& coeff_set() const { return coeff_set_; }

 private:
  int n_terms_;
  int max_degree_;
  std::vector<GaussianInt> coeff_set_;
  Int count_;
};

// Fourier coefficients of |f|^2: lag m -> sum_j c_{j+m} * conj(c_j), keyed by
// exponent difference. Hermitian: value(-m) == conj(value(m)). Only nonzero
// lags appear.
std::map<long, GaussianInt> autocorrelation(const SparsePoly& f);

}  // namespace polardet
