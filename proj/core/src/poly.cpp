#include "polardet/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace polardet {

GaussianInt SparsePoly::coeff_at(long e) const {
  auto it = std::lower_bound(support.begin(), support.end(), e);
  if (it == support.end() || *it != e) return GaussianInt(0);
  return coeffs[size_t(it - support.begin())];
}

void SparsePoly::validate() const {
  if (support.empty() || support.size() != coeffs.size())
    throw std::invalid_argument("poly: empty or mismatched support/coeffs");
  if (support.front() != 0)
    throw std::invalid_argument("poly: constant term must be present");
  for (size_t i = 1; i < support.size(); ++i)
    if (support[i] <= support[i - 1])
      throw std::invalid_argument("poly: support not strictly increasing");
  for (const auto& c : coeffs)
    if (c.is_zero()) throw std::invalid_argument("poly: zero coefficient");

  switch (family) {
    case FamilyTag::littlewood:
      if (support.back() != long(support.size()) - 1)
        throw std::invalid_argument("littlewood: support must be contiguous");
      for (const auto& c : coeffs)
        if (!c.is_real() || (c.re != 1 && c.re != -1))
          throw std::invalid_argument("littlewood: coefficients must be +-1");
      break;
    case FamilyTag::dirichlet:
      if (support.back() != long(support.size()) - 1)
        throw std::invalid_argument("dirichlet: support must be contiguous");
      for (const auto& c : coeffs)
        if (!(c == GaussianInt(1)))
          throw std::invalid_argument("dirichlet: coefficients must be 1");
      break;
    case FamilyTag::gapped:
      for (const auto& c : coeffs)
        if (c.norm2() < 1)
          throw std::invalid_argument("gapped: |c|^2 >= 1 required");
      break;
  }
}

namespace {

void append_term(std::string& out, const GaussianInt& c, long e) {
  const bool first = out.empty();
  std::string coeff_text;
  if (c.is_real()) {
    Int a = c.re;
    bool neg = a < 0;
    if (neg) a = -a;
    if (!first) out += neg ? "-" : "+";
    else if (neg) out += "-";
    if (a != 1 || e == 0) coeff_text = a.str();
  } else {
    if (!first) out += "+";
    coeff_text = "(" + c.str() + ")";
  }
  out += coeff_text;
  if (e == 1) out += "z";
  else if (e > 1) out += "z^" + std::to_string(e);
}

FamilyTag infer_family(const SparsePoly& p) {
  const bool contiguous = p.support.back() == long(p.support.size()) - 1;
  if (contiguous) {
    bool all_one = true, all_pm1 = true;
    for (const auto& c : p.coeffs) {
      if (!(c == GaussianInt(1))) all_one = false;
      if (!c.is_real() || (c.re != 1 && c.re != -1)) all_pm1 = false;
    }
    if (all_one) return FamilyTag::dirichlet;
    if (all_pm1) return FamilyTag::littlewood;
  }
  return FamilyTag::gapped;
}

}  // namespace

std::string SparsePoly::str() const {
  std::string out;
  for (size_t i = 0; i < support.size(); ++i) append_term(out, coeffs[i], support[i]);
  return out;
}

SparsePoly SparsePoly::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty polynomial text");
  std::vector<std::pair<long, GaussianInt>> terms;
  size_t pos = 0;
  const auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("polynomial '" + text + "': " + why);
  };

  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      if (pos == text.size()) fail("dangling sign");
    } else if (pos != 0) {
      fail("missing term separator");
    }

    GaussianInt coeff(1);
    bool saw_coeff = false;
    if (pos < text.size() && text[pos] == '(') {
      const size_t close = text.find(')', pos);
      if (close == std::string::npos) fail("unbalanced parenthesis");
      coeff = parse_gaussian(text.substr(pos, close - pos + 1));
      pos = close + 1;
      saw_coeff = true;
    } else {
      size_t digits = pos;
      while (digits < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[digits])))
        ++digits;
      if (digits > pos) {
        coeff = GaussianInt(Int(text.substr(pos, digits - pos)));
        pos = digits;
        saw_coeff = true;
      }
    }

    long expo = 0;
    if (pos < text.size() && text[pos] == 'z') {
      ++pos;
      expo = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        size_t digits = pos;
        while (digits < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[digits])))
          ++digits;
        if (digits == pos) fail("missing exponent after '^'");
        expo = std::stol(text.substr(pos, digits - pos));
        pos = digits;
      }
    } else if (!saw_coeff) {
      fail("expected coefficient or z");
    }

    if (sign < 0) coeff = -coeff;
    terms.emplace_back(expo, coeff);
  }

  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < terms.size(); ++i)
    if (terms[i].first == terms[i - 1].first) fail("duplicate exponent");

  SparsePoly p;
  for (auto& [e, c] : terms) {
    p.support.push_back(e);
    p.coeffs.push_back(std::move(c));
  }
  p.family = infer_family(p);
  p.validate();
  return p;
}

SparsePoly dirichlet(int N) {
  if (N < 1) throw std::invalid_argument("dirichlet: N >= 1 required");
  SparsePoly p;
  p.family = FamilyTag::dirichlet;
  for (int j = 0; j < N; ++j) {
    p.support.push_back(j);
    p.coeffs.emplace_back(1);
  }
  return p;
}

LittlewoodRange::LittlewoodRange(int N) : n_terms_(N) {
  if (N < 1) throw std::invalid_argument("littlewood: N >= 1 required");
  count_ = Int(1) << (N - 1);
}

SparsePoly LittlewoodRange::at(const Int& rank) const {
  if (rank < 0 || rank >= count_) throw std::out_of_range("littlewood rank");
  SparsePoly p;
  p.family = FamilyTag::littlewood;
  p.support.resize(size_t(n_terms_));
  p.coeffs.resize(size_t(n_terms_), GaussianInt(1));
  for (int j = 0; j < n_terms_; ++j) p.support[size_t(j)] = j;
  // c_j reads bit (N-1-j) of the rank: the sign tuple is a binary counter
  // with c_{N-1} the fastest digit, 0 -> +1.
  for (int j = 1; j < n_terms_; ++j) {
    if (boost::multiprecision::bit_test(rank, unsigned(n_terms_ - 1 - j)))
      p.coeffs[size_t(j)] = GaussianInt(-1);
  }
  return p;
}

GappedRange::GappedRange(int N, int max_degree, std::vector<GaussianInt> coeff_set)
    : n_terms_(N), max_degree_(max_degree), coeff_set_(std::move(coeff_set)) {
  if (N < 1) throw std::invalid_argument("gapped: N >= 1 required");
  if (N - 1 > max_degree)
    throw std::invalid_argument("gapped: N-1 exceeds max_degree");
  if (coeff_set_.empty() && N > 1)
    throw std::invalid_argument("gapped: empty coefficient set");
  for (const auto& c : coeff_set_)
    if (c.norm2() < 1)
      throw std::invalid_argument("gapped: coefficient with |c|^2 < 1");
  count_ = binomial(max_degree, N - 1);
  for (int j = 1; j < N; ++j) count_ *= Int(coeff_set_.size());
}

SparsePoly GappedRange::at(Int rank) const {
  if (rank < 0 || rank >= count_) throw std::out_of_range("gapped rank");
  const int k = n_terms_ - 1;
  // Split rank: support index is the high part, coefficient counter the low.
  Int coeff_space = 1;
  for (int j = 0; j < k; ++j) coeff_space *= Int(coeff_set_.size());
  Int support_rank = rank / coeff_space;
  Int coeff_rank = rank % coeff_space;

  SparsePoly p;
  p.family = FamilyTag::gapped;
  p.support.push_back(0);
  p.coeffs.emplace_back(1);

  // Unrank the k-subset of {1..max_degree} in lexicographic order.
  long lo = 1;
  for (int remaining = k; remaining > 0; --remaining) {
    for (long v = lo;; ++v) {
      const Int block = binomial(int(max_degree_ - v), remaining - 1);
      if (support_rank < block) {
        p.support.push_back(v);
        lo = v + 1;
        break;
      }
      support_rank -= block;
    }
  }

  // Coefficients as a base-|coeff_set| counter, last coefficient fastest.
  const Int base(coeff_set_.size());
  std::vector<size_t> digit(size_t(k), 0);
  for (int j = k - 1; j >= 0; --j) {
    digit[size_t(j)] = size_t(coeff_rank % base);
    coeff_rank /= base;
  }
  for (int j = 0; j < k; ++j) p.coeffs.push_back(coeff_set_[digit[size_t(j)]]);
  return p;
}

std::map<long, GaussianInt> autocorrelation(const SparsePoly& f) {
  std::map<long, GaussianInt> acc;
  const size_t n = f.support.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      acc[f.support[a] - f.support[b]] += f.coeffs[a] * f.coeffs[b].conj();
  for (auto it = acc.begin(); it != acc.end();) {
    if (it->second.is_zero()) it = acc.erase(it);
    else ++it;
  }
  return acc;
}

}  // namespace polardet
