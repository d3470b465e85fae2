#include "polardet/gaussian.hpp"

#include <cctype>
#include <stdexcept>

namespace polardet {

GaussianInt GaussianInt::div_exact(const GaussianInt& d) const {
  if (d.is_zero()) throw std::domain_error("gaussian division by zero");
  // this / d = this * conj(d) / |d|^2, componentwise exact.
  const Int n2 = d.norm2();
  const GaussianInt num = *this * d.conj();
  if (num.re % n2 != 0 || num.im % n2 != 0) {
    throw std::domain_error("inexact gaussian division: (" + str() + ")/(" +
                            d.str() + ")");
  }
  return {num.re / n2, num.im / n2};
}

std::string GaussianInt::str() const {
  if (im == 0) return re.str();
  std::string s = re.str();
  s += im < 0 ? "-" : "+";
  s += boost::multiprecision::abs(im).str();
  s += "i";
  return s;
}

GaussianRat GaussianRat::div_exact(const GaussianRat& d) const {
  if (d.is_zero()) throw std::domain_error("gaussian division by zero");
  const Rat n2 = d.norm2();
  GaussianRat num = *this * d.conj();
  num.re /= n2;
  num.im /= n2;
  return num;
}

std::string GaussianRat::str() const {
  if (im == 0) return rational_str(re);
  std::string s = rational_str(re);
  s += im < 0 ? "-" : "+";
  s += rational_str(boost::multiprecision::abs(im));
  s += "i";
  return s;
}

namespace {

// Scans [pos, end) for an optionally signed integer literal.
bool scan_int(const std::string& s, size_t& pos, Int& out) {
  size_t p = pos;
  bool neg = false;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
    neg = s[p] == '-';
    ++p;
  }
  size_t digits = p;
  while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
  if (p == digits) return false;
  out = Int(s.substr(digits, p - digits));
  if (neg) out = -out;
  pos = p;
  return true;
}

}  // namespace

GaussianInt parse_gaussian(const std::string& text) {
  std::string s = text;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
    s = s.substr(1, s.size() - 2);
  }
  if (s.empty()) throw std::invalid_argument("empty gaussian literal");

  const auto fail = [&]() -> GaussianInt {
    throw std::invalid_argument("not a gaussian integer: '" + text + "'");
  };

  // Forms: "a", "bi", "a+bi" where b may be an implicit 1 ("i", "-i", "a+i").
  size_t pos = 0;
  Int first = 0;
  bool have_first_int = scan_int(s, pos, first);
  if (!have_first_int) {
    // "i" or "-i"
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      neg = s[pos] == '-';
      ++pos;
    }
    if (pos + 1 != s.size() || s[pos] != 'i') return fail();
    return {Int(0), Int(neg ? -1 : 1)};
  }
  if (pos == s.size()) return {first, Int(0)};
  if (s[pos] == 'i') {
    if (pos + 1 != s.size()) return fail();
    return {Int(0), first};
  }
  if (s[pos] != '+' && s[pos] != '-') return fail();
  const bool neg_im = s[pos] == '-';
  ++pos;
  Int second = 1;
  scan_int(s, pos, second);  // may be implicit 1 as in "1+i"
  if (second < 0 || pos + 1 != s.size() || s[pos] != 'i') return fail();
  return {first, neg_im ? Int(-second) : second};
}

}  // namespace polardet
