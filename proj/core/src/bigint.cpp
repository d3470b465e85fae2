#include "polardet/bigint.hpp"

#include <cctype>
#include <stdexcept>

namespace polardet {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  std::string num = s;
  std::string den = "1";
  if (auto pos = s.find('/'); pos != std::string::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  Int q(den);
  if (q == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rat r(Int(num), q);
  return negative ? Rat(-r) : r;
}

std::string rational_str(const Rat& value) {
  return value.str();  // cpp_rational keeps lowest terms; prints "p" or "p/q"
}

Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact at every step
  }
  return r;
}

}  // namespace polardet
