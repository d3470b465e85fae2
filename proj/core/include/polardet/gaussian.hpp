#pragma once

#include "polardet/bigint.hpp"

#include <complex>
#include <string>

namespace polardet {

// Gaussian integer re + im*i with arbitrary-precision components. All
// arithmetic is exact; |z|^2 is an exact nonnegative Int.
struct GaussianInt {
  Int re;
  Int im;

  GaussianInt() : re(0), im(0) {}
  GaussianInt(Int r) : re(std::move(r)), im(0) {}  // NOLINT: implicit by design
  GaussianInt(long r) : re(r), im(0) {}            // NOLINT
  GaussianInt(int r) : re(r), im(0) {}             // NOLINT
  GaussianInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianInt conj() const { return {re, -im}; }
  Int norm2() const { return re * re + im * im; }

  GaussianInt& operator+=(const GaussianInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianInt& operator-=(const GaussianInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianInt& operator*=(const GaussianInt& o) {
    Int r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  GaussianInt operator-() const { return {-re, -im}; }
  bool operator==(const GaussianInt& o) const = default;

  // Quotient in Z[i]; throws std::domain_error if d does not divide *this.
  // The fraction-free determinant relies on these divisions being exact.
  GaussianInt div_exact(const GaussianInt& d) const;

  // Canonical "a+bi" (e.g. "3", "-1+2i", "0-1i"); real values print plain.
  std::string str() const;

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

inline GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
inline GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
inline GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }

// a == b mod 2, componentwise.
inline bool congruent_mod2(const GaussianInt& a, const GaussianInt& b) {
  return (a.re - b.re) % 2 == 0 && (a.im - b.im) % 2 == 0;
}

// Gaussian rational, the field of fractions of GaussianInt. Used where exact
// rational weights t_k multiply integer Gram matrices.
struct GaussianRat {
  Rat re;
  Rat im;

  GaussianRat() : re(0), im(0) {}
  GaussianRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT
  GaussianRat(int r) : re(r), im(0) {}             // NOLINT
  GaussianRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussianRat(const GaussianInt& z) : re(z.re), im(z.im) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussianRat conj() const { return {re, -im}; }
  Rat norm2() const { return re * re + im * im; }

  GaussianRat& operator+=(const GaussianRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRat& operator-=(const GaussianRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRat& operator*=(const GaussianRat& o) {
    Rat r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }

  GaussianRat operator-() const { return {-re, -im}; }
  bool operator==(const GaussianRat& o) const = default;

  // Field division (throws std::domain_error on zero divisor). Named like the
  // integer counterpart so the elimination kernel works over either scalar.
  GaussianRat div_exact(const GaussianRat& d) const;

  std::string str() const;

  std::complex<double> to_complex() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }
};

inline GaussianRat operator+(GaussianRat a, const GaussianRat& b) { return a += b; }
inline GaussianRat operator-(GaussianRat a, const GaussianRat& b) { return a -= b; }
inline GaussianRat operator*(GaussianRat a, const GaussianRat& b) { return a *= b; }

// Parses the coefficient grammar used by the polynomial text format:
// "3", "-1", "i", "-i", "2i", "1+2i", "-1-1i", and any of those wrapped in
// parentheses. Throws std::invalid_argument on anything else.
GaussianInt parse_gaussian(const std::string& text);

}  // namespace polardet
