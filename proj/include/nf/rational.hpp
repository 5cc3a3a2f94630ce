// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace nf {

using BigInt = boost::multiprecision::mpz_int;
using BigRat = boost::multiprecision::mpq_rational;

// Always prints an explicit denominator, e.g. "3/1", "-5/2".
inline std::string rat_str(const BigRat& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

inline BigRat rat_pow(const BigRat& q, unsigned e) {
  BigRat r{1};
  for (unsigned i = 0; i < e; ++i) r *= q;
  return r;
}

// Complex number with exact rational components.
struct GaussRat {
  BigRat re{0};
  BigRat im{0};

  GaussRat() = default;
  GaussRat(long n) : re(n) {}  // NOLINT: implicit by design
  GaussRat(BigRat r) : re(std::move(r)) {}
  GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return {BigRat{0}, BigRat{1}}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  GaussRat conj() const { return {re, -im}; }
  BigRat norm() const { return re * re + im * im; }

  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    BigRat r = re * o.re - im * o.im;
    BigRat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero scalar");
    BigRat n = o.norm();
    BigRat r = (re * o.re + im * o.im) / n;
    BigRat i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  GaussRat inverse() const {
    GaussRat one{1};
    one /= *this;
    return one;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(GaussRat a) {
    a.re = -a.re;
    a.im = -a.im;
    return a;
  }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  std::string str() const;
};

inline std::string GaussRat::str() const {
  if (is_zero()) return "0";
  std::string s;
  if (re != 0) s = re.str();
  if (im != 0) {
    if (!s.empty() && im > 0) s += "+";
    if (im == 1)
      s += "i";
    else if (im == -1)
      s += "-i";
    else
      s += im.str() + "*i";
  }
  return s;
}

}  // namespace nf
