// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nf/poly.hpp"

#include <string>

namespace nf {

// Rational function num/den in canonical form: gcd(num, den) = 1, den has
// leading coefficient 1, and den = 1 whenever num = 0.
class RatFn {
 public:
  RatFn() : num_(0), den_(Poly::constant(0, 1)) {}
  RatFn(long n) : RatFn(GaussRat(n)) {}  // NOLINT: implicit by design
  explicit RatFn(const GaussRat& c) : num_(Poly::constant(0, c)), den_(Poly::constant(0, 1)) {}
  explicit RatFn(Poly p) : num_(std::move(p)), den_(Poly::constant(num_.nvars(), 1)) { normalize(); }
  RatFn(Poly num, Poly den);  // reduces; throws on zero denominator

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_poly() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  GaussRat constant_value() const;  // requires is_constant()

  RatFn& operator+=(const RatFn& o);
  RatFn& operator-=(const RatFn& o);
  RatFn& operator*=(const RatFn& o);
  RatFn& operator/=(const RatFn& o);
  RatFn operator-() const;
  friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
  friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
  friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
  friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
  bool operator==(const RatFn& o) const;
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  RatFn inverse() const;
  RatFn conj() const;  // conjugates every scalar coefficient
  RatFn substituted(const std::map<int, BigRat>& values) const;
  GaussRat eval(const std::vector<GaussRat>& point) const;
  RatFn with_nvars(int nvars) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  void normalize();
  // Promotes constants so mixed-arity arithmetic works.
  static void align(RatFn& a, RatFn& b);

  Poly num_, den_;
};

}  // namespace nf
