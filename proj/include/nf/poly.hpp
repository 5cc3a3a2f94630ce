// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nf/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nf {

using Expvec = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Expvec& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

// Graded lexicographic order, largest first, so map iteration starts at the
// leading term.
struct GradedLexDesc {
  bool operator()(const Expvec& a, const Expvec& b) const {
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse multivariate polynomial over GaussRat in a fixed number of
// variables.  Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<Expvec, GaussRat, GradedLexDesc>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly constant(int nvars, GaussRat c);
  static Poly variable(int nvars, int index);
  static Poly monomial(int nvars, Expvec e, GaussRat c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term; equals the whole polynomial iff is_constant().
  GaussRat constant_value() const;
  std::size_t num_terms() const { return terms_.size(); }
  std::uint64_t degree() const;  // total degree of the leading term, 0 for zero
  std::uint32_t degree_in(int var) const;

  const TermMap& terms() const { return terms_; }
  GaussRat coeff(const Expvec& e) const;
  void add_term(const Expvec& e, const GaussRat& c);  // fuses, erases zeros
  const Expvec& leading_exponent() const;             // poly must be nonzero
  const GaussRat& leading_coeff() const;              // poly must be nonzero

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const GaussRat& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
  Poly operator*(const Poly& o) const;  // dispatches to the multiply kernel
  Poly pow(unsigned e) const;
  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Substitutes rational values for the given variables; the ring keeps its
  // arity, the variables just stop appearing.
  Poly substituted(const std::map<int, BigRat>& values) const;
  GaussRat eval(const std::vector<GaussRat>& point) const;
  Poly with_nvars(int nvars) const;  // extend or shrink; shrink requires absence

  std::vector<int> support_vars() const;
  std::optional<Poly> divided_exact(const Poly& d) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  int nvars_;
  TermMap terms_;
};

// Canonical monic gcd (leading coefficient 1); gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace nf
