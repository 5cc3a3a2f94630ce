// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nf/ratfn.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nf {

// Basis families of the coefficient algebra: E scales the radial (Euler)
// field, Theta1/Theta2 scale the rotation of the first/second plane.  The
// indices (m, n) are the exponents of the ring invariants x1^2+y1^2 and
// x2^2+y2^2 multiplying the field.
enum class Family : std::uint8_t { E = 0, Theta1 = 1, Theta2 = 2 };

struct BasisElem {
  Family fam = Family::E;
  int m = 0;
  int n = 0;

  static BasisElem E(int m, int n);
  static BasisElem T1(int m, int n);
  static BasisElem T2(int m, int n);

  int index_sum() const { return m + n; }
  bool is_rotational() const { return fam != Family::E; }

  friend bool operator==(const BasisElem& a, const BasisElem& b) {
    return a.fam == b.fam && a.m == b.m && a.n == b.n;
  }
  friend bool operator!=(const BasisElem& a, const BasisElem& b) { return !(a == b); }
  // Storage order: index sum, then family, then second index ascending.
  friend bool operator<(const BasisElem& a, const BasisElem& b) {
    if (a.index_sum() != b.index_sum()) return a.index_sum() < b.index_sum();
    if (a.fam != b.fam) return a.fam < b.fam;
    return a.n < b.n;
  }

  std::string str() const;  // "E[m,n]", "T1[m,n]", "T2[m,n]"
};

// Grade bookkeeping for one normalization stage.  E[m,n] has grade m+n;
// rotational terms are shifted by thetaOffset; every unit of parameter degree
// adds muWeight.
struct Grading {
  int thetaOffset = 0;
  int muWeight = 0;
};

int grade_of(const BasisElem& b, const Grading& g, int muDegree = 0);

// Elimination/display order: grade first (lower grades precede), then E
// before Theta1 before Theta2, then second index ascending.
bool stage_less(const BasisElem& a, const BasisElem& b, const Grading& g);

// Sparse vector in the span of the basis families, with rational-function
// coefficients.  Zero coefficients are never stored.
class LVec {
 public:
  using TermMap = std::map<BasisElem, RatFn>;

  LVec() = default;
  static LVec term(const BasisElem& b, RatFn c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  RatFn coeff(const BasisElem& b) const;
  void add_term(const BasisElem& b, const RatFn& c);  // fuses; drops zeros
  void set_term(const BasisElem& b, RatFn c);         // overwrites; drops zeros
  void erase_term(const BasisElem& b);

  LVec& operator+=(const LVec& o);
  LVec& operator-=(const LVec& o);
  LVec& operator*=(const RatFn& c);
  LVec operator-() const;
  friend LVec operator+(LVec a, const LVec& b) { return a += b; }
  friend LVec operator-(LVec a, const LVec& b) { return a -= b; }
  friend LVec operator*(LVec a, const RatFn& c) { return a *= c; }
  bool operator==(const LVec& o) const;
  bool operator!=(const LVec& o) const { return !(*this == o); }

  std::string str(const std::vector<std::string>& names) const;

 private:
  TermMap terms_;
};

// Element of the time-rescaling ring: a finite sum of c_{m,n} Z[m,n], where
// Z[m,n] is the ring monomial (x1^2+y1^2)^m (x2^2+y2^2)^n.
class TimeGen {
 public:
  using TermMap = std::map<std::pair<int, int>, RatFn>;

  TimeGen() = default;
  static TimeGen term(int m, int n, RatFn c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  RatFn coeff(int m, int n) const;
  void add_term(int m, int n, const RatFn& c);

  TimeGen& operator+=(const TimeGen& o);
  TimeGen& operator-=(const TimeGen& o);
  TimeGen& operator*=(const RatFn& c);
  TimeGen operator-() const;
  TimeGen operator*(const TimeGen& o) const;  // ring product: indices add
  friend TimeGen operator+(TimeGen a, const TimeGen& b) { return a += b; }
  friend TimeGen operator-(TimeGen a, const TimeGen& b) { return a -= b; }
  friend TimeGen operator*(TimeGen a, const RatFn& c) { return a *= c; }
  bool operator==(const TimeGen& o) const;
  bool operator!=(const TimeGen& o) const { return !(*this == o); }

  std::string str(const std::vector<std::string>& names) const;

 private:
  TermMap terms_;
};

// Lie bracket, extended bilinearly from the structure constants
//   [Theta^i[m,n], Theta^j[k,l]] = 0,
//   [Theta^i[m,n], E[k,l]]       = 2(m+n)   Theta^i[m+k,n+l],
//   [E[m,n],       E[k,l]]       = 2(m+n-k-l) E[m+k,n+l].
LVec bracket(const LVec& u, const LVec& w);

// Module action of the time-rescaling ring: Z[m,n] shifts both indices of
// every basis family, extended bilinearly.
LVec rescale_action(const TimeGen& t, const LVec& v);

// Action of a (time, state) generator pair: t*v + [s, v].  A rotational
// constant term in s acts trivially and signals a bookkeeping error, so it is
// rejected unless `parametric` is set (then the caller guarantees its
// parameter-free part vanishes).
LVec combined_action(const TimeGen& t, const LVec& s, const LVec& v, bool parametric = false);

LVec project_radical(const LVec& v);   // rotational terms only
LVec project_quotient(const LVec& v);  // E terms only

// Terms of grade exactly k.  When firstParamVar >= 0 and g.muWeight > 0,
// coefficients are split by parameter degree, so a single stored term can
// contribute to several grades; denominators must then be parameter-free.
LVec graded_part(const LVec& v, int k, const Grading& g, int firstParamVar = -1);

// Terms of grade <= maxGrade (same parameter-splitting rules as graded_part).
// Dropping higher-grade terms is always this explicit operation.
LVec truncated(const LVec& v, int maxGrade, const Grading& g, int firstParamVar = -1);

// Largest grade present in v (0 for the zero vector).
int max_grade(const LVec& v, const Grading& g, int firstParamVar = -1);

// Parameter-block helpers: variable slots >= first hold unfolding parameters.
int param_degree(const Expvec& e, int first);
bool poly_param_free(const Poly& p, int first);
bool ratfn_param_free(const RatFn& f, int first);
// Terms of parameter degree exactly d; the denominator must be parameter-free.
RatFn ratfn_param_slice(const RatFn& f, int first, int d);
int ratfn_param_max_degree(const RatFn& f, int first);

}  // namespace nf
