// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nf/lie.hpp"
#include "nf/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nf {

// A detection result that is either an exact value or an admission that no
// witness was found below the truncation bound.  The unresolved state is
// never promoted to a proven infinity.
class ExtNat {
 public:
  static ExtNat finite(int value);
  static ExtNat unresolved_beyond(int bound);

  bool is_finite() const { return finite_; }
  // The detected value; only meaningful when is_finite().
  int value() const;
  // The truncation bound the scan exhausted; only meaningful when unresolved.
  int bound() const;

  bool operator==(const ExtNat& o) const {
    return finite_ == o.finite_ && n_ == o.n_;
  }
  bool operator!=(const ExtNat& o) const { return !(*this == o); }
  std::string str() const;

 private:
  ExtNat(bool f, int n) : finite_(f), n_(n) {}
  bool finite_ = false;
  int n_ = 0;
};

// Least grade m >= 1 carrying a nonzero Eulerian coefficient, together with
// the least offset i such that the coefficient of E[m-i,i] at that grade is
// nonzero.  Scans grades 1..N of v; both results are unresolved when every
// Eulerian coefficient vanishes through grade N.
std::pair<ExtNat, ExtNat> detect_s_p(const LVec& v, int N);

// Same scan restricted to grades m > s.
std::pair<ExtNat, ExtNat> detect_r_q(const LVec& v, int s, int N);

// Same scan over the rotational family i (1 or 2) instead of the Eulerian
// one; grade-0 rotational terms (the linear part) are ignored.
std::pair<ExtNat, ExtNat> detect_si_pi(const LVec& v, int i, int N);

// Band matrix of a grade-d coefficient vector (b[d,0], ..., b[0,d]) with
// `cols` columns: column j carries the vector shifted down by j, so the
// result has coeffs.size()-1 + cols rows.  Column j equals, up to the
// scalar 2(c-d) carried by the caller, the coefficient vector of
// bracket(E[c-j,j], sum_i b[d-i,i] E[d-i,i]) where cols = c+1.
RFMatrix conv_matrix(const std::vector<RatFn>& coeffs, int cols);

// [ band(high, l+1) | band(low, l+r-s+1) ]: the Eulerian part of the
// grade-(l+r) image of the level-(r+1) generator pair, with the grade-r
// coefficient band acting through grade-l generators and the grade-s band
// through grade-(l+r-s) generators.  Both blocks have l+r+1 rows.
RFMatrix assemble_pencil(const std::vector<RatFn>& highCoeffs,
                         const std::vector<RatFn>& lowCoeffs, int l, int r,
                         int s);

// Horizontal concatenation (shared row count required).
RFMatrix hcat(const RFMatrix& left, const RFMatrix& right);

// One of the two row/column deletion recipes, chosen by the sign of p-q.
// With q <= p the invertible pivot block comes from the low (grade-s) band;
// with p < q the roles of the two bands mirror and the pivot block comes
// from the high (grade-r) band.
struct SchurParts {
  RFMatrix A;       // non-pivot block, upper rows
  RFMatrix B;       // pivot block: lower triangular, constant diagonal
  RFMatrix C;       // non-pivot block, lower rows
  RFMatrix D;       // pivot-side block, lower rows
  bool pivotHigh;   // true when the pivot diagonal is the grade-r leading
                    // coefficient (p < q), false when it is the grade-s one
};

// Partitions M = assemble_pencil(high, low, l, r, s).
//   q <= p: drop the first p rows and the first p-q columns of the high
//           band; B = low band on the first l+r-s+1 remaining rows
//           (diagonal: the leading grade-s coefficient), C/D = last s-p rows.
//   p < q:  drop the first q rows and the first q-p columns of the low
//           band; B = high band on the first l+1 remaining rows (diagonal:
//           the leading grade-r coefficient), C/D = last r-q rows.
SchurParts schur_partition(const RFMatrix& M, int p, int q, int s, int r,
                           int l);

// C - D B^{-1} A for a partition (forward substitution through the
// triangular pivot block).  Throws when the pivot diagonal vanishes.
RFMatrix schur_complement(const SchurParts& parts);

// Rank of the complement: the number of extra targets the pivot rows do not
// already account for.
int schur_u(const RFMatrix& M, int p, int q, int s, int r, int l);

// Closed-form predictions driven by alpha = rank(assemble_pencil at l = s).
//   rank : 2l+r-s+2 for 0 <= l <= alpha-r-2, alpha+l-s beyond.
//   u    : clamp(min(l+1, alpha-r-1) - (p-q), 0, s-p).
struct RankPrediction {
  int rank = 0;
  int u = 0;
};
RankPrediction rank_predict(int l, int alpha, int r, int s, int p, int q);

// Nondegeneracy gate on the five leading coefficients:
// b01^2 b20 - b01 b10 b11 + b02 b10^2 != 0.
bool generic_gate(const RatFn& b10, const RatFn& b01, const RatFn& b11,
                  const RatFn& b20, const RatFn& b02);

// Summary of the structural indices of one field, as the level drivers and
// the report emitter consume them.
struct Classification {
  ExtNat s = ExtNat::unresolved_beyond(0);
  ExtNat p = ExtNat::unresolved_beyond(0);
  ExtNat r = ExtNat::unresolved_beyond(0);
  ExtNat q = ExtNat::unresolved_beyond(0);
  ExtNat s1 = ExtNat::unresolved_beyond(0);
  ExtNat p1 = ExtNat::unresolved_beyond(0);
  ExtNat s2 = ExtNat::unresolved_beyond(0);
  ExtNat p2 = ExtNat::unresolved_beyond(0);
  int alpha = -1;              // rank of the l = s pencil; -1 when unused
  std::map<int, int> uTable;   // l -> u_l, for the grades actually examined
  bool genericGate = false;
};

}  // namespace nf
