// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nf/lie.hpp"
#include "nf/phase.hpp"

#include <vector>

namespace nf {

struct FirstLevelOutput {
  // v0 plus the resonant E[m,n] coefficients through grade n.
  LVec normalForm;
  // Scalar generators h_1 .. h_{2n-1}, in application order.
  std::vector<PhasePoly> generators;
  // Jet degree in phase variables: 2n.
  int truncationDegree = 0;
  // Last scalar iterate (complex chart, carried to degree 2n+1), for audits
  // and conjugacy checks.
  PhasePoly finalScalar;
};

// Degree-k elimination generator: for every degree-k monomial of fPrev whose
// index differences (i1-j1, i2-j2) are not both zero, contributes
// I*coeff/((i1-j1) w1 + (i2-j2) w2) times the monomial.  Throws on an exact
// zero divisor (possible only for numeric frequencies).
PhasePoly generator_h(const PhasePoly& fPrev, int k, const RatFn& w1, const RatFn& w2);

// One normalization step, truncated at phase degree degreeCap: applies the
// degree-k generator hk to fPrev and returns the new scalar
//   fPrev + <grad hk, v0> + sum_{i,m} (1/m!) prod_{j=2}^{m+1}((j-m)k - i)
//                                   * hk^m * fPrev_i
// over i >= 1, m >= 1 with m*k + i <= degreeCap.
PhasePoly pushforward(const PhasePoly& fPrev, const PhasePoly& hk, int k, int degreeCap,
                      const RatFn& w1, const RatFn& w2);

// Coefficient of z1^{k-j} w1^{k-j} z2^j w2^j.  Requires every degree below 2k
// to be fully normalized (only monomials with matched exponents remain);
// otherwise throws "normalization incomplete at grade 2k".
RatFn extract_coeff(const PhasePoly& f, int k, int j);

// Full first-level normalization of v0 + E_f, where fReal is the scalar in
// the real chart (x1, y1, x2, y2) with zero constant term, truncated at grade
// n (phase degree 2n; internal work carries degree 2n+1).
FirstLevelOutput first_level(const PhasePoly& fReal, int n, const RatFn& w1, const RatFn& w2);

// True when d1*w1 + d2*w2 != 0 for all integer pairs with |d1|, |d2| <=
// maxDeg other than (0, 0): certifies numeric frequencies against exact
// divisor collapse through phase degree maxDeg.
bool nonresonant_up_to(const BigRat& w1, const BigRat& w2, int maxDeg);

}  // namespace nf
