// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nf/ratfn.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nf {

// Exponents of the four phase variables.  The same container serves the real
// chart (x1, y1, x2, y2) and the complex chart (z1, w1, z2, w2); operations
// that care about the chart say so.
using PhaseKey = std::array<std::uint32_t, 4>;

inline int phase_degree(const PhaseKey& k) {
  return static_cast<int>(k[0] + k[1] + k[2] + k[3]);
}

struct PhaseKeyLess {
  bool operator()(const PhaseKey& a, const PhaseKey& b) const {
    int da = phase_degree(a), db = phase_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

// Polynomial in the four phase variables with rational-function scalar
// coefficients.  Zero coefficients are never stored.
class PhasePoly {
 public:
  using TermMap = std::map<PhaseKey, RatFn, PhaseKeyLess>;

  PhasePoly() = default;
  static PhasePoly monomial(const PhaseKey& k, RatFn c);
  static PhasePoly variable(int slot);  // slot in 0..3, coefficient 1

  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  RatFn coeff(const PhaseKey& k) const;
  void add_term(const PhaseKey& k, const RatFn& c);  // fuses; drops zeros

  PhasePoly& operator+=(const PhasePoly& o);
  PhasePoly& operator-=(const PhasePoly& o);
  PhasePoly& operator*=(const RatFn& c);
  PhasePoly operator-() const;
  friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
  friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
  friend PhasePoly operator*(PhasePoly a, const RatFn& c) { return a *= c; }
  bool operator==(const PhasePoly& o) const;
  bool operator!=(const PhasePoly& o) const { return !(*this == o); }

  // Product, optionally dropping terms above degreeCap (degreeCap < 0: keep
  // everything).
  PhasePoly times(const PhasePoly& o, int degreeCap = -1) const;
  PhasePoly pow(unsigned m, int degreeCap = -1) const;

  PhasePoly homogeneous_part(int d) const;
  PhasePoly truncated(int maxDeg) const;
  int max_degree() const;  // 0 for the zero polynomial

  bool real_coefficients() const;
  // In the complex chart: coeff(i1,j1,i2,j2) == conj(coeff(j1,i1,j2,i2)).
  bool conjugation_symmetric() const;

  std::string str(const std::vector<std::string>& names,
                  const std::array<std::string, 4>& vars = {"z1", "w1", "z2", "w2"}) const;

 private:
  TermMap terms_;
};

// Chart change x_i = (z_i + w_i)/2, y_i = (z_i - w_i)/(2I): interprets the
// input exponents as (x1, y1, x2, y2) and expands in (z1, w1, z2, w2).
PhasePoly real_to_complex(const PhasePoly& p);

// Directional derivative of h along the linear rotation field with
// frequencies (w1, w2): I*w1*(z1 h_z1 - w1 h_w1) + I*w2*(z2 h_z2 - w2 h_w2).
// On a monomial this multiplies by I*((i1-j1) w1 + (i2-j2) w2).
PhasePoly rotation_derivative(const PhasePoly& h, const RatFn& w1, const RatFn& w2);

}  // namespace nf
