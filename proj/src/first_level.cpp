// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#include "nf/first_level.hpp"

#include <stdexcept>
#include <string>

namespace nf {

namespace {

bool resonant_key(const PhaseKey& k) { return k[0] == k[1] && k[2] == k[3]; }

// Every monomial of total degree below bound must have matched exponents.
void require_normalized_below(const PhasePoly& f, int bound, int grade) {
  for (const auto& [k, c] : f.terms()) {
    int d = phase_degree(k);
    if (d >= bound) break;  // terms are ordered by degree
    if (d >= 1 && !resonant_key(k)) {
      throw std::runtime_error("normalization incomplete at grade " + std::to_string(grade));
    }
  }
}

}  // namespace

PhasePoly generator_h(const PhasePoly& fPrev, int k, const RatFn& w1, const RatFn& w2) {
  PhasePoly h;
  const RatFn i_unit{GaussRat::i()};
  for (const auto& [key, c] : fPrev.terms()) {
    if (phase_degree(key) != k) continue;
    long d1 = static_cast<long>(key[0]) - static_cast<long>(key[1]);
    long d2 = static_cast<long>(key[2]) - static_cast<long>(key[3]);
    if (d1 == 0 && d2 == 0) continue;  // matched exponents stay
    RatFn divisor = w1 * RatFn(d1) + w2 * RatFn(d2);
    if (divisor.is_zero()) {
      throw std::domain_error("exact resonance: zero divisor (" + std::to_string(d1) +
                              ")*w1 + (" + std::to_string(d2) + ")*w2 at degree " +
                              std::to_string(k));
    }
    h.add_term(key, c * i_unit / divisor);
  }
  return h;
}

PhasePoly pushforward(const PhasePoly& fPrev, const PhasePoly& hk, int k, int degreeCap,
                      const RatFn& w1, const RatFn& w2) {
  if (k < 1) throw std::invalid_argument("pushforward degree must be positive");
  PhasePoly out = fPrev.truncated(degreeCap);
  out += rotation_derivative(hk, w1, w2);
  if (hk.is_zero()) return out;

  PhasePoly hpow = PhasePoly::monomial({0, 0, 0, 0}, RatFn(1));
  BigInt mfact = 1;
  for (int m = 1; m * k + 1 <= degreeCap; ++m) {
    hpow = hpow.times(hk, degreeCap);
    mfact *= m;
    if (hpow.is_zero()) break;
    for (int i = 1; m * k + i <= degreeCap; ++i) {
      // prod_{j=2}^{m+1} ((j-m)k - i)
      BigInt factor = 1;
      for (int j = 2; j <= m + 1; ++j) factor *= BigInt((j - m) * k - i);
      if (factor == 0) continue;
      PhasePoly fi = fPrev.homogeneous_part(i);
      if (fi.is_zero()) continue;
      out += hpow.times(fi, degreeCap) * RatFn(GaussRat{BigRat(factor, mfact)});
    }
  }
  return out;
}

RatFn extract_coeff(const PhasePoly& f, int k, int j) {
  if (k < 1 || j < 0 || j > k) throw std::invalid_argument("coefficient index out of range");
  require_normalized_below(f, 2 * k, 2 * k);
  auto u = static_cast<std::uint32_t>(k - j);
  auto w = static_cast<std::uint32_t>(j);
  return f.coeff(PhaseKey{u, u, w, w});
}

FirstLevelOutput first_level(const PhasePoly& fReal, int n, const RatFn& w1, const RatFn& w2) {
  if (n < 1) throw std::invalid_argument("truncation grade must be positive");
  if (!fReal.coeff(PhaseKey{0, 0, 0, 0}).is_zero()) {
    throw std::invalid_argument("input scalar has a constant term");
  }
  const bool realInput = fReal.real_coefficients();
  const int cap = 2 * n + 1;

  FirstLevelOutput out;
  out.truncationDegree = 2 * n;
  PhasePoly f = real_to_complex(fReal).truncated(cap);
  for (int k = 1; k <= 2 * n - 1; ++k) {
    PhasePoly h = generator_h(f, k, w1, w2);
    f = pushforward(f, h, k, cap, w1, w2);
    out.generators.push_back(std::move(h));
    // The degree just treated must now carry matched exponents only.
    PhasePoly part = f.homogeneous_part(k);
    for (const auto& [key, c] : part.terms()) {
      if (!resonant_key(key)) {
        throw std::logic_error("unmatched monomial survived its own elimination step");
      }
    }
  }

  out.normalForm = LVec::term(BasisElem::T1(0, 0), w1);
  out.normalForm.add_term(BasisElem::T2(0, 0), w2);
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j <= k; ++j) {
      RatFn b = extract_coeff(f, k, j);
      if (b.is_zero()) continue;
      if (realInput && b.conj() != b) {
        throw std::logic_error("matched-exponent coefficient is not real");
      }
      out.normalForm.add_term(BasisElem::E(k - j, j), b);
    }
  }
  out.finalScalar = std::move(f);
  return out;
}

bool nonresonant_up_to(const BigRat& w1, const BigRat& w2, int maxDeg) {
  for (int d1 = -maxDeg; d1 <= maxDeg; ++d1) {
    for (int d2 = -maxDeg; d2 <= maxDeg; ++d2) {
      if (d1 == 0 && d2 == 0) continue;
      if (BigRat(d1) * w1 + BigRat(d2) * w2 == 0) return false;
    }
  }
  return true;
}

}  // namespace nf
