// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#include "nf/phase.hpp"

#include <sstream>
#include <stdexcept>

namespace nf {

PhasePoly PhasePoly::monomial(const PhaseKey& k, RatFn c) {
  PhasePoly p;
  p.add_term(k, c);
  return p;
}

PhasePoly PhasePoly::variable(int slot) {
  if (slot < 0 || slot > 3) throw std::invalid_argument("phase variable slot out of range");
  PhaseKey k{0, 0, 0, 0};
  k[static_cast<std::size_t>(slot)] = 1;
  return monomial(k, RatFn(1));
}

RatFn PhasePoly::coeff(const PhaseKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? RatFn() : it->second;
}

void PhasePoly::add_term(const PhaseKey& k, const RatFn& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

PhasePoly& PhasePoly::operator*=(const RatFn& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

PhasePoly PhasePoly::operator-() const {
  PhasePoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

bool PhasePoly::operator==(const PhasePoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

PhasePoly PhasePoly::times(const PhasePoly& o, int degreeCap) const {
  PhasePoly out;
  for (const auto& [ka, ca] : terms_) {
    int da = phase_degree(ka);
    if (degreeCap >= 0 && da > degreeCap) continue;
    for (const auto& [kb, cb] : o.terms_) {
      if (degreeCap >= 0 && da + phase_degree(kb) > degreeCap) continue;
      PhaseKey k{ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]};
      out.add_term(k, ca * cb);
    }
  }
  return out;
}

PhasePoly PhasePoly::pow(unsigned m, int degreeCap) const {
  PhasePoly out = monomial({0, 0, 0, 0}, RatFn(1));
  PhasePoly base = *this;
  while (m > 0) {
    if (m & 1u) out = out.times(base, degreeCap);
    m >>= 1u;
    if (m > 0) base = base.times(base, degreeCap);
  }
  return out;
}

PhasePoly PhasePoly::homogeneous_part(int d) const {
  PhasePoly out;
  for (const auto& [k, c] : terms_) {
    if (phase_degree(k) == d) out.terms_.emplace(k, c);
  }
  return out;
}

PhasePoly PhasePoly::truncated(int maxDeg) const {
  PhasePoly out;
  for (const auto& [k, c] : terms_) {
    if (phase_degree(k) <= maxDeg) out.terms_.emplace(k, c);
  }
  return out;
}

int PhasePoly::max_degree() const {
  return terms_.empty() ? 0 : phase_degree(terms_.rbegin()->first);
}

bool PhasePoly::real_coefficients() const {
  for (const auto& [k, c] : terms_) {
    if (c.conj() != c) return false;
  }
  return true;
}

bool PhasePoly::conjugation_symmetric() const {
  for (const auto& [k, c] : terms_) {
    PhaseKey swapped{k[1], k[0], k[3], k[2]};
    if (coeff(swapped).conj() != c) return false;
  }
  return true;
}

std::string PhasePoly::str(const std::vector<std::string>& names,
                           const std::array<std::string, 4>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str(names) << ')';
    for (int v = 0; v < 4; ++v) {
      if (k[static_cast<std::size_t>(v)] == 0) continue;
      os << '*' << vars[static_cast<std::size_t>(v)];
      if (k[static_cast<std::size_t>(v)] > 1) os << '^' << k[static_cast<std::size_t>(v)];
    }
  }
  return os.str();
}

PhasePoly real_to_complex(const PhasePoly& p) {
  // Per-variable substitution polynomials in the complex chart.
  const GaussRat half{BigRat(1, 2)};
  const GaussRat mihalf{BigRat(0), BigRat(-1, 2)};  // 1/(2I)
  const GaussRat pihalf{BigRat(0), BigRat(1, 2)};
  std::array<PhasePoly, 4> subst;
  for (int i = 0; i < 2; ++i) {
    std::size_t z = static_cast<std::size_t>(2 * i), w = z + 1;
    PhaseKey kz{0, 0, 0, 0}, kw{0, 0, 0, 0};
    kz[z] = 1;
    kw[w] = 1;
    PhasePoly x = PhasePoly::monomial(kz, RatFn(half));
    x.add_term(kw, RatFn(half));
    PhasePoly y = PhasePoly::monomial(kz, RatFn(mihalf));
    y.add_term(kw, RatFn(pihalf));
    subst[z] = x;
    subst[w] = y;
  }

  // Cache powers per variable up to the largest exponent used.
  std::array<std::vector<PhasePoly>, 4> powers;
  for (std::size_t v = 0; v < 4; ++v) {
    powers[v].push_back(PhasePoly::monomial({0, 0, 0, 0}, RatFn(1)));
  }
  PhasePoly out;
  for (const auto& [k, c] : p.terms()) {
    PhasePoly term = PhasePoly::monomial({0, 0, 0, 0}, c);
    for (std::size_t v = 0; v < 4; ++v) {
      while (powers[v].size() <= k[v]) {
        powers[v].push_back(powers[v].back().times(subst[v]));
      }
      term = term.times(powers[v][k[v]]);
    }
    out += term;
  }
  return out;
}

PhasePoly rotation_derivative(const PhasePoly& h, const RatFn& w1, const RatFn& w2) {
  PhasePoly out;
  const RatFn i_unit{GaussRat::i()};
  for (const auto& [k, c] : h.terms()) {
    long d1 = static_cast<long>(k[0]) - static_cast<long>(k[1]);
    long d2 = static_cast<long>(k[2]) - static_cast<long>(k[3]);
    if (d1 == 0 && d2 == 0) continue;
    RatFn factor = w1 * RatFn(d1) + w2 * RatFn(d2);
    out.add_term(k, c * factor * i_unit);
  }
  return out;
}

}  // namespace nf
