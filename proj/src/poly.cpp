// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#include "nf/poly.hpp"

#include "nf/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace nf {

Poly Poly::constant(int nvars, GaussRat c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Expvec(nvars, 0), std::move(c));
  return p;
}

Poly Poly::variable(int nvars, int index) {
  Expvec e(nvars, 0);
  e.at(index) = 1;
  return monomial(nvars, std::move(e), GaussRat{1});
}

Poly Poly::monomial(int nvars, Expvec e, GaussRat c) {
  if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent arity mismatch");
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

GaussRat Poly::constant_value() const {
  auto it = terms_.find(Expvec(nvars_, 0));
  return it == terms_.end() ? GaussRat{} : it->second;
}

std::uint64_t Poly::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

std::uint32_t Poly::degree_in(int var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

GaussRat Poly::coeff(const Expvec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussRat{} : it->second;
}

void Poly::add_term(const Expvec& e, const GaussRat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const Expvec& Poly::leading_exponent() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->first;
}

const GaussRat& Poly::leading_coeff() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.begin()->second;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p(nvars_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

Poly Poly::operator*(const Poly& o) const { return poly_mul(*this, o); }

Poly Poly::pow(unsigned e) const {
  Poly acc = Poly::constant(nvars_, GaussRat{1});
  Poly base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return acc;
}

Poly Poly::substituted(const std::map<int, BigRat>& values) const {
  Poly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Expvec f = e;
    GaussRat v = c;
    for (const auto& [var, val] : values) {
      if (f[var] == 0) continue;
      v *= GaussRat(rat_pow(val, f[var]));
      f[var] = 0;
    }
    out.add_term(f, v);
  }
  return out;
}

GaussRat Poly::eval(const std::vector<GaussRat>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation arity mismatch");
  GaussRat acc;
  for (const auto& [e, c] : terms_) {
    GaussRat t = c;
    for (int v = 0; v < nvars_; ++v)
      for (std::uint32_t k = 0; k < e[v]; ++k) t *= point[v];
    acc += t;
  }
  return acc;
}

Poly Poly::with_nvars(int nvars) const {
  Poly out(nvars);
  for (const auto& [e, c] : terms_) {
    Expvec f(nvars, 0);
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (v >= nvars) throw std::invalid_argument("cannot drop a live variable");
      f[v] = e[v];
    }
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

std::vector<int> Poly::support_vars() const {
  std::vector<bool> seen(nvars_, false);
  for (const auto& [e, c] : terms_)
    for (int v = 0; v < nvars_; ++v)
      if (e[v]) seen[v] = true;
  std::vector<int> out;
  for (int v = 0; v < nvars_; ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

std::optional<Poly> Poly::divided_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (nvars_ != d.nvars_) throw std::invalid_argument("polynomial arity mismatch");
  Poly rem = *this;
  Poly quot(nvars_);
  const Expvec& de = d.leading_exponent();
  const GaussRat& dc = d.leading_coeff();
  while (!rem.is_zero()) {
    const Expvec& re = rem.leading_exponent();
    Expvec qe(nvars_);
    for (int v = 0; v < nvars_; ++v) {
      if (re[v] < de[v]) return std::nullopt;
      qe[v] = re[v] - de[v];
    }
    GaussRat qc = rem.leading_coeff() / dc;
    Poly t = Poly::monomial(nvars_, std::move(qe), std::move(qc));
    quot += t;
    rem -= t * d;
  }
  return quot;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      if (!e[v]) continue;
      if (!mono.empty()) mono += "*";
      mono += v < static_cast<int>(names.size()) ? names[v] : "x" + std::to_string(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    std::string cs = c.str();
    bool leading = out.empty();
    std::string sep = leading ? "" : " + ";
    if (c.is_real() && c.re < 0) {
      sep = leading ? "-" : " - ";
      cs = (-c).str();
    }
    if (mono.empty())
      out += sep + cs;
    else if (cs == "1")
      out += sep + mono;
    else if (!c.is_real() && c.re != 0)
      out += sep + "(" + cs + ")*" + mono;
    else
      out += sep + cs + "*" + mono;
  }
  return out;
}

}  // namespace nf
