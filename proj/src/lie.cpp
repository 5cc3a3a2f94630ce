// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#include "nf/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace nf {

namespace {

BasisElem make_elem(Family f, int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("basis element with a negative index");
  return BasisElem{f, m, n};
}

}  // namespace

BasisElem BasisElem::E(int m, int n) { return make_elem(Family::E, m, n); }
BasisElem BasisElem::T1(int m, int n) { return make_elem(Family::Theta1, m, n); }
BasisElem BasisElem::T2(int m, int n) { return make_elem(Family::Theta2, m, n); }

std::string BasisElem::str() const {
  static const char* tags[] = {"E", "T1", "T2"};
  std::ostringstream os;
  os << tags[static_cast<int>(fam)] << '[' << m << ',' << n << ']';
  return os.str();
}

int grade_of(const BasisElem& b, const Grading& g, int muDegree) {
  int grade = b.index_sum() + g.muWeight * muDegree;
  if (b.is_rotational()) grade += g.thetaOffset;
  return grade;
}

bool stage_less(const BasisElem& a, const BasisElem& b, const Grading& g) {
  int ga = grade_of(a, g), gb = grade_of(b, g);
  if (ga != gb) return ga < gb;
  if (a.fam != b.fam) return a.fam < b.fam;
  return a.n < b.n;
}

// ---------------------------------------------------------------------------
// LVec

LVec LVec::term(const BasisElem& b, RatFn c) {
  LVec v;
  v.add_term(b, c);
  return v;
}

RatFn LVec::coeff(const BasisElem& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? RatFn() : it->second;
}

void LVec::add_term(const BasisElem& b, const RatFn& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(b, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void LVec::set_term(const BasisElem& b, RatFn c) {
  if (c.is_zero()) {
    terms_.erase(b);
  } else {
    terms_[b] = std::move(c);
  }
}

void LVec::erase_term(const BasisElem& b) { terms_.erase(b); }

LVec& LVec::operator+=(const LVec& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

LVec& LVec::operator-=(const LVec& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

LVec& LVec::operator*=(const RatFn& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

LVec LVec::operator-() const {
  LVec out;
  for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
  return out;
}

bool LVec::operator==(const LVec& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  }
  return true;
}

std::string LVec::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str(names) << ")*" << b.str();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// TimeGen

TimeGen TimeGen::term(int m, int n, RatFn c) {
  if (m < 0 || n < 0) throw std::invalid_argument("time monomial with a negative index");
  TimeGen t;
  t.add_term(m, n, c);
  return t;
}

RatFn TimeGen::coeff(int m, int n) const {
  auto it = terms_.find({m, n});
  return it == terms_.end() ? RatFn() : it->second;
}

void TimeGen::add_term(int m, int n, const RatFn& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(std::make_pair(m, n), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TimeGen& TimeGen::operator+=(const TimeGen& o) {
  for (const auto& [mn, c] : o.terms_) add_term(mn.first, mn.second, c);
  return *this;
}

TimeGen& TimeGen::operator-=(const TimeGen& o) {
  for (const auto& [mn, c] : o.terms_) add_term(mn.first, mn.second, -c);
  return *this;
}

TimeGen& TimeGen::operator*=(const RatFn& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mn, v] : terms_) v *= c;
  return *this;
}

TimeGen TimeGen::operator-() const {
  TimeGen out;
  for (const auto& [mn, c] : terms_) out.terms_.emplace(mn, -c);
  return out;
}

TimeGen TimeGen::operator*(const TimeGen& o) const {
  TimeGen out;
  for (const auto& [mn, c] : terms_) {
    for (const auto& [kl, d] : o.terms_) {
      out.add_term(mn.first + kl.first, mn.second + kl.second, c * d);
    }
  }
  return out;
}

bool TimeGen::operator==(const TimeGen& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

std::string TimeGen::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mn, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.str(names) << ")*Z[" << mn.first << ',' << mn.second << ']';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Operations

LVec bracket(const LVec& u, const LVec& w) {
  LVec out;
  for (const auto& [ub, uc] : u.terms()) {
    for (const auto& [wb, wc] : w.terms()) {
      long factor;
      Family fam;
      if (ub.is_rotational()) {
        if (wb.is_rotational()) continue;  // rotational terms commute
        factor = 2L * ub.index_sum();
        fam = ub.fam;
      } else if (wb.is_rotational()) {
        factor = -2L * wb.index_sum();
        fam = wb.fam;
      } else {
        factor = 2L * (ub.index_sum() - wb.index_sum());
        fam = Family::E;
      }
      if (factor == 0) continue;
      out.add_term(BasisElem{fam, ub.m + wb.m, ub.n + wb.n}, uc * wc * RatFn(factor));
    }
  }
  return out;
}

LVec rescale_action(const TimeGen& t, const LVec& v) {
  LVec out;
  for (const auto& [mn, c] : t.terms()) {
    for (const auto& [b, d] : v.terms()) {
      out.add_term(BasisElem{b.fam, b.m + mn.first, b.n + mn.second}, c * d);
    }
  }
  return out;
}

LVec combined_action(const TimeGen& t, const LVec& s, const LVec& v, bool parametric) {
  if (!parametric) {
    for (const auto& [b, c] : s.terms()) {
      if (b.is_rotational() && b.index_sum() == 0) {
        throw std::invalid_argument("state generator has a rotational constant term");
      }
    }
  }
  LVec out = rescale_action(t, v);
  out += bracket(s, v);
  return out;
}

LVec project_radical(const LVec& v) {
  LVec out;
  for (const auto& [b, c] : v.terms()) {
    if (b.is_rotational()) out.set_term(b, c);
  }
  return out;
}

LVec project_quotient(const LVec& v) {
  LVec out;
  for (const auto& [b, c] : v.terms()) {
    if (!b.is_rotational()) out.set_term(b, c);
  }
  return out;
}

LVec graded_part(const LVec& v, int k, const Grading& g, int firstParamVar) {
  LVec out;
  const bool split = g.muWeight > 0 && firstParamVar >= 0;
  for (const auto& [b, c] : v.terms()) {
    if (!split) {
      if (grade_of(b, g) == k) out.set_term(b, c);
      continue;
    }
    int base = grade_of(b, g);
    int excess = k - base;
    if (excess < 0 || excess % g.muWeight != 0) continue;
    out.add_term(b, ratfn_param_slice(c, firstParamVar, excess / g.muWeight));
  }
  return out;
}

LVec truncated(const LVec& v, int maxGrade, const Grading& g, int firstParamVar) {
  LVec out;
  const bool split = g.muWeight > 0 && firstParamVar >= 0;
  for (const auto& [b, c] : v.terms()) {
    if (!split) {
      if (grade_of(b, g) <= maxGrade) out.set_term(b, c);
      continue;
    }
    int base = grade_of(b, g);
    if (base > maxGrade) continue;
    int dmax = (maxGrade - base) / g.muWeight;
    if (ratfn_param_max_degree(c, firstParamVar) <= dmax) {
      out.set_term(b, c);
      continue;
    }
    for (int d = 0; d <= dmax; ++d) out.add_term(b, ratfn_param_slice(c, firstParamVar, d));
  }
  return out;
}

int max_grade(const LVec& v, const Grading& g, int firstParamVar) {
  int best = 0;
  const bool split = g.muWeight > 0 && firstParamVar >= 0;
  for (const auto& [b, c] : v.terms()) {
    int grade = grade_of(b, g);
    if (split) grade += g.muWeight * ratfn_param_max_degree(c, firstParamVar);
    if (grade > best) best = grade;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Parameter-block helpers

int param_degree(const Expvec& e, int first) {
  if (first < 0) return 0;
  int d = 0;
  for (std::size_t i = static_cast<std::size_t>(first); i < e.size(); ++i) {
    d += static_cast<int>(e[i]);
  }
  return d;
}

bool poly_param_free(const Poly& p, int first) {
  for (const auto& [e, c] : p.terms()) {
    if (param_degree(e, first) != 0) return false;
  }
  return true;
}

bool ratfn_param_free(const RatFn& f, int first) {
  return poly_param_free(f.num(), first) && poly_param_free(f.den(), first);
}

RatFn ratfn_param_slice(const RatFn& f, int first, int d) {
  if (!poly_param_free(f.den(), first)) {
    throw std::logic_error("parameter-dependent denominator in a graded split");
  }
  Poly sliced(f.num().nvars());
  for (const auto& [e, c] : f.num().terms()) {
    if (param_degree(e, first) == d) sliced.add_term(e, c);
  }
  if (sliced.is_zero()) return RatFn();
  return RatFn(std::move(sliced), f.den());
}

int ratfn_param_max_degree(const RatFn& f, int first) {
  if (!poly_param_free(f.den(), first)) {
    throw std::logic_error("parameter-dependent denominator in a graded split");
  }
  int best = 0;
  for (const auto& [e, c] : f.num().terms()) {
    int d = param_degree(e, first);
    if (d > best) best = d;
  }
  return best;
}

}  // namespace nf
