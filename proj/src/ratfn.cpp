// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#include "nf/ratfn.hpp"

#include <stdexcept>
#include <utility>

namespace nf {

namespace {

Poly lift(const Poly& p, int nvars) { return p.nvars() == nvars ? p : p.with_nvars(nvars); }

}  // namespace

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
  normalize();
}

void RatFn::align(RatFn& a, RatFn& b) {
  if (a.nvars() == b.nvars()) return;
  int n = std::max(a.nvars(), b.nvars());
  a.num_ = lift(a.num_, n);
  a.den_ = lift(a.den_, n);
  b.num_ = lift(b.num_, n);
  b.den_ = lift(b.den_, n);
}

void RatFn::normalize() {
  if (num_.nvars() != den_.nvars()) {
    int n = std::max(num_.nvars(), den_.nvars());
    num_ = lift(num_, n);
    den_ = lift(den_, n);
  }
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.nvars(), GaussRat{1});
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *num_.divided_exact(g);
    den_ = *den_.divided_exact(g);
  }
  const GaussRat& lc = den_.leading_coeff();
  if (!(lc == GaussRat{1})) {
    GaussRat inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

GaussRat RatFn::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant");
  return num_.constant_value() / den_.constant_value();
}

RatFn& RatFn::operator+=(const RatFn& o) {
  RatFn rhs = o;
  align(*this, rhs);
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  Poly g0 = poly_gcd(den_, rhs.den_);
  if (g0.is_constant()) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ = den_ * rhs.den_;
    if (num_.is_zero()) {
      den_ = Poly::constant(num_.nvars(), GaussRat{1});
      return *this;
    }
  } else {
    Poly b1 = *den_.divided_exact(g0);
    Poly d1 = *rhs.den_.divided_exact(g0);
    Poly t = num_ * d1 + rhs.num_ * b1;
    if (t.is_zero()) {
      num_ = t;
      den_ = Poly::constant(t.nvars(), GaussRat{1});
      return *this;
    }
    Poly g1 = poly_gcd(t, g0);
    if (g1.is_constant()) {
      num_ = std::move(t);
      den_ = (b1 * d1) * g0;
    } else {
      num_ = *t.divided_exact(g1);
      den_ = (b1 * d1) * *g0.divided_exact(g1);
    }
  }
  const GaussRat& lc = den_.leading_coeff();
  if (!(lc == GaussRat{1})) {
    GaussRat inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
  RatFn rhs = o;
  align(*this, rhs);
  if (is_zero() || rhs.is_zero()) {
    num_ = Poly(nvars());
    den_ = Poly::constant(nvars(), GaussRat{1});
    return *this;
  }
  Poly g1 = poly_gcd(num_, rhs.den_);
  Poly g2 = poly_gcd(rhs.num_, den_);
  Poly a = g1.is_constant() ? num_ : *num_.divided_exact(g1);
  Poly d = g1.is_constant() ? rhs.den_ : *rhs.den_.divided_exact(g1);
  Poly c = g2.is_constant() ? rhs.num_ : *rhs.num_.divided_exact(g2);
  Poly b = g2.is_constant() ? den_ : *den_.divided_exact(g2);
  num_ = a * c;
  den_ = b * d;
  const GaussRat& lc = den_.leading_coeff();
  if (!(lc == GaussRat{1})) {
    GaussRat inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatFn& RatFn::operator/=(const RatFn& o) { return *this *= o.inverse(); }

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num_ = -r.num_;
  return r;
}

bool RatFn::operator==(const RatFn& o) const {
  if (nvars() == o.nvars()) return num_ == o.num_ && den_ == o.den_;
  RatFn a = *this, b = o;
  align(a, b);
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFn RatFn::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  RatFn r;
  r.num_ = den_;
  r.den_ = num_;
  const GaussRat& lc = r.den_.leading_coeff();
  if (!(lc == GaussRat{1})) {
    GaussRat inv = lc.inverse();
    r.num_ *= inv;
    r.den_ *= inv;
  }
  return r;
}

RatFn RatFn::conj() const {
  RatFn r;
  Poly n(nvars()), d(nvars());
  for (const auto& [e, c] : num_.terms()) n.add_term(e, c.conj());
  for (const auto& [e, c] : den_.terms()) d.add_term(e, c.conj());
  r.num_ = std::move(n);
  r.den_ = std::move(d);
  const GaussRat& lc = r.den_.leading_coeff();
  if (!(lc == GaussRat{1})) {
    GaussRat inv = lc.inverse();
    r.num_ *= inv;
    r.den_ *= inv;
  }
  return r;
}

RatFn RatFn::substituted(const std::map<int, BigRat>& values) const {
  return RatFn(num_.substituted(values), den_.substituted(values));
}

GaussRat RatFn::eval(const std::vector<GaussRat>& point) const {
  GaussRat d = den_.eval(point);
  if (d.is_zero()) throw std::domain_error("evaluation hits zero denominator");
  return num_.eval(point) / d;
}

RatFn RatFn::with_nvars(int nvars) const {
  RatFn r;
  r.num_ = num_.with_nvars(nvars);
  r.den_ = den_.with_nvars(nvars);
  return r;
}

std::string RatFn::str(const std::vector<std::string>& names) const {
  if (is_poly()) return num_.str(names);
  std::string n = num_.str(names);
  std::string d = den_.str(names);
  if (num_.num_terms() > 1) n = "(" + n + ")";
  if (den_.num_terms() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace nf
