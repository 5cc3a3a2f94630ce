// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
//
// Multivariate gcd: content/primitive-part recursion over the top variable
// with a subresultant polynomial remainder sequence on the primitive parts.
// Cheap structural cases (constants, monomials, disjoint supports, exact
// divisibility) are dispatched before any recursion.
#include "nf/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace nf {

namespace {

Poly one_like(const Poly& p) { return Poly::constant(p.nvars(), GaussRat{1}); }

Poly must_divide(const Poly& a, const Poly& b) {
  auto q = a.divided_exact(b);
  if (!q) throw std::logic_error("exact division failed in gcd");
  return *q;
}

// Coefficient of v^d, with the v exponent stripped.
Poly univ_coeff(const Poly& p, int v, std::uint32_t d) {
  Poly out(p.nvars());
  for (const auto& [e, c] : p.terms()) {
    if (e[v] != d) continue;
    Expvec f = e;
    f[v] = 0;
    out.add_term(f, c);
  }
  return out;
}

Poly gcd_inner(const Poly& a, const Poly& b);

// gcd of all v-coefficients; any associate works for the divisions below.
Poly content_v(const Poly& p, int v) {
  Poly acc(p.nvars());
  std::uint32_t dv = p.degree_in(v);
  for (std::uint32_t d = 0; d <= dv; ++d) {
    Poly c = univ_coeff(p, v, d);
    if (c.is_zero()) continue;
    acc = acc.is_zero() ? c : gcd_inner(acc, c);
    if (acc.is_constant()) return one_like(p);
  }
  return acc;
}

// Pseudo-remainder lc_v(B)^(deg A - deg B + 1) * A mod B; requires
// deg_v A >= deg_v B >= 1.
Poly prem(Poly A, const Poly& B, int v) {
  const std::uint32_t dB = B.degree_in(v);
  const Poly lcB = univ_coeff(B, v, dB);
  const std::uint32_t dA = A.degree_in(v);
  int steps_allowed = static_cast<int>(dA - dB) + 1;
  int steps = 0;
  while (!A.is_zero()) {
    std::uint32_t d = A.degree_in(v);
    if (d < dB) break;
    Poly lcA = univ_coeff(A, v, d);
    Expvec sh(A.nvars(), 0);
    sh[v] = d - dB;
    A = A * lcB - (lcA * Poly::monomial(A.nvars(), sh, GaussRat{1})) * B;
    ++steps;
  }
  for (; steps < steps_allowed; ++steps) A = A * lcB;
  return A;
}

// Dense univariate image: coefficient of v^d with every other variable
// evaluated at the given point (point[v] is ignored).
std::vector<GaussRat> univ_image(const Poly& p, int v, const std::vector<GaussRat>& point) {
  std::vector<GaussRat> out(p.degree_in(v) + 1);
  for (const auto& [e, c] : p.terms()) {
    GaussRat t = c;
    for (int w = 0; w < p.nvars(); ++w) {
      if (w == v) continue;
      for (std::uint32_t k = 0; k < e[w]; ++k) t *= point[w];
    }
    out[e[v]] += t;
  }
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

bool univ_is_zero(const std::vector<GaussRat>& u) { return u.size() == 1 && u[0].is_zero(); }

// Arithmetic in Z_p[i] for p = 3 mod 4, where it is a field.
using u64 = std::uint64_t;
u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }
u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e) {
    if (e & 1u) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1u;
  }
  return r;
}
struct Fp2 {
  u64 re = 0, im = 0;
  bool zero() const { return re == 0 && im == 0; }
};
Fp2 f2mul(Fp2 a, Fp2 b, u64 p) {
  return {(mulm(a.re, b.re, p) + p - mulm(a.im, b.im, p)) % p,
          (mulm(a.re, b.im, p) + mulm(a.im, b.re, p)) % p};
}
Fp2 f2inv(Fp2 a, u64 p) {
  u64 n = (mulm(a.re, a.re, p) + mulm(a.im, a.im, p)) % p;
  u64 ni = powm(n, p - 2, p);
  return {mulm(a.re, ni, p), mulm((p - a.im) % p, ni, p)};
}

// Proves coprimality from one good modular image.  The inputs must be
// integral (denominator 1 componentwise) and primitive; then a common factor
// keeps its degree modulo any prime that preserves one leading coefficient,
// so a constant image gcd certifies a constant true gcd.  Returns false when
// inconclusive.
bool univ_coprime_mod(const std::vector<GaussRat>& A, const std::vector<GaussRat>& B) {
  for (u64 p : {2147483647ull, 4294967291ull}) {
    auto image = [p](const std::vector<GaussRat>& u) {
      std::vector<Fp2> v(u.size());
      for (std::size_t k = 0; k < u.size(); ++k) {
        BigInt r = numerator(u[k].re) % p;
        if (r < 0) r += p;
        BigInt i = numerator(u[k].im) % p;
        if (i < 0) i += p;
        v[k] = {r.convert_to<u64>(), i.convert_to<u64>()};
      }
      while (v.size() > 1 && v.back().zero()) v.pop_back();
      return v;
    };
    std::vector<Fp2> a = image(A), b = image(B);
    bool lead_ok = (a.size() == A.size() && !a.back().zero()) ||
                   (b.size() == B.size() && !b.back().zero());
    auto img_zero = [](const std::vector<Fp2>& u) { return u.size() == 1 && u[0].zero(); };
    if (!lead_ok || img_zero(a) || img_zero(b)) continue;
    while (!img_zero(b)) {
      if (b.size() == 1) return true;
      Fp2 inv = f2inv(b.back(), p);
      while (a.size() >= b.size() && !img_zero(a)) {
        Fp2 f = f2mul(a.back(), inv, p);
        std::size_t off = a.size() - b.size();
        for (std::size_t k = 0; k + 1 < b.size(); ++k) {
          Fp2 t = f2mul(f, b[k], p);
          a[off + k].re = (a[off + k].re + p - t.re) % p;
          a[off + k].im = (a[off + k].im + p - t.im) % p;
        }
        a.pop_back();
        while (a.size() > 1 && a.back().zero()) a.pop_back();
      }
      std::swap(a, b);
    }
    return a.size() == 1;
  }
  return false;
}

// Rescales by a positive rational so every component is a small integer;
// keeping remainders near-primitive stops coefficient growth compounding
// across Euclid steps.
void univ_rescale(std::vector<GaussRat>& u) {
  if (univ_is_zero(u)) return;
  BigInt l{1};
  for (const auto& c : u) {
    l = lcm(l, denominator(c.re));
    l = lcm(l, denominator(c.im));
  }
  BigInt g{0};
  for (auto& c : u) {
    c.re *= l;
    c.im *= l;
    g = gcd(g, numerator(c.re));
    g = gcd(g, numerator(c.im));
  }
  if (g > 1)
    for (auto& c : u) {
      c.re /= g;
      c.im /= g;
    }
}

// Primitive-remainder-sequence gcd for dense univariate polynomials.  After
// the initial rescale both operands are integral; pseudo-division keeps them
// integral, and stripping the content after each remainder stops the
// coefficients compounding across steps.  Returned up to a unit factor.
std::vector<GaussRat> univ_gcd(std::vector<GaussRat> a, std::vector<GaussRat> b) {
  univ_rescale(a);
  univ_rescale(b);
  if (a.size() >= 4 && b.size() >= 4 && !univ_is_zero(a) && !univ_is_zero(b) &&
      univ_coprime_mod(a, b))
    return {GaussRat{1}};
  while (!univ_is_zero(b)) {
    if (b.size() == 1) return b;  // nonzero constant, a unit
    const GaussRat lead = b.back();
    while (a.size() >= b.size() && !univ_is_zero(a)) {
      GaussRat f = a.back();
      std::size_t off = a.size() - b.size();
      for (auto& c : a) c *= lead;
      for (std::size_t k = 0; k + 1 < b.size(); ++k) a[off + k] -= f * b[k];
      a.pop_back();
      while (a.size() > 1 && a.back().is_zero()) a.pop_back();
    }
    univ_rescale(a);
    std::swap(a, b);
  }
  return a;
}

// Degree-0 verdict from one substitution instance.  Sound whenever the
// leading v-coefficient of one operand survives the evaluation: a common
// divisor then keeps its v-degree in the image, so a constant image gcd
// forces the true gcd to be v-free.  Inconclusive probes return false.
bool probe_says_coprime_in(const Poly& a, const Poly& b, int v) {
  static std::mt19937_64 gen(0x5eedu);
  std::uniform_int_distribution<int> dist(2, 97);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<GaussRat> point(a.nvars());
    for (auto& p : point) p = GaussRat{BigRat(dist(gen))};
    std::vector<GaussRat> ia = univ_image(a, v, point);
    std::vector<GaussRat> ib = univ_image(b, v, point);
    bool lead_ok = (ia.size() == a.degree_in(v) + 1 && !ia.back().is_zero()) ||
                   (ib.size() == b.degree_in(v) + 1 && !ib.back().is_zero());
    if (!lead_ok || univ_is_zero(ia) || univ_is_zero(ib)) continue;
    if (univ_gcd(ia, ib).size() == 1) return true;
  }
  return false;
}

// Both polynomials live in the single variable v: plain monic Euclid.
Poly gcd_univariate(const Poly& a, const Poly& b, int v) {
  std::vector<GaussRat> point(a.nvars(), GaussRat{1});
  std::vector<GaussRat> g = univ_gcd(univ_image(a, v, point), univ_image(b, v, point));
  Poly out(a.nvars());
  for (std::size_t d = 0; d < g.size(); ++d) {
    if (g[d].is_zero()) continue;
    Expvec e(a.nvars(), 0);
    e[v] = static_cast<std::uint32_t>(d);
    out.add_term(e, g[d]);
  }
  return out;
}

// Subresultant remainder sequence; A, B primitive in v with positive degree.
Poly gcd_primitive(Poly A, Poly B, int v) {
  if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
  Poly g = one_like(A), h = one_like(A);
  while (true) {
    std::uint32_t delta = A.degree_in(v) - B.degree_in(v);
    Poly R = prem(A, B, v);
    if (R.is_zero()) break;
    if (R.degree_in(v) == 0) return one_like(A);
    Poly divisor = g * h.pow(delta);
    A = std::move(B);
    B = must_divide(R, divisor);
    g = univ_coeff(A, v, A.degree_in(v));
    if (delta >= 1) h = delta == 1 ? g : must_divide(g.pow(delta), h.pow(delta - 1));
  }
  return must_divide(B, content_v(B, v));
}

Poly gcd_inner(const Poly& a, const Poly& b) {
  if (a.is_constant() || b.is_constant()) return one_like(a);
  if (a == b) return a;

  // Monomial against anything: per-variable exponent minima.
  const Poly* mono = a.num_terms() == 1 ? &a : (b.num_terms() == 1 ? &b : nullptr);
  if (mono) {
    const Poly& other = mono == &a ? b : a;
    Expvec e = mono->leading_exponent();
    for (const auto& [f, c] : other.terms())
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = std::min(e[v], f[v]);
    return Poly::monomial(a.nvars(), std::move(e), GaussRat{1});
  }

  std::vector<int> sa = a.support_vars(), sb = b.support_vars();
  std::vector<int> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  if (common.empty()) return one_like(a);

  {
    const Poly& hi = a.degree() >= b.degree() ? a : b;
    const Poly& lo = a.degree() >= b.degree() ? b : a;
    if (hi.divided_exact(lo)) return lo;
  }

  int v = std::max(sa.back(), sb.back());
  bool a_has = std::binary_search(sa.begin(), sa.end(), v);
  bool b_has = std::binary_search(sb.begin(), sb.end(), v);
  if (!a_has) return gcd_inner(a, content_v(b, v));
  if (!b_has) return gcd_inner(content_v(a, v), b);

  if (sa.size() == 1 && sb.size() == 1) return gcd_univariate(a, b, v);
  if (probe_says_coprime_in(a, b, v)) {
    // the gcd cannot involve v, so it divides both v-contents
    return gcd_inner(content_v(a, v), content_v(b, v));
  }

  Poly ca = content_v(a, v), cb = content_v(b, v);
  Poly pa = must_divide(a, ca), pb = must_divide(b, cb);
  Poly cg = gcd_inner(ca, cb);
  Poly pg = gcd_primitive(std::move(pa), std::move(pb), v);
  return cg * pg;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly g;
  if (a.is_zero() && b.is_zero()) return Poly(std::max(a.nvars(), b.nvars()));
  if (a.is_zero())
    g = b;
  else if (b.is_zero())
    g = a;
  else {
    const Poly *pa = &a, *pb = &b;
    Poly la, lb;
    if (a.nvars() != b.nvars()) {
      int n = std::max(a.nvars(), b.nvars());
      la = a.with_nvars(n);
      lb = b.with_nvars(n);
      pa = &la;
      pb = &lb;
    }
    g = gcd_inner(*pa, *pb);
  }
  GaussRat lc = g.leading_coeff();
  if (!(lc == GaussRat{1})) g *= lc.inverse();
  return g;
}

}  // namespace nf
