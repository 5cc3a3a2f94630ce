#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nf/first_level.hpp"
#include "nf/symbols.hpp"
#include "support/vf_oracle.hpp"

#include <random>

using namespace nf;
using namespace nfo;

namespace {

std::mt19937_64 rng(20260822u);

BigRat rand_rat(int num_range = 9, int den_range = 4) {
  std::uniform_int_distribution<int> dn(-num_range, num_range);
  std::uniform_int_distribution<int> dd(1, den_range);
  return BigRat(dn(rng), dd(rng));
}

PhaseKey rand_key(int max_deg) {
  std::uniform_int_distribution<int> de(0, max_deg);
  for (;;) {
    PhaseKey k{static_cast<std::uint32_t>(de(rng)), static_cast<std::uint32_t>(de(rng)),
               static_cast<std::uint32_t>(de(rng)), static_cast<std::uint32_t>(de(rng))};
    if (phase_degree(k) <= max_deg) return k;
  }
}

PhasePoly rand_phase(int max_deg, int terms, bool complex_ok = true) {
  PhasePoly p;
  for (int t = 0; t < terms; ++t) {
    GaussRat c{rand_rat()};
    if (complex_ok && std::uniform_int_distribution<int>(0, 2)(rng) == 0) c.im = rand_rat();
    p.add_term(rand_key(max_deg), RatFn(c));
  }
  return p;
}

VField rand_field(int max_deg, int terms) {
  VField v;
  for (int c = 0; c < 4; ++c) v[c] = rand_phase(max_deg, terms);
  return v;
}

// Euler derivative: sum_d x_d * dp/dx_d (multiplies a homogeneous term by its
// degree).
PhasePoly euler_derivative(const PhasePoly& p) {
  PhasePoly out;
  for (const auto& [k, c] : p.terms()) {
    out.add_term(k, c * RatFn(static_cast<long>(phase_degree(k))));
  }
  return out;
}

// Frequencies certified non-resonant for every divisor this suite can hit.
const RatFn kW1{GaussRat{BigRat(11, 3)}};
const RatFn kW2{GaussRat{BigRat(13, 5)}};

struct CorInput {
  SymbolTable syms;
  std::vector<Poly> a;  // a[1]..a[14]
  RatFn w1, w2;
  PhasePoly f;  // real chart
};

CorInput symbolic_quadratic_input() {
  CorInput in;
  in.syms.add("w1", SymbolKind::Frequency);
  in.syms.add("w2", SymbolKind::Frequency);
  for (int i = 1; i <= 14; ++i) in.syms.add("a" + std::to_string(i), SymbolKind::Coefficient);
  const int nv = in.syms.num_vars();
  in.w1 = RatFn(Poly::variable(nv, 0));
  in.w2 = RatFn(Poly::variable(nv, 1));
  in.a.resize(15, Poly(nv));
  for (int i = 1; i <= 14; ++i) in.a[static_cast<std::size_t>(i)] = Poly::variable(nv, i + 1);

  auto t = [&](int i, PhaseKey k) { in.f.add_term(k, RatFn(in.a[static_cast<std::size_t>(i)])); };
  t(1, {1, 0, 0, 0});
  t(2, {0, 1, 0, 0});
  t(3, {0, 0, 1, 0});
  t(4, {0, 0, 0, 1});
  t(5, {2, 0, 0, 0});
  t(6, {1, 1, 0, 0});
  t(7, {1, 0, 1, 0});
  t(8, {1, 0, 0, 1});
  t(9, {0, 2, 0, 0});
  t(10, {0, 1, 1, 0});
  t(11, {0, 1, 0, 1});
  t(12, {0, 0, 2, 0});
  t(13, {0, 0, 1, 1});
  t(14, {0, 0, 0, 2});
  return in;
}

}  // namespace

// --- Independent vector-field calculus, proved before it is used as a judge.

TEST_CASE("field bracket is antisymmetric and satisfies Jacobi") {
  for (int it = 0; it < 25; ++it) {
    VField u = rand_field(2, 3), v = rand_field(2, 3), w = rand_field(2, 3);
    CHECK(vf_eq(vf_bracket(u, v), vf_scale(vf_bracket(v, u), RatFn(-1))));
    VField sum = vf_bracket(u, vf_bracket(v, w));
    sum = vf_add(sum, vf_bracket(v, vf_bracket(w, u)));
    sum = vf_add(sum, vf_bracket(w, vf_bracket(u, v)));
    CHECK(vf_is_zero(sum));
  }
}

TEST_CASE("bracket of a radial piece with the linear rotation is radial") {
  for (int it = 0; it < 10; ++it) {
    PhasePoly h = rand_phase(3, 4);
    VField lhs = vf_bracket(vf_euler(h), vf_linear(kW1, kW2));
    VField rhs = vf_euler(rotation_derivative(h, kW1, kW2));
    CHECK(vf_eq(lhs, rhs));
  }
}

TEST_CASE("bracket of two radial pieces stays radial") {
  for (int it = 0; it < 10; ++it) {
    PhasePoly h = rand_phase(2, 3), f = rand_phase(2, 3);
    VField lhs = vf_bracket(vf_euler(h), vf_euler(f));
    PhasePoly scalar = f.times(euler_derivative(h)) - h.times(euler_derivative(f));
    CHECK(vf_eq(lhs, vf_euler(scalar)));
  }
}

TEST_CASE("component fields reproduce the algebra's structure constants") {
  std::vector<BasisElem> picks = {BasisElem::E(0, 0),  BasisElem::E(1, 0),  BasisElem::E(2, 1),
                                  BasisElem::T1(0, 0), BasisElem::T1(1, 1), BasisElem::T2(0, 2),
                                  BasisElem::T2(1, 0)};
  for (const auto& x : picks) {
    for (const auto& y : picks) {
      LVec lx = LVec::term(x, RatFn(1)), ly = LVec::term(y, RatFn(1));
      VField want = vf_from_lvec(bracket(lx, ly));
      VField got = vf_bracket(vf_basis(x, RatFn(1)), vf_basis(y, RatFn(1)));
      CHECK(vf_eq(got, want));
    }
  }
}

TEST_CASE("exp(ad) of a radial generator moves the linear field one step") {
  // The second bracket [E_h, [E_h, linear]] vanishes for homogeneous h, so
  // the series stops after one term.
  PhasePoly h = rand_phase(2, 3).homogeneous_part(2);
  VField got = vf_exp_ad(vf_euler(h), vf_linear(kW1, kW2), 9);
  VField want = vf_add(vf_linear(kW1, kW2), vf_euler(rotation_derivative(h, kW1, kW2)));
  CHECK(vf_eq(got, want));
}

// --- Chart change.

TEST_CASE("real chart converts to the complex chart") {
  PhasePoly x1 = PhasePoly::variable(0);
  PhasePoly half_sum = PhasePoly::monomial({1, 0, 0, 0}, RatFn(GaussRat{BigRat(1, 2)}));
  half_sum.add_term({0, 1, 0, 0}, RatFn(GaussRat{BigRat(1, 2)}));
  CHECK(real_to_complex(x1) == half_sum);

  PhasePoly r1sq;  // x1^2 + y1^2
  r1sq.add_term({2, 0, 0, 0}, RatFn(1));
  r1sq.add_term({0, 2, 0, 0}, RatFn(1));
  CHECK(real_to_complex(r1sq) == PhasePoly::monomial({1, 1, 0, 0}, RatFn(1)));

  SymbolTable syms;
  syms.add("a5", SymbolKind::Coefficient);
  syms.add("a9", SymbolKind::Coefficient);
  Poly a5 = Poly::variable(2, 0), a9 = Poly::variable(2, 1);
  PhasePoly quad;
  quad.add_term({2, 0, 0, 0}, RatFn(a5));
  quad.add_term({0, 2, 0, 0}, RatFn(a9));
  PhasePoly want;
  want.add_term({2, 0, 0, 0}, RatFn((a5 - a9) * GaussRat{BigRat(1, 4)}));
  want.add_term({1, 1, 0, 0}, RatFn((a5 + a9) * GaussRat{BigRat(1, 2)}));
  want.add_term({0, 2, 0, 0}, RatFn((a5 - a9) * GaussRat{BigRat(1, 4)}));
  CHECK(real_to_complex(quad) == want);

  for (int it = 0; it < 20; ++it) {
    PhasePoly real = rand_phase(4, 5, /*complex_ok=*/false);
    CHECK(real_to_complex(real).conjugation_symmetric());
  }
}

// --- Elimination generators.

TEST_CASE("degree-one generator matches the closed form") {
  SymbolTable syms;
  syms.add("w1", SymbolKind::Frequency);
  syms.add("w2", SymbolKind::Frequency);
  for (int i = 1; i <= 4; ++i) syms.add("A" + std::to_string(i), SymbolKind::Coefficient);
  RatFn w1{Poly::variable(6, 0)}, w2{Poly::variable(6, 1)};
  std::array<RatFn, 4> A;
  for (int i = 0; i < 4; ++i) A[static_cast<std::size_t>(i)] = RatFn(Poly::variable(6, i + 2));

  PhasePoly f;
  f.add_term({1, 0, 0, 0}, A[0]);
  f.add_term({0, 1, 0, 0}, A[1]);
  f.add_term({0, 0, 1, 0}, A[2]);
  f.add_term({0, 0, 0, 1}, A[3]);

  const RatFn i_unit{GaussRat::i()};
  PhasePoly want;
  want.add_term({1, 0, 0, 0}, A[0] * i_unit / w1);
  want.add_term({0, 1, 0, 0}, -(A[1] * i_unit / w1));
  want.add_term({0, 0, 1, 0}, A[2] * i_unit / w2);
  want.add_term({0, 0, 0, 1}, -(A[3] * i_unit / w2));
  CHECK(generator_h(f, 1, w1, w2) == want);
}

TEST_CASE("matched-exponent monomials produce no generator") {
  PhasePoly f = PhasePoly::monomial({1, 1, 0, 0}, RatFn(5));
  f.add_term({1, 1, 1, 1}, RatFn(3));
  CHECK(generator_h(f, 2, kW1, kW2).is_zero());
  CHECK(generator_h(f, 4, kW1, kW2).is_zero());
}

TEST_CASE("degree-two generator divides by the paired frequency combination") {
  SymbolTable syms;
  syms.add("w1", SymbolKind::Frequency);
  syms.add("w2", SymbolKind::Frequency);
  syms.add("A5", SymbolKind::Coefficient);
  syms.add("A7", SymbolKind::Coefficient);
  syms.add("A8", SymbolKind::Coefficient);
  RatFn w1{Poly::variable(5, 0)}, w2{Poly::variable(5, 1)};
  RatFn A5{Poly::variable(5, 2)}, A7{Poly::variable(5, 3)}, A8{Poly::variable(5, 4)};

  PhasePoly f;
  f.add_term({2, 0, 0, 0}, A5);
  f.add_term({1, 0, 1, 0}, A7);
  f.add_term({1, 0, 0, 1}, A8);

  const RatFn i_unit{GaussRat::i()};
  PhasePoly want;
  want.add_term({2, 0, 0, 0}, A5 * i_unit / (w1 * 2));
  want.add_term({1, 0, 1, 0}, A7 * i_unit / (w1 + w2));
  want.add_term({1, 0, 0, 1}, A8 * i_unit / (w1 - w2));
  CHECK(generator_h(f, 2, w1, w2) == want);
}

TEST_CASE("exact numeric resonance raises an error") {
  // With w1 = 2 w2 the monomial w1^2 z2 has divisor -2 w1 + ... = 0? Use
  // (d1, d2) = (-2, 1): -2*1 + 1*2 = 0 for (w1, w2) = (1, 2).
  PhasePoly f = PhasePoly::monomial({0, 2, 1, 0}, RatFn(1));
  CHECK_THROWS_AS(generator_h(f, 3, RatFn(1), RatFn(2)), std::domain_error);
  CHECK_NOTHROW(generator_h(f, 3, kW1, kW2));
}

TEST_CASE("the degree-one step cancels the linear part exactly") {
  for (int it = 0; it < 10; ++it) {
    PhasePoly f = rand_phase(3, 6, /*complex_ok=*/false);
    PhasePoly fc = real_to_complex(f);
    PhasePoly h1 = generator_h(fc, 1, kW1, kW2);
    CHECK(rotation_derivative(h1, kW1, kW2) == -fc.homogeneous_part(1));
  }
}

// --- Pushforward.

TEST_CASE("two normalization steps reproduce the quadratic-input product expansion") {
  CorInput in = symbolic_quadratic_input();
  PhasePoly f0 = real_to_complex(in.f);
  PhasePoly f02 = f0.homogeneous_part(2);

  PhasePoly h1 = generator_h(f0, 1, in.w1, in.w2);
  PhasePoly f1 = pushforward(f0, h1, 1, 6, in.w1, in.w2);
  PhasePoly h2 = generator_h(f1, 2, in.w1, in.w2);
  PhasePoly f2 = pushforward(f1, h2, 2, 6, in.w1, in.w2);

  // Matched-exponent remainder of the quadratic part.
  PhasePoly res;
  res.add_term({1, 1, 0, 0}, f02.coeff({1, 1, 0, 0}));
  res.add_term({0, 0, 1, 1}, f02.coeff({0, 0, 1, 1}));

  PhasePoly want = res;
  want -= h1.times(f02, 6);
  want += h1.times(h2, 6).times(f02, 6);
  want += h1.pow(2, 6).times(f02, 6);
  want -= h1.pow(2, 6).times(h2, 6).times(f02, 6) * RatFn(2);
  want -= h1.pow(3, 6).times(f02, 6);
  want += h1.pow(4, 6).times(f02, 6);
  CHECK(f2 == want);
}

TEST_CASE("zero input stays zero") {
  FirstLevelOutput out = first_level(PhasePoly(), 2, kW1, kW2);
  LVec v0 = LVec::term(BasisElem::T1(0, 0), kW1);
  v0.add_term(BasisElem::T2(0, 0), kW2);
  CHECK(out.normalForm == v0);
  CHECK(out.finalScalar.is_zero());
}

// --- Coefficient extraction.

TEST_CASE("extraction requires the lower degrees to be finished") {
  CorInput in = symbolic_quadratic_input();
  PhasePoly f0 = real_to_complex(in.f);
  CHECK_THROWS_WITH_AS(extract_coeff(f0, 1, 0), "normalization incomplete at grade 2",
                       std::runtime_error);
  CHECK(extract_coeff(PhasePoly(), 3, 1).is_zero());
}

TEST_CASE("quadratic input yields the closed-form resonant coefficients") {
  CorInput in = symbolic_quadratic_input();
  const int nv = in.syms.num_vars();
  auto a = [&](int i) { return in.a[static_cast<std::size_t>(i)]; };
  Poly w1p = Poly::variable(nv, 0);

  FirstLevelOutput out = first_level(in.f, 2, in.w1, in.w2);

  RatFn b10 = out.normalForm.coeff(BasisElem::E(1, 0));
  RatFn b01 = out.normalForm.coeff(BasisElem::E(0, 1));
  CHECK(b10 == RatFn((a(5) + a(9)) * GaussRat{BigRat(1, 2)}));
  CHECK(b01 == RatFn((a(12) + a(14)) * GaussRat{BigRat(1, 2)}));

  Poly num20 = a(5) * a(1) * a(1) + a(5) * a(2) * a(2) * GaussRat{3} -
               a(6) * a(1) * a(2) * GaussRat{2} + a(9) * a(1) * a(1) * GaussRat{3} +
               a(9) * a(2) * a(2);
  CHECK(out.normalForm.coeff(BasisElem::E(2, 0)) == RatFn(num20, w1p * w1p * GaussRat{8}));
}

// --- Whole-pipeline properties.

TEST_CASE("resonant real input is already normal") {
  SymbolTable syms;
  syms.add("c1", SymbolKind::Coefficient);
  syms.add("c2", SymbolKind::Coefficient);
  Poly c1 = Poly::variable(2, 0), c2 = Poly::variable(2, 1);
  // f = c1 (x1^2+y1^2) + c2 (x1^2+y1^2)(x2^2+y2^2)
  PhasePoly f;
  f.add_term({2, 0, 0, 0}, RatFn(c1));
  f.add_term({0, 2, 0, 0}, RatFn(c1));
  for (PhaseKey k : {PhaseKey{2, 0, 2, 0}, PhaseKey{2, 0, 0, 2}, PhaseKey{0, 2, 2, 0},
                     PhaseKey{0, 2, 0, 2}}) {
    f.add_term(k, RatFn(c2));
  }
  FirstLevelOutput out = first_level(f, 2, kW1, kW2);
  CHECK(out.normalForm.coeff(BasisElem::E(1, 0)) == RatFn(c1));
  CHECK(out.normalForm.coeff(BasisElem::E(1, 1)) == RatFn(c2));
  CHECK(out.normalForm.coeff(BasisElem::E(0, 1)).is_zero());
  for (const PhasePoly& h : out.generators) CHECK(h.is_zero());
}

TEST_CASE("random real inputs give real matched coefficients and no odd terms") {
  for (int it = 0; it < 6; ++it) {
    PhasePoly f = rand_phase(4, 8, /*complex_ok=*/false);
    f.add_term({0, 0, 0, 0}, -f.coeff({0, 0, 0, 0}));  // drop any constant term
    const int n = 2;
    FirstLevelOutput out = first_level(f, n, kW1, kW2);
    for (const auto& [b, c] : out.normalForm.terms()) {
      CHECK(c.conj() == c);
    }
    for (int d = 1; d < 2 * n; d += 2) {
      CHECK(out.finalScalar.homogeneous_part(d).is_zero());
    }
    CHECK(out.finalScalar.conjugation_symmetric());
  }
}

TEST_CASE("logged generators conjugate the input onto the normal form") {
  for (int it = 0; it < 6; ++it) {
    const int n = (it % 2) ? 3 : 2;
    const int componentCap = 2 * n + 2;
    PhasePoly f = rand_phase(2 * n, 7, /*complex_ok=*/false);
    f.add_term({0, 0, 0, 0}, -f.coeff({0, 0, 0, 0}));

    FirstLevelOutput out = first_level(f, n, kW1, kW2);

    VField field = vf_add(vf_linear(kW1, kW2), vf_euler(real_to_complex(f)));
    field = vf_truncated(field, componentCap);
    for (std::size_t k = 0; k < out.generators.size(); ++k) {
      if (out.generators[k].is_zero()) continue;
      field = vf_exp_ad(vf_euler(out.generators[k]), field, componentCap);
    }
    VField want = vf_add(vf_linear(kW1, kW2), vf_euler(out.finalScalar));
    CHECK(vf_eq(field, want));
  }
}

TEST_CASE("frequency pairs are certified against divisor collapse") {
  CHECK(nonresonant_up_to(BigRat(11, 3), BigRat(13, 5), 7));
  CHECK_FALSE(nonresonant_up_to(BigRat(1), BigRat(2), 3));
  CHECK_FALSE(nonresonant_up_to(BigRat(3, 2), BigRat(3, 2), 1));
}
