// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#include "nf/hyper_orbital.hpp"

#include "nf/matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace nf {

namespace {

const Grading kPhysical{};  // grade == index sum for every family

// All basis elements of stage grade `gg` with index sum between 1 and N,
// listed in elimination order: Eulerian first, then each rotational family,
// second index ascending.  The order decides where rescale capacity lands
// when a column touches several families: Eulerian rows take precedence,
// then the first rotational family.
std::vector<BasisElem> coord_rows(int gg, const Grading& g, int N) {
  std::vector<BasisElem> rows;
  if (gg >= 1 && gg <= N) {
    for (int j = 0; j <= gg; ++j) rows.push_back(BasisElem::E(gg - j, j));
  }
  const int t = gg - g.thetaOffset;  // rotational index sum at this grade
  if (t >= 1 && t <= N) {
    for (int j = 0; j <= t; ++j) rows.push_back(BasisElem::T1(t - j, j));
    for (int j = 0; j <= t; ++j) rows.push_back(BasisElem::T2(t - j, j));
  }
  return rows;
}

std::vector<RatFn> coords_of(const LVec& w, const std::vector<BasisElem>& rows) {
  std::vector<RatFn> c;
  c.reserve(rows.size());
  for (const BasisElem& b : rows) c.push_back(w.coeff(b));
  return c;
}

int min_stage_grade(const LVec& v, const Grading& g) {
  int best = -1;
  for (const auto& [b, c] : v.terms()) {
    (void)c;
    const int gr = grade_of(b, g);
    if (best < 0 || gr < best) best = gr;
  }
  return best;  // -1 for the zero vector
}

// A candidate generator for one stage: a time-rescale part and a state-flow
// part.  A locked (coupled) pair carries both, scaled so their first-order
// actions cancel on the leading Eulerian row and fire only deeper.
struct GenPair {
  TimeGen time;
  LVec state;
  bool coupled = false;
};

// The exponential of the combined derivation w -> T*w + [S, w], truncated
// at total index degree N.  Every term of T and S raises the index sum by
// at least one, so the series terminates under truncation.
LVec exp_pair_apply(const TimeGen& T, const LVec& S, const LVec& v, int N) {
  for (const auto& [mn, c] : T.terms()) {
    (void)c;
    if (mn.first + mn.second < 1) {
      throw std::logic_error(
          "orbital reduction: rescale generator has a constant term");
    }
  }
  for (const auto& [b, c] : S.terms()) {
    (void)c;
    if (b.index_sum() < 1) {
      throw std::logic_error(
          "orbital reduction: flow generator has a linear or constant term " +
          b.str());
    }
  }
  LVec w = truncated(v, N, kPhysical);
  LVec term = w;
  for (long k = 1;; ++k) {
    term = truncated(combined_action(T, S, term), N, kPhysical);
    if (term.is_zero()) break;
    term *= RatFn(1) / RatFn(k);
    w += term;
  }
  return w;
}

// Second indices of the Eulerian coordinates each stage's column space can
// reach (the pivot rows of its elimination), keyed by stage grade.
using ReachedE = std::map<int, std::vector<int>>;

// Elimination pass at one target grade: the candidate pairs act on the
// current field through the combined derivation, the resulting columns span
// what the grade can lose, and the recorded step is the combination that
// zeroes every reachable coordinate.
void run_orbital_stage(LVec& v, int gg, const Grading& g, int N,
                       const std::vector<GenPair>& gens,
                       std::vector<OrbitalStep>& steps, ReachedE* reached) {
  const std::vector<BasisElem> rows = coord_rows(gg, g, N);
  if (rows.empty() || gens.empty()) return;

  ColumnSpace space(static_cast<int>(rows.size()));
  for (const GenPair& gp : gens) {
    const LVec image =
        truncated(combined_action(gp.time, gp.state, v), N, kPhysical);
    // A pair must not disturb anything below the grade it targets; the
    // grading, the field's graded support, and the locked-pair cancellation
    // guarantee it, and a violation means the caller classified the field
    // incorrectly.
    const int lowest = min_stage_grade(image, g);
    if (lowest >= 0 && lowest < gg) {
      throw std::logic_error(
          "orbital reduction: a generator pair disturbs a graded component "
          "below its target; classification inconsistent with the field");
    }
    space.insert(coords_of(graded_part(image, gg, g), rows));
  }

  if (reached != nullptr) {
    std::vector<int>& cols = (*reached)[gg];
    for (int row : space.profile()) {
      const BasisElem& b = rows[static_cast<std::size_t>(row)];
      if (b.fam == Family::E) cols.push_back(b.n);
    }
  }

  std::vector<RatFn> target = coords_of(graded_part(v, gg, g), rows);
  const std::vector<RatFn> combo = space.reduce(target);

  TimeGen T;
  LVec S;
  bool coupled = false;
  for (std::size_t i = 0; i < combo.size(); ++i) {
    if (combo[i].is_zero()) continue;
    const RatFn c = RatFn(0) - combo[i];
    if (!gens[i].time.is_zero()) {
      TimeGen t = gens[i].time;
      t *= c;
      T += t;
    }
    if (!gens[i].state.is_zero()) S += gens[i].state * c;
    if (gens[i].coupled) coupled = true;
  }
  if (T.is_zero() && S.is_zero()) return;
  v = exp_pair_apply(T, S, v, N);
  steps.push_back(OrbitalStep{gg, g, std::move(T), std::move(S), coupled});
}

// ---------------------------------------------------------------------------
// Candidate pools.

void push_flow_gens(std::vector<GenPair>& gens, int idx, int N) {
  if (idx < 1 || idx > N) return;
  for (int j = 0; j <= idx; ++j) {
    GenPair gp;
    gp.state = LVec::term(BasisElem::E(idx - j, j), RatFn(1));
    gens.push_back(std::move(gp));
  }
}

void push_time_gens(std::vector<GenPair>& gens, int idx, int N) {
  if (idx < 1 || idx > N) return;
  for (int j = 0; j <= idx; ++j) {
    GenPair gp;
    gp.time = TimeGen::term(idx - j, j, RatFn(1));
    gens.push_back(std::move(gp));
  }
}

void push_theta_gens(std::vector<GenPair>& gens, int idx, int N) {
  if (idx < 1 || idx > N) return;
  for (int j = 0; j <= idx; ++j) {
    GenPair gp;
    gp.state = LVec::term(BasisElem::T1(idx - j, j), RatFn(1));
    gens.push_back(std::move(gp));
  }
  for (int j = 0; j <= idx; ++j) {
    GenPair gp;
    gp.state = LVec::term(BasisElem::T2(idx - j, j), RatFn(1));
    gens.push_back(std::move(gp));
  }
}

// Locked rescale/flow pairs of one index row: scaled so the rescale of the
// leading row cancels the flow's bracket with it exactly.  At idx == s the
// rescale factor vanishes and the pair degenerates to a plain flow
// generator.
void push_ray_gens(std::vector<GenPair>& gens, int idx, int s, int N) {
  if (idx < 1 || idx > N) return;
  const RatFn c(2 * (s - idx));
  for (int j = 0; j <= idx; ++j) {
    GenPair gp;
    gp.state = LVec::term(BasisElem::E(idx - j, j), RatFn(1));
    if (idx != s) {
      gp.time = TimeGen::term(idx - j, j, c);
      gp.coupled = true;
    }
    gens.push_back(std::move(gp));
  }
}

// ---------------------------------------------------------------------------
// Surviving-term families, written exactly as the level analyses bound them.

void add_e_band(std::set<BasisElem>& fam, int rowSum, int jLo, int jHi,
                int N) {
  if (rowSum < 1 || rowSum > N) return;
  jLo = std::max(jLo, 0);
  jHi = std::min(jHi, rowSum);
  for (int j = jLo; j <= jHi; ++j) fam.insert(BasisElem::E(rowSum - j, j));
}

void add_t_band(std::set<BasisElem>& fam, int i, int rowSum, int jLo, int jHi,
                int N) {
  if (rowSum < 0 || rowSum > N) return;
  jLo = std::max(jLo, 0);
  jHi = std::min(jHi, rowSum);
  for (int j = jLo; j <= jHi; ++j) {
    fam.insert(i == 1 ? BasisElem::T1(rowSum - j, j)
                      : BasisElem::T2(rowSum - j, j));
  }
}

void add_linear_rotation(std::set<BasisElem>& fam) {
  fam.insert(BasisElem::T1(0, 0));
  fam.insert(BasisElem::T2(0, 0));
}

// Rotational rows kept by the second rotational family (and, at the third
// level, by both): everything through row s, then two side bands on each
// higher row.  Side positions of a higher row are out of reach of every
// rotational generator, and the rescale residue of the locked pairs can
// repopulate them, so they stay in the bound for both families.
void add_theta_staircase(std::set<BasisElem>& fam, int i, int s, int p,
                         int N) {
  for (int t = 1; t <= std::min(s, N); ++t) add_t_band(fam, i, t, 0, t, N);
  for (int t = s + 1; t <= N; ++t) {
    add_t_band(fam, i, t, 0, p - 1, N);
    add_t_band(fam, i, t, (t - s) + p + 1, t, N);
  }
}

// Support bound after the second orbital level: the rescale capacity kills
// the first rotational family everywhere except row s, and at the doubled
// grade it kills the leading band of Eulerian row 2s instead.
std::vector<BasisElem> family_orbital_second(int s, int p, int N) {
  std::set<BasisElem> fam;
  add_linear_rotation(fam);
  add_e_band(fam, s, p, s, N);
  for (int gg = s + 1; gg <= N; ++gg) {
    add_e_band(fam, gg, 0, p - 1, N);
    add_e_band(fam, gg, (gg - s) + p + 1, gg, N);
  }
  add_t_band(fam, 1, s, 0, s, N);  // the doubled-grade exception
  add_theta_staircase(fam, 2, s, p, N);
  return {fam.begin(), fam.end()};
}

// Support bound when no second Eulerian row exists: as above with every
// higher Eulerian row absent.
std::vector<BasisElem> family_orbital_single_row(int s, int p, int N) {
  std::set<BasisElem> fam;
  add_linear_rotation(fam);
  add_e_band(fam, s, p, s, N);
  add_t_band(fam, 1, s, 0, s, N);
  add_theta_staircase(fam, 2, s, p, N);
  return {fam.begin(), fam.end()};
}

// Support bound after the third orbital level: each Eulerian row from r up
// keeps its second-level positions minus what the run's column spaces
// reached; rows strictly between s and r are absent; both rotational
// families are bounded by the staircase (the locked pairs' rescale residue
// can reach side positions of either family).
std::vector<BasisElem> family_orbital_third(int s, int p, int r, int N,
                                            const ReachedE& reached) {
  std::set<BasisElem> fam;
  add_linear_rotation(fam);
  add_e_band(fam, s, p, s, N);
  for (int row = r; row <= N; ++row) {
    std::set<int> cols;
    for (int j = 0; j <= std::min(p - 1, row); ++j) cols.insert(j);
    for (int j = std::max(0, (row - s) + p + 1); j <= row; ++j) cols.insert(j);
    const auto it = reached.find(row);
    if (it != reached.end()) {
      for (int j : it->second) cols.erase(j);
    }
    for (int j : cols) fam.insert(BasisElem::E(row - j, j));
  }
  add_theta_staircase(fam, 1, s, p, N);
  add_theta_staircase(fam, 2, s, p, N);
  return {fam.begin(), fam.end()};
}

void check_support(const LVec& v, const std::vector<BasisElem>& fam,
                   const char* where) {
  if (!support_within(v, fam)) {
    throw std::logic_error(std::string("orbital reduction: ") + where +
                           " left a term outside its surviving family");
  }
}

void require_nonzero_pivot(const LVec& v, const BasisElem& b,
                           const char* role) {
  if (v.coeff(b).is_zero()) {
    throw std::logic_error(std::string("orbital reduction: ") + role +
                           " coefficient of " + b.str() +
                           " vanishes; classification inconsistent");
  }
}

void require_no_radial_linear(const LVec& v) {
  if (!v.coeff(BasisElem::E(0, 0)).is_zero()) {
    throw std::logic_error(
        "orbital reduction: field carries a radial linear term E[0,0]; "
        "expected a rotational linear part only");
  }
}

std::vector<RatFn> e_row_coeffs(const LVec& v, int rowSum) {
  std::vector<RatFn> c;
  c.reserve(static_cast<std::size_t>(rowSum) + 1);
  for (int j = 0; j <= rowSum; ++j) {
    c.push_back(v.coeff(BasisElem::E(rowSum - j, j)));
  }
  return c;
}

void fill_aux_detections(Classification& cls, const LVec& field, int N) {
  const auto s1 = detect_si_pi(field, 1, N);
  cls.s1 = s1.first;
  cls.p1 = s1.second;
  const auto s2 = detect_si_pi(field, 2, N);
  cls.s2 = s2.first;
  cls.p2 = s2.second;
}

void fill_generic_gate(Classification& cls, const LVec& field) {
  cls.genericGate = generic_gate(
      field.coeff(BasisElem::E(1, 0)), field.coeff(BasisElem::E(0, 1)),
      field.coeff(BasisElem::E(1, 1)), field.coeff(BasisElem::E(2, 0)),
      field.coeff(BasisElem::E(0, 2)));
}

}  // namespace

LVec apply_orbital_step(const OrbitalStep& st, const LVec& v, int N) {
  return exp_pair_apply(st.timeGen, st.stateGen, v, N);
}

OrbitalResult orbital_s_plus_1(const LVec& v1, int s, int p, int N) {
  if (s < 1 || p < 0 || p > s || N < s) {
    throw std::invalid_argument("orbital_s_plus_1: bad indices");
  }
  LVec v = truncated(v1, N, kPhysical);
  require_no_radial_linear(v);
  require_nonzero_pivot(v, BasisElem::E(s - p, p), "leading-row pivot");

  OrbitalResult res;
  res.level = LevelTag::SPlusOne;
  res.truncationDegree = N;
  res.cls.s = ExtNat::finite(s);
  res.cls.p = ExtNat::finite(p);

  const Grading g{s, 0};
  for (int gg = s + 1; gg <= N + s; ++gg) {
    std::vector<GenPair> gens;
    push_flow_gens(gens, gg - s, N);
    push_time_gens(gens, gg - s, N);
    push_theta_gens(gens, gg - 2 * s, N);
    run_orbital_stage(v, gg, g, N, gens, res.steps, nullptr);
  }

  res.field = v;
  const auto rq = detect_r_q(v, s, N);
  res.cls.r = rq.first;
  res.cls.q = rq.second;
  fill_aux_detections(res.cls, v, N);
  if (s == 1) fill_generic_gate(res.cls, v);
  res.survivors = family_orbital_second(s, p, N);
  check_support(v, res.survivors, "second level");
  res.note =
      "rescale capacity annihilates the first rotational family except at "
      "row s; at the doubled grade it falls on the leading Eulerian row "
      "instead, whose reachable band is removed, and that row's remainder "
      "is kept for the deeper level";
  return res;
}

OrbitalResult orbital_r_plus_1(const OrbitalResult& prev, int r, int q,
                               int N) {
  if (!prev.cls.s.is_finite() || !prev.cls.p.is_finite()) {
    throw std::invalid_argument(
        "orbital_r_plus_1: input lacks resolved leading-row indices");
  }
  const int s = prev.cls.s.value();
  const int p = prev.cls.p.value();
  if (r <= s || q < 0 || q > r || N < r) {
    throw std::invalid_argument("orbital_r_plus_1: bad indices");
  }
  LVec v = truncated(prev.field, N, kPhysical);
  require_nonzero_pivot(v, BasisElem::E(s - p, p), "leading-row pivot");
  require_nonzero_pivot(v, BasisElem::E(r - q, q), "second-row pivot");
  for (int gg = s + 1; gg < r && gg <= N; ++gg) {
    for (int j = 0; j <= gg; ++j) {
      if (!v.coeff(BasisElem::E(gg - j, j)).is_zero()) {
        throw std::logic_error(
            "orbital reduction: an Eulerian row sits between the two "
            "leading rows; classification inconsistent");
      }
    }
  }

  OrbitalResult res;
  res.truncationDegree = N;
  res.cls = prev.cls;
  res.cls.r = ExtNat::finite(r);
  res.cls.q = ExtNat::finite(q);
  res.steps = prev.steps;

  // Rank of the coupling-grade pencil, from the field's two leading rows
  // before this level acts.
  const RFMatrix pencil =
      assemble_pencil(e_row_coeffs(v, r), e_row_coeffs(v, s), s, r, s);
  const int alpha = rf_rank(pencil);
  res.cls.alpha = alpha;

  const Grading g{r + s, 0};
  ReachedE reached;
  for (int gg = r + 1; gg <= N + r + s; ++gg) {
    std::vector<GenPair> gens;
    push_ray_gens(gens, gg - r, s, N);
    push_time_gens(gens, gg - s, N);
    push_theta_gens(gens, gg - r - 2 * s, N);
    run_orbital_stage(v, gg, g, N, gens, res.steps, &reached);
  }
  res.field = v;

  // Eliminations of each swept Eulerian row beyond the two base spans: the
  // leading band the plain rescales reach and the wedge the locked pairs
  // add below the pivot offset.
  for (const auto& [gg, cols] : reached) {
    const int l = gg - r;
    if (l < 1 || gg > N) continue;
    const int base = (gg - s + 1) + std::max(0, std::min(p - q, l + 1));
    res.cls.uTable[l] =
        std::max(0, static_cast<int>(cols.size()) - base);
  }

  if (alpha == r + s + 1 && p > q) {
    res.level = LevelTag::Infinite;
    res.infiniteCertified = true;
    res.symmetryClass = SymmetryClass::None;
    res.note =
        "coupling-grade elimination has full rank and the leading pivot "
        "offset exceeds the deeper one; no further orbital transformation "
        "can shrink the surviving support (the locked pairs' rescale "
        "residue on the rotational side positions is the price of the "
        "eliminated Eulerian rows and cannot be removed without undoing "
        "them)";
  } else {
    res.level = LevelTag::RPlusOne;
    res.infiniteCertified = false;
    res.symmetryClass = SymmetryClass::None;
    res.note =
        "coupling-grade elimination keeps a rank deficit or a reversed "
        "pivot-offset order; deeper levels are not attempted and the "
        "result is final as computed to degree " +
        std::to_string(N);
  }
  fill_aux_detections(res.cls, v, N);
  if (s == 1) fill_generic_gate(res.cls, v);
  res.survivors = family_orbital_third(s, p, r, N, reached);
  check_support(v, res.survivors, "third level");
  return res;
}

OrbitalResult orbital_infinite(const LVec& v1, int N) {
  if (N < 1) throw std::invalid_argument("orbital_infinite: bad degree");
  LVec v = truncated(v1, N, kPhysical);
  require_no_radial_linear(v);

  const auto sp = detect_s_p(v, N);
  if (sp.first.is_finite()) {
    const int s = sp.first.value();
    const int p = sp.second.value();
    OrbitalResult second = orbital_s_plus_1(v, s, p, N);
    if (second.cls.r.is_finite()) {
      return orbital_r_plus_1(second, second.cls.r.value(),
                              second.cls.q.value(), N);
    }
    // No second Eulerian row was detected through degree N.  With a single
    // Eulerian row the rescaled stage is already final: every deeper
    // orbital transformation acts trivially on it, whatever rotational
    // content remains.
    OrbitalResult res = std::move(second);
    res.degreeCaveat = true;
    res.level = LevelTag::Infinite;
    res.infiniteCertified = true;
    res.symmetryClass = SymmetryClass::None;
    res.survivors = family_orbital_single_row(s, p, N);
    check_support(res.field, res.survivors, "single-row verdict");
    res.note =
        "single Eulerian row: the rescaled stage is final regardless of the "
        "remaining rotational content (second Eulerian row undetected "
        "through degree " +
        std::to_string(N) + ")";
    return res;
  }

  // No Eulerian content at all: spend the rescale capacity annihilating the
  // first rotational family row by row, then hand what is left to the
  // state-space driver (rescales cannot touch it further, and rotational
  // flows act exactly as they do there).
  OrbitalResult res;
  res.truncationDegree = N;
  std::vector<OrbitalStep> pre;
  const Grading g0{};
  for (int gg = 1; gg <= N; ++gg) {
    std::vector<GenPair> gens;
    push_time_gens(gens, gg, N);
    run_orbital_stage(v, gg, g0, N, gens, pre, nullptr);
  }
  const NormalFormResult st = infinite_level(v, N);
  res.level = st.level;
  res.field = st.field;
  res.cls = st.cls;
  res.survivors = st.survivors;
  res.infiniteCertified = st.infiniteCertified;
  res.degreeCaveat = st.degreeCaveat;
  res.symmetryClass = st.symmetryClass;
  res.steps = std::move(pre);
  for (const GeneratorStep& gs : st.steps) {
    res.steps.push_back(
        OrbitalStep{gs.grade, gs.grading, TimeGen{}, gs.stateGen, false});
  }
  res.note =
      "no Eulerian content: rescales annihilate the reachable part of the "
      "first rotational family, then the state-space driver finishes (" +
      st.note + ")";
  return res;
}

}  // namespace nf
