// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nf/hyper_state.hpp"

#include <string>
#include <vector>

namespace nf {

// One recorded stage of the orbital reduction: a time-rescale part and a
// state-flow part applied together, as the exponential of the combined
// derivation w -> timeGen*w + [stateGen, w].  That exponential is the action
// of a genuine orbital transformation (a near-identity time rescale composed
// with a near-identity change of state coordinates).  Invariant: the step
// changes graded components only from `grade` upward in `grading`.
struct OrbitalStep {
  int grade = 0;     // lowest graded component the step may alter
  Grading grading;   // grading in force when the step was produced
  TimeGen timeGen;   // rescale part; every term has index sum >= 1
  LVec stateGen;     // flow part; every term has index sum >= 1
  bool coupled = false;  // a locked rescale/flow pair contributed
};

struct OrbitalResult {
  LevelTag level = LevelTag::First;
  LVec field;                      // reduced field, truncated at degree N
  Classification cls;              // structural indices driving the run
  std::vector<OrbitalStep> steps;  // replaying them on the input gives field
  std::vector<BasisElem> survivors;
  int truncationDegree = 0;
  bool infiniteCertified = false;  // no deeper level can simplify further
  bool degreeCaveat = false;       // verdict rests on absences up to degree N
  SymmetryClass symmetryClass = SymmetryClass::None;
  std::string note;
};

// Applies one recorded step to a field: the exponential of the combined
// derivation w -> timeGen*w + [stateGen, w], truncated at total index
// degree N throughout.  For a locked rescale/flow pair the two first-order
// actions cancel on the leading row inside the derivation itself, so every
// term of the series respects the step's grade invariant.
LVec apply_orbital_step(const OrbitalStep& st, const LVec& v, int N);

// Second-level orbital reduction of a field v1 = linear rotation + nonlinear
// terms whose leading Eulerian row sits at grade s with pivot offset p.
// Besides the state-space eliminations, the time-rescale capacity of each
// stage is spent on the first rotational family, which is eliminated at
// every grade except the doubled one; at the doubled grade that capacity
// falls on the leading Eulerian row instead and removes its reachable band.
// The second rotational family keeps its side bands.
OrbitalResult orbital_s_plus_1(const LVec& v1, int s, int p, int N);

// Third-level orbital reduction on top of a second-level orbital result,
// driven by the next Eulerian row at grade r with pivot offset q.  Each
// stage adds locked rescale/flow pairs that cancel on the leading row and
// fire on the deeper one, widening the eliminated span of every Eulerian
// row; with a full-rank coupling grade and pivot offsets in the right order
// the result is final and is tagged Infinite.
OrbitalResult orbital_r_plus_1(const OrbitalResult& prev, int r, int q,
                               int N);

// Full driver: detects the structural indices of v1 and runs the deepest
// applicable orbital reduction.  A field with no Eulerian content gets its
// first rotational family annihilated by pure rescales and is then handed
// to the state-space driver.  Verdicts that rest on a failed detection
// below the truncation bound carry degreeCaveat = true.
OrbitalResult orbital_infinite(const LVec& v1, int N);

}  // namespace nf
