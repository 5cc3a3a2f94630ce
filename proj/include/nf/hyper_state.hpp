// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nf/classify.hpp"
#include "nf/lie.hpp"

#include <string>
#include <vector>

namespace nf {

// One recorded stage of the state-space reduction: a nonlinear generator
// applied to the field through the exponential of its adjoint action.
// Invariant: applying the step changes graded components only from `grade`
// upward, where grades are measured in `grading` — except possibly inside a
// rotational family that the producing stage keeps whole (such a family is
// never cleaned, so movement inside it cannot undo an elimination).
struct GeneratorStep {
  int grade = 0;    // lowest graded component the step may alter
  Grading grading;  // grading in force when the step was produced
  LVec stateGen;    // the generator; every term has index sum >= 1
};

// How far the reduction has been driven.
enum class LevelTag { First, SPlusOne, RPlusOne, Infinite };

const char* level_tag_name(LevelTag t);

// Family of exact symmetry generators the reduced field is known to admit.
enum class SymmetryClass {
  None,       // no nonlinear symmetry generators are recorded
  GradeSRow,  // the whole leading Eulerian row commutes with the field
  Radical,    // every nonlinear rotational basis element commutes
};

struct NormalFormResult {
  LevelTag level = LevelTag::First;
  LVec field;                        // reduced field, truncated at degree N
  Classification cls;                // structural indices driving the run
  std::vector<GeneratorStep> steps;  // replaying them on the input gives field
  std::vector<BasisElem> survivors;  // terms that may appear in field
  int truncationDegree = 0;
  bool infiniteCertified = false;  // no deeper level can simplify further
  bool degreeCaveat = false;       // verdict rests on absences up to degree N
  SymmetryClass symmetryClass = SymmetryClass::None;
  std::string note;
};

// exp(ad_S) applied to v, expanded term by term and truncated at total index
// degree N.  Requires every term of S to have index sum >= 1 (which makes
// the series finite under truncation).
LVec exp_ad_apply(const LVec& S, const LVec& v, int N);

// True when every term of v with a nonzero coefficient lies in the family.
bool support_within(const LVec& v, const std::vector<BasisElem>& family);

// Second-level reduction of a field v1 = linear rotation + nonlinear terms
// whose leading Eulerian row sits at grade s with pivot offset p (coefficient
// of E[s-p,p] nonzero).  Sweeps ascending graded components, eliminating the
// reachable staircase band at every grade above s; rows below the pivot
// offset and beyond each band survive untouched in support.
NormalFormResult level_s_plus_1(const LVec& v1, int s, int p, int N);

// Third-level reduction on top of a second-level result, driven by the next
// Eulerian row at grade r with pivot offset q.  Performs the single coupling
// grade r+s elimination (both generator rows act there) and then re-cleans
// all higher grades.  When the coupling-grade matrix has full rank r+s+1 the
// result is already final and is tagged Infinite.
NormalFormResult level_r_plus_1(const NormalFormResult& prev, int r, int q,
                                int N);

// Full driver: detects the structural indices of v1 and runs the deepest
// applicable reduction, tagging the result and recording the surviving
// families.  Verdicts that rest on a failed detection below the truncation
// bound carry degreeCaveat = true.
NormalFormResult infinite_level(const LVec& v1, int N);

// The exact nonlinear symmetry generators recorded for the result's
// SymmetryClass.  Every returned generator g satisfies
// bracket(g, res.field) == 0 identically (this is re-checked and a violation
// throws).  Empty when the class is None.
std::vector<LVec> symmetry_generators(const NormalFormResult& res);

}  // namespace nf
