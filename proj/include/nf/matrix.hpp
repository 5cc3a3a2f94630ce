// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nf/ratfn.hpp"

#include <vector>

namespace nf {

struct RFMatrix {
  int rows = 0, cols = 0;
  std::vector<RatFn> a;  // row-major

  RFMatrix() = default;
  RFMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}
  RatFn& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const RatFn& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

// Exact rank.  Denominators are cleared row by row, then a fraction-free
// elimination runs on the polynomial matrix (pivot: fewest terms, then
// lowest row and column, which keeps runs reproducible).
int rf_rank(const RFMatrix& m);

struct SolveResult {
  bool consistent = false;
  std::vector<RatFn> x;  // free variables set to zero
};

// Solves A x = b exactly; reports inconsistency instead of guessing.
SolveResult rf_solve(const RFMatrix& A, const std::vector<RatFn>& b);

// Incrementally built column space in reduced column-echelon form.  Each
// basis column remembers how it was formed from the inserted columns, so a
// target vector can be reduced and the combination recovered.
class ColumnSpace {
 public:
  explicit ColumnSpace(int rows) : rows_(rows) {}

  // Returns true when the column enlarged the space.
  bool insert(const std::vector<RatFn>& col);
  int rank() const { return static_cast<int>(basis_.size()); }
  int inserted() const { return inserted_; }
  // Pivot rows, ascending.  Row r appears iff some member of the space has
  // its first nonzero entry at r.
  std::vector<int> profile() const;

  // Subtracts the best combination of inserted columns from t, zeroing every
  // profile row.  Returns the coefficients, indexed like the insertions.
  std::vector<RatFn> reduce(std::vector<RatFn>& t) const;

 private:
  struct BasisCol {
    int pivot;
    std::vector<RatFn> col;    // 1 at pivot, 0 at every other basis pivot
    std::vector<RatFn> combo;  // expression of col over inserted columns
  };
  int rows_;
  int inserted_ = 0;
  std::vector<BasisCol> basis_;
};

}  // namespace nf
