// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#include "nf/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nf {

namespace {

Poly must_divide(const Poly& a, const Poly& b) {
  auto q = a.divided_exact(b);
  if (!q) throw std::logic_error("exact division failed in elimination");
  return *q;
}

}  // namespace

int rf_rank(const RFMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  int nv = 0;
  for (const auto& e : m.a) nv = std::max(nv, e.nvars());

  // Clear denominators row by row; rank is unchanged by nonzero row scaling.
  std::vector<std::vector<Poly>> p(m.rows, std::vector<Poly>(m.cols, Poly(nv)));
  for (int r = 0; r < m.rows; ++r) {
    Poly l = Poly::constant(nv, GaussRat{1});
    for (int c = 0; c < m.cols; ++c) {
      const Poly d = m.at(r, c).den().with_nvars(nv);
      Poly g = poly_gcd(l, d);
      l = g.is_constant() ? l * d : l * must_divide(d, g);
    }
    for (int c = 0; c < m.cols; ++c) {
      const RatFn& e = m.at(r, c);
      if (e.is_zero()) continue;
      p[r][c] = e.num().with_nvars(nv) * must_divide(l, e.den().with_nvars(nv));
    }
  }

  Poly prev = Poly::constant(nv, GaussRat{1});
  int rank = 0;
  const int maxr = std::min(m.rows, m.cols);
  while (rank < maxr) {
    int br = -1, bc = -1;
    std::size_t best = 0;
    for (int r = rank; r < m.rows; ++r)
      for (int c = rank; c < m.cols; ++c) {
        if (p[r][c].is_zero()) continue;
        std::size_t t = p[r][c].num_terms();
        if (br < 0 || t < best) {
          br = r;
          bc = c;
          best = t;
        }
      }
    if (br < 0) break;
    std::swap(p[rank], p[br]);
    if (bc != rank)
      for (int r = 0; r < m.rows; ++r) std::swap(p[r][rank], p[r][bc]);
    for (int r = rank + 1; r < m.rows; ++r) {
      for (int c = rank + 1; c < m.cols; ++c)
        p[r][c] = must_divide(p[r][c] * p[rank][rank] - p[r][rank] * p[rank][c], prev);
      p[r][rank] = Poly(nv);
    }
    prev = p[rank][rank];
    ++rank;
  }
  return rank;
}

SolveResult rf_solve(const RFMatrix& A, const std::vector<RatFn>& b) {
  if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("rhs size mismatch");
  RFMatrix m = A;
  std::vector<RatFn> rhs = b;
  int row = 0;
  std::vector<std::pair<int, int>> pivots;  // (row, col)
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    std::size_t best = 0;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col).is_zero()) continue;
      std::size_t t = m.at(r, col).num().num_terms() + m.at(r, col).den().num_terms();
      if (pr < 0 || t < best) {
        pr = r;
        best = t;
      }
    }
    if (pr < 0) continue;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(pr, c));
    std::swap(rhs[row], rhs[pr]);
    RatFn inv = m.at(row, col).inverse();
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    rhs[row] *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      RatFn f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
      rhs[r] -= f * rhs[row];
    }
    pivots.emplace_back(row, col);
    ++row;
  }
  SolveResult out;
  for (int r = row; r < m.rows; ++r)
    if (!rhs[r].is_zero()) return out;  // consistent stays false
  out.consistent = true;
  out.x.assign(m.cols, RatFn{});
  for (auto [r, c] : pivots) out.x[c] = rhs[r];
  return out;
}

bool ColumnSpace::insert(const std::vector<RatFn>& col) {
  if (static_cast<int>(col.size()) != rows_) throw std::invalid_argument("column size mismatch");
  const int self = inserted_++;
  std::vector<RatFn> t = col;
  std::vector<RatFn> combo(inserted_, RatFn{});
  combo[self] = RatFn{1};
  for (const auto& bc : basis_) {
    RatFn c = t[bc.pivot];
    if (c.is_zero()) continue;
    for (int r = 0; r < rows_; ++r)
      if (!bc.col[r].is_zero()) t[r] -= c * bc.col[r];
    for (std::size_t k = 0; k < bc.combo.size(); ++k)
      if (!bc.combo[k].is_zero()) combo[k] -= c * bc.combo[k];
  }
  int pivot = -1;
  for (int r = 0; r < rows_; ++r)
    if (!t[r].is_zero()) {
      pivot = r;
      break;
    }
  if (pivot < 0) return false;

  RatFn inv = t[pivot].inverse();
  for (auto& e : t) e *= inv;
  for (auto& e : combo) e *= inv;

  // Keep the basis fully reduced: existing columns lose their row-pivot entry.
  for (auto& bc : basis_) {
    RatFn c = bc.col[pivot];
    if (c.is_zero()) continue;
    for (int r = 0; r < rows_; ++r)
      if (!t[r].is_zero()) bc.col[r] -= c * t[r];
    bc.combo.resize(inserted_, RatFn{});
    for (std::size_t k = 0; k < combo.size(); ++k)
      if (!combo[k].is_zero()) bc.combo[k] -= c * combo[k];
  }

  BasisCol nb{pivot, std::move(t), std::move(combo)};
  auto pos = std::upper_bound(basis_.begin(), basis_.end(), pivot,
                              [](int p, const BasisCol& bc) { return p < bc.pivot; });
  basis_.insert(pos, std::move(nb));
  return true;
}

std::vector<int> ColumnSpace::profile() const {
  std::vector<int> out;
  out.reserve(basis_.size());
  for (const auto& bc : basis_) out.push_back(bc.pivot);
  return out;
}

std::vector<RatFn> ColumnSpace::reduce(std::vector<RatFn>& t) const {
  if (static_cast<int>(t.size()) != rows_) throw std::invalid_argument("column size mismatch");
  std::vector<RatFn> out(inserted_, RatFn{});
  for (const auto& bc : basis_) {
    RatFn c = t[bc.pivot];
    if (c.is_zero()) continue;
    for (int r = 0; r < rows_; ++r)
      if (!bc.col[r].is_zero()) t[r] -= c * bc.col[r];
    for (std::size_t k = 0; k < bc.combo.size(); ++k)
      if (!bc.combo[k].is_zero()) out[k] += c * bc.combo[k];
  }
  return out;
}

}  // namespace nf
