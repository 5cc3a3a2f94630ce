// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#include "nf/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace nf {

ExtNat ExtNat::finite(int value) {
  if (value < 0) throw std::invalid_argument("ExtNat value must be >= 0");
  return ExtNat(true, value);
}

ExtNat ExtNat::unresolved_beyond(int bound) { return ExtNat(false, bound); }

int ExtNat::value() const {
  if (!finite_) throw std::logic_error("ExtNat: no finite value detected");
  return n_;
}

int ExtNat::bound() const {
  if (finite_) throw std::logic_error("ExtNat: value is finite");
  return n_;
}

std::string ExtNat::str() const {
  if (finite_) return std::to_string(n_);
  return "unresolved beyond " + std::to_string(n_);
}

namespace {

// Least grade in [mLow, N] at which `fam` has a nonzero coefficient, with
// the least offset at that grade.
std::pair<ExtNat, ExtNat> scan_family(const LVec& v, Family fam, int mLow,
                                      int N) {
  for (int m = mLow; m <= N; ++m) {
    for (int j = 0; j <= m; ++j) {
      BasisElem b{fam, m - j, j};
      if (!v.coeff(b).is_zero())
        return {ExtNat::finite(m), ExtNat::finite(j)};
    }
  }
  return {ExtNat::unresolved_beyond(N), ExtNat::unresolved_beyond(N)};
}

}  // namespace

std::pair<ExtNat, ExtNat> detect_s_p(const LVec& v, int N) {
  return scan_family(v, Family::E, 1, N);
}

std::pair<ExtNat, ExtNat> detect_r_q(const LVec& v, int s, int N) {
  return scan_family(v, Family::E, s + 1, N);
}

std::pair<ExtNat, ExtNat> detect_si_pi(const LVec& v, int i, int N) {
  if (i != 1 && i != 2)
    throw std::invalid_argument("rotational family index must be 1 or 2");
  return scan_family(v, i == 1 ? Family::Theta1 : Family::Theta2, 1, N);
}

RFMatrix conv_matrix(const std::vector<RatFn>& coeffs, int cols) {
  if (cols < 1) throw std::invalid_argument("band matrix needs >= 1 column");
  if (coeffs.empty())
    throw std::invalid_argument("band matrix needs a nonempty coefficient vector");
  const int d = static_cast<int>(coeffs.size()) - 1;
  RFMatrix m(d + cols, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i <= d; ++i) m.at(i + j, j) = coeffs[i];
  return m;
}

RFMatrix hcat(const RFMatrix& left, const RFMatrix& right) {
  if (left.rows != right.rows)
    throw std::invalid_argument("hcat: row counts differ");
  RFMatrix m(left.rows, left.cols + right.cols);
  for (int i = 0; i < left.rows; ++i) {
    for (int j = 0; j < left.cols; ++j) m.at(i, j) = left.at(i, j);
    for (int j = 0; j < right.cols; ++j)
      m.at(i, left.cols + j) = right.at(i, j);
  }
  return m;
}

RFMatrix assemble_pencil(const std::vector<RatFn>& highCoeffs,
                         const std::vector<RatFn>& lowCoeffs, int l, int r,
                         int s) {
  if (!(1 <= s && s < r)) throw std::invalid_argument("need 1 <= s < r");
  if (l < 0) throw std::invalid_argument("need l >= 0");
  if (static_cast<int>(highCoeffs.size()) != r + 1)
    throw std::invalid_argument("grade-r coefficient vector must have r+1 entries");
  if (static_cast<int>(lowCoeffs.size()) != s + 1)
    throw std::invalid_argument("grade-s coefficient vector must have s+1 entries");
  return hcat(conv_matrix(highCoeffs, l + 1),
              conv_matrix(lowCoeffs, l + r - s + 1));
}

SchurParts schur_partition(const RFMatrix& M, int p, int q, int s, int r,
                           int l) {
  if (!(1 <= s && s < r)) throw std::invalid_argument("need 1 <= s < r");
  if (l < 0 || p < 0 || q < 0)
    throw std::invalid_argument("indices must be >= 0");
  if (p > s || q > r)
    throw std::invalid_argument("offsets exceed their grades");
  const int highCols = l + 1;
  const int lowCols = l + r - s + 1;
  if (M.rows != l + r + 1 || M.cols != highCols + lowCols)
    throw std::invalid_argument("matrix shape does not match the declared grades");

  SchurParts out;
  out.pivotHigh = p < q;

  // Row/column index sets after the deletions, then the four blocks.
  const int dropRows = out.pivotHigh ? q : p;
  const int pivotRows = out.pivotHigh ? highCols : lowCols;
  const int tailRows = M.rows - dropRows - pivotRows;
  if (tailRows < 0)
    throw std::invalid_argument("deletion leaves fewer rows than pivot columns");

  std::vector<int> pivotColIdx, otherColIdx;
  if (out.pivotHigh) {
    for (int j = 0; j < highCols; ++j) pivotColIdx.push_back(j);
    for (int j = q - p; j < lowCols; ++j) otherColIdx.push_back(highCols + j);
  } else {
    for (int j = 0; j < lowCols; ++j) pivotColIdx.push_back(highCols + j);
    for (int j = p - q; j < highCols; ++j) otherColIdx.push_back(j);
  }

  const int otherCols = static_cast<int>(otherColIdx.size());
  out.A = RFMatrix(pivotRows, otherCols);
  out.B = RFMatrix(pivotRows, pivotRows);
  out.C = RFMatrix(tailRows, otherCols);
  out.D = RFMatrix(tailRows, pivotRows);
  for (int i = 0; i < pivotRows; ++i) {
    for (int j = 0; j < otherCols; ++j)
      out.A.at(i, j) = M.at(dropRows + i, otherColIdx[j]);
    for (int j = 0; j < pivotRows; ++j)
      out.B.at(i, j) = M.at(dropRows + i, pivotColIdx[j]);
  }
  for (int i = 0; i < tailRows; ++i) {
    for (int j = 0; j < otherCols; ++j)
      out.C.at(i, j) = M.at(dropRows + pivotRows + i, otherColIdx[j]);
    for (int j = 0; j < pivotRows; ++j)
      out.D.at(i, j) = M.at(dropRows + pivotRows + i, pivotColIdx[j]);
  }
  return out;
}

RFMatrix schur_complement(const SchurParts& parts) {
  const RFMatrix& B = parts.B;
  const char* pivotErr = parts.pivotHigh
                             ? "pivot coefficient b_{r-q,q} vanishes"
                             : "pivot coefficient b_{s-p,p} vanishes";
  for (int i = 0; i < B.rows; ++i) {
    if (B.at(i, i).is_zero()) throw std::domain_error(pivotErr);
    for (int j = i + 1; j < B.cols; ++j)
      if (!B.at(i, j).is_zero())
        throw std::invalid_argument(
            "pivot block is not lower triangular: leading offset is wrong");
  }

  // X = B^{-1} A by forward substitution, one column at a time.
  const int n = B.rows;
  const int cols = parts.A.cols;
  RFMatrix X(n, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < n; ++i) {
      RatFn v = parts.A.at(i, j);
      for (int k = 0; k < i; ++k) v -= B.at(i, k) * X.at(k, j);
      X.at(i, j) = v / B.at(i, i);
    }
  }

  RFMatrix out(parts.C.rows, cols);
  for (int i = 0; i < parts.C.rows; ++i)
    for (int j = 0; j < cols; ++j) {
      RatFn v = parts.C.at(i, j);
      for (int k = 0; k < n; ++k) v -= parts.D.at(i, k) * X.at(k, j);
      out.at(i, j) = v;
    }
  return out;
}

int schur_u(const RFMatrix& M, int p, int q, int s, int r, int l) {
  return rf_rank(schur_complement(schur_partition(M, p, q, s, r, l)));
}

RankPrediction rank_predict(int l, int alpha, int r, int s, int p, int q) {
  if (l < 0) throw std::invalid_argument("need l >= 0");
  RankPrediction out;
  out.rank = (l <= alpha - r - 2) ? 2 * l + r - s + 2 : alpha + l - s;
  int u = std::min(l + 1, alpha - r - 1) - (p - q);
  u = std::max(u, 0);
  u = std::min(u, s - p);
  out.u = u;
  return out;
}

bool generic_gate(const RatFn& b10, const RatFn& b01, const RatFn& b11,
                  const RatFn& b20, const RatFn& b02) {
  RatFn expr = b01 * b01 * b20 - b01 * b10 * b11 + b02 * b10 * b10;
  return !expr.is_zero();
}

}  // namespace nf
