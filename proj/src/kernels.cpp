// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#include "nf/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nf {

int thread_cap() {
  if (const char* s = std::getenv("NFC_THREADS")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// Constant operands may live in a smaller ring; lift them instead of failing.
bool align_arity(const Poly*& a, const Poly*& b, Poly& sa, Poly& sb) {
  if (a->nvars() == b->nvars()) return true;
  if (a->is_constant()) {
    sa = a->with_nvars(b->nvars());
    a = &sa;
    return true;
  }
  if (b->is_constant()) {
    sb = b->with_nvars(a->nvars());
    b = &sb;
    return true;
  }
  return false;
}

void accumulate_row(Poly& out, const Expvec& ea, const GaussRat& ca, const Poly& b) {
  const int n = out.nvars();
  Expvec e(n);
  for (const auto& [eb, cb] : b.terms()) {
    for (int v = 0; v < n; ++v) e[v] = ea[v] + eb[v];
    out.add_term(e, ca * cb);
  }
}

}  // namespace

Poly poly_mul_serial(const Poly& a, const Poly& b) {
  const Poly *pa = &a, *pb = &b;
  Poly sa, sb;
  if (!align_arity(pa, pb, sa, sb)) throw std::invalid_argument("polynomial arity mismatch");
  Poly out(pa->nvars());
  for (const auto& [ea, ca] : pa->terms()) accumulate_row(out, ea, ca, *pb);
  return out;
}

Poly poly_mul_parallel(const Poly& a, const Poly& b) {
#ifndef _OPENMP
  return poly_mul_serial(a, b);
#else
  const Poly *pa = &a, *pb = &b;
  Poly sa, sb;
  if (!align_arity(pa, pb, sa, sb)) throw std::invalid_argument("polynomial arity mismatch");
  if (pa->num_terms() < pb->num_terms()) std::swap(pa, pb);

  std::vector<const std::pair<const Expvec, GaussRat>*> rows;
  rows.reserve(pa->num_terms());
  for (const auto& t : pa->terms()) rows.push_back(&t);

  int threads = thread_cap();
  if (threads > static_cast<int>(rows.size())) threads = static_cast<int>(rows.size());
  if (threads <= 1) return poly_mul_serial(*pa, *pb);

  std::vector<Poly> partial(threads, Poly(pa->nvars()));
#pragma omp parallel num_threads(threads)
  {
    const int t = omp_get_thread_num();
    Poly local(pa->nvars());
    for (std::size_t i = t; i < rows.size(); i += threads)
      accumulate_row(local, rows[i]->first, rows[i]->second, *pb);
    partial[t] = std::move(local);
  }
  Poly out(pa->nvars());
  for (auto& p : partial) out += p;
  return out;
#endif
}

Poly poly_mul(const Poly& a, const Poly& b) {
  // Exact rational accumulation commutes, so both paths agree bit for bit;
  // threads only pay off once the term grid is reasonably large.
  if (a.num_terms() * b.num_terms() >= 4096 && thread_cap() > 1) return poly_mul_parallel(a, b);
  return poly_mul_serial(a, b);
}

}  // namespace nf
