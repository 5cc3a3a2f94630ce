// nfc: exact normal-form tools for coupled planar oscillators.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "nf/poly.hpp"

namespace nf {

// Straightforward accumulation; the correctness reference.
Poly poly_mul_serial(const Poly& a, const Poly& b);

// Multi-threaded product (OpenMP when compiled in, otherwise falls back to
// the serial path).  Bit-identical to poly_mul_serial by construction.
Poly poly_mul_parallel(const Poly& a, const Poly& b);

// Dispatch used by Poly::operator*: parallel above a size threshold.
Poly poly_mul(const Poly& a, const Poly& b);

// Thread cap honoured by the parallel kernel: NFC_THREADS when set and
// positive, otherwise the OpenMP default (1 without OpenMP).
int thread_cap();

}  // namespace nf
