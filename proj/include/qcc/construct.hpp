#pragma once

#include "qcc/arrays.hpp"
#include "qcc/codes.hpp"

namespace qcc {

// g_x = j for x in column j of B; shift = λ1. Requires λ1 | n and
// n >= 2σ(B)+1.
BaseCodewordSet ccc_base_from_array(const LambdaArray& B, int n);

// B has shape ⟦ℓ, ..., ℓ⟧ with q-1 = m·beta columns. Base j carries symbols
// (j-1)·beta+1 .. j·beta, symbol r on column r.
BaseCodewordSet cwc_bases_from_array(const LambdaArray& B, int beta, int m, int n);

// q-1 bases, base i constant i on {k(1 + (i-1)w) mod n : 0 <= k < w}, shift w.
// Requires w | n and n >= w((w-1)(q-2)+1).
BaseCodewordSet cwc_bases_direct(int w, int q, int n);
long direct_cwc_threshold(int w, int q);

// Least length admitted by the array pipeline for w̄ (least multiple of w1
// that is >= 2σ+1).
long ccc_threshold(const Partition& composition);
// 2σ+1 for the array route at the decomposition of n; -1 when w does not
// divide (q-1)n.
long cwc_array_threshold(int q, int w, int n);

// Size ⌊n/w1⌋, composition w̄, distance 2Σw̄-1. q must equal parts + 1.
// Throws UnsupportedLength below the pipeline threshold.
Code construct_optimal_ccc(const Partition& composition, int q, int n);

// Size (q-1)n/w, weight w, distance >= 2w-1. Throws InvalidInput unless
// w | (q-1)n, UnsupportedLength below both routes' thresholds.
Code construct_optimal_cwc(int q, int w, int n);

}  // namespace qcc
