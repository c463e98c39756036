// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "matwig/core.hpp"

namespace matwig::fft {

// Batched transform over `rank` axes of length n. Element (batch b, index i_0..i_{rank-1})
// lives at data[b*dist + stride * sum_a i_a n^(rank-1-a)].
struct Layout {
    int n = 0;
    int rank = 1;
    std::ptrdiff_t stride = 1;
    int howmany = 1;
    std::ptrdiff_t dist = 0;
};

// Unscaled in-place DFT; sign -1 forward, +1 backward. Thread-safe.
void raw(cplx* data, const Layout& l, int sign);

// Rolls every transformed axis by n/2 (its own inverse for even n).
void half_shift(cplx* data, const Layout& l);

// Centered DFT: zero index at n/2 on both sides, result multiplied by `scale`.
void centered(cplx* data, const Layout& l, int sign, double scale);

}  // namespace matwig::fft
