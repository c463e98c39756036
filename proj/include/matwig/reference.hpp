// SPDX-License-Identifier: Apache-2.0
#pragma once

// Naive single-threaded versions of the main kernels. Direct sums, no FFT, no recurrences.
// O(N^3) in the number of grid points: meant for tests and benchmarks on small grids.

#include "matwig/mwd.hpp"
#include "matwig/quantize.hpp"

namespace matwig::reference {

// B_A(f, g) by the direct y-sum with one complex exponential per term.
PhaseSpaceField mwd(const BlockMatrix& A, const Signal& f, const Signal& g, const Grid& grid);

// Kernel from an analytic symbol by the direct w-sum; zero where A^{-1} leaves the box.
OperatorMatrix kernel_from_symbol(const PhaseFn& sigma, const BlockMatrix& A, const Grid& grid);

std::vector<cplx> apply_operator(const OperatorMatrix& op, const std::vector<cplx>& f);

}  // namespace matwig::reference
