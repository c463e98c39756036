// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "matwig/blockmat.hpp"
#include "matwig/field.hpp"
#include "matwig/interp.hpp"
#include "matwig/signals.hpp"

namespace matwig {

// Centered transforms approximating the continuous FT; both directions scale by the input step^d.
std::vector<cplx> ft(const std::vector<cplx>& v, const Grid& g, Domain from = Domain::time);
std::vector<cplx> ift(const std::vector<cplx>& v, const Grid& g, Domain from = Domain::frequency);

Signal ft(const Signal& f, const Grid& g);   // result sampled on the frequency points
Signal ift(const Signal& f, const Grid& g);  // f read as samples on the frequency points

// Transform along one axis (1 or 2) with no domain check; the axis tag flips.
Field2 dft_axis(const Field2& F, int axis, int sign);

Field2 pft1(const Field2& F, bool inverse = false);
Field2 pft2(const Field2& F, bool inverse = false);
Field2 ft2(const Field2& F, bool inverse = false);  // both axes

// f(x) * (conj_g ? conj(g(y)) : g(y)) on time x time.
Field2 tensor(const Signal& f, const Signal& g, const Grid& grid, bool conj_g = false);

// G(z) = F(Az) on time x time. Sampled path interpolates; `outside` counts points that left the box.
Field2 coord(const BlockMatrix& A, const Field2& F, InterpOptions opt = {}, std::size_t* outside = nullptr);
// Exact path: G(x, y) = f(A11 x + A12 y) conj(g(A21 x + A22 y)).
Field2 coord(const BlockMatrix& A, const Signal& f, const Signal& g, const Grid& grid);

// Full transform, pointwise multiply by m(xi, eta) on the dual axes, inverse transform.
Field2 multiplier(const Field2& F, const PhaseFn& m);

}  // namespace matwig
