// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "matwig/blockmat.hpp"
#include "matwig/field.hpp"
#include "matwig/signals.hpp"

namespace matwig {

struct MwdOptions {
    // y-grid refinement: step/oversample over n*oversample points per axis (same box).
    // Values > 1 suppress frequency aliasing of strongly sheared rows.
    int oversample = 1;
    // Evaluate at (x - origin_x, w - origin_w); empty means no shift.
    std::vector<double> origin_x, origin_w;
    Exec exec = Exec::parallel;
};

// B_A(f,g)(x,w) = sum_y f(A11x + A12y) conj g(A21x + A22y) e^{-2 pi i y.w} step^d.
PhaseSpaceField mwd(const BlockMatrix& A, const Signal& f, const Signal& g, const Grid& grid,
                    const MwdOptions& opt = {});

// V_g f(x,w) = sum_y f(y) conj g(y - x) e^{-2 pi i y.w} step^d.
PhaseSpaceField stft(const Signal& f, const Signal& g, const Grid& grid, Exec exec = Exec::parallel);

// Quadrature at a single arbitrary point.
cplx stft_point(const Signal& f, const Signal& g, const double* x, const double* w, const Grid& grid);
cplx mwd_point(const BlockMatrix& A, const Signal& f, const Signal& g, const double* x, const double* w,
               const Grid& grid);

// Right-regular factorization through a point-wise STFT at (c(x), d(w)).
PhaseSpaceField mwd_via_stft(const BlockMatrix& A, const Signal& f, const Signal& g, const Grid& grid);

struct AdjointOptions {
    InterpOptions interp;
    Exec exec = Exec::parallel;
};

// B*_{A,gamma} H (x) = |det A|^{-1} sum_y (F2^{-1}H)(A^{-1}(x,y)) gamma(y) step^d.
Signal adjoint_apply(const BlockMatrix& A, const PhaseSpaceField& H, const Signal& gamma,
                     const AdjointOptions& opt = {});

// f ~ |det A| / conj<g,gamma> * B*_{A,gamma} B_A(f,g).
Signal reconstruct(const BlockMatrix& A, const PhaseSpaceField& H, const Signal& g, const Signal& gamma);

struct CovarianceResult {
    PhaseSpaceField lhs, rhs;
    std::vector<bool> valid;  // rhs is defined (shifted index inside the box)
    double max_error = 0;
};

// B_A(M_alpha T_a f, M_beta T_b g) against the phase/shift of B_A(f,g).
CovarianceResult covariance_check(const BlockMatrix& A, const Signal& f, const Signal& g, const Vec& a,
                                  const Vec& alpha, const Vec& b, const Vec& beta, const Grid& grid);

// Cohen form: W_M(pi(z)f, pi(w)g) = c M_{J(z-w)} T_{Tcal_M(z,w)} W_M(f,g).
CovarianceResult covariance_check_cohen(const Mat& M, const Signal& f, const Signal& g, const Vec& z, const Vec& w,
                                        const Grid& grid);

struct ScalarPair {
    cplx lhs, rhs;
    double error() const { return std::abs(lhs - rhs); }
};

ScalarPair magic_eval(const BlockMatrix& A, const Signal& f, const Signal& g, const Signal& phi, const Signal& psi,
                      const Vec& z, const Vec& zeta, const Grid& grid);

struct Marginals {
    std::vector<cplx> time, freq;
};

Marginals marginals(const PhaseSpaceField& F);

// Shifts a field by whole grid cells: out(i, j) = F(i - si, j - sj), zero where undefined.
std::vector<cplx> shift_cells(const PhaseSpaceField& F, const int* si, const int* sj, std::vector<bool>* valid = nullptr);

// Lattice index of a phase-space point; throws OffGridShift when not on the grid.
void lattice_index(const Grid& g, const Vec& v, Domain tag, int* out);

}  // namespace matwig
