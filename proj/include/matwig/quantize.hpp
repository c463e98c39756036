// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "matwig/blockmat.hpp"
#include "matwig/field.hpp"
#include "matwig/interp.hpp"
#include "matwig/mwd.hpp"
#include "matwig/signals.hpp"

namespace matwig {

struct QuantizeOptions {
    bool use_analytic = true;  // evaluate the symbol's closed form off-grid when it has one
    InterpOptions interp;
    Exec exec = Exec::parallel;
};

// (op f)(x_j) = sum_k values(j, k) f(y_k) step^d
struct OperatorMatrix {
    Grid grid;
    Eigen::MatrixXcd values;
};

SymbolField symbol_from_function(const PhaseFn& fn, const Grid& g, std::string tag = {});
SymbolField symbol_from_samples(const Grid& g, std::vector<cplx> values, std::string tag = {});
SymbolField drop_analytic(const SymbolField& s);

OperatorMatrix identity_operator(const Grid& g);

// k = |det A|^{-1} T_{A^{-1}} F2^{-1} sigma, zero where the second coordinate leaves the box.
OperatorMatrix kernel_from_symbol(const SymbolField& sigma, const BlockMatrix& A, const QuantizeOptions& opt = {});

std::vector<cplx> apply_operator(const OperatorMatrix& op, const std::vector<cplx>& f, Exec exec = Exec::parallel);
Signal apply_operator(const OperatorMatrix& op, const Signal& f, Exec exec = Exec::parallel);

// <sigma^A f, g> through the kernel against <sigma, B_A(g, f)> in phase space.
ScalarPair duality_check(const SymbolField& sigma, const BlockMatrix& A, const Signal& f, const Signal& g,
                         const QuantizeOptions& opt = {});

// sigma with sigma^A = rho^B.
SymbolField convert_symbol(const SymbolField& rho, const BlockMatrix& B, const BlockMatrix& A,
                           const QuantizeOptions& opt = {});
SymbolField convert_symbol_cohen(const SymbolField& sigma, const Mat& T1, const Mat& T2);

struct AdjointSymbol {
    SymbolField rho;
    BlockMatrix B;
};
AdjointSymbol adjoint_symbol(const SymbolField& sigma, const BlockMatrix& A);

Signal spreading_apply(const SymbolField& sigma, const Mat& T, const Signal& f);
Signal spreading_apply(const SymbolField& sigma, const BlockMatrix& A, const Signal& f);

// (sigma o J^{-1})(x, w) = sigma(-w, x) by index remapping; needs a self-dual grid.
SymbolField compose_J_inverse(const SymbolField& sigma);

struct SignalPair {
    std::vector<cplx> lhs, rhs;
    double rel_error = 0;  // ||lhs - rhs|| / ||f||
};

// F op_{A_T}(sigma) F^{-1} f against op_{A_{I-T}}(sigma o J^{-1}) f.
SignalPair fourier_conjugation_check(const SymbolField& sigma, const BlockMatrix& A, const Signal& f,
                                     const QuantizeOptions& opt = {});

struct ChannelMatrix {
    std::vector<Vec> lattice;
    Eigen::MatrixXcd entries;  // entries(i, j) = <sigma^A pi(z_i) phi, pi(z_j) phi>
};

ChannelMatrix channel_matrix(const SymbolField& sigma, const Mat& T, const Signal& phi, const std::vector<Vec>& lattice,
                             const QuantizeOptions& opt = {});

// V_{Phi} sigma(X, Y) with Phi = mwd(affine(T), phi, phi).
cplx symbol_stft(const SymbolField& sigma, const Mat& T, const Signal& phi, const Vec& X, const Vec& Y);

double hs_norm(const OperatorMatrix& op);
double op_norm(const OperatorMatrix& op);

}  // namespace matwig
