// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "matwig/field.hpp"
#include "matwig/mwd.hpp"

namespace matwig {

struct CohenKernelSpec {
    Mat M;
    bool invertible = false;
    Mat M_inv;

    // Theta_M(xi, eta) = e^{-2 pi i xi . M eta}
    cplx theta_hat(const double* xi, const double* eta) const;
    // theta_M(x, w) = |det M|^{-1} e^{2 pi i x . M^{-1} w}; only when M is invertible.
    std::optional<cplx> theta_explicit(const double* x, const double* w) const;
};

CohenKernelSpec kernel(const Mat& M);

// W_{M1} -> W_{M2} through the Fourier multiplier e^{-2 pi i xi.(M2 - M1) eta}.
PhaseSpaceField remap(const PhaseSpaceField& F, const Mat& M1, const Mat& M2);

// Closed form of W_M phi_lambda on the grid.
PhaseSpaceField gaussian_oracle(const Mat& M, double lambda, const Grid& grid);

// W_{M1 + dM} as a linear (zero-padded) FFT convolution of W_{M1} with theta_{dM}; d = 1, dM invertible.
PhaseSpaceField convolve_theta(const PhaseSpaceField& F, const Mat& M1, const Mat& M2);

}  // namespace matwig
