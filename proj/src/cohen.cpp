// SPDX-License-Identifier: Apache-2.0
#include "matwig/cohen.hpp"

#include <algorithm>
#include <cmath>

#include "matwig/fft.hpp"
#include "matwig/fourier.hpp"
#include "matwig/interp.hpp"

namespace matwig {

cplx CohenKernelSpec::theta_hat(const double* xi, const double* eta) const {
    const int d = int(M.rows());
    double s = 0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) s += xi[r] * M(r, c) * eta[c];
    return std::polar(1.0, -2 * pi * s);
}

std::optional<cplx> CohenKernelSpec::theta_explicit(const double* x, const double* w) const {
    if (!invertible) return std::nullopt;
    const int d = int(M.rows());
    double s = 0;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) s += x[r] * M_inv(r, c) * w[c];
    return std::polar(1.0 / std::abs(M.determinant()), 2 * pi * s);
}

CohenKernelSpec kernel(const Mat& M) {
    CohenKernelSpec k;
    k.M = M;
    Eigen::JacobiSVD<Mat> svd(M);
    k.invertible = svd.singularValues()(M.rows() - 1) > 1e-12;
    if (k.invertible) k.M_inv = M.inverse();
    return k;
}

PhaseSpaceField remap(const PhaseSpaceField& F, const Mat& M1, const Mat& M2) {
    if (!F.cohen_M || F.cohen_M->rows() != M1.rows() || (*F.cohen_M - M1).cwiseAbs().maxCoeff() > 1e-12)
        throw Error(Errc::not_cohen_tagged, "field is not tagged as W_M1");
    const Mat dM = M2 - M1;
    const auto spec = kernel(dM);
    PhaseSpaceField out = F;
    static_cast<Field2&>(out) = multiplier(F, [&spec](const double* xi, const double* eta) { return spec.theta_hat(xi, eta); });
    out.cohen_M = M2;
    out.matrix = preset::cohen(M2);
    out.provenance = "remap(" + F.provenance + ")";
    return out;
}

PhaseSpaceField gaussian_oracle(const Mat& M, double lambda, const Grid& grid) {
    if (!(lambda > 0)) throw Error(Errc::non_positive_parameter, "gaussian_oracle: lambda must be positive");
    const int d = grid.dim;
    if (M.rows() != d) throw Error(Errc::grid_mismatch, "gaussian_oracle: M and grid dimensions differ");
    const Mat S = Mat::Identity(d, d) + 4 * M.transpose() * M;
    const Mat Si = S.inverse();
    const double c = std::pow(2 * lambda, 0.5 * d) / std::sqrt(S.determinant());
    const std::size_t N = grid.size();
    PhaseSpaceField out(grid);
    out.matrix = preset::cohen(M);
    out.cohen_M = M;
    out.provenance = "gaussian_oracle";
    Vec x(d), w(d);
    double xb[2], wb[2];
    for (std::size_t i = 0; i < N; ++i) {
        grid.point(i, xb);
        for (int a = 0; a < d; ++a) x(a) = xb[a];
        const Vec mx = M.transpose() * x;
        const Vec smx = Si * mx;
        const double re = -2 * pi * x.squaredNorm() / lambda + 8 * pi * mx.dot(smx) / lambda;
        for (std::size_t j = 0; j < N; ++j) {
            grid.freq(j, wb);
            for (int a = 0; a < d; ++a) w(a) = wb[a];
            const double mag = re - 2 * pi * lambda * w.dot(Si * w);
            out.at(i, j) = std::polar(c * std::exp(mag), 8 * pi * w.dot(smx));
        }
    }
    return out;
}

PhaseSpaceField convolve_theta(const PhaseSpaceField& F, const Mat& M1, const Mat& M2) {
    const Grid& g = F.grid;
    if (g.dim != 1) throw Error(Errc::unsupported, "convolve_theta is implemented for d = 1");
    if (!F.cohen_M || (*F.cohen_M - M1).cwiseAbs().maxCoeff() > 1e-12)
        throw Error(Errc::not_cohen_tagged, "field is not tagged as W_M1");
    const auto spec = kernel(M2 - M1);
    if (!spec.invertible) throw Error(Errc::singular_matrix, "convolution form needs M2 - M1 invertible");
    // Refine until the chirp theta_{dM} is resolved over the box: its local frequency x / dM stays below
    // the sampling rate of the refined w-axis (and symmetrically in x).
    const double dm = std::abs((M2 - M1)(0, 0));
    const int r = std::max(1, int(std::ceil(1.5 / dm)));
    if (r > 8) throw Error(Errc::unsupported, "convolution form needs |M2 - M1| >= 0.1875 at this grid; use remap");
    const int n = g.n, m = n * r, P = 2 * m;
    const double h = g.step() / r, hw = g.freq_step() / r;
    const std::vector<cplx> fine = upsample(F.values, n, 2, r);
    std::vector<cplx> a(std::size_t(P) * P, cplx(0)), t(std::size_t(P) * P);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) a[std::size_t(i) * P + j] = fine[std::size_t(i) * m + j];
    for (int di = -m; di < m; ++di)
        for (int dj = -m; dj < m; ++dj) {
            const double x = di * h, w = dj * hw;
            t[std::size_t((di + P) % P) * P + (dj + P) % P] = *spec.theta_explicit(&x, &w);
        }
    const fft::Layout l{P, 2, 1, 1, 0};
    fft::raw(a.data(), l, -1);
    fft::raw(t.data(), l, -1);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] *= t[k];
    fft::raw(a.data(), l, +1);
    const double scale = h * hw / (double(P) * P);
    PhaseSpaceField out = F;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(std::size_t(i), std::size_t(j)) = a[std::size_t(i) * r * P + std::size_t(j) * r] * scale;
    out.cohen_M = M2;
    out.matrix = preset::cohen(M2);
    out.provenance = "convolve_theta(" + F.provenance + ")";
    return out;
}

}  // namespace matwig
