// SPDX-License-Identifier: Apache-2.0
#include "matwig/reference.hpp"

#include <cmath>

namespace matwig::reference {

namespace {

double dot(const double* a, const double* b, int d) {
    double s = 0;
    for (int i = 0; i < d; ++i) s += a[i] * b[i];
    return s;
}

void affine(const Mat& m, const double* x, const double* y, int d, double* p, double* q) {
    for (int r = 0; r < d; ++r) {
        p[r] = q[r] = 0;
        for (int c = 0; c < d; ++c) {
            p[r] += m(r, c) * x[c] + m(r, d + c) * y[c];
            q[r] += m(d + r, c) * x[c] + m(d + r, d + c) * y[c];
        }
    }
}

}  // namespace

PhaseSpaceField mwd(const BlockMatrix& A, const Signal& f, const Signal& g, const Grid& grid) {
    const int d = grid.dim;
    const std::size_t N = grid.size();
    const Mat& E = A.entries();
    PhaseSpaceField out(grid);
    out.matrix = A;
    out.provenance = "reference::mwd";
    std::vector<cplx> h(N);
    double x[2], y[2], w[2], p[2], q[2];
    for (std::size_t i = 0; i < N; ++i) {
        grid.point(i, x);
        for (std::size_t k = 0; k < N; ++k) {
            grid.point(k, y);
            affine(E, x, y, d, p, q);
            h[k] = f(p) * std::conj(g(q));
        }
        for (std::size_t j = 0; j < N; ++j) {
            grid.freq(j, w);
            cplx s = 0;
            for (std::size_t k = 0; k < N; ++k) {
                grid.point(k, y);
                s += h[k] * std::polar(1.0, -2 * pi * dot(y, w, d));
            }
            out.at(i, j) = s * grid.cell();
        }
    }
    return out;
}

OperatorMatrix kernel_from_symbol(const PhaseFn& sigma, const BlockMatrix& A, const Grid& grid) {
    const int d = grid.dim;
    const std::size_t N = grid.size();
    const Mat Ai = A.inverse();
    const double half = 0.5 * grid.len;
    OperatorMatrix op{grid, Eigen::MatrixXcd::Zero(Eigen::Index(N), Eigen::Index(N))};
    double s[2], t[2], u1[2], u2[2], w[2];
    for (std::size_t is = 0; is < N; ++is) {
        grid.point(is, s);
        for (std::size_t it = 0; it < N; ++it) {
            grid.point(it, t);
            affine(Ai, s, t, d, u1, u2);
            bool in = true;
            for (int a = 0; a < d; ++a) in = in && u2[a] >= -half && u2[a] < half;
            if (!in) continue;
            cplx acc = 0;
            for (std::size_t k = 0; k < N; ++k) {
                grid.freq(k, w);
                acc += sigma(u1, w) * std::polar(1.0, 2 * pi * dot(u2, w, d));
            }
            op.values(Eigen::Index(is), Eigen::Index(it)) = acc * grid.freq_cell() / A.abs_det();
        }
    }
    return op;
}

std::vector<cplx> apply_operator(const OperatorMatrix& op, const std::vector<cplx>& f) {
    const std::size_t N = op.grid.size();
    std::vector<cplx> out(N);
    for (std::size_t j = 0; j < N; ++j) {
        cplx s = 0;
        for (std::size_t k = 0; k < N; ++k) s += op.values(Eigen::Index(j), Eigen::Index(k)) * f[k];
        out[j] = s * op.grid.cell();
    }
    return out;
}

}  // namespace matwig::reference
