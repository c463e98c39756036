// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>

#include "matwig/core.hpp"
#include "matwig/grid.hpp"

namespace matwig::detail {

struct Dense {
    int d = 1;
    std::array<double, 16> a{};  // row-major 2d x 2d, d <= 2
    explicit Dense(const Mat& m) : d(int(m.rows() / 2)) {
        for (int r = 0; r < 2 * d; ++r)
            for (int c = 0; c < 2 * d; ++c) a[r * 2 * d + c] = m(r, c);
    }
    // (p, q) = M (x, y)
    void apply(const double* x, const double* y, double* p, double* q) const {
        const int w = 2 * d;
        for (int r = 0; r < d; ++r) {
            double s = 0, t = 0;
            for (int c = 0; c < d; ++c) {
                s += a[r * w + c] * x[c] + a[r * w + d + c] * y[c];
                t += a[(d + r) * w + c] * x[c] + a[(d + r) * w + d + c] * y[c];
            }
            p[r] = s;
            q[r] = t;
        }
    }
};

inline double dot(const double* a, const double* b, int d) {
    double s = 0;
    for (int i = 0; i < d; ++i) s += a[i] * b[i];
    return s;
}

inline int axis_index(std::size_t flat, int a, int d, int n) { return d == 1 ? int(flat) : (a == 0 ? int(flat / n) : int(flat % n)); }

// sum_k v[k] e^{2 pi i u.w_k} over the centered frequency grid, by a rotation recurrence.
inline cplx freq_sum(const cplx* v, const double* u, const Grid& g) {
    const int n = g.n;
    const double fs = g.freq_step();
    if (g.dim == 1) {
        const cplx r = std::polar(1.0, 2 * pi * u[0] * fs);
        cplx e = std::polar(1.0, 2 * pi * u[0] * g.freq(0));
        cplx s = 0;
        for (int k = 0; k < n; ++k) {
            s += v[k] * e;
            e *= r;
        }
        return s;
    }
    const cplx r1 = std::polar(1.0, 2 * pi * u[1] * fs);
    const cplx e1_0 = std::polar(1.0, 2 * pi * u[1] * g.freq(0));
    cplx e0 = std::polar(1.0, 2 * pi * u[0] * g.freq(0));
    const cplx r0 = std::polar(1.0, 2 * pi * u[0] * fs);
    cplx s = 0;
    for (int k0 = 0; k0 < n; ++k0) {
        cplx inner = 0, e1 = e1_0;
        const cplx* row = v + std::size_t(k0) * n;
        for (int k1 = 0; k1 < n; ++k1) {
            inner += row[k1] * e1;
            e1 *= r1;
        }
        s += inner * e0;
        e0 *= r0;
    }
    return s;
}


}  // namespace matwig::detail
