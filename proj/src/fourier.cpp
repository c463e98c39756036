// SPDX-License-Identifier: Apache-2.0
#include "matwig/fourier.hpp"

#include <cmath>

#include "matwig/fft.hpp"

namespace matwig {

namespace {

double axis_step(const Grid& g, Domain d) { return d == Domain::time ? g.step() : g.freq_step(); }

}  // namespace

std::vector<cplx> ft(const std::vector<cplx>& v, const Grid& g, Domain from) {
    if (v.size() != g.size()) throw Error(Errc::grid_mismatch, "ft: size mismatch");
    std::vector<cplx> out = v;
    fft::centered(out.data(), {g.n, g.dim, 1, 1, 0}, -1, std::pow(axis_step(g, from), g.dim));
    return out;
}

std::vector<cplx> ift(const std::vector<cplx>& v, const Grid& g, Domain from) {
    if (v.size() != g.size()) throw Error(Errc::grid_mismatch, "ift: size mismatch");
    std::vector<cplx> out = v;
    fft::centered(out.data(), {g.n, g.dim, 1, 1, 0}, +1, std::pow(axis_step(g, from), g.dim));
    return out;
}

Signal ft(const Signal& f, const Grid& g) {
    const Domain from = f.is_analytic() ? Domain::time : f.domain();
    return Signal::sampled(g, ft(f.on(g), g, from), flip(from), "ft(" + f.tag() + ")");
}

Signal ift(const Signal& f, const Grid& g) {
    const Domain from = f.is_analytic() ? Domain::frequency : f.domain();
    if (f.is_analytic()) {
        // Analytic input is read on the frequency points.
        std::vector<cplx> v(g.size());
        double w[2];
        for (std::size_t i = 0; i < v.size(); ++i) {
            g.freq(i, w);
            v[i] = f(w);
        }
        return Signal::sampled(g, ift(v, g, from), Domain::time, "ift(" + f.tag() + ")");
    }
    return Signal::sampled(g, ift(f.on(g), g, from), flip(from), "ift(" + f.tag() + ")");
}

Field2 dft_axis(const Field2& F, int axis, int sign) {
    const Grid& g = F.grid;
    const auto N = std::ptrdiff_t(F.size());
    Field2 out = F;
    const Domain tag = axis == 1 ? F.tag1 : F.tag2;
    const double scale = std::pow(axis_step(g, tag), g.dim);
    const fft::Layout l = axis == 1 ? fft::Layout{g.n, g.dim, N, int(N), 1} : fft::Layout{g.n, g.dim, 1, int(N), N};
    fft::centered(out.values.data(), l, sign, scale);
    (axis == 1 ? out.tag1 : out.tag2) = flip(tag);
    return out;
}

Field2 pft1(const Field2& F, bool inverse) {
    const Domain need = inverse ? Domain::frequency : Domain::time;
    if (F.tag1 != need) throw Error(Errc::domain_tag_mismatch, "pft1: axis-1 tag does not match direction");
    return dft_axis(F, 1, inverse ? +1 : -1);
}

Field2 pft2(const Field2& F, bool inverse) {
    const Domain need = inverse ? Domain::frequency : Domain::time;
    if (F.tag2 != need) throw Error(Errc::domain_tag_mismatch, "pft2: axis-2 tag does not match direction");
    return dft_axis(F, 2, inverse ? +1 : -1);
}

Field2 ft2(const Field2& F, bool inverse) {
    const int s = inverse ? +1 : -1;
    return dft_axis(dft_axis(F, 2, s), 1, s);
}

Field2 tensor(const Signal& f, const Signal& g, const Grid& grid, bool conj_g) {
    Field2 out(grid, Domain::time, Domain::time);
    const auto a = f.on(grid), b = g.on(grid);
    const std::size_t N = grid.size();
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out.at(i, j) = a[i] * (conj_g ? std::conj(b[j]) : b[j]);
    return out;
}

Field2 coord(const BlockMatrix& A, const Field2& F, InterpOptions opt, std::size_t* outside) {
    if (F.tag1 != Domain::time || F.tag2 != Domain::time)
        throw Error(Errc::domain_tag_mismatch, "coord expects a time x time field");
    const Grid& g = F.grid;
    const int d = g.dim;
    if (A.dim() != d) throw Error(Errc::grid_mismatch, "coord: matrix and grid dimensions differ");
    Resampler rs(F.values.data(), g.n, 2 * d, g.step(), 1, opt);
    Field2 out(g, Domain::time, Domain::time);
    const std::size_t N = g.size();
    const Mat& e = A.entries();
    const double half = 0.5 * g.len;
    std::size_t miss = 0;
    double x[2], y[2], z[4], p[4];
    for (std::size_t i = 0; i < N; ++i) {
        g.point(i, x);
        for (std::size_t j = 0; j < N; ++j) {
            g.point(j, y);
            for (int a = 0; a < d; ++a) {
                z[a] = x[a];
                z[d + a] = y[a];
            }
            bool in = true;
            for (int r = 0; r < 2 * d; ++r) {
                double s = 0;
                for (int c = 0; c < 2 * d; ++c) s += e(r, c) * z[c];
                p[r] = s;
                in = in && s >= -half && s < half;
            }
            if (!in) ++miss;
            out.at(i, j) = rs.eval(p);
        }
    }
    if (outside) *outside = miss;
    return out;
}

Field2 coord(const BlockMatrix& A, const Signal& f, const Signal& g, const Grid& grid) {
    const int d = grid.dim;
    if (A.dim() != d) throw Error(Errc::grid_mismatch, "coord: matrix and grid dimensions differ");
    Field2 out(grid, Domain::time, Domain::time);
    const std::size_t N = grid.size();
    const Mat& e = A.entries();
    double x[2], y[2], p[2], q[2];
    for (std::size_t i = 0; i < N; ++i) {
        grid.point(i, x);
        for (std::size_t j = 0; j < N; ++j) {
            grid.point(j, y);
            for (int r = 0; r < d; ++r) {
                double s = 0, t = 0;
                for (int c = 0; c < d; ++c) {
                    s += e(r, c) * x[c] + e(r, d + c) * y[c];
                    t += e(d + r, c) * x[c] + e(d + r, d + c) * y[c];
                }
                p[r] = s;
                q[r] = t;
            }
            out.at(i, j) = f(p) * std::conj(g(q));
        }
    }
    return out;
}

Field2 multiplier(const Field2& F, const PhaseFn& m) {
    Field2 S = ft2(F);
    const std::size_t N = S.size();
    double xi[2], eta[2];
    for (std::size_t i = 0; i < N; ++i) {
        S.coord1(i, xi);
        for (std::size_t j = 0; j < N; ++j) {
            S.coord2(j, eta);
            S.at(i, j) *= m(xi, eta);
        }
    }
    return ft2(S, true);
}

}  // namespace matwig
