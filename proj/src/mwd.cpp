// SPDX-License-Identifier: Apache-2.0
#include "matwig/mwd.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "matwig/fft.hpp"
#include "matwig/fourier.hpp"
#include "matwig/interp.hpp"
#include "detail.hpp"

namespace matwig {

using detail::Dense;
using detail::axis_index;
using detail::dot;
using detail::freq_sum;

namespace {

void check_dims(const BlockMatrix& A, const Signal& f, const Signal& g, const Grid& grid) {
    if (A.dim() != grid.dim || f.dim() != grid.dim || g.dim() != grid.dim)
        throw Error(Errc::grid_mismatch, "matrix, signals and grid must share the dimension");
    if (!f.is_analytic()) require_same(f.grid(), grid, "mwd: first signal sampled on another grid");
    if (!g.is_analytic()) require_same(g.grid(), grid, "mwd: second signal sampled on another grid");
}

}  // namespace

PhaseSpaceField mwd(const BlockMatrix& A, const Signal& f, const Signal& g, const Grid& grid, const MwdOptions& opt) {
    check_dims(A, f, g, grid);
    const int d = grid.dim, n = grid.n, os = opt.oversample;
    if (os < 1 || (os & (os - 1)) != 0) throw Error(Errc::config, "oversample must be a power of two");
    const bool shift_x = !opt.origin_x.empty(), shift_w = !opt.origin_w.empty();
    if ((shift_x && int(opt.origin_x.size()) != d) || (shift_w && int(opt.origin_w.size()) != d))
        throw Error(Errc::config, "origin dimension mismatch");

    const int m = n * os;
    const std::size_t N = grid.size(), Nm = d == 1 ? std::size_t(m) : std::size_t(m) * m;
    const double hy = grid.step() / os;
    const int k0 = (m - n) / 2;
    const Dense M(A.entries());
    const fft::Layout row_layout{m, d, 1, 1, 0};
    const double scale = std::pow(hy, d);

    std::vector<double> ys(Nm * d);
    for (std::size_t l = 0; l < Nm; ++l)
        for (int a = 0; a < d; ++a) ys[l * d + a] = (axis_index(l, a, d, m) - m / 2) * hy;

    PhaseSpaceField out(grid);
    out.matrix = A;
    if (auto c = classify(A); c.cohen_type && !shift_x && !shift_w) out.cohen_M = c.cohen_M;
    out.provenance = "mwd(" + f.tag() + "," + g.tag() + ")";

#pragma omp parallel for schedule(static) if (par(opt.exec))
    for (std::ptrdiff_t ix = 0; ix < std::ptrdiff_t(N); ++ix) {
        std::vector<cplx> row(Nm);
        double x[2], p[2], q[2];
        grid.point(std::size_t(ix), x);
        if (shift_x)
            for (int a = 0; a < d; ++a) x[a] -= opt.origin_x[a];
        for (std::size_t l = 0; l < Nm; ++l) {
            const double* y = &ys[l * d];
            M.apply(x, y, p, q);
            cplx v = f(p) * std::conj(g(q));
            if (shift_w) v *= std::polar(1.0, 2 * pi * dot(y, opt.origin_w.data(), d));
            row[l] = v;
        }
        fft::centered(row.data(), row_layout, -1, scale);
        cplx* dst = out.values.data() + std::size_t(ix) * N;
        if (d == 1) {
            for (int k = 0; k < n; ++k) dst[k] = row[k + k0];
        } else {
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j) dst[std::size_t(k) * n + j] = row[std::size_t(k + k0) * m + j + k0];
        }
    }
    return out;
}

PhaseSpaceField stft(const Signal& f, const Signal& g, const Grid& grid, Exec exec) {
    check_dims(preset::stft(grid.dim), f, g, grid);
    const int d = grid.dim;
    const std::size_t N = grid.size();
    const auto fs = f.on(grid);
    const fft::Layout row_layout{grid.n, d, 1, 1, 0};
    const double scale = grid.cell();
    PhaseSpaceField out(grid);
    out.matrix = preset::stft(d);
    out.provenance = "stft(" + f.tag() + "," + g.tag() + ")";

#pragma omp parallel for schedule(static) if (par(exec))
    for (std::ptrdiff_t ix = 0; ix < std::ptrdiff_t(N); ++ix) {
        cplx* row = out.values.data() + std::size_t(ix) * N;
        double x[2], y[2], t[2];
        grid.point(std::size_t(ix), x);
        for (std::size_t l = 0; l < N; ++l) {
            grid.point(l, y);
            for (int a = 0; a < d; ++a) t[a] = y[a] - x[a];
            row[l] = fs[l] * std::conj(g(t));
        }
        fft::centered(row, row_layout, -1, scale);
    }
    return out;
}

cplx stft_point(const Signal& f, const Signal& g, const double* x, const double* w, const Grid& grid) {
    const int d = grid.dim;
    const auto fs = f.on(grid);
    cplx s = 0;
    double y[2], t[2];
    for (std::size_t l = 0; l < grid.size(); ++l) {
        grid.point(l, y);
        for (int a = 0; a < d; ++a) t[a] = y[a] - x[a];
        s += fs[l] * std::conj(g(t)) * std::polar(1.0, -2 * pi * dot(y, w, d));
    }
    return s * grid.cell();
}

cplx mwd_point(const BlockMatrix& A, const Signal& f, const Signal& g, const double* x, const double* w,
               const Grid& grid) {
    check_dims(A, f, g, grid);
    const int d = grid.dim;
    const Dense M(A.entries());
    cplx s = 0;
    double y[2], p[2], q[2];
    for (std::size_t l = 0; l < grid.size(); ++l) {
        grid.point(l, y);
        M.apply(x, y, p, q);
        s += f(p) * std::conj(g(q)) * std::polar(1.0, -2 * pi * dot(y, w, d));
    }
    return s * grid.cell();
}

PhaseSpaceField mwd_via_stft(const BlockMatrix& A, const Signal& f, const Signal& g, const Grid& grid) {
    check_dims(A, f, g, grid);
    if (!classify(A).right_regular) throw Error(Errc::not_right_regular, "mwd_via_stft needs A12 and A22 invertible");
    const int d = grid.dim;
    const std::size_t N = grid.size();
    const Mat a12inv = A.a12().inverse();
    const Mat S = A.a11() - A.a12() * A.a22().inverse() * A.a21();
    const Mat D = a12inv.transpose();
    const Mat G = A.a22() * a12inv;
    const Mat A11 = A.a11();

    std::vector<double> ds(N * d);
    double dmax = 0;
    for (std::size_t k = 0; k < N; ++k) {
        double w[2];
        grid.freq(k, w);
        for (int r = 0; r < d; ++r) {
            double s = 0;
            for (int c = 0; c < d; ++c) s += D(r, c) * w[c];
            ds[k * d + r] = s;
            dmax = std::max(dmax, std::abs(s));
        }
    }
    // The STFT is read at frequencies up to dmax; sample t finely enough that they stay below Nyquist.
    const int os = std::max(1, int(std::ceil(2 * dmax * grid.step() - 1e-9)));
    const int nt = grid.n * os;
    const double ht = grid.step() / os;
    const std::size_t Nt = d == 1 ? std::size_t(nt) : std::size_t(nt) * nt;
    std::vector<double> ys(Nt * d);
    std::vector<cplx> fs(Nt);
    for (std::size_t l = 0; l < Nt; ++l) {
        for (int r = 0; r < d; ++r) ys[l * d + r] = (axis_index(l, r, d, nt) - nt / 2) * ht;
        fs[l] = f(&ys[l * d]);
    }
    const double tcell = std::pow(ht, d);
    Eigen::MatrixXcd R(N, Nt), E(Nt, N);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < Nt; ++l) E(l, k) = std::polar(tcell, -2 * pi * dot(&ys[l * d], &ds[k * d], d));

    std::vector<double> ax(N * d);
    for (std::size_t i = 0; i < N; ++i) {
        double x[2], c[2], t[2], gt[2];
        grid.point(i, x);
        for (int r = 0; r < d; ++r) {
            double s = 0, u = 0;
            for (int k = 0; k < d; ++k) {
                s += S(r, k) * x[k];
                u += A11(r, k) * x[k];
            }
            c[r] = s;
            ax[i * d + r] = u;
        }
        for (std::size_t l = 0; l < Nt; ++l) {
            for (int r = 0; r < d; ++r) t[r] = ys[l * d + r] - c[r];
            for (int r = 0; r < d; ++r) {
                double s = 0;
                for (int k = 0; k < d; ++k) s += G(r, k) * t[k];
                gt[r] = s;
            }
            R(i, l) = fs[l] * std::conj(g(gt));
        }
    }
    const Eigen::MatrixXcd V = R * E;
    const double inv = 1.0 / std::abs(A.a12().determinant());
    PhaseSpaceField out(grid);
    out.matrix = A;
    if (auto c = classify(A); c.cohen_type) out.cohen_M = c.cohen_M;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k)
            out.at(i, k) = inv * std::polar(1.0, 2 * pi * dot(&ds[k * d], &ax[i * d], d)) * V(i, k);
    out.provenance = "mwd_via_stft";
    return out;
}

Signal adjoint_apply(const BlockMatrix& A, const PhaseSpaceField& H, const Signal& gamma, const AdjointOptions& opt) {
    const Grid& grid = H.grid;
    const int d = grid.dim;
    if (A.dim() != d || gamma.dim() != d) throw Error(Errc::grid_mismatch, "adjoint_apply: dimension mismatch");
    const std::size_t N = grid.size();
    const auto gs = gamma.on(grid);
    const Dense Ainv(A.inverse());
    const Resampler rs(H.values.data(), grid.n, d, grid.step(), N, opt.interp);
    const double half = 0.5 * grid.len;
    const double scale = grid.freq_cell() * grid.cell() / A.abs_det();
    std::vector<cplx> out(N);

#pragma omp parallel for schedule(static) if (par(opt.exec))
    for (std::ptrdiff_t ix = 0; ix < std::ptrdiff_t(N); ++ix) {
        std::vector<cplx> hrow(N);
        std::array<std::ptrdiff_t, 16> off;
        std::array<double, 16> wt;
        double x[2], y[2], u1[2], u2[2];
        grid.point(std::size_t(ix), x);
        cplx acc = 0;
        for (std::size_t iy = 0; iy < N; ++iy) {
            if (gs[iy] == cplx(0)) continue;
            grid.point(iy, y);
            Ainv.apply(x, y, u1, u2);
            bool inside = true;
            for (int a = 0; a < d; ++a) inside = inside && u2[a] >= -half && u2[a] < half;
            if (!inside) continue;
            const int nt = rs.taps(u1, off.data(), wt.data());
            if (nt == 0) continue;
            for (std::size_t k = 0; k < N; ++k) hrow[k] = 0;
            for (int t = 0; t < nt; ++t) {
                const cplx* src = rs.fine() + off[t];
                for (std::size_t k = 0; k < N; ++k) hrow[k] += wt[t] * src[k];
            }
            acc += freq_sum(hrow.data(), u2, grid) * gs[iy];
        }
        out[std::size_t(ix)] = acc * scale;
    }
    return Signal::sampled(grid, std::move(out), Domain::time, "adjoint_apply");
}

Signal reconstruct(const BlockMatrix& A, const PhaseSpaceField& H, const Signal& g, const Signal& gamma) {
    const cplx gg = inner(g, gamma, H.grid);
    if (std::abs(gg) < 1e-14) throw Error(Errc::orthogonal_window_pair, "<g, gamma> vanishes");
    auto v = adjoint_apply(A, H, gamma).samples();
    const cplx c = A.abs_det() / std::conj(gg);
    for (auto& x : v) x *= c;
    return Signal::sampled(H.grid, std::move(v), Domain::time, "reconstruction");
}

void lattice_index(const Grid& g, const Vec& v, Domain tag, int* out) {
    const double step = tag == Domain::time ? g.step() : g.freq_step();
    for (int a = 0; a < v.size(); ++a) {
        const double r = v(a) / step;
        if (std::abs(r - std::round(r)) > 1e-9) throw Error(Errc::off_grid_shift, "shift is not on the grid lattice");
        out[a] = int(std::lround(r));
    }
}

std::vector<cplx> shift_cells(const PhaseSpaceField& F, const int* si, const int* sj, std::vector<bool>* valid) {
    const Grid& g = F.grid;
    const int d = g.dim, n = g.n;
    const std::size_t N = g.size();
    std::vector<cplx> out(N * N, cplx(0));
    if (valid) valid->assign(N * N, false);
    auto shifted = [&](std::size_t flat, const int* s, std::size_t& res) {
        std::size_t r = 0;
        for (int a = 0; a < d; ++a) {
            const int v = axis_index(flat, a, d, n) - s[a];
            if (v < 0 || v >= n) return false;
            r = r * n + v;
        }
        res = r;
        return true;
    };
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t ii;
        if (!shifted(i, si, ii)) continue;
        for (std::size_t j = 0; j < N; ++j) {
            std::size_t jj;
            if (!shifted(j, sj, jj)) continue;
            out[i * N + j] = F.at(ii, jj);
            if (valid) (*valid)[i * N + j] = true;
        }
    }
    return out;
}

CovarianceResult covariance_check(const BlockMatrix& A, const Signal& f, const Signal& g, const Vec& a,
                                  const Vec& alpha, const Vec& b, const Vec& beta, const Grid& grid) {
    const int d = grid.dim;
    Vec ab(2 * d), al(2 * d);
    ab << a, b;
    al << alpha, -beta;
    const Vec rs = A.inverse() * ab;
    const Vec rhosig = A.entries().transpose() * al;
    const Vec r = rs.head(d), s = rs.tail(d), rho = rhosig.head(d), sig = rhosig.tail(d);
    int ir[2], is[2];
    lattice_index(grid, r, Domain::time, ir);
    lattice_index(grid, sig, Domain::frequency, is);

    auto sv = [](const Vec& v) { return std::vector<double>(v.data(), v.data() + v.size()); };
    CovarianceResult res;
    res.lhs = mwd(A, tf_shift(f, sv(a), sv(alpha)), tf_shift(g, sv(b), sv(beta)), grid);
    const PhaseSpaceField base = mwd(A, f, g, grid);
    res.rhs = base;
    res.rhs.values = shift_cells(base, ir, is, &res.valid);
    const std::size_t N = grid.size();
    const double c0 = sig.dot(s);
    double x[2], w[2];
    for (std::size_t i = 0; i < N; ++i) {
        grid.point(i, x);
        for (std::size_t j = 0; j < N; ++j) {
            grid.freq(j, w);
            double ph = c0;
            for (int k = 0; k < d; ++k) ph += x[k] * rho(k) - w[k] * s(k);
            cplx& v = res.rhs.at(i, j);
            v *= std::polar(1.0, 2 * pi * ph);
            if (res.valid[i * N + j]) res.max_error = std::max(res.max_error, std::abs(v - res.lhs.at(i, j)));
        }
    }
    return res;
}

CovarianceResult covariance_check_cohen(const Mat& Mm, const Signal& f, const Signal& g, const Vec& z, const Vec& w,
                                        const Grid& grid) {
    const int d = grid.dim;
    const BlockMatrix A = preset::cohen(Mm);
    const Mat T = Mm + 0.5 * Mat::Identity(d, d);
    const Vec tc = cohen_maps(T).tcal(z, w);
    const Vec z1 = z.head(d), z2 = z.tail(d), w1 = w.head(d), w2 = w.tail(d);
    const double c0 = (0.5 * (z2 + w2) + Mm * (z2 - w2)).dot(z1 - w1);
    const Vec jx = z2 - w2, jw = -(z1 - w1);  // J(z - w)
    int ir[2], is[2];
    lattice_index(grid, tc.head(d), Domain::time, ir);
    lattice_index(grid, tc.tail(d), Domain::frequency, is);

    auto sv = [](const Vec& v) { return std::vector<double>(v.data(), v.data() + v.size()); };
    CovarianceResult res;
    res.lhs = mwd(A, tf_shift(f, sv(z1), sv(z2)), tf_shift(g, sv(w1), sv(w2)), grid);
    const PhaseSpaceField base = mwd(A, f, g, grid);
    res.rhs = base;
    res.rhs.values = shift_cells(base, ir, is, &res.valid);
    const std::size_t N = grid.size();
    double x[2], om[2];
    for (std::size_t i = 0; i < N; ++i) {
        grid.point(i, x);
        for (std::size_t j = 0; j < N; ++j) {
            grid.freq(j, om);
            double ph = c0;
            for (int k = 0; k < d; ++k) ph += x[k] * jx(k) + om[k] * jw(k);
            cplx& v = res.rhs.at(i, j);
            v *= std::polar(1.0, 2 * pi * ph);
            if (res.valid[i * N + j]) res.max_error = std::max(res.max_error, std::abs(v - res.lhs.at(i, j)));
        }
    }
    return res;
}

ScalarPair magic_eval(const BlockMatrix& A, const Signal& f, const Signal& g, const Signal& phi, const Signal& psi,
                      const Vec& z, const Vec& zeta, const Grid& grid) {
    const int d = grid.dim;
    const PhaseSpaceField F = mwd(A, f, g, grid);
    const PhaseSpaceField P = mwd(A, phi, psi, grid);
    int iz[2], iw[2];
    lattice_index(grid, z.head(d), Domain::time, iz);
    lattice_index(grid, z.tail(d), Domain::frequency, iw);
    const auto Ps = shift_cells(P, iz, iw);
    const std::size_t N = grid.size();
    cplx lhs = 0;
    double x[2], w[2];
    for (std::size_t i = 0; i < N; ++i) {
        grid.point(i, x);
        for (std::size_t j = 0; j < N; ++j) {
            grid.freq(j, w);
            const double ph = dot(x, zeta.data(), d) + dot(w, zeta.data() + d, d);
            lhs += F.at(i, j) * std::conj(Ps[i * N + j]) * std::polar(1.0, -2 * pi * ph);
        }
    }
    lhs *= F.cell();

    const BlockMatrix I2 = preset::reflect(d);
    Vec v1(2 * d), v2(2 * d);
    v1 << z.head(d), zeta.tail(d);
    v2 << zeta.head(d), z.tail(d);
    const Vec ab = A.entries() * I2.entries() * v1;
    const Vec albe = I2.entries() * sharp(A).entries() * v2;
    const Vec a = ab.head(d), b = ab.tail(d), al = albe.head(d), be = albe.tail(d);
    const cplx rhs = std::polar(1.0, -2 * pi * z.tail(d).dot(zeta.tail(d))) *
                     stft_point(f, phi, a.data(), al.data(), grid) *
                     std::conj(stft_point(g, psi, b.data(), be.data(), grid));
    return {lhs, rhs};
}

Marginals marginals(const PhaseSpaceField& F) {
    const std::size_t N = F.size();
    const double wt = std::pow(F.step2(), F.grid.dim), wx = std::pow(F.step1(), F.grid.dim);
    Marginals m;
    m.time.assign(N, cplx(0));
    m.freq.assign(N, cplx(0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            m.time[i] += F.at(i, j) * wt;
            m.freq[j] += F.at(i, j) * wx;
        }
    return m;
}

}  // namespace matwig
