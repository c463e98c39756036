// SPDX-License-Identifier: Apache-2.0
#include "matwig/quantize.hpp"

#include <cmath>

#include "detail.hpp"
#include "matwig/fft.hpp"
#include "matwig/fourier.hpp"

namespace matwig {

using detail::axis_index;
using detail::Dense;
using detail::freq_sum;

namespace {

bool inside_box(const double* u, int d, double half) {
    for (int a = 0; a < d; ++a)
        if (!(u[a] >= -half && u[a] < half)) return false;
    return true;
}

// Evaluates sum_w sigma(u1, w) e^{2 pi i u2.w} (1/L)^d for many (u1, u2).
class RowSum {
  public:
    RowSum(const SymbolField& s, const QuantizeOptions& opt) : s_(s), analytic_(opt.use_analytic && bool(s.analytic)) {
        if (!analytic_) rs_ = Resampler(s.values.data(), s.grid.n, s.grid.dim, s.grid.step(), s.size(), opt.interp);
        const std::size_t N = s.size();
        ws_.resize(N * s.grid.dim);
        for (std::size_t k = 0; k < N; ++k) s.grid.freq(k, &ws_[k * s.grid.dim]);
    }

    // `buf` holds size() values of scratch.
    cplx operator()(const double* u1, const double* u2, cplx* buf) const {
        const Grid& g = s_.grid;
        const std::size_t N = s_.size();
        if (analytic_) {
            for (std::size_t k = 0; k < N; ++k) buf[k] = s_.analytic(u1, &ws_[k * g.dim]);
        } else {
            std::ptrdiff_t off[16];
            double wt[16];
            const int nt = rs_.taps(u1, off, wt);
            if (nt == 0) return 0;
            for (std::size_t k = 0; k < N; ++k) buf[k] = 0;
            for (int t = 0; t < nt; ++t) {
                const cplx* src = rs_.fine() + off[t];
                for (std::size_t k = 0; k < N; ++k) buf[k] += wt[t] * src[k];
            }
        }
        return freq_sum(buf, u2, g) * g.freq_cell();
    }

  private:
    const SymbolField& s_;
    bool analytic_;
    Resampler rs_;
    std::vector<double> ws_;
};

}  // namespace

SymbolField symbol_from_function(const PhaseFn& fn, const Grid& g, std::string tag) {
    SymbolField s(g);
    s.analytic = fn;
    s.tag = std::move(tag);
    const std::size_t N = g.size();
    double x[2], w[2];
    for (std::size_t i = 0; i < N; ++i) {
        g.point(i, x);
        for (std::size_t j = 0; j < N; ++j) {
            g.freq(j, w);
            s.at(i, j) = fn(x, w);
        }
    }
    return s;
}

SymbolField symbol_from_samples(const Grid& g, std::vector<cplx> values, std::string tag) {
    if (values.size() != g.size() * g.size()) throw Error(Errc::grid_mismatch, "symbol sample count mismatch");
    SymbolField s(g);
    s.values = std::move(values);
    s.tag = std::move(tag);
    return s;
}

SymbolField drop_analytic(const SymbolField& s) {
    SymbolField out = s;
    out.analytic = nullptr;
    return out;
}

OperatorMatrix identity_operator(const Grid& g) {
    const auto N = Eigen::Index(g.size());
    OperatorMatrix op{g, Eigen::MatrixXcd::Identity(N, N) / g.cell()};
    return op;
}

OperatorMatrix kernel_from_symbol(const SymbolField& sigma, const BlockMatrix& A, const QuantizeOptions& opt) {
    const Grid& g = sigma.grid;
    const int d = g.dim;
    if (A.dim() != d) throw Error(Errc::grid_mismatch, "kernel_from_symbol: dimension mismatch");
    const std::size_t N = g.size();
    const RowSum rowsum(sigma, opt);
    const Dense Ainv(A.inverse());
    const double half = 0.5 * g.len, inv = 1.0 / A.abs_det();
    OperatorMatrix op{g, Eigen::MatrixXcd::Zero(Eigen::Index(N), Eigen::Index(N))};

#pragma omp parallel for schedule(static) if (par(opt.exec))
    for (std::ptrdiff_t is = 0; is < std::ptrdiff_t(N); ++is) {
        std::vector<cplx> buf(N);
        double s[2], t[2], u1[2], u2[2];
        g.point(std::size_t(is), s);
        for (std::size_t it = 0; it < N; ++it) {
            g.point(it, t);
            Ainv.apply(s, t, u1, u2);
            if (!inside_box(u2, d, half)) continue;
            op.values(is, Eigen::Index(it)) = inv * rowsum(u1, u2, buf.data());
        }
    }
    return op;
}

std::vector<cplx> apply_operator(const OperatorMatrix& op, const std::vector<cplx>& f, Exec exec) {
    const std::size_t N = op.grid.size();
    if (f.size() != N) throw Error(Errc::grid_mismatch, "apply: signal does not match operator grid");
    const double w = op.grid.cell();
    std::vector<cplx> out(N);
#pragma omp parallel for schedule(static) if (par(exec))
    for (std::ptrdiff_t j = 0; j < std::ptrdiff_t(N); ++j) {
        cplx s = 0;
        for (std::size_t k = 0; k < N; ++k) s += op.values(j, Eigen::Index(k)) * f[k];
        out[std::size_t(j)] = s * w;
    }
    return out;
}

Signal apply_operator(const OperatorMatrix& op, const Signal& f, Exec exec) {
    return Signal::sampled(op.grid, apply_operator(op, f.on(op.grid), exec), Domain::time, "apply(" + f.tag() + ")");
}

ScalarPair duality_check(const SymbolField& sigma, const BlockMatrix& A, const Signal& f, const Signal& g,
                         const QuantizeOptions& opt) {
    const Grid& grid = sigma.grid;
    const auto K = kernel_from_symbol(sigma, A, opt);
    const cplx lhs = inner(apply_operator(K, f.on(grid), opt.exec), g.on(grid), grid);
    MwdOptions mo;
    mo.exec = opt.exec;
    const auto B = mwd(A, g, f, grid, mo);
    return {lhs, field_inner(sigma, B)};
}

SymbolField convert_symbol(const SymbolField& rho, const BlockMatrix& B, const BlockMatrix& A,
                           const QuantizeOptions& opt) {
    const Grid& g = rho.grid;
    const int d = g.dim;
    if (A.dim() != d || B.dim() != d) throw Error(Errc::grid_mismatch, "convert_symbol: dimension mismatch");
    const std::size_t N = g.size();
    const Dense C(Mat(B.inverse() * A.entries()));
    const RowSum rowsum(rho, opt);
    const double half = 0.5 * g.len, factor = A.abs_det() / B.abs_det();
    const fft::Layout row_layout{g.n, d, 1, 1, 0};
    SymbolField out(g);
    out.tag = "convert(" + rho.tag + ")";

#pragma omp parallel for schedule(static) if (par(opt.exec))
    for (std::ptrdiff_t ix = 0; ix < std::ptrdiff_t(N); ++ix) {
        std::vector<cplx> buf(N);
        cplx* row = out.values.data() + std::size_t(ix) * N;
        double x[2], y[2], c1[2], c2[2];
        g.point(std::size_t(ix), x);
        for (std::size_t iy = 0; iy < N; ++iy) {
            g.point(iy, y);
            C.apply(x, y, c1, c2);
            row[iy] = inside_box(c2, d, half) ? rowsum(c1, c2, buf.data()) : cplx(0);
        }
        fft::centered(row, row_layout, -1, g.cell() * factor);
    }
    return out;
}

SymbolField convert_symbol_cohen(const SymbolField& sigma, const Mat& T1, const Mat& T2) {
    const Mat dT = T2 - T1;
    const int d = int(dT.rows());
    SymbolField out(sigma.grid);
    static_cast<Field2&>(out) = multiplier(sigma, [&dT, d](const double* xi, const double* eta) {
        double s = 0;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) s += xi[r] * dT(r, c) * eta[c];
        return std::polar(1.0, -2 * pi * s);
    });
    out.tag = "convert_cohen(" + sigma.tag + ")";
    return out;
}

AdjointSymbol adjoint_symbol(const SymbolField& sigma, const BlockMatrix& A) {
    SymbolField rho = sigma;
    for (auto& v : rho.values) v = std::conj(v);
    if (sigma.analytic) {
        auto fn = sigma.analytic;
        rho.analytic = [fn](const double* x, const double* w) { return std::conj(fn(x, w)); };
    }
    rho.tag = "conj(" + sigma.tag + ")";
    return {rho, derived(A, Derived::C1)};
}

Signal spreading_apply(const SymbolField& sigma, const Mat& T, const Signal& f) {
    const Grid& g = sigma.grid;
    const int d = g.dim, n = g.n;
    if (T.rows() != d || f.dim() != d) throw Error(Errc::grid_mismatch, "spreading_apply: dimension mismatch");
    if (!f.is_analytic()) require_same(f.grid(), g, "spreading_apply");
    const std::size_t N = g.size();
    const Field2 sh = ft2(sigma);  // axis 1: xi (frequency), axis 2: u (time)
    std::vector<cplx> cols(N * N);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t m = 0; m < N; ++m) cols[m * N + k] = sh.at(k, m);
    const std::vector<cplx> fs = f.is_analytic() ? std::vector<cplx>{} : f.samples();
    std::vector<cplx> out(N);
    const double w = g.freq_cell() * g.cell();

#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < std::ptrdiff_t(N); ++j) {
        double x[2], u[2], t[2], v[2];
        g.point(std::size_t(j), x);
        cplx acc = 0;
        for (std::size_t m = 0; m < N; ++m) {
            g.point(m, u);
            for (int a = 0; a < d; ++a) t[a] = x[a] + u[a];
            cplx fv;
            if (f.is_analytic()) {
                fv = f(t);
            } else {
                std::size_t idx = 0;
                bool in = true;
                for (int a = 0; a < d; ++a) {
                    const int i = axis_index(std::size_t(j), a, d, n) + axis_index(m, a, d, n) - n / 2;
                    in = in && i >= 0 && i < n;
                    idx = idx * n + std::size_t(std::max(i, 0));
                }
                fv = in ? fs[idx] : cplx(0);
            }
            if (fv == cplx(0)) continue;
            for (int r = 0; r < d; ++r) {
                double s = x[r];
                for (int c = 0; c < d; ++c) s += T(r, c) * u[c];
                v[r] = s;
            }
            acc += freq_sum(&cols[m * N], v, g) * fv;
        }
        out[std::size_t(j)] = acc * w;
    }
    return Signal::sampled(g, std::move(out), Domain::time, "spreading");
}

Signal spreading_apply(const SymbolField& sigma, const BlockMatrix& A, const Signal& f) {
    return spreading_apply(sigma, cohen_T_of(A), f);
}

SymbolField compose_J_inverse(const SymbolField& sigma) {
    const Grid& g = sigma.grid;
    if (!g.self_dual()) throw Error(Errc::grid_not_self_dual, "sigma o J^{-1} by remapping needs step == 1/L");
    const int d = g.dim, n = g.n;
    const std::size_t N = g.size();
    SymbolField out(g);
    out.tag = "J(" + sigma.tag + ")";
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            // x-index of -w_j is n - j per axis; w-index of x_i is i.
            std::size_t src = 0;
            bool in = true;
            for (int a = 0; a < d; ++a) {
                const int k = axis_index(j, a, d, n);
                in = in && k != 0;
                src = src * n + std::size_t((n - k) % n);
            }
            out.at(i, j) = in ? sigma.at(src, i) : cplx(0);
        }
    if (sigma.analytic) {
        auto fn = sigma.analytic;
        out.analytic = [fn, d](const double* x, const double* w) {
            double mw[2];
            for (int a = 0; a < d; ++a) mw[a] = -w[a];
            return fn(mw, x);
        };
    }
    return out;
}

SignalPair fourier_conjugation_check(const SymbolField& sigma, const BlockMatrix& A, const Signal& f,
                                     const QuantizeOptions& opt) {
    const Mat T = cohen_T_of(A);
    const Grid& g = sigma.grid;
    if (!g.self_dual()) throw Error(Errc::grid_not_self_dual, "Fourier conjugation check needs step == 1/L");
    const int d = g.dim;
    const auto fs = f.on(g);
    const auto K1 = kernel_from_symbol(sigma, A, opt);
    SignalPair r;
    r.lhs = ft(apply_operator(K1, ift(fs, g), opt.exec), g);
    const auto K2 = kernel_from_symbol(compose_J_inverse(sigma), preset::affine(Mat::Identity(d, d) - T), opt);
    r.rhs = apply_operator(K2, fs, opt.exec);
    double num = 0;
    for (std::size_t i = 0; i < fs.size(); ++i) num += std::norm(r.lhs[i] - r.rhs[i]);
    r.rel_error = std::sqrt(num * g.cell()) / norm(fs, g);
    return r;
}

ChannelMatrix channel_matrix(const SymbolField& sigma, const Mat& T, const Signal& phi, const std::vector<Vec>& lattice,
                             const QuantizeOptions& opt) {
    const Grid& g = sigma.grid;
    const int d = g.dim;
    const auto K = kernel_from_symbol(sigma, preset::affine(T), opt);
    std::vector<std::vector<cplx>> shifted(lattice.size()), applied(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        int idx[2];
        lattice_index(g, lattice[i].head(d), Domain::time, idx);
        lattice_index(g, lattice[i].tail(d), Domain::frequency, idx);
        const Vec z = lattice[i];
        shifted[i] = tf_shift(phi, std::vector<double>(z.data(), z.data() + d),
                              std::vector<double>(z.data() + d, z.data() + 2 * d), &g)
                         .on(g);
    }
#pragma omp parallel for schedule(static) if (par(opt.exec))
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(lattice.size()); ++i)
        applied[std::size_t(i)] = apply_operator(K, shifted[std::size_t(i)], Exec::serial);

    ChannelMatrix cm;
    cm.lattice = lattice;
    const auto L = Eigen::Index(lattice.size());
    cm.entries.resize(L, L);
    for (Eigen::Index i = 0; i < L; ++i)
        for (Eigen::Index j = 0; j < L; ++j) cm.entries(i, j) = inner(applied[i], shifted[j], g);
    return cm;
}

cplx symbol_stft(const SymbolField& sigma, const Mat& T, const Signal& phi, const Vec& X, const Vec& Y) {
    const Grid& g = sigma.grid;
    const int d = g.dim;
    MwdOptions mo;
    mo.origin_x.assign(X.data(), X.data() + d);
    mo.origin_w.assign(X.data() + d, X.data() + 2 * d);
    const auto Phi = mwd(preset::affine(T), phi, phi, g, mo);
    const std::size_t N = g.size();
    cplx s = 0;
    double x[2], w[2];
    for (std::size_t i = 0; i < N; ++i) {
        g.point(i, x);
        for (std::size_t j = 0; j < N; ++j) {
            g.freq(j, w);
            double ph = 0;
            for (int a = 0; a < d; ++a) ph += x[a] * Y(a) + w[a] * Y(d + a);
            s += sigma.at(i, j) * std::conj(Phi.at(i, j)) * std::polar(1.0, -2 * pi * ph);
        }
    }
    return s * g.cell() * g.freq_cell();
}

double hs_norm(const OperatorMatrix& op) { return op.values.norm() * op.grid.cell(); }

double op_norm(const OperatorMatrix& op) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(op.values);
    return svd.singularValues()(0) * op.grid.cell();
}

}  // namespace matwig
