// SPDX-License-Identifier: Apache-2.0
#include "matwig/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <random>

#include "matwig/cohen.hpp"
#include "matwig/fourier.hpp"
#include "matwig/mwd.hpp"
#include "matwig/quantize.hpp"

namespace matwig::verify {

bool Check::pass() const {
    if (!std::isfinite(value)) return false;
    return lower ? value > bound : value < bound;
}

bool SuiteResult::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

const Check* SuiteResult::worst() const {
    const Check* best = nullptr;
    double score = -1;
    for (const auto& c : checks) {
        double s = c.lower ? c.bound / std::max(c.value, 1e-300) : c.value / c.bound;
        if (!std::isfinite(s)) s = std::numeric_limits<double>::max();
        if (s > score) {
            score = s;
            best = &c;
        }
    }
    return best;
}

namespace {

using Rng = std::mt19937_64;

constexpr double inf = std::numeric_limits<double>::infinity();

struct Ctx {
    const SuiteOptions& opt;
    Rng rng;
    std::vector<Check> checks;

    void add(std::string name, double value, double bound) { checks.push_back({std::move(name), value, bound, false}); }
    void add_lower(std::string name, double value, double bound) { checks.push_back({std::move(name), value, bound, true}); }

    double unif(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

    MwdOptions mwd_opt() const {
        MwdOptions m;
        m.exec = opt.exec;
        return m;
    }
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

Mat scalar(double v) { return Mat::Constant(1, 1, v); }

const Grid& g1() {
    static const Grid g = default_grid(1);
    return g;
}

const Grid& g2() {
    static const Grid g = default_grid(2);
    return g;
}

// Entries in [-1.5, 1.5], singular values in [0.5, 2.5], |det A12|, |det A22| >= 0.3.
BlockMatrix random_right_regular(Ctx& c, int d) {
    for (;;) {
        Mat m(2 * d, 2 * d);
        for (int r = 0; r < 2 * d; ++r)
            for (int k = 0; k < 2 * d; ++k) m(r, k) = c.unif(-1.5, 1.5);
        Eigen::JacobiSVD<Mat> svd(m);
        const auto& s = svd.singularValues();
        if (s(0) > 2.5 || s(2 * d - 1) < 0.5) continue;
        if (std::abs(m.topRightCorner(d, d).determinant()) < 0.3) continue;
        if (std::abs(m.bottomRightCorner(d, d).determinant()) < 0.3) continue;
        return BlockMatrix::from_entries(m);
    }
}

// Phase-space point with time part on the x-grid and frequency part on the w-grid.
Vec on_grid(Ctx& c, const Grid& g, double rx, double rw) {
    const int d = g.dim;
    Vec v(2 * d);
    const int kx = int(rx / g.step()), kw = int(rw / g.freq_step());
    for (int a = 0; a < d; ++a) {
        v(a) = c.pick(-kx, kx) * g.step();
        v(d + a) = c.pick(-kw, kw) * g.freq_step();
    }
    return v;
}

Signal fourier_of(const Signal& f) {
    return Signal::analytic(f.dim(), [f](const double* w) { return f.fourier(w); }, {}, "ft(" + f.tag() + ")");
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

double max_abs_matrix(const Eigen::MatrixXcd& a) { return a.cwiseAbs().maxCoeff(); }

PhaseFn gaussian_symbol(double a = 1, double b = 1, double x0 = 0, double c = 0) {
    // e^{-pi(a (x - x0)^2 + b w^2)} e^{2 pi i c x.w}
    return [=](const double* x, const double* w) {
        return std::polar(std::exp(-pi * (a * (x[0] - x0) * (x[0] - x0) + b * w[0] * w[0])), 2 * pi * c * x[0] * w[0]);
    };
}

// ---- 1 ----
void suite_gaussian(Ctx& c) {
    const Grid& g = g1();
    for (double mu : {-0.4, 0.0, 0.3, 0.5})
        for (double lam : {0.5, 1.0, 2.0}) {
            const auto W = mwd(preset::cohen(scalar(mu)), gaussian(lam), gaussian(lam), g, c.mwd_opt());
            const auto O = gaussian_oracle(scalar(mu), lam, g);
            c.add("d=1 mu=" + fmt("%g", mu) + " lambda=" + fmt("%g", lam), max_abs_diff(W.values, O.values), 1e-8);
        }
    const auto W0 = mwd(preset::wigner(1), gaussian(1), gaussian(1), g);
    const std::size_t mid = std::size_t(g.n / 2);
    c.add("Wigner origin value sqrt(2)", std::abs(W0.at(mid, mid) - std::sqrt(2.0)), 1e-8);

    const int count = c.opt.full ? 3 : 1;
    for (int k = 0; k < count; ++k) {
        Mat M(2, 2);
        for (int i = 0; i < 4; ++i) M(i / 2, i % 2) = c.unif(-0.6, 0.6);
        MwdOptions mo;
        mo.oversample = 2;
        mo.exec = c.opt.exec;
        const auto W = mwd(preset::cohen(M), gaussian(1, 2), gaussian(1, 2), g2(), mo);
        const auto O = gaussian_oracle(M, 1, g2());
        c.add("d=2 random M #" + std::to_string(k + 1), max_abs_diff(W.values, O.values), 1e-8);
    }
}

// ---- 2 ----
void suite_moyal(Ctx& c) {
    const Grid& g = g1();
    const Signal f1 = hermite(2), g1s = gaussian(1);
    const Signal f2 = sum({hermite(2), gaussian(2)}, {1.0, 0.5});
    const Signal g2s = tf_shift(gaussian(1.5), {0.25}, {0.125});
    const cplx ff = inner(f1, f2, g), gg = inner(g1s, g2s, g);

    std::vector<std::pair<std::string, BlockMatrix>> mats = {
        {"wigner", preset::wigner(1)},   {"rihaczek", preset::rihaczek(1)},
        {"stft", preset::stft(1)},       {"ambiguity", preset::ambiguity(1)},
        {"cohen(0.3)", preset::cohen(scalar(0.3))},
    };
    for (int k = 0; k < 10; ++k) mats.emplace_back("random #" + std::to_string(k + 1), random_right_regular(c, 1));

    MwdOptions mo;
    mo.exec = c.opt.exec;
    for (const auto& [name, A] : mats) {
        const double det = c.opt.break_det ? A.abs_det() + 0.5 : A.abs_det();
        const cplx lhs = field_inner(mwd(A, f1, g1s, g, mo), mwd(A, f2, g2s, g, mo));
        const cplx rhs = ff * std::conj(gg) / det;
        c.add(name, rel(lhs, rhs), 1e-7);
    }
    // Cohen-type: <B f, B g> = |<f, g>|^2
    const cplx fg = inner(f1, f2, g);
    const auto A = preset::cohen(scalar(-0.4));
    const cplx lhs = field_inner(mwd(A, f1, f1, g, mo), mwd(A, f2, f2, g, mo));
    c.add("Moyal cohen(-0.4)", rel(lhs, std::norm(fg)), 1e-7);

    if (c.opt.full) {
        MwdOptions m2 = mo;
        m2.oversample = 2;
        const auto A2 = random_right_regular(c, 2);
        const Signal a = gaussian(1, 2), b = tf_shift(gaussian(1.5, 2), {0.375, 0}, {0, 0.25});
        const cplx l = field_inner(mwd(A2, a, a, g2(), m2), mwd(A2, b, b, g2(), m2));
        const cplx r = std::norm(inner(a, b, g2())) / A2.abs_det();
        c.add("d=2 random", rel(l, r), 1e-7);
    }
}

// ---- 3 ----
void suite_stft(Ctx& c) {
    const Grid& g = g1();
    const std::vector<std::pair<Signal, Signal>> pairs = {
        {gaussian(1), gaussian(2)},
        {hermite(3), tf_shift(gaussian(1), {0.5}, {0.25})},
    };
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [f, w] = pairs[k];
        const auto a = mwd(preset::stft(1), f, w, g, c.mwd_opt());
        const auto b = stft(f, w, g, c.opt.exec);
        c.add("mwd(stft) = direct STFT, pair " + std::to_string(k + 1), max_abs_diff(a.values, b.values), 1e-10);
    }
    std::vector<std::pair<std::string, BlockMatrix>> mats = {
        {"ambiguity", preset::ambiguity(1)}, {"cohen(0.3)", preset::cohen(scalar(0.3))}, {"wigner", preset::wigner(1)}};
    if (c.opt.full) mats.emplace_back("random", random_right_regular(c, 1));
    for (const auto& [name, A] : mats)
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto& [f, w] = pairs[k];
            const auto a = mwd_via_stft(A, f, w, g);
            const auto b = mwd(A, f, w, g, c.mwd_opt());
            c.add("factorization " + name + ", pair " + std::to_string(k + 1), max_abs_diff(a.values, b.values), 1e-7);
        }
}

// ---- 4 ----
void suite_inversion(Ctx& c) {
    const Grid& g = g1();
    const Signal f = hermite(2), w = gaussian(1);
    const auto fs = f.on(g);
    for (const auto& [name, A] : std::vector<std::pair<std::string, BlockMatrix>>{
             {"wigner", preset::wigner(1)}, {"cohen(0.3)", preset::cohen(scalar(0.3))}, {"ambiguity", preset::ambiguity(1)}}) {
        const auto H = mwd(A, f, w, g, c.mwd_opt());
        const auto r = reconstruct(A, H, w, w);
        c.add(name, l2_diff_rel(r.on(g), fs), 1e-6);
    }
    if (c.opt.full) {
        const auto A = random_right_regular(c, 1);
        const Signal gam = gaussian(2);
        const auto r = reconstruct(A, mwd(A, f, w, g), w, gam);
        c.add("random A, gamma != g", l2_diff_rel(r.on(g), fs), 1e-6);
    }
}

// ---- 5 ----
void suite_identities(Ctx& c) {
    const Grid& g = g1();  // self-dual: frequency and time samples coincide
    const std::size_t N = g.size(), n = std::size_t(g.n);
    const Signal f = gaussian(1), w = tf_shift(gaussian(2), {0.5}, {0.25});
    std::vector<std::pair<std::string, BlockMatrix>> mats = {
        {"wigner", preset::wigner(1)},
        {"ambiguity", preset::ambiguity(1)},
        {"cohen(0.3)", preset::cohen(scalar(0.3))},
        {"tau(0.25)", preset::tau(0.25, 1)},
        {"random", random_right_regular(c, 1)},
    };
    MwdOptions mo;
    mo.exec = c.opt.exec;
    for (const auto& [name, A] : mats) {
        const auto B = mwd(A, f, w, g, mo);

        // ft over both variables against B_{AJ} with swapped arguments
        const auto F = ft2(B);
        const auto BJ = mwd(derived(A, Derived::AJ), f, w, g, mo);
        double e = 0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) e = std::max(e, std::abs(F.at(i, j) - BJ.at(j, i)));
        c.add("Fourier of MWD, " + name, e, 1e-7);

        const auto Bs = mwd(A, w, f, g, mo);
        const auto C1 = mwd(derived(A, Derived::C1), f, w, g, mo);
        e = 0;
        for (std::size_t k = 0; k < Bs.values.size(); ++k) e = std::max(e, std::abs(Bs.values[k] - std::conj(C1.values[k])));
        c.add("interchange, " + name, e, 1e-8);

        const auto Bh = mwd(A, fourier_of(f), fourier_of(w), g, mo);
        const auto C2 = mwd(derived(A, Derived::C2), f, w, g, mo);
        e = 0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 1; j < N; ++j)
                e = std::max(e, std::abs(Bh.at(i, j) - C2.at(n - j, i) / A.abs_det()));
        c.add("Fourier behaviour, " + name, e, 1e-7);
    }
    double im = 0;
    for (const auto& v : mwd(preset::wigner(1), w, w, g, mo).values) im = std::max(im, std::abs(v.imag()));
    c.add("real-valued Wigner of f = g", im, 1e-8);
}

// ---- 6 ----
void suite_covariance(Ctx& c) {
    const Grid& g = g1();
    const Signal f = hermite(1), w = gaussian(1);
    auto v = [](double a) { return Vec::Constant(1, a); };
    struct Case {
        std::string name;
        BlockMatrix A;
        double a, al, b, be;
    };
    const std::vector<Case> cases = {
        {"wigner a=1", preset::wigner(1), 1, 0, 0, 0},
        {"wigner mixed", preset::wigner(1), 0.5, 0.125, -0.25, 0.25},
        {"ambiguity", preset::ambiguity(1), 0.5, 0.25, 0.25, 0.125},
        {"stft", preset::stft(1), 0.75, 0.5, 0.25, -0.125},
        {"cohen(0.3)", preset::cohen(scalar(0.3)), 1.25, 0.3125, 0, 0.3125},
    };
    for (const auto& k : cases) {
        const auto r = covariance_check(k.A, f, w, v(k.a), v(k.al), v(k.b), v(k.be), g);
        c.add("general form, " + k.name, r.max_error, 1e-8);
    }
    struct CCase {
        std::string name;
        double M;
        Vec z, w;
    };
    auto p = [](double x, double y) { return Vec((Vec(2) << x, y).finished()); };
    const std::vector<CCase> cc = {
        {"M=0", 0.0, p(0.5, 0.25), p(-0.25, 0.125)},
        {"M=0.3", 0.3, p(1.25, 0), p(0, 0.3125)},
        {"M=-0.3", -0.3, p(0.625, 0.25), p(-0.625, -0.375)},
    };
    for (const auto& k : cc) {
        const auto r = covariance_check_cohen(scalar(k.M), f, w, k.z, k.w, g);
        c.add("Cohen form, " + k.name, r.max_error, 1e-8);
    }
}

// ---- 7 ----
void suite_magic(Ctx& c) {
    const Grid& g = g1();
    const Signal f = hermite(1), w = gaussian(1), phi = gaussian(1), psi = gaussian(2);
    for (const auto& [name, A] : std::vector<std::pair<std::string, BlockMatrix>>{
             {"wigner", preset::wigner(1)}, {"cohen(0.3)", preset::cohen(scalar(0.3))}}) {
        double e = 0;
        for (int k = 0; k < 20; ++k) {
            const Vec z = on_grid(c, g, 1.5, 1.5), zeta = on_grid(c, g, 1.5, 1.5);
            e = std::max(e, magic_eval(A, f, w, phi, psi, z, zeta, g).error());
        }
        c.add(name + ", 20 random points", e, 1e-6);
    }
}

// ---- 8 ----
void suite_multiplier(Ctx& c) {
    const Grid& g = g1();
    const std::vector<std::pair<Signal, Signal>> pairs = {{gaussian(1), gaussian(1)}, {hermite(2), gaussian(1)}};
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& [f, w] = pairs[k];
        const auto W = mwd(preset::wigner(1), f, w, g);
        for (double mu : {0.3, -0.4}) {
            const auto R = remap(W, scalar(0), scalar(mu));
            const auto D = mwd(preset::cohen(scalar(mu)), f, w, g);
            c.add("remap 0 -> " + fmt("%g", mu) + ", pair " + std::to_string(k + 1), max_abs_diff(R.values, D.values), 1e-7);
        }
        const auto W3 = mwd(preset::cohen(scalar(0.3)), f, w, g);
        const auto direct = remap(W3, scalar(0.3), scalar(-0.4));
        const auto two = remap(remap(W3, scalar(0.3), scalar(0)), scalar(0), scalar(-0.4));
        c.add("remap composition, pair " + std::to_string(k + 1), max_abs_diff(direct.values, two.values), 1e-10);
    }
    struct Conv {
        double m1, m2;
    };
    for (const auto& [m1, m2] : {Conv{0, 1}, Conv{0.3, -0.7}, Conv{-0.5, 0.5}, Conv{0, 0.5}, Conv{0.3, 0}}) {
        const auto W1 = mwd(preset::cohen(scalar(m1)), gaussian(1), gaussian(1), g);
        const auto C = convolve_theta(W1, scalar(m1), scalar(m2));
        const auto D = mwd(preset::cohen(scalar(m2)), gaussian(1), gaussian(1), g);
        c.add("convolution " + fmt("%g", m1) + " -> " + fmt("%g", m2), max_abs_diff(C.values, D.values), 1e-6);
    }
}

// ---- 9 ----
void suite_duality(Ctx& c) {
    const Grid& g = g1();
    const std::vector<std::pair<std::string, BlockMatrix>> mats = {
        {"wigner", preset::wigner(1)},     {"tau(0.25)", preset::tau(0.25, 1)},
        {"rihaczek", preset::rihaczek(1)}, {"stft", preset::stft(1)},
        {"ambiguity", preset::ambiguity(1)}, {"cohen(0.3)", preset::cohen(scalar(0.3))},
    };
    const std::vector<std::pair<std::string, Signal>> sigs = {
        {"gaussian", gaussian(1)}, {"hermite(1)", hermite(1)}, {"chirp", chirp(1.0)}};
    const std::vector<std::pair<std::string, SymbolField>> syms = {
        {"gaussian symbol", symbol_from_function(gaussian_symbol(1, 1), g, "gaussian")},
        {"chirped symbol", symbol_from_function(gaussian_symbol(1, 0.5, 0.25, 0.5), g, "chirped")},
    };
    const Signal other = tf_shift(gaussian(1.5), {0.25}, {0.125});
    QuantizeOptions qo;
    qo.exec = c.opt.exec;
    for (const auto& [an, A] : mats)
        for (const auto& [sn, s] : sigs)
            for (const auto& [yn, y] : syms) {
                const auto r = duality_check(y, A, s, other, qo);
                const double e = rel(r.lhs, r.rhs);
                c.add(an + " / " + sn + " / " + yn, e, 1e-6);
            }
    const SymbolField zero = symbol_from_function([](const double*, const double*) { return cplx(0); }, g);
    const auto z = duality_check(zero, preset::wigner(1), gaussian(1), other, qo);
    c.add("zero symbol", std::abs(z.lhs) + std::abs(z.rhs), 1e-15);
}

// ---- 10 ----
void suite_convert(Ctx& c) {
    const Grid& g = g1();
    QuantizeOptions qo;
    qo.exec = c.opt.exec;
    const SymbolField rho = symbol_from_function(gaussian_symbol(1, 0.5, 0.25, 0.5), g, "chirped");
    const SymbolField rho_s = drop_analytic(rho);
    const auto W = preset::wigner(1), K25 = preset::tau(0.25, 1), KN = preset::rihaczek(1);
    const auto Kref = kernel_from_symbol(rho, W, qo);

    const auto s1 = convert_symbol(rho, W, K25, qo);
    c.add("wigner -> tau(0.25), operator", max_abs_matrix(kernel_from_symbol(s1, K25, qo).values - Kref.values), 1e-5);
    const auto s1s = convert_symbol(rho_s, W, K25, qo);
    c.add("wigner -> tau(0.25), sampled symbol", max_abs_matrix(kernel_from_symbol(s1s, K25, qo).values - Kref.values), 1e-5);

    const auto A_st = preset::stft(1);
    const auto s2 = convert_symbol(rho, W, A_st, qo);
    c.add("wigner -> stft, operator", max_abs_matrix(kernel_from_symbol(s2, A_st, qo).values - Kref.values), 1e-5);

    const auto sc = convert_symbol_cohen(rho, scalar(0.5), scalar(0.25));
    c.add("Cohen multiplier 1/2 -> 0.25, operator", max_abs_matrix(kernel_from_symbol(sc, K25, qo).values - Kref.values), 1e-5);
    c.add("Cohen multiplier = general conversion", max_abs_diff(sc.values, s1.values), 1e-6);

    const auto chain = convert_symbol(s1, K25, KN, qo);
    const auto direct = convert_symbol(rho, W, KN, qo);
    c.add("chain wigner -> tau(0.25) -> rihaczek", max_abs_diff(chain.values, direct.values), 1e-5);
    const auto back = convert_symbol(convert_symbol(rho, W, KN, qo), KN, W, qo);
    c.add("round trip wigner -> rihaczek -> wigner", max_abs_diff(back.values, rho.values), 1e-5);
}

// ---- 11 ----
void suite_spreading(Ctx& c) {
    const Grid g = Grid::make(1, 64, 12);
    QuantizeOptions qo;
    qo.exec = c.opt.exec;
    const std::vector<std::pair<std::string, SymbolField>> syms = {
        {"gaussian symbol", symbol_from_function(gaussian_symbol(1, 1), g)},
        {"chirped symbol", symbol_from_function(gaussian_symbol(1, 0.5, 0.25, 0.5), g)},
    };
    for (double t : {0.5, 0.3})
        for (const auto& [sn, s] : syms)
            for (const auto& [fn, f] : std::vector<std::pair<std::string, Signal>>{{"gaussian", gaussian(1)}, {"hermite(1)", hermite(1)}}) {
                const auto a = spreading_apply(s, scalar(t), f);
                const auto b = apply_operator(kernel_from_symbol(s, preset::affine(scalar(t)), qo), f.on(g), c.opt.exec);
                c.add("T=" + fmt("%g", t) + " / " + sn + " / " + fn, l2_diff_rel(a.samples(), b), 1e-4);
            }
}

// ---- 12 ----
void suite_adjoint(Ctx& c) {
    const Grid& g = g1();
    QuantizeOptions qo;
    qo.exec = c.opt.exec;
    for (const auto& [sn, fn] : std::vector<std::pair<std::string, PhaseFn>>{
             {"gaussian", gaussian_symbol(1, 1)}, {"shifted anisotropic", gaussian_symbol(2, 0.5, 0.5)}}) {
        const auto K = kernel_from_symbol(symbol_from_function(fn, g), preset::wigner(1), qo);
        c.add("Weyl real " + sn + " symbol Hermitian", max_abs_matrix(K.values - K.values.adjoint()), 1e-8);
    }
    const SymbolField s = symbol_from_function(gaussian_symbol(1, 0.5, 0.25, 0.5), g);
    for (const auto& [an, A] : std::vector<std::pair<std::string, BlockMatrix>>{
             {"tau(0.25)", preset::tau(0.25, 1)}, {"ambiguity", preset::ambiguity(1)},
             {"stft", preset::stft(1)}, {"random", random_right_regular(c, 1)}}) {
        const auto K = kernel_from_symbol(s, A, qo);
        const auto adj = adjoint_symbol(s, A);
        const auto Ka = kernel_from_symbol(adj.rho, adj.B, qo);
        c.add("adjoint symbol, " + an, max_abs_matrix(Ka.values - K.values.adjoint()), 1e-6);
        const auto adj2 = adjoint_symbol(adj.rho, adj.B);
        const auto K2 = kernel_from_symbol(adj2.rho, adj2.B, qo);
        c.add("double adjoint, " + an, max_abs_matrix(K2.values - K.values), 1e-8);
    }
    // Real chirped symbol: Weyl stays Hermitian, Kohn-Nirenberg does not.
    const PhaseFn real_chirp = [](const double* x, const double* w) {
        return cplx(std::exp(-pi * (x[0] * x[0] + w[0] * w[0])) * std::cos(2 * pi * x[0] * w[0]));
    };
    const auto KN = kernel_from_symbol(symbol_from_function(real_chirp, g), preset::rihaczek(1), qo);
    c.add_lower("Kohn-Nirenberg not Hermitian (deviation)", max_abs_matrix(KN.values - KN.values.adjoint()), 1e-3);
}

// ---- 13 ----
void suite_conjugation(Ctx& c) {
    const Grid& g = g1();
    QuantizeOptions qo;
    qo.exec = c.opt.exec;
    const Signal f = hermite(2);
    const SymbolField s = symbol_from_function(gaussian_symbol(1, 2, 0.5), g);
    for (double t : {0.5, 0.3}) {
        const auto r = fourier_conjugation_check(s, preset::affine(scalar(t)), f, qo);
        c.add("T=" + fmt("%g", t), r.rel_error, 1e-6);
    }
    const SymbolField radial = symbol_from_function(gaussian_symbol(1, 1), g);
    const auto r = fourier_conjugation_check(radial, preset::wigner(1), f, qo);
    const auto direct = apply_operator(kernel_from_symbol(radial, preset::wigner(1), qo), f.on(g), c.opt.exec);
    double num = 0;
    for (std::size_t i = 0; i < direct.size(); ++i) num += std::norm(r.lhs[i] - direct[i]);
    c.add("radial symbol commutes with F", std::sqrt(num * g.cell()) / norm(f, g), 1e-6);
}

// ---- 14 ----
void suite_channel(Ctx& c) {
    const Grid& g = g1();
    QuantizeOptions qo;
    qo.exec = c.opt.exec;
    const Signal phi = gaussian(1);
    const SymbolField s = symbol_from_function(gaussian_symbol(0.5, 1), g);
    std::vector<Vec> lattice;
    for (int k = 0; k < 5; ++k) lattice.push_back(on_grid(c, g, 1.5, 1.5));
    for (double t : {0.5, 0.3}) {
        const Mat T = scalar(t);
        const auto cm = channel_matrix(s, T, phi, lattice, qo);
        const auto maps = cohen_maps(T);
        double e = 0, eu = 0;
        for (std::size_t i = 0; i < lattice.size(); ++i)
            for (std::size_t j = 0; j < lattice.size(); ++j) {
                const Vec& z = lattice[i];
                const Vec& w = lattice[j];
                const Vec X = maps.tcal(w, z);
                Vec Y(2);
                Y << w(1) - z(1), -(w(0) - z(0));
                const double lhs = std::abs(cm.entries(Eigen::Index(i), Eigen::Index(j)));
                e = std::max(e, std::abs(lhs - std::abs(symbol_stft(s, T, phi, X, Y))));
                if (maps.U) {
                    const Vec Xu = maps.I_plus_P * (w - maps.u() * z);
                    eu = std::max(eu, std::abs(lhs - std::abs(symbol_stft(s, T, phi, Xu, Y))));
                }
            }
        c.add("T=" + fmt("%g", t) + ", 25 pairs", e, 1e-6);
        c.add("T=" + fmt("%g", t) + ", U_T form", eu, 1e-6);
        if (t == 0.5) {
            const double h = max_abs_matrix(cm.entries - cm.entries.adjoint());
            c.add("Weyl real symbol: Hermitian channel matrix", h, 1e-8);
        }
    }
}

// ---- 15 ----
void suite_bounds(Ctx& c) {
    const Grid& g = g1();
    const Signal f = gaussian(1), w = tf_shift(gaussian(2), {0.25}, {0.5});
    const auto fs = f.on(g), ws = w.on(g);
    std::vector<std::pair<std::string, BlockMatrix>> rr = {
        {"wigner", preset::wigner(1)}, {"stft", preset::stft(1)}, {"ambiguity", preset::ambiguity(1)},
        {"cohen(0.3)", preset::cohen(scalar(0.3))}, {"random", random_right_regular(c, 1)}};
    struct PQ {
        double p, q;
    };
    auto conj_exp = [](double p) { return p == 1 ? inf : (p == inf ? 1.0 : p / (p - 1)); };
    auto inv = [](double p) { return p == inf ? 0.0 : 1.0 / p; };
    for (const auto& [name, A] : rr) {
        const auto B = mwd(A, f, w, g, c.mwd_opt());
        const double d12 = std::abs(A.a12().determinant()), d22 = std::abs(A.a22().determinant());
        for (const auto& [p, q] : {PQ{2, 2}, PQ{2, 4}, PQ{4.0 / 3, 4}, PQ{1, inf}, PQ{4, 4}}) {
            const double pp = conj_exp(p);
            const double rhs = lp_norm(fs, g, p) * lp_norm(ws, g, pp) /
                               (std::pow(A.abs_det(), inv(q)) * std::pow(d12, inv(p) - inv(q)) * std::pow(d22, inv(pp) - inv(q)));
            c.add("L^q bound " + name + " p=" + fmt("%g", p) + " q=" + fmt("%g", q), mixed_norm(B, q, q) / rhs, 1.02);
        }
    }
    QuantizeOptions qo;
    qo.exec = c.opt.exec;
    const SymbolField s = symbol_from_function(gaussian_symbol(1, 2, 0.5), g);
    const double l1 = mixed_norm(s, 1, 1), l2 = mixed_norm(s, 2, 2);
    for (const auto& [name, A] : rr) {
        const auto K = kernel_from_symbol(s, A, qo);
        const double d12 = std::abs(A.a12().determinant()), d22 = std::abs(A.a22().determinant());
        c.add("L^1 symbol operator bound " + name, op_norm(K) / (l1 / std::sqrt(d12 * d22)), 1.05);
    }
    std::vector<std::pair<std::string, BlockMatrix>> all = rr;
    all.emplace_back("rihaczek", preset::rihaczek(1));
    all.emplace_back("tau(0.25)", preset::tau(0.25, 1));
    for (const auto& [name, A] : all) {
        const auto K = kernel_from_symbol(s, A, qo);
        c.add("Hilbert-Schmidt bound " + name, hs_norm(K) / (l2 / std::sqrt(A.abs_det())), 1.02);
    }
}

// ---- 16 ----
void suite_marginals(Ctx& c) {
    const Grid& g = g1();
    const std::size_t N = g.size();
    for (const auto& [fn, f] : std::vector<std::pair<std::string, Signal>>{{"gaussian", gaussian(1)}, {"hermite(2)", hermite(2)}}) {
        const double energy = std::pow(norm(f, g), 2);
        for (double mu : {0.0, 0.3, -0.4}) {
            const auto F = mwd(preset::cohen(scalar(mu)), f, f, g, c.mwd_opt());
            const auto m = marginals(F);
            double et = 0, ew = 0;
            cplx total = 0;
            for (std::size_t i = 0; i < N; ++i) {
                const double x = g.point(int(i)), w = g.freq(int(i));
                et = std::max(et, std::abs(m.time[i] - std::norm(f(x))));
                ew = std::max(ew, std::abs(m.freq[i] - std::norm(f.fourier(&w))));
                total += m.time[i] * g.step();
            }
            const std::string tag = fn + " M=" + fmt("%g", mu);
            c.add("time marginal " + tag, et, 1e-7);
            c.add("frequency marginal " + tag, ew, 1e-7);
            c.add("energy " + tag, std::abs(total - energy), 1e-7);
        }
    }
    const auto A = preset::ambiguity(1);
    const Signal f = hermite(1);
    const auto m = marginals(mwd(A, f, f, g));
    double e = 0;
    for (std::size_t i = 0; i < N; ++i) {
        const double x = g.point(int(i));
        e = std::max(e, std::abs(m.time[i] - f(A.a11()(0, 0) * x) * std::conj(f(A.a21()(0, 0) * x))));
    }
    c.add("general time marginal, ambiguity", e, 1e-7);
}

struct Entry {
    int criterion;
    std::function<void(Ctx&)> fn;
};

const std::map<std::string, Entry>& registry() {
    static const std::map<std::string, Entry> r = {
        {"gaussian", {1, suite_gaussian}},       {"moyal", {2, suite_moyal}},
        {"stft", {3, suite_stft}},               {"inversion", {4, suite_inversion}},
        {"identities", {5, suite_identities}},   {"covariance", {6, suite_covariance}},
        {"magic", {7, suite_magic}},             {"multiplier", {8, suite_multiplier}},
        {"duality", {9, suite_duality}},         {"convert", {10, suite_convert}},
        {"spreading", {11, suite_spreading}},    {"adjoint", {12, suite_adjoint}},
        {"conjugation", {13, suite_conjugation}}, {"channel", {14, suite_channel}},
        {"bounds", {15, suite_bounds}},          {"marginals", {16, suite_marginals}},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::pair<int, std::string>> v;
        for (const auto& [k, e] : registry()) v.emplace_back(e.criterion, k);
        std::sort(v.begin(), v.end());
        std::vector<std::string> out;
        for (auto& p : v) out.push_back(p.second);
        return out;
    }();
    return names;
}

bool is_suite(const std::string& name) { return registry().count(name) != 0; }

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw Error(Errc::config, "unknown verify suite '" + name + "'");
    // Each suite draws from its own stream so results do not depend on which suites ran before.
    Ctx c{opt, Rng(opt.seed * 1000003u + std::uint64_t(it->second.criterion)), {}};
    const auto t0 = std::chrono::steady_clock::now();
    it->second.fn(c);
    SuiteResult r;
    r.name = name;
    r.criterion = it->second.criterion;
    r.checks = std::move(c.checks);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace matwig::verify
