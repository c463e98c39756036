// SPDX-License-Identifier: Apache-2.0
#include "matwig/signals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace matwig {

namespace {

constexpr cplx I1{0.0, 1.0};

double sq(const double* t, int d) {
    double s = 0;
    for (int i = 0; i < d; ++i) s += t[i] * t[i];
    return s;
}

double hermite_value(int k, double t) {
    const double u = std::sqrt(2 * pi) * t;
    double p0 = std::pow(pi, -0.25) * std::exp(-0.5 * u * u);
    if (k == 0) return std::pow(2 * pi, 0.25) * p0;
    double p1 = std::sqrt(2.0) * u * p0;
    for (int m = 1; m < k; ++m) {
        const double p2 = std::sqrt(2.0 / (m + 1)) * u * p1 - std::sqrt(double(m) / (m + 1)) * p0;
        p0 = p1;
        p1 = p2;
    }
    return std::pow(2 * pi, 0.25) * p1;
}

bool on_lattice(double v, double step) { return std::abs(v / step - std::round(v / step)) < 1e-9; }

}  // namespace

Signal Signal::analytic(int dim, PointFn f, PointFn fourier, std::string tag) {
    if (dim < 1 || dim > 2) throw Error(Errc::config, "signal dimension must be 1 or 2");
    Signal s;
    s.kind_ = Kind::analytic;
    s.dim_ = dim;
    s.f_ = std::move(f);
    s.fourier_ = std::move(fourier);
    s.tag_ = std::move(tag);
    return s;
}

Signal Signal::sampled(const Grid& g, std::vector<cplx> values, Domain domain, std::string tag) {
    if (values.size() != g.size()) throw Error(Errc::grid_mismatch, "sample count does not match grid");
    Signal s;
    s.kind_ = Kind::sampled;
    s.dim_ = g.dim;
    s.tag_ = std::move(tag);
    s.domain_ = domain;
    s.grid_ = std::make_shared<const Grid>(g);
    s.samples_ = std::make_shared<const std::vector<cplx>>(std::move(values));
    const double step = domain == Domain::time ? g.step() : g.freq_step();
    s.interp_ = std::make_shared<const Resampler>(s.samples_->data(), g.n, g.dim, step, 1);
    auto ip = s.interp_;
    s.f_ = [ip](const double* t) { return ip->eval(t); };
    return s;
}

cplx Signal::operator()(const double* t) const { return f_(t); }

cplx Signal::fourier(const double* w) const {
    if (!fourier_) throw Error(Errc::unsupported, "signal has no closed-form Fourier transform");
    return fourier_(w);
}

const Grid& Signal::grid() const {
    if (!grid_) throw Error(Errc::grid_mismatch, "analytic signal has no grid");
    return *grid_;
}

const std::vector<cplx>& Signal::samples() const {
    if (!samples_) throw Error(Errc::grid_mismatch, "analytic signal has no samples");
    return *samples_;
}

std::vector<cplx> Signal::on(const Grid& g) const {
    if (g.dim != dim_) throw Error(Errc::grid_mismatch, "signal and grid dimensions differ");
    if (kind_ == Kind::sampled) {
        require_same(*grid_, g, "sampled signal used on a different grid");
        return *samples_;
    }
    std::vector<cplx> v(g.size());
    double p[2];
    for (std::size_t i = 0; i < v.size(); ++i) {
        g.point(i, p);
        v[i] = f_(p);
    }
    return v;
}

Signal gaussian(double lambda, int d) {
    if (!(lambda > 0)) throw Error(Errc::non_positive_parameter, "gaussian: lambda must be positive");
    const double c = std::pow(lambda, 0.5 * d);
    return Signal::analytic(
        d, [lambda, d](const double* t) { return cplx(std::exp(-pi * sq(t, d) / lambda)); },
        [lambda, d, c](const double* w) { return cplx(c * std::exp(-pi * lambda * sq(w, d))); },
        "gaussian(" + std::to_string(lambda) + ")");
}

Signal hermite(int k) {
    if (k < 0 || k > 32) throw Error(Errc::config, "hermite: k must be in [0, 32]");
    cplx phase = 1;
    for (int i = 0; i < k; ++i) phase *= -I1;
    return Signal::analytic(
        1, [k](const double* t) { return cplx(hermite_value(k, t[0])); },
        [k, phase](const double* w) { return phase * hermite_value(k, w[0]); }, "hermite(" + std::to_string(k) + ")");
}

Signal chirp(double rate, int d) {
    const cplx a(1.0, -rate);
    const cplx c = std::pow(a, -0.5 * d);
    return Signal::analytic(
        d, [rate, d](const double* t) { return std::exp(cplx(-pi, pi * rate) * sq(t, d)); },
        [a, c, d](const double* w) { return c * std::exp(-pi * sq(w, d) / a); }, "chirp(" + std::to_string(rate) + ")");
}

Signal tf_shift(const Signal& f, const std::vector<double>& x0, const std::vector<double>& w0, const Grid* g) {
    const int d = f.dim();
    if (int(x0.size()) != d || int(w0.size()) != d) throw Error(Errc::config, "tf_shift: point dimension mismatch");
    if (f.is_analytic()) {
        auto fn = f.fn();
        PointFn ft;
        if (f.has_fourier()) {
            Signal base = f;
            ft = [base, x0, w0, d](const double* w) {
                double s[2];
                double ph = 0;
                for (int i = 0; i < d; ++i) {
                    s[i] = w[i] - w0[i];
                    ph += x0[i] * s[i];
                }
                return std::polar(1.0, -2 * pi * ph) * base.fourier(s);
            };
        }
        return Signal::analytic(
            d,
            [fn, x0, w0, d](const double* t) {
                double s[2];
                double ph = 0;
                for (int i = 0; i < d; ++i) {
                    s[i] = t[i] - x0[i];
                    ph += t[i] * w0[i];
                }
                return std::polar(1.0, 2 * pi * ph) * fn(s);
            },
            ft, "shift(" + f.tag() + ")");
    }
    const Grid& gr = g ? *g : f.grid();
    require_same(f.grid(), gr, "tf_shift");
    if (f.domain() != Domain::time) throw Error(Errc::domain_tag_mismatch, "tf_shift needs time-domain samples");
    const double h = gr.step();
    int sh[2] = {0, 0};
    for (int i = 0; i < d; ++i) {
        if (!on_lattice(x0[i], h)) throw Error(Errc::off_grid_shift, "tf_shift: x0 is not a multiple of the step");
        sh[i] = int(std::lround(x0[i] / h));
    }
    const auto& src = f.samples();
    std::vector<cplx> out(src.size(), cplx(0));
    const int n = gr.n;
    double p[2];
    for (std::size_t i = 0; i < out.size(); ++i) {
        int j[2] = {int(d == 1 ? i : i / n), int(d == 1 ? 0 : i % n)};
        int s[2] = {0, 0};
        bool inside = true;
        for (int a = 0; a < d; ++a) {
            s[a] = j[a] - sh[a];
            inside = inside && s[a] >= 0 && s[a] < n;
        }
        if (!inside) continue;
        const std::size_t si = d == 1 ? std::size_t(s[0]) : std::size_t(s[0]) * n + s[1];
        gr.point(i, p);
        double ph = 0;
        for (int a = 0; a < d; ++a) ph += p[a] * w0[a];
        out[i] = std::polar(1.0, 2 * pi * ph) * src[si];
    }
    return Signal::sampled(gr, std::move(out), Domain::time, "shift(" + f.tag() + ")");
}

Signal sum(const std::vector<Signal>& terms, const std::vector<cplx>& coeffs) {
    if (terms.empty()) throw Error(Errc::config, "sum of no signals");
    std::vector<cplx> c = coeffs;
    if (c.empty()) c.assign(terms.size(), cplx(1));
    if (c.size() != terms.size()) throw Error(Errc::config, "sum: coefficient count mismatch");
    const int d = terms[0].dim();
    bool analytic = true, ft = true;
    for (const auto& t : terms) {
        if (t.dim() != d) throw Error(Errc::config, "sum: dimension mismatch");
        analytic = analytic && t.is_analytic();
        ft = ft && t.has_fourier();
    }
    if (analytic) {
        PointFn fourier;
        if (ft)
            fourier = [terms, c](const double* w) {
                cplx s = 0;
                for (std::size_t i = 0; i < terms.size(); ++i) s += c[i] * terms[i].fourier(w);
                return s;
            };
        return Signal::analytic(
            d,
            [terms, c](const double* t) {
                cplx s = 0;
                for (std::size_t i = 0; i < terms.size(); ++i) s += c[i] * terms[i](t);
                return s;
            },
            fourier, "sum");
    }
    const Grid* g = nullptr;
    for (const auto& t : terms)
        if (!t.is_analytic()) g = &t.grid();
    std::vector<cplx> out(g->size(), cplx(0));
    for (std::size_t i = 0; i < terms.size(); ++i) {
        auto v = terms[i].on(*g);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += c[i] * v[k];
    }
    return Signal::sampled(*g, std::move(out), Domain::time, "sum");
}

Signal dilate(const Signal& f, double lambda) {
    if (lambda == 0) throw Error(Errc::non_positive_parameter, "dilate: lambda must be nonzero");
    if (!f.is_analytic()) throw Error(Errc::unsupported, "dilate needs an analytic signal");
    const int d = f.dim();
    const double c = std::pow(std::abs(lambda), 0.5 * d);
    auto fn = f.fn();
    PointFn ft;
    if (f.has_fourier()) {
        Signal base = f;
        ft = [base, lambda, c, d](const double* w) {
            double s[2];
            for (int i = 0; i < d; ++i) s[i] = w[i] / lambda;
            return base.fourier(s) / c;
        };
    }
    return Signal::analytic(
        d,
        [fn, lambda, c, d](const double* t) {
            double s[2];
            for (int i = 0; i < d; ++i) s[i] = lambda * t[i];
            return c * fn(s);
        },
        ft, "dilate(" + f.tag() + ")");
}

Signal conj(const Signal& f) {
    if (!f.is_analytic()) {
        auto v = f.samples();
        for (auto& x : v) x = std::conj(x);
        return Signal::sampled(f.grid(), std::move(v), f.domain(), "conj(" + f.tag() + ")");
    }
    const int d = f.dim();
    auto fn = f.fn();
    PointFn ft;
    if (f.has_fourier()) {
        Signal base = f;
        ft = [base, d](const double* w) {
            double s[2];
            for (int i = 0; i < d; ++i) s[i] = -w[i];
            return std::conj(base.fourier(s));
        };
    }
    return Signal::analytic(
        d, [fn](const double* t) { return std::conj(fn(t)); }, ft, "conj(" + f.tag() + ")");
}

Signal sample(const Signal& f, const Grid& g) { return Signal::sampled(g, f.on(g), Domain::time, f.tag()); }

cplx inner(const std::vector<cplx>& f, const std::vector<cplx>& g, const Grid& grid) {
    if (f.size() != grid.size() || g.size() != grid.size()) throw Error(Errc::grid_mismatch, "inner: size mismatch");
    cplx s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * std::conj(g[i]);
    return s * grid.cell();
}

cplx inner(const Signal& f, const Signal& g, const Grid& grid) { return inner(f.on(grid), g.on(grid), grid); }

double norm(const std::vector<cplx>& f, const Grid& grid) { return std::sqrt(std::real(inner(f, f, grid))); }
double norm(const Signal& f, const Grid& grid) { return norm(f.on(grid), grid); }

double lp_norm(const std::vector<cplx>& f, const Grid& grid, double p) {
    if (p < 1) throw Error(Errc::invalid_exponent, "lp_norm: p must be >= 1");
    if (std::isinf(p)) return max_abs(f);
    double s = 0;
    for (auto v : f) s += std::pow(std::abs(v), p);
    return std::pow(s * grid.cell(), 1.0 / p);
}

double mixed_norm(const Field2& F, double p, double q) {
    if (!(p >= 1) || !(q >= 1)) throw Error(Errc::invalid_exponent, "mixed_norm: exponents must be >= 1");
    const std::size_t N = F.size();
    const double w1 = std::pow(F.step1(), F.grid.dim), w2 = std::pow(F.step2(), F.grid.dim);
    double outer = 0;
    for (std::size_t j = 0; j < N; ++j) {
        double in = 0;
        if (std::isinf(p)) {
            for (std::size_t i = 0; i < N; ++i) in = std::max(in, std::abs(F.at(i, j)));
        } else {
            for (std::size_t i = 0; i < N; ++i) in += std::pow(std::abs(F.at(i, j)), p);
            in = std::pow(in * w1, 1.0 / p);
        }
        if (std::isinf(q))
            outer = std::max(outer, in);
        else
            outer += std::pow(in, q);
    }
    return std::isinf(q) ? outer : std::pow(outer * w2, 1.0 / q);
}

}  // namespace matwig
