#include <doctest.h>

#include <cmath>
#include <random>

#include "matwig/quantize.hpp"
#include "matwig/reference.hpp"

using namespace matwig;

namespace {

const Grid& G() {
    static const Grid g = Grid::make(1, 64, 8);
    return g;
}

Mat scalar(double v) { return Mat::Constant(1, 1, v); }

cplx smooth_symbol(const double* x, const double* w) {
    return std::exp(-pi * (x[0] * x[0] + 2 * w[0] * w[0])) * std::polar(1.0, 2 * pi * 0.3 * x[0] * w[0]);
}

SymbolField constant(const Grid& g, cplx c) {
    return symbol_from_function([c](const double*, const double*) { return c; }, g, "const");
}

}  // namespace

TEST_CASE("identity operator") {
    const auto I = identity_operator(G());
    const auto v = hermite(2).on(G());
    CHECK(max_abs_diff(apply_operator(I, v), v) < 1e-14);
    CHECK(std::abs(hs_norm(I) - 8.0) < 1e-12);
    CHECK(std::abs(hs_norm(identity_operator(default_grid(1))) - 16.0) < 1e-12);
    CHECK(std::abs(op_norm(I) - 1.0) < 1e-12);
}

TEST_CASE("unit symbol quantizes to the identity") {
    const Grid g = default_grid(1);
    const auto v = hermite(2).on(g);
    for (const auto& A : {preset::wigner(1), preset::rihaczek(1), preset::cohen(scalar(0.3))}) {
        const auto K = kernel_from_symbol(constant(g, 1), A);
        CHECK(l2_diff_rel(apply_operator(K, v), v) < 1e-4);
    }
    const auto Z = kernel_from_symbol(constant(g, 0), preset::wigner(1));
    CHECK(Z.values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kernel matches the direct sum") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    const auto sigma = symbol_from_function(smooth_symbol, G(), "s");
    std::vector<BlockMatrix> mats{preset::wigner(1), preset::ambiguity(1), preset::cohen(scalar(-0.2))};
    while (mats.size() < 6) {
        Mat m(2, 2);
        m << u(rng), u(rng), u(rng), u(rng);
        if (std::abs(m.determinant()) > 0.4) mats.push_back(BlockMatrix::from_entries(m));
    }
    for (const auto& A : mats) {
        const auto K = kernel_from_symbol(sigma, A);
        const auto R = reference::kernel_from_symbol(smooth_symbol, A, G());
        CHECK((K.values - R.values).cwiseAbs().maxCoeff() < 1e-9 * (1 + R.values.cwiseAbs().maxCoeff()));
        const auto v = hermite(1).on(G());
        CHECK(max_abs_diff(apply_operator(K, v), reference::apply_operator(K, v)) < 1e-12);
    }
}

TEST_CASE("linearity and norm inequality") {
    const auto A = preset::cohen(scalar(0.2));
    const auto s1 = symbol_from_function(smooth_symbol, G());
    const auto s2 = symbol_from_function([](const double* x, const double* w) { return cplx(std::exp(-pi * (x[0] * x[0] + w[0] * w[0]))); }, G());
    const cplx a(0.7, -1.1), b(-0.4, 0.2);
    const auto s = symbol_from_function([&](const double* x, const double* w) { return a * smooth_symbol(x, w) + b * s2.analytic(x, w); }, G());
    const auto K = kernel_from_symbol(s, A), K1 = kernel_from_symbol(s1, A), K2 = kernel_from_symbol(s2, A);
    CHECK((K.values - (a * K1.values + b * K2.values)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(op_norm(K) <= hs_norm(K) * (1 + 1e-12));
}

TEST_CASE("duality") {
    const Grid g = default_grid(1);
    const auto sigma = symbol_from_function(smooth_symbol, g);
    const auto r = duality_check(sigma, preset::cohen(scalar(0.3)), hermite(1), gaussian(2));
    CHECK(r.error() < 1e-8);
}

TEST_CASE("conversion between matrices") {
    const Grid g = default_grid(1);
    const auto sigma = symbol_from_function(smooth_symbol, g);
    const auto A = preset::wigner(1);
    CHECK(max_abs_diff(convert_symbol(sigma, A, A).values, sigma.values) < 1e-8);
    const auto t = convert_symbol_cohen(sigma, scalar(0.5), scalar(0.5));
    CHECK(max_abs_diff(t.values, sigma.values) < 1e-12);
}

TEST_CASE("adjoint symbol gives the conjugate-transposed kernel") {
    const Grid g = default_grid(1);
    const auto sigma = symbol_from_function(smooth_symbol, g);
    const auto A = preset::cohen(scalar(0.25));
    const auto adj = adjoint_symbol(sigma, A);
    const auto K = kernel_from_symbol(sigma, A), KB = kernel_from_symbol(adj.rho, adj.B);
    CHECK((KB.values - K.values.adjoint()).cwiseAbs().maxCoeff() < 1e-6 * K.values.cwiseAbs().maxCoeff());
}

TEST_CASE("spreading form with a constant symbol") {
    const Grid g = default_grid(1);
    const auto v = hermite(1).on(g);
    const auto out = spreading_apply(constant(g, 1), scalar(0.5), hermite(1));
    CHECK(l2_diff_rel(out.on(g), v) < 1e-6);
}

TEST_CASE("composition with J inverse") {
    const Grid g = default_grid(1);
    const auto sigma = symbol_from_function(smooth_symbol, g);
    const auto Js = compose_J_inverse(drop_analytic(sigma));
    double e = 0;
    for (int i = 1; i < g.n; ++i)
        for (int j = 1; j < g.n; ++j) {
            const double x = g.point(i), w = g.freq(j), mw = -w;
            e = std::max(e, std::abs(Js.at(std::size_t(i), std::size_t(j)) - smooth_symbol(&mw, &x)));
        }
    CHECK(e < 1e-14);
    CHECK_THROWS_AS(compose_J_inverse(symbol_from_function(smooth_symbol, default_grid(2))), Error);
}
