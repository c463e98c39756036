#include <doctest.h>

#include <cmath>
#include <random>

#include "matwig/signals.hpp"

using namespace matwig;

TEST_CASE("grid") {
    const Grid g = default_grid(1);
    CHECK(g.n == 256);
    CHECK(g.len == 16.0);
    CHECK(g.point(g.n / 2) == 0.0);
    CHECK(g.step() * g.n == doctest::Approx(g.len));
    CHECK(g.self_dual());
    CHECK_FALSE(default_grid(2).self_dual());
    CHECK_THROWS_AS(Grid::make(1, 100, 4), Error);
    CHECK_THROWS_AS(Grid::make(3, 64, 4), Error);
    double p[2];
    const Grid g2 = default_grid(2);
    g2.point(std::size_t(3 * 64 + 5), p);
    CHECK(p[0] == doctest::Approx(g2.point(3)));
    CHECK(p[1] == doctest::Approx(g2.point(5)));
}

TEST_CASE("gaussian") {
    const Grid g = default_grid(1);
    CHECK(gaussian(1)(0.0) == cplx(1));
    CHECK(std::abs(gaussian(2)(1.0) - std::exp(-pi / 2)) < 1e-15);
    CHECK(std::abs(std::pow(norm(gaussian(1), g), 2) - std::pow(2.0, -0.5)) < 1e-10);
    for (double lam : {0.5, 1.0, 2.0, 4.0}) CHECK(std::abs(std::pow(norm(gaussian(lam), g), 2) - std::sqrt(lam / 2)) < 1e-10);
    CHECK_THROWS_AS(gaussian(0), Error);
    CHECK_THROWS_AS(gaussian(-1), Error);
}

TEST_CASE("hermite functions") {
    const Grid g = default_grid(1);
    const Signal h0 = hermite(0), phi = gaussian(1);
    for (double t : {-1.3, 0.0, 0.4, 2.2}) CHECK(std::abs(h0(t) - std::pow(2.0, 0.25) * phi(t)) < 1e-14);
    CHECK(std::abs(hermite(1)(0.0)) < 1e-15);
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j) CHECK(std::abs(inner(hermite(i), hermite(j), g) - (i == j ? 1.0 : 0.0)) < 1e-8);
    CHECK(std::abs(inner(hermite(0), hermite(1), g)) < 1e-10);
}

TEST_CASE("closed-form Fourier transforms against quadrature") {
    const Grid g = default_grid(1);
    auto quad = [&g](const Signal& f, double w) {
        cplx s = 0;
        for (int j = 0; j < g.n; ++j) s += f(g.point(j)) * std::polar(1.0, -2 * pi * g.point(j) * w);
        return s * g.step();
    };
    for (const Signal& f : {gaussian(0.7), hermite(3), chirp(0.8), tf_shift(hermite(2), {0.5}, {-0.75}), dilate(gaussian(1), 1.5)})
        for (double w : {-1.1, 0.0, 0.3, 2.0}) CHECK(std::abs(f.fourier(&w) - quad(f, w)) < 1e-10);
}

TEST_CASE("time-frequency shifts") {
    const Grid g = default_grid(1);
    const Signal f = hermite(2);
    const Signal s = tf_shift(f, {0.75}, {-1.5});
    for (double t : {-2.0, 0.1, 1.7}) CHECK(std::abs(std::abs(s(t)) - std::abs(f(t - 0.75))) < 1e-14);
    CHECK(std::abs(norm(s, g) - norm(f, g)) < 1e-10);
    const Signal a = tf_shift(tf_shift(f, {0.5}, {0}), {0.25}, {0}), b = tf_shift(f, {0.75}, {0});
    for (double t : {-1.0, 0.3, 2.5}) CHECK(std::abs(a(t) - b(t)) < 1e-14);

    // sampled path: integer shifts only
    const Signal fs = sample(f, g);
    const Signal ss = tf_shift(fs, {4 * g.step()}, {0.5}, &g);
    const auto direct = tf_shift(f, {4 * g.step()}, {0.5}).on(g);
    CHECK(max_abs_diff(ss.on(g), direct) < 1e-14);
    CHECK_THROWS_AS(tf_shift(fs, {0.3 * g.step()}, {0}, &g), Error);
}

TEST_CASE("sampled signals evaluate exactly on the grid and interpolate between nodes") {
    const Grid g = default_grid(1);
    const Signal f = gaussian(1);
    const Signal s = sample(f, g);
    CHECK(max_abs_diff(s.on(g), f.on(g)) == 0.0);
    double e = 0;
    for (double t = -3; t < 3; t += 0.0173) e = std::max(e, std::abs(s(t) - f(t)));
    CHECK(e < 1e-6);
    CHECK_THROWS_AS(s.on(Grid::make(1, 128, 16)), Error);
}

TEST_CASE("inner products and norms") {
    const Grid g = default_grid(1);
    CHECK(std::abs(inner(gaussian(1), gaussian(1), g) - std::pow(2.0, -0.5)) < 1e-10);
    std::mt19937_64 rng(7);
    std::normal_distribution<double> n01;
    std::vector<Signal> terms;
    std::vector<cplx> cs;
    for (int k = 0; k < 6; ++k) {
        terms.push_back(hermite(k));
        cs.emplace_back(n01(rng), n01(rng));
    }
    const Signal f = sum(terms, cs);
    const cplx ff = inner(f, f, g);
    CHECK(std::abs(ff.imag()) < 1e-14);
    CHECK(ff.real() > 0);
    double expect = 0;
    for (auto c : cs) expect += std::norm(c);
    CHECK(ff.real() == doctest::Approx(expect).epsilon(1e-8));
    const auto v = gaussian(1).on(g);
    CHECK(lp_norm(v, g, INFINITY) == doctest::Approx(1.0));
    CHECK(lp_norm(v, g, 1) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("mixed norms") {
    const Grid g = Grid::make(1, 4, 4);
    Field2 F(g, Domain::time, Domain::frequency);
    for (auto& v : F.values) v = 1;
    CHECK(mixed_norm(F, 1, 1) == doctest::Approx(4.0));
    CHECK(mixed_norm(F, INFINITY, INFINITY) == doctest::Approx(1.0));
    // p = q = 2 is the weighted Frobenius norm
    std::mt19937_64 rng(8);
    std::normal_distribution<double> n01;
    double fro = 0;
    for (auto& v : F.values) {
        v = {n01(rng), n01(rng)};
        fro += std::norm(v);
    }
    CHECK(mixed_norm(F, 2, 2) == doctest::Approx(std::sqrt(fro * F.cell())));
    CHECK_THROWS_AS(mixed_norm(F, 0.5, 2), Error);
    CHECK_THROWS_AS(mixed_norm(F, 2, 0.9), Error);
}
