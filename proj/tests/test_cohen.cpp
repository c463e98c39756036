#include <doctest.h>

#include <cmath>

#include "matwig/cohen.hpp"

using namespace matwig;

namespace {

Mat scalar(double v) { return Mat::Constant(1, 1, v); }

// W_M phi_lambda in d = 1 by completing the square in the y-integral.
cplx gauss_closed(double M, double lam, double x, double w) {
    const double alpha = pi * (2 * M * M + 0.5) / lam;
    const cplx beta(4 * pi * M * x / lam, 2 * pi * w);
    return std::exp(-2 * pi * x * x / lam) * std::sqrt(pi / alpha) * std::exp(beta * beta / (4 * alpha));
}

}  // namespace

TEST_CASE("kernel") {
    const auto k0 = kernel(scalar(0));
    CHECK_FALSE(k0.invertible);
    const double x = 0.3, w = -0.7;
    CHECK_FALSE(k0.theta_explicit(&x, &w).has_value());
    CHECK(k0.theta_hat(&x, &w) == cplx(1));

    const auto kh = kernel(scalar(0.5));
    REQUIRE(kh.theta_explicit(&x, &w).has_value());
    CHECK(std::abs(*kh.theta_explicit(&x, &w) - 2.0 * std::polar(1.0, 4 * pi * x * w)) < 1e-14);
    for (double a : {-2.0, 0.1, 1.3})
        for (double b : {-0.4, 0.0, 3.0}) CHECK(std::abs(std::abs(kh.theta_hat(&a, &b)) - 1.0) < 1e-15);
}

TEST_CASE("Gaussian oracle against an independent closed form") {
    const Grid g = default_grid(1);
    for (double M : {0.0, 0.3, -0.4, 0.5})
        for (double lam : {0.5, 1.0, 2.0}) {
            const auto O = gaussian_oracle(scalar(M), lam, g);
            double e = 0;
            for (int i = 0; i < g.n; i += 3)
                for (int j = 0; j < g.n; j += 3)
                    e = std::max(e, std::abs(O.at(std::size_t(i), std::size_t(j)) - gauss_closed(M, lam, g.point(i), g.freq(j))));
            CHECK(e < 1e-12);
        }
    const std::size_t mid = std::size_t(g.n / 2);
    CHECK(std::abs(gaussian_oracle(scalar(0), 1, g).at(mid, mid) - std::sqrt(2.0)) < 1e-14);
    CHECK(std::abs(gaussian_oracle(scalar(0.5), 1, g).at(mid, mid) - 1.0) < 1e-14);
    CHECK_THROWS_AS(gaussian_oracle(scalar(0), 0, g), Error);

    const Grid g2 = default_grid(2);
    const std::size_t c2 = std::size_t(g2.n / 2) * std::size_t(g2.n) + std::size_t(g2.n / 2);
    CHECK(std::abs(gaussian_oracle(Mat::Zero(2, 2), 1, g2).at(c2, c2) - 2.0) < 1e-14);
}

TEST_CASE("imaginary part vanishes only at M = 0") {
    const Grid g = default_grid(1);
    const auto W = mwd(preset::wigner(1), gaussian(1), gaussian(1), g);
    const auto R = mwd(preset::cohen(scalar(0.3)), gaussian(1), gaussian(1), g);
    double iw = 0, ir = 0;
    for (const auto& v : W.values) iw = std::max(iw, std::abs(v.imag()));
    for (const auto& v : R.values) ir = std::max(ir, std::abs(v.imag()));
    CHECK(iw < 1e-12);
    CHECK(ir > 1e-3);
}

TEST_CASE("remap") {
    const Grid g = default_grid(1);
    const auto W = mwd(preset::wigner(1), hermite(1), gaussian(1), g);
    REQUIRE(W.cohen_M);
    const auto R = remap(W, scalar(0), scalar(0.3));
    CHECK((*R.cohen_M)(0, 0) == 0.3);
    CHECK(max_abs_diff(remap(R, scalar(0.3), scalar(0)).values, W.values) < 1e-12);
    const auto direct = mwd(preset::cohen(scalar(0.3)), hermite(1), gaussian(1), g);
    CHECK(max_abs_diff(R.values, direct.values) < 1e-8);
    CHECK_THROWS_AS(remap(W, scalar(0.3), scalar(0)), Error);
    PhaseSpaceField untagged(g);
    CHECK_THROWS_AS(remap(untagged, scalar(0), scalar(0.3)), Error);
}

TEST_CASE("convolution form") {
    const Grid g = default_grid(1);
    const auto W = gaussian_oracle(scalar(0), 1, g);
    for (double m2 : {1.0, 0.5, -0.3}) {
        const auto C = convolve_theta(W, scalar(0), scalar(m2));
        CHECK(max_abs_diff(C.values, gaussian_oracle(scalar(m2), 1, g).values) < 1e-6);
    }
    const auto C2 = convolve_theta(gaussian_oracle(scalar(-0.5), 1, g), scalar(-0.5), scalar(0.5));
    CHECK(max_abs_diff(C2.values, gaussian_oracle(scalar(0.5), 1, g).values) < 1e-6);
    CHECK_THROWS_AS(convolve_theta(W, scalar(0), scalar(0)), Error);
    CHECK_THROWS_AS(convolve_theta(W, scalar(0), scalar(0.1)), Error);
    CHECK_THROWS_AS(convolve_theta(gaussian_oracle(Mat::Zero(2, 2), 1, Grid::make(2, 16, 4)), Mat::Zero(2, 2),
                                   0.5 * Mat::Identity(2, 2)),
                    Error);
}
