#include <doctest.h>

#include <cmath>
#include <random>

#include "matwig/mwd.hpp"
#include "matwig/reference.hpp"

using namespace matwig;

namespace {

const Grid& G() {
    static const Grid g = default_grid(1);
    return g;
}

Mat scalar(double v) { return Mat::Constant(1, 1, v); }

}  // namespace

TEST_CASE("fast path equals the direct sum") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (int k = 0; k < 4; ++k) {
        Mat m(2, 2);
        m << u(rng), u(rng), u(rng), u(rng);
        if (std::abs(m.determinant()) < 0.3) continue;
        const auto A = BlockMatrix::from_entries(m);
        const auto fast = mwd(A, hermite(1), gaussian(1), G());
        const auto ref = reference::mwd(A, hermite(1), gaussian(1), G());
        CHECK(max_abs_diff(fast.values, ref.values) < 1e-12);
    }
    const Grid g2 = Grid::make(2, 16, 4);
    Mat M(2, 2);
    M << 0.2, -0.1, 0.3, 0.05;
    const auto A = preset::cohen(M);
    const Signal f = tf_shift(gaussian(1, 2), {0.25, 0}, {0, 0.5});
    CHECK(max_abs_diff(mwd(A, f, gaussian(1, 2), g2).values, reference::mwd(A, f, gaussian(1, 2), g2).values) < 1e-12);
}

TEST_CASE("stft basics") {
    const auto S = stft(gaussian(1), gaussian(1), G());
    const std::size_t mid = std::size_t(G().n / 2);
    CHECK(std::abs(S.at(mid, mid) - std::pow(2.0, -0.5)) < 1e-10);

    // |V_g f(x, w)| = |V_f g(-x, -w)|
    const Signal f = hermite(2), w = tf_shift(gaussian(2), {0.5}, {0.25});
    const auto a = stft(f, w, G()), b = stft(w, f, G());
    const std::size_t N = G().size();
    double e = 0;
    for (std::size_t i = 1; i < N; ++i)
        for (std::size_t j = 1; j < N; ++j) e = std::max(e, std::abs(std::abs(a.at(i, j)) - std::abs(b.at(N - i, N - j))));
    CHECK(e < 1e-10);

    // single-point quadrature agrees with the field
    const double x = G().point(140), om = G().freq(120);
    CHECK(std::abs(stft_point(f, w, &x, &om, G()) - a.at(140, 120)) < 1e-12);
}

TEST_CASE("right-regular factorization") {
    CHECK_THROWS_AS(mwd_via_stft(preset::rihaczek(1), gaussian(1), gaussian(1), G()), Error);
    const auto a = mwd_via_stft(preset::stft(1), hermite(1), gaussian(2), G());
    const auto b = stft(hermite(1), gaussian(2), G());
    CHECK(max_abs_diff(a.values, b.values) < 1e-10);
}

TEST_CASE("inversion") {
    const Signal f = hermite(2), g = gaussian(1);
    const auto H = mwd(preset::wigner(1), f, g, G());
    CHECK(l2_diff_rel(reconstruct(preset::wigner(1), H, g, g).on(G()), f.on(G())) < 1e-6);
    CHECK_THROWS_AS(reconstruct(preset::wigner(1), H, hermite(0), hermite(1)), Error);
}

TEST_CASE("covariance with zero shift is exact") {
    const Vec z = Vec::Zero(1);
    const auto r = covariance_check(preset::wigner(1), hermite(1), gaussian(1), z, z, z, z, G());
    CHECK(r.max_error == 0.0);
    CHECK_THROWS_AS(covariance_check(preset::wigner(1), hermite(1), gaussian(1), Vec::Constant(1, 0.01), z, z, z, G()), Error);
}

TEST_CASE("magic formula at the origin") {
    const auto A = preset::wigner(1);
    const Signal f = hermite(1), g = gaussian(1), phi = gaussian(1), psi = gaussian(2);
    const Vec z = Vec::Zero(2);
    const auto r = magic_eval(A, f, g, phi, psi, z, z, G());
    const cplx ip = field_inner(mwd(A, f, g, G()), mwd(A, phi, psi, G()));
    CHECK(std::abs(r.lhs - ip) < 1e-12);
    CHECK(r.error() < 1e-7);

    const auto s = magic_eval(A, gaussian(1), gaussian(2), gaussian(1), gaussian(2), z, z, G());
    const double n1 = std::pow(norm(gaussian(1), G()), 2), n2 = std::pow(norm(gaussian(2), G()), 2);
    CHECK(std::abs(s.lhs - n1 * n2 / A.abs_det()) < 1e-7);
}

TEST_CASE("scaling invariance for Cohen-type matrices") {
    const double lam = 2;
    const auto A = preset::cohen(scalar(0.3));
    const Signal f = hermite(2);
    const auto B = mwd(A, f, f, G()), Bl = mwd(A, dilate(f, lam), dilate(f, lam), G());
    const int n = G().n;
    double e = 0;
    for (int i = n / 4; i < 3 * n / 4; ++i)
        for (int j = 0; j < n; j += 2) {
            const int ii = 2 * (i - n / 2) + n / 2, jj = (j - n / 2) / 2 + n / 2;
            e = std::max(e, std::abs(Bl.at(std::size_t(i), std::size_t(j)) - B.at(std::size_t(ii), std::size_t(jj))));
        }
    CHECK(e < 1e-5);
}

TEST_CASE("orthonormal basis from Hermite functions") {
    const auto A = preset::ambiguity(1);
    std::vector<PhaseSpaceField> fields;
    for (int m = 0; m <= 4; ++m)
        for (int k = 0; k <= 4; ++k) fields.push_back(mwd(A, hermite(m), hermite(k), G()));
    double e = 0;
    for (std::size_t a = 0; a < fields.size(); ++a)
        for (std::size_t b = 0; b < fields.size(); ++b) {
            const cplx gram = A.abs_det() * field_inner(fields[a], fields[b]);
            e = std::max(e, std::abs(gram - (a == b ? 1.0 : 0.0)));
        }
    CHECK(e < 1e-6);
}

TEST_CASE("real-valued only for self-adjoint form") {
    const Signal f = tf_shift(gaussian(1), {0.5}, {0.25});
    double im_w = 0, im_r = 0;
    for (const auto& v : mwd(preset::wigner(1), f, f, G()).values) im_w = std::max(im_w, std::abs(v.imag()));
    for (const auto& v : mwd(preset::rihaczek(1), f, f, G()).values) im_r = std::max(im_r, std::abs(v.imag()));
    CHECK(im_w < 1e-12);
    CHECK(im_r > 0.1);
}

TEST_CASE("marginals") {
    const auto F = mwd(preset::cohen(scalar(0.3)), gaussian(1), gaussian(1), G());
    const auto m = marginals(F);
    double e = 0;
    for (int i = 0; i < G().n; ++i) e = std::max(e, std::abs(m.time[std::size_t(i)] - std::exp(-2 * pi * G().point(i) * G().point(i))));
    CHECK(e < 1e-7);
}

TEST_CASE("d = 2 Wigner of a Gaussian at the origin") {
    MwdOptions mo;
    mo.oversample = 2;
    const Grid g = default_grid(2);
    const auto W = mwd(preset::wigner(2), gaussian(1, 2), gaussian(1, 2), g, mo);
    const std::size_t mid = std::size_t(g.n / 2) * std::size_t(g.n) + std::size_t(g.n / 2);
    CHECK(std::abs(W.at(mid, mid) - 2.0) < 1e-8);
}

TEST_CASE("lattice index") {
    int idx[2];
    lattice_index(G(), Vec::Constant(1, 0.5), Domain::time, idx);
    CHECK(idx[0] == 8);
    CHECK_THROWS_AS(lattice_index(G(), Vec::Constant(1, 0.51), Domain::time, idx), Error);
}
