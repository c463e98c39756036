#include <doctest.h>

#include <random>

#include "matwig/blockmat.hpp"

using namespace matwig;

namespace {

Mat random_invertible(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-1, 1);
    for (;;) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = u(rng);
        Eigen::JacobiSVD<Mat> svd(m);
        if (svd.singularValues()(n - 1) > 0.2) return m;
    }
}

double maxdiff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }

Mat m2(double a, double b, double c, double d) { return (Mat(2, 2) << a, b, c, d).finished(); }

}  // namespace

TEST_CASE("make: determinant and singular blocks") {
    const Mat I = Mat::Identity(1, 1), Z = Mat::Zero(1, 1);
    CHECK(BlockMatrix::make(I, I, I, Z).det() == doctest::Approx(-1.0));
    CHECK(BlockMatrix::make(I, Z, Z, I).det() == doctest::Approx(1.0));
    CHECK_THROWS_AS(BlockMatrix::make(I, I, I, I), Error);
    try {
        BlockMatrix::make(I, I, I, I);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::singular_matrix);
    }
}

TEST_CASE("presets") {
    CHECK(maxdiff(preset::tau(0.5, 1).entries(), m2(1, 0.5, 1, -0.5)) == 0.0);
    CHECK(maxdiff(preset::wigner(1).entries(), preset::cohen(Mat::Zero(1, 1)).entries()) == 0.0);
    CHECK(maxdiff(preset::stft(1).entries(), m2(0, 1, -1, 1)) == 0.0);
    CHECK(maxdiff(preset::ambiguity(1).entries(), m2(0.5, 1, -0.5, 1)) == 0.0);
    CHECK(maxdiff(preset::rihaczek(1).entries(), m2(1, 0, 1, -1)) == 0.0);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 5; ++k) {
        const Mat T = random_invertible(rng, 2);
        CHECK(maxdiff(preset::affine(T).entries(), preset::cohen(T - 0.5 * Mat::Identity(2, 2)).entries()) < 1e-15);
    }
}

TEST_CASE("classify") {
    const auto s = classify(preset::stft(1));
    CHECK(s.right_regular);
    CHECK_FALSE(s.left_regular);
    CHECK_FALSE(s.cohen_type);

    const auto t = classify(preset::tau(0.25, 1));
    REQUIRE(t.cohen_type);
    CHECK((*t.cohen_T)(0, 0) == doctest::Approx(0.25));
    CHECK((*t.cohen_M)(0, 0) == doctest::Approx(-0.25));
    CHECK(*t.c_T == doctest::Approx(0.25 * 0.75));

    const Mat I = Mat::Identity(1, 1);
    CHECK(classify(BlockMatrix::make(I, I, I, -I)).self_adjoint_form);
    CHECK(classify(preset::wigner(1)).self_adjoint_form);
    CHECK_FALSE(classify(preset::rihaczek(1)).right_regular);

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int k = 0; k < 10; ++k) {
        Mat M(2, 2);
        M << u(rng), u(rng), u(rng), u(rng);
        const auto c = classify(preset::cohen(M));
        REQUIRE(c.cohen_M);
        CHECK(maxdiff(*c.cohen_M, M) < 1e-15);
    }
}

TEST_CASE("sharp and derived matrices") {
    CHECK(maxdiff(sharp(preset::identity(2)).entries(), Mat::Identity(4, 4)) == 0.0);
    CHECK(maxdiff(sharp(preset::J(1)).entries(), preset::J(1).entries()) < 1e-15);
    CHECK(maxdiff(derived(preset::wigner(1), Derived::C1).entries(), preset::wigner(1).entries()) < 1e-15);
    CHECK(maxdiff(derived(preset::identity(1), Derived::Astar).entries(), preset::reflect(1).entries()) < 1e-15);

    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
        const int d = 1 + k % 2;
        const Mat m = random_invertible(rng, 2 * d);
        const auto A = BlockMatrix::from_entries(m);
        CHECK(maxdiff(sharp(sharp(A)).entries(), m) < 1e-10);
        CHECK(maxdiff(derived(derived(A, Derived::C1), Derived::C1).entries(), m) < 1e-10);
        CHECK(classify(A).right_regular == classify(sharp(A)).left_regular);

        // independent products
        const Mat J = preset::J(d).entries();
        CHECK(maxdiff(derived(A, Derived::AJ).entries(), m * J) < 1e-12);
        Mat flip = Mat::Zero(2 * d, 2 * d), refl = Mat::Identity(2 * d, 2 * d);
        flip.topRightCorner(d, d).setIdentity();
        flip.bottomLeftCorner(d, d).setIdentity();
        refl.bottomRightCorner(d, d) *= -1;
        CHECK(maxdiff(derived(A, Derived::C1).entries(), flip * m * refl) < 1e-12);
        CHECK(maxdiff(derived(A, Derived::C2).entries(), refl * m.inverse().transpose() * flip) < 1e-12);
        CHECK(maxdiff(derived(A, Derived::Astar).entries(), refl * m.inverse()) < 1e-12);
    }
}

TEST_CASE("cohen maps") {
    const auto half = cohen_maps(0.5 * Mat::Identity(1, 1));
    CHECK(maxdiff(half.u(), -Mat::Identity(2, 2)) < 1e-15);
    Vec z(2), w(2);
    z << 0.3, -1.2;
    w << 2.0, 0.7;
    CHECK((half.tcal(z, w) - 0.5 * (z + w)).norm() < 1e-15);

    const auto zero = cohen_maps(Mat::Zero(1, 1));
    CHECK_THROWS_AS(zero.u(), Error);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int k = 0; k < 20; ++k) {
        const Mat T = random_invertible(rng, 2);
        const auto m = cohen_maps(T);
        Vec a(4), b(4);
        for (int i = 0; i < 4; ++i) {
            a(i) = u(rng);
            b(i) = u(rng);
        }
        CHECK((m.tcal(a, a) - a).norm() < 1e-12);
        if (m.U) CHECK((m.I_plus_P.inverse() * m.tcal(b, a) - (b - m.u() * a)).norm() < 1e-10);
    }
}

TEST_CASE("affine form inverse") {
    // A_T^{-1} = [[I - T, T], [I, -I]]
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
        const Mat T = random_invertible(rng, 2);
        const Mat I = Mat::Identity(2, 2);
        Mat expect(4, 4);
        expect << I - T, T, I, -I;
        CHECK(maxdiff(preset::affine(T).inverse(), expect) < 1e-10);
    }
}

TEST_CASE("cohen_T_of rejects non-Cohen matrices") {
    CHECK_THROWS_AS(cohen_T_of(preset::stft(1)), Error);
    CHECK(cohen_T_of(preset::tau(0.3, 1))(0, 0) == doctest::Approx(0.3));
}
