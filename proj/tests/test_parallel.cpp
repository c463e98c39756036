#include <doctest.h>

#include <cstring>

#include "matwig/quantize.hpp"
#include "matwig/reference.hpp"

using namespace matwig;

namespace {

bool bit_equal(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

cplx sym(const double* x, const double* w) { return std::exp(-pi * (x[0] * x[0] + w[0] * w[0])) * cplx(1, 0.5 * x[0]); }

}  // namespace

TEST_CASE("parallel and serial kernels agree bit for bit") {
    const Grid g = default_grid(1);
    const auto A = preset::cohen(Mat::Constant(1, 1, 0.3));
    MwdOptions s, p;
    s.exec = Exec::serial;
    p.exec = Exec::parallel;
    CHECK(bit_equal(mwd(A, hermite(2), gaussian(1), g, s).values, mwd(A, hermite(2), gaussian(1), g, p).values));
    CHECK(bit_equal(stft(hermite(2), gaussian(1), g, Exec::serial).values, stft(hermite(2), gaussian(1), g, Exec::parallel).values));

    QuantizeOptions qs, qp;
    qs.exec = Exec::serial;
    qp.exec = Exec::parallel;
    const auto sigma = symbol_from_function(sym, g);
    const auto Ks = kernel_from_symbol(sigma, A, qs), Kp = kernel_from_symbol(sigma, A, qp);
    CHECK((Ks.values - Kp.values).cwiseAbs().maxCoeff() == 0.0);
    const auto v = hermite(1).on(g);
    CHECK(bit_equal(apply_operator(Ks, v, Exec::serial), apply_operator(Ks, v, Exec::parallel)));
}

TEST_CASE("parallel kernels agree with the naive reference") {
    const Grid g = Grid::make(1, 64, 8);
    const auto A = preset::ambiguity(1);
    CHECK(max_abs_diff(mwd(A, hermite(1), gaussian(2), g).values, reference::mwd(A, hermite(1), gaussian(2), g).values) < 1e-12);
    const auto K = kernel_from_symbol(symbol_from_function(sym, g), A);
    const auto R = reference::kernel_from_symbol(sym, A, g);
    CHECK((K.values - R.values).cwiseAbs().maxCoeff() < 1e-9);
}
