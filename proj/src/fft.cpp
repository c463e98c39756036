// SPDX-License-Identifier: Apache-2.0
#include "matwig/fft.hpp"

#include <fftw3.h>

#include <array>
#include <map>
#include <mutex>
#include <tuple>
#include <utility>

namespace matwig::fft {

namespace {

using Key = std::tuple<int, int, std::ptrdiff_t, int, std::ptrdiff_t, int>;

std::mutex plan_mutex;
std::map<Key, fftw_plan>& plans() {
    static std::map<Key, fftw_plan> m;
    return m;
}

std::ptrdiff_t ipow(std::ptrdiff_t b, int e) {
    std::ptrdiff_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

fftw_plan get_plan(cplx* data, const Layout& l, int sign) {
    Key key{l.n, l.rank, l.stride, l.howmany, l.dist, sign};
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto it = plans().find(key);
    if (it != plans().end()) return it->second;

    std::array<fftw_iodim64, 4> dims{};
    for (int a = 0; a < l.rank; ++a) {
        dims[a].n = l.n;
        dims[a].is = dims[a].os = l.stride * ipow(l.n, l.rank - 1 - a);
    }
    fftw_iodim64 batch{l.howmany, l.dist, l.dist};
    auto* p = reinterpret_cast<fftw_complex*>(data);
    // FFTW_ESTIMATE never touches the arrays while planning.
    fftw_plan plan = fftw_plan_guru64_dft(l.rank, dims.data(), l.howmany > 1 ? 1 : 0, &batch, p, p, sign,
                                          FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan) throw Error(Errc::unsupported, "fftw could not create a plan");
    plans().emplace(key, plan);
    return plan;
}

}  // namespace

void raw(cplx* data, const Layout& l, int sign) {
    if (l.rank < 1 || l.rank > 4) throw Error(Errc::unsupported, "fft rank must be 1..4");
    fftw_plan p = get_plan(data, l, sign);
    auto* z = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(p, z, z);
}

void half_shift(cplx* data, const Layout& l) {
    const int n = l.n, h = n / 2;
    const std::ptrdiff_t total = ipow(n, l.rank);
    const std::ptrdiff_t lead = total / n;  // indices of the trailing axes
    std::array<std::ptrdiff_t, 4> st{};
    for (int a = 0; a < l.rank; ++a) st[a] = l.stride * ipow(n, l.rank - 1 - a);

    for (int b = 0; b < l.howmany; ++b) {
        cplx* base = data + b * l.dist;
        for (int i0 = 0; i0 < h; ++i0) {
            for (std::ptrdiff_t rest = 0; rest < lead; ++rest) {
                std::ptrdiff_t off = i0 * st[0], partner = (i0 + h) * st[0];
                std::ptrdiff_t r = rest;
                for (int a = l.rank - 1; a >= 1; --a) {
                    const std::ptrdiff_t ia = r % n;
                    r /= n;
                    off += ia * st[a];
                    partner += ((ia + h) % n) * st[a];
                }
                std::swap(base[off], base[partner]);
            }
        }
    }
}

void centered(cplx* data, const Layout& l, int sign, double scale) {
    half_shift(data, l);
    raw(data, l, sign);
    half_shift(data, l);
    if (scale == 1.0) return;
    const std::ptrdiff_t total = ipow(l.n, l.rank);
    if (l.stride == 1 && (l.howmany == 1 || l.dist == total)) {
        const std::ptrdiff_t all = total * l.howmany;
        for (std::ptrdiff_t i = 0; i < all; ++i) data[i] *= scale;
        return;
    }
    std::array<std::ptrdiff_t, 4> st{};
    for (int a = 0; a < l.rank; ++a) st[a] = l.stride * ipow(l.n, l.rank - 1 - a);
    for (int b = 0; b < l.howmany; ++b)
        for (std::ptrdiff_t i = 0; i < total; ++i) {
            std::ptrdiff_t r = i, off = 0;
            for (int a = l.rank - 1; a >= 0; --a) {
                off += (r % l.n) * st[a];
                r /= l.n;
            }
            data[b * l.dist + off] *= scale;
        }
}

}  // namespace matwig::fft
