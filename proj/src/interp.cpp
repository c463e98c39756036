// SPDX-License-Identifier: Apache-2.0
#include "matwig/interp.hpp"

#include <array>
#include <cmath>

#include "matwig/fft.hpp"

namespace matwig {

namespace {

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Upsamples axis `a` of an array with per-axis sizes `dims` (trailing `width` values per node).
std::vector<cplx> upsample_axis(std::vector<cplx> in, std::vector<std::size_t>& dims, int a, std::size_t width,
                                int up) {
    const std::size_t n = dims[a], m = n * up;
    std::size_t outer = 1, inner = width;
    for (int i = 0; i < a; ++i) outer *= dims[i];
    for (std::size_t i = a + 1; i < dims.size(); ++i) inner *= dims[i];

    std::vector<cplx> out(outer * m * inner, cplx(0));
    const fft::Layout lin{int(n), 1, std::ptrdiff_t(inner), int(inner), 1};
    const fft::Layout lout{int(m), 1, std::ptrdiff_t(inner), int(inner), 1};
    for (std::size_t o = 0; o < outer; ++o) {
        cplx* src = in.data() + o * n * inner;
        cplx* dst = out.data() + o * m * inner;
        fft::half_shift(src, lin);
        fft::raw(src, lin, -1);
        for (std::size_t k = 0; k < n; ++k) {
            const cplx* s = src + k * inner;
            if (k == n / 2) {
                cplx* lo = dst + (m - n / 2) * inner;
                cplx* hi = dst + (n / 2) * inner;
                for (std::size_t r = 0; r < inner; ++r) {
                    lo[r] = 0.5 * s[r];
                    hi[r] = 0.5 * s[r];
                }
                continue;
            }
            const std::size_t kk = k < n / 2 ? k : m - (n - k);
            cplx* d = dst + kk * inner;
            for (std::size_t r = 0; r < inner; ++r) d[r] = s[r];
        }
        fft::raw(dst, lout, +1);
        fft::half_shift(dst, lout);
        const double s = 1.0 / double(n);
        for (std::size_t i = 0; i < m * inner; ++i) dst[i] *= s;
    }
    dims[a] = m;
    return out;
}

}  // namespace

std::vector<cplx> upsample(std::vector<cplx> data, int n, int rank, int up) {
    if (up < 1) throw Error(Errc::non_positive_parameter, "upsample factor must be positive");
    if (up == 1) return data;
    std::vector<std::size_t> dims(static_cast<std::size_t>(rank), static_cast<std::size_t>(n));
    for (int a = 0; a < rank; ++a) data = upsample_axis(std::move(data), dims, a, 1, up);
    return data;
}

void catmull_rom_weights(double t, double* w) {
    const double t2 = t * t, t3 = t2 * t;
    w[0] = 0.5 * (-t3 + 2 * t2 - t);
    w[1] = 0.5 * (3 * t3 - 5 * t2 + 2);
    w[2] = 0.5 * (-3 * t3 + 4 * t2 + t);
    w[3] = 0.5 * (t3 - t2);
}

Resampler::Resampler(const cplx* data, int n, int rank, double step, std::size_t width, InterpOptions opt)
    : n_(n), rank_(rank), width_(width) {
    if (rank < 1 || rank > 4) throw Error(Errc::unsupported, "interpolation rank must be 1..4");
    int up = opt.upsample;
    if (up <= 0) {
        up = 16;
        while (up > 1 && ipow(std::size_t(n) * up, rank) * width > opt.budget) up /= 2;
    }
    if ((up & (up - 1)) != 0) throw Error(Errc::config, "upsample factor must be a power of two");
    up_ = up;
    m_ = n * up;
    fine_step_ = step / up;

    std::vector<cplx> buf(data, data + ipow(n, rank) * width);
    if (up > 1) {
        std::vector<std::size_t> dims(rank, std::size_t(n));
        for (int a = 0; a < rank; ++a) buf = upsample_axis(std::move(buf), dims, a, width, up);
    }
    fine_ = std::move(buf);
}

int Resampler::taps(const double* pt, std::ptrdiff_t* offset, double* weight) const {
    std::array<std::array<std::ptrdiff_t, 4>, 4> idx{};
    std::array<std::array<double, 4>, 4> wt{};
    std::array<int, 4> cnt{};
    for (int a = 0; a < rank_; ++a) {
        const double p = pt[a] / fine_step_ + m_ / 2;
        if (!(p > -2.0 && p < m_ + 1.0)) return 0;
        const double fl = std::floor(p);
        double w[4];
        catmull_rom_weights(p - fl, w);
        const auto i0 = std::ptrdiff_t(fl) - 1;
        cnt[a] = 0;
        for (int t = 0; t < 4; ++t) {
            const auto i = i0 + t;
            if (i < 0 || i >= m_ || w[t] == 0.0) continue;
            idx[a][cnt[a]] = i;
            wt[a][cnt[a]] = w[t];
            ++cnt[a];
        }
        if (cnt[a] == 0) return 0;
    }
    int count = 0;
    std::array<int, 4> c{};
    while (true) {
        std::ptrdiff_t off = 0;
        double w = 1.0;
        for (int a = 0; a < rank_; ++a) {
            off = off * m_ + idx[a][c[a]];
            w *= wt[a][c[a]];
        }
        offset[count] = off * std::ptrdiff_t(width_);
        weight[count] = w;
        ++count;
        int a = rank_ - 1;
        while (a >= 0 && ++c[a] == cnt[a]) c[a--] = 0;
        if (a < 0) break;
    }
    return count;
}

cplx Resampler::eval(const double* pt) const {
    std::array<std::ptrdiff_t, 256> off;
    std::array<double, 256> w;
    const int k = taps(pt, off.data(), w.data());
    cplx s = 0;
    for (int i = 0; i < k; ++i) s += w[i] * fine_[off[i]];
    return s;
}

void Resampler::eval_row(const double* pt, cplx* out) const {
    std::array<std::ptrdiff_t, 256> off;
    std::array<double, 256> w;
    const int k = taps(pt, off.data(), w.data());
    for (std::size_t r = 0; r < width_; ++r) out[r] = 0;
    for (int i = 0; i < k; ++i) {
        const cplx* row = fine_.data() + off[i];
        for (std::size_t r = 0; r < width_; ++r) out[r] += w[i] * row[r];
    }
}

}  // namespace matwig
