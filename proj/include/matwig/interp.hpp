// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "matwig/core.hpp"

namespace matwig {

struct InterpOptions {
    int upsample = 0;                 // 0: automatic (16, halved until the fine table fits the budget)
    std::size_t budget = 1u << 23;    // complex values
};

// Band-limited upsampling of a centered n^rank array by an integer factor per axis:
// node i maps to fine node i * up.
std::vector<cplx> upsample(std::vector<cplx> data, int n, int rank, int up);

// Band-limited (FFT) upsampling over `rank` centered axes, then Catmull-Rom on the fine grid.
// Every node carries `width` contiguous values. Points outside the box see zeros.
class Resampler {
  public:
    Resampler() = default;
    Resampler(const cplx* data, int n, int rank, double step, std::size_t width, InterpOptions opt = {});

    int upsample() const { return up_; }
    std::size_t width() const { return width_; }
    int max_taps() const { return 1 << (2 * rank_); }

    // Writes up to max_taps() offsets (into fine storage, first value of a node) and weights.
    int taps(const double* pt, std::ptrdiff_t* offset, double* weight) const;
    const cplx* fine() const { return fine_.data(); }

    cplx eval(const double* pt) const;
    void eval_row(const double* pt, cplx* out) const;

  private:
    int n_ = 0, rank_ = 1, up_ = 1, m_ = 0;
    double fine_step_ = 0;
    std::size_t width_ = 1;
    std::vector<cplx> fine_;
};

void catmull_rom_weights(double t, double* w);

}  // namespace matwig
