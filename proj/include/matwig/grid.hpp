// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "matwig/core.hpp"

namespace matwig {

// Uniform centered grid on [-L/2, L/2)^d with n points per axis.
// Multi-indices are flattened row-major (last axis fastest).
struct Grid {
    int dim = 1;
    int n = 256;
    double len = 16.0;

    static Grid make(int dim, int n, double len);

    double step() const { return len / n; }
    double freq_step() const { return 1.0 / len; }
    std::size_t size() const { return dim == 1 ? std::size_t(n) : std::size_t(n) * n; }

    double point(int j) const { return (j - n / 2) * step(); }
    double freq(int k) const { return (k - n / 2) * freq_step(); }

    void point(std::size_t flat, double* out) const;
    void freq(std::size_t flat, double* out) const;

    // Time and frequency grids coincide (step == 1/L), so index remaps like (x, w) -> (-w, x) are exact.
    bool self_dual() const;

    double cell() const;       // step^d
    double freq_cell() const;  // (1/L)^d

    bool operator==(const Grid& o) const { return dim == o.dim && n == o.n && len == o.len; }
    bool operator!=(const Grid& o) const { return !(*this == o); }
};

Grid default_grid(int dim);

void require_same(const Grid& a, const Grid& b, const char* where);

}  // namespace matwig
