// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "matwig/blockmat.hpp"
#include "matwig/grid.hpp"

namespace matwig {

enum class Domain { time, frequency };

inline Domain flip(Domain d) { return d == Domain::time ? Domain::frequency : Domain::time; }

// Complex array over (axis 1) x (axis 2), each axis a copy of `grid` in time or frequency units.
// Storage is row-major: values[i * size() + j].
struct Field2 {
    Grid grid;
    Domain tag1 = Domain::time;
    Domain tag2 = Domain::frequency;
    std::vector<cplx> values;

    Field2() = default;
    Field2(const Grid& g, Domain t1, Domain t2) : grid(g), tag1(t1), tag2(t2), values(g.size() * g.size()) {}

    std::size_t size() const { return grid.size(); }
    cplx& at(std::size_t i, std::size_t j) { return values[i * size() + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return values[i * size() + j]; }

    double step1() const { return tag1 == Domain::time ? grid.step() : grid.freq_step(); }
    double step2() const { return tag2 == Domain::time ? grid.step() : grid.freq_step(); }
    double cell() const;  // product of all axis steps
    void coord1(std::size_t i, double* out) const;
    void coord2(std::size_t j, double* out) const;
};

// B_A(f,g) sampled at (x_i - X_x, w_j - X_w); origin X is zero unless a shifted evaluation was asked for.
struct PhaseSpaceField : Field2 {
    std::optional<BlockMatrix> matrix;
    std::optional<Mat> cohen_M;
    std::string provenance;

    PhaseSpaceField() = default;
    explicit PhaseSpaceField(const Grid& g) : Field2(g, Domain::time, Domain::frequency) {}
};

using PhaseFn = std::function<cplx(const double* x, const double* w)>;

struct SymbolField : Field2 {
    PhaseFn analytic;  // exact evaluator when known; sampled values always present
    std::string tag;

    SymbolField() = default;
    explicit SymbolField(const Grid& g) : Field2(g, Domain::time, Domain::frequency) {}
};

// Phase-space inner product with weights step^d * (1/L)^d.
cplx field_inner(const Field2& a, const Field2& b);
double field_norm(const Field2& a);
double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b);
double max_abs(const std::vector<cplx>& a);
double l2_diff_rel(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace matwig
