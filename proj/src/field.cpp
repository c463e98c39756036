// SPDX-License-Identifier: Apache-2.0
#include "matwig/field.hpp"

#include <algorithm>
#include <cmath>

namespace matwig {

double Field2::cell() const { return std::pow(step1() * step2(), grid.dim); }

void Field2::coord1(std::size_t i, double* out) const {
    tag1 == Domain::time ? grid.point(i, out) : grid.freq(i, out);
}

void Field2::coord2(std::size_t j, double* out) const {
    tag2 == Domain::time ? grid.point(j, out) : grid.freq(j, out);
}

cplx field_inner(const Field2& a, const Field2& b) {
    require_same(a.grid, b.grid, "field_inner");
    cplx s = 0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * std::conj(b.values[i]);
    return s * a.cell();
}

double field_norm(const Field2& a) { return std::sqrt(std::real(field_inner(a, a))); }

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw Error(Errc::grid_mismatch, "max_abs_diff: size mismatch");
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_abs(const std::vector<cplx>& a) {
    double m = 0;
    for (auto v : a) m = std::max(m, std::abs(v));
    return m;
}

double l2_diff_rel(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    if (a.size() != b.size()) throw Error(Errc::grid_mismatch, "l2_diff_rel: size mismatch");
    double num = 0, den = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(a[i] - b[i]);
        den += std::norm(b[i]);
    }
    return den > 0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace matwig
