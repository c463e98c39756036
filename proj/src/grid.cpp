// SPDX-License-Identifier: Apache-2.0
#include "matwig/grid.hpp"

#include <cmath>

namespace matwig {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::singular_matrix: return "SingularMatrix";
        case Errc::non_positive_parameter: return "NonPositiveParameter";
        case Errc::off_grid_shift: return "OffGridShift";
        case Errc::grid_mismatch: return "GridMismatch";
        case Errc::grid_not_self_dual: return "GridNotSelfDual";
        case Errc::invalid_exponent: return "InvalidExponent";
        case Errc::domain_tag_mismatch: return "DomainTagMismatch";
        case Errc::not_right_regular: return "NotRightRegular";
        case Errc::orthogonal_window_pair: return "OrthogonalWindowPair";
        case Errc::not_cohen_tagged: return "NotCohenTagged";
        case Errc::not_cohen_type: return "NotCohenType";
        case Errc::unsupported: return "Unsupported";
        case Errc::config: return "ConfigError";
    }
    return "Error";
}

Grid Grid::make(int dim, int n, double len) {
    if (dim != 1 && dim != 2) throw Error(Errc::config, "grid dim must be 1 or 2");
    if (n < 2 || (n & (n - 1)) != 0) throw Error(Errc::config, "grid n must be a power of two >= 2");
    if (!(len > 0)) throw Error(Errc::non_positive_parameter, "grid len must be positive");
    return Grid{dim, n, len};
}

void Grid::point(std::size_t flat, double* out) const {
    if (dim == 1) {
        out[0] = point(int(flat));
    } else {
        out[0] = point(int(flat / n));
        out[1] = point(int(flat % n));
    }
}

void Grid::freq(std::size_t flat, double* out) const {
    if (dim == 1) {
        out[0] = freq(int(flat));
    } else {
        out[0] = freq(int(flat / n));
        out[1] = freq(int(flat % n));
    }
}

bool Grid::self_dual() const { return std::abs(step() - freq_step()) <= 1e-14 * freq_step(); }

double Grid::cell() const { return std::pow(step(), dim); }
double Grid::freq_cell() const { return std::pow(freq_step(), dim); }

Grid default_grid(int dim) { return dim == 2 ? Grid{2, 64, 12.0} : Grid{1, 256, 16.0}; }

void require_same(const Grid& a, const Grid& b, const char* where) {
    if (a != b) throw Error(Errc::grid_mismatch, where);
}

}  // namespace matwig
