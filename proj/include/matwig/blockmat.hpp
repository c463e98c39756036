// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>

#include "matwig/core.hpp"

namespace matwig {

// Invertible real 2d x 2d matrix [[A11, A12], [A21, A22]].
class BlockMatrix {
  public:
    static BlockMatrix make(const Mat& a11, const Mat& a12, const Mat& a21, const Mat& a22);
    static BlockMatrix from_entries(const Mat& entries);

    int dim() const { return d_; }
    const Mat& entries() const { return e_; }
    double det() const { return det_; }
    double abs_det() const;

    Mat a11() const { return e_.topLeftCorner(d_, d_); }
    Mat a12() const { return e_.topRightCorner(d_, d_); }
    Mat a21() const { return e_.bottomLeftCorner(d_, d_); }
    Mat a22() const { return e_.bottomRightCorner(d_, d_); }

    const Mat& inverse() const { return inv_; }

    BlockMatrix operator*(const BlockMatrix& o) const { return from_entries(e_ * o.e_); }

  private:
    BlockMatrix() = default;
    int d_ = 0;
    Mat e_, inv_;
    double det_ = 0;
};

bool is_invertible(const Mat& m);

namespace preset {
BlockMatrix wigner(int d);
BlockMatrix tau(double t, int d);
BlockMatrix stft(int d);
BlockMatrix ambiguity(int d);
BlockMatrix rihaczek(int d);
BlockMatrix cohen(const Mat& m);
BlockMatrix affine(const Mat& t);
BlockMatrix identity(int d);
BlockMatrix J(int d);        // [[0, I], [-I, 0]]
BlockMatrix flip(int d);     // [[0, I], [I, 0]]
BlockMatrix reflect(int d);  // diag(I, -I)
}  // namespace preset

struct Classification {
    bool left_regular = false;
    bool right_regular = false;
    bool cohen_type = false;
    bool self_adjoint_form = false;
    std::optional<Mat> cohen_M;
    std::optional<Mat> cohen_T;
    std::optional<double> c_T;
};

Classification classify(const BlockMatrix& a);

BlockMatrix sharp(const BlockMatrix& a);

enum class Derived { C1, C2, AJ, Astar };
BlockMatrix derived(const BlockMatrix& a, Derived which);

struct CohenMaps {
    Mat T;
    Mat P;          // diag(-T, -(I-T))
    Mat I_plus_P;   // diag(I-T, T)
    std::optional<Mat> U;  // present iff T and I-T are invertible

    const Mat& u() const {
        if (!U) throw Error(Errc::singular_matrix, "U_T needs T and I-T invertible");
        return *U;
    }

    Vec tcal(const Vec& z, const Vec& w) const { return I_plus_P * z - P * w; }
};

CohenMaps cohen_maps(const Mat& t);

// Cohen matrix parameter of a Cohen-type A; throws NotCohenType otherwise.
Mat cohen_T_of(const BlockMatrix& a);

std::string describe(const BlockMatrix& a);

}  // namespace matwig
