// SPDX-License-Identifier: Apache-2.0
#include "matwig/blockmat.hpp"

#include <cmath>
#include <sstream>

namespace matwig {

namespace {

constexpr double cohen_tol = 1e-12;

Mat eye(int d) { return Mat::Identity(d, d); }

bool near(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff() <= cohen_tol; }

}  // namespace

bool is_invertible(const Mat& m) {
    if (m.rows() != m.cols() || m.rows() == 0) return false;
    Eigen::JacobiSVD<Mat> svd(m);
    const auto& s = svd.singularValues();
    return s(s.size() - 1) > 1e-12 * s(0);
}

BlockMatrix BlockMatrix::make(const Mat& a11, const Mat& a12, const Mat& a21, const Mat& a22) {
    const auto d = a11.rows();
    for (const Mat* b : {&a11, &a12, &a21, &a22})
        if (b->rows() != d || b->cols() != d) throw Error(Errc::config, "blocks must share dimension d");
    Mat e(2 * d, 2 * d);
    e << a11, a12, a21, a22;
    return from_entries(e);
}

BlockMatrix BlockMatrix::from_entries(const Mat& entries) {
    if (entries.rows() != entries.cols() || entries.rows() % 2 != 0 || entries.rows() == 0 || entries.rows() > 8)
        throw Error(Errc::config, "block matrix must be 2d x 2d with 1 <= d <= 4");
    if (!is_invertible(entries)) throw Error(Errc::singular_matrix, "block matrix is singular");
    BlockMatrix b;
    b.d_ = int(entries.rows() / 2);
    b.e_ = entries;
    b.det_ = entries.determinant();
    b.inv_ = entries.inverse();
    return b;
}

double BlockMatrix::abs_det() const { return std::abs(det_); }

namespace preset {

BlockMatrix tau(double t, int d) { return BlockMatrix::make(eye(d), t * eye(d), eye(d), -(1.0 - t) * eye(d)); }
BlockMatrix wigner(int d) { return tau(0.5, d); }
BlockMatrix rihaczek(int d) { return tau(0.0, d); }
BlockMatrix stft(int d) { return BlockMatrix::make(Mat::Zero(d, d), eye(d), -eye(d), eye(d)); }
BlockMatrix ambiguity(int d) { return BlockMatrix::make(0.5 * eye(d), eye(d), -0.5 * eye(d), eye(d)); }

BlockMatrix cohen(const Mat& m) {
    const int d = int(m.rows());
    return BlockMatrix::make(eye(d), m + 0.5 * eye(d), eye(d), m - 0.5 * eye(d));
}

BlockMatrix affine(const Mat& t) {
    const int d = int(t.rows());
    return BlockMatrix::make(eye(d), t, eye(d), -(eye(d) - t));
}

BlockMatrix identity(int d) { return BlockMatrix::from_entries(eye(2 * d)); }
BlockMatrix J(int d) { return BlockMatrix::make(Mat::Zero(d, d), eye(d), -eye(d), Mat::Zero(d, d)); }
BlockMatrix flip(int d) { return BlockMatrix::make(Mat::Zero(d, d), eye(d), eye(d), Mat::Zero(d, d)); }
BlockMatrix reflect(int d) { return BlockMatrix::make(eye(d), Mat::Zero(d, d), Mat::Zero(d, d), -eye(d)); }

}  // namespace preset

Classification classify(const BlockMatrix& a) {
    const int d = a.dim();
    Classification c;
    c.left_regular = is_invertible(a.a11()) && is_invertible(a.a21());
    c.right_regular = is_invertible(a.a12()) && is_invertible(a.a22());
    c.cohen_type = near(a.a11(), eye(d)) && near(a.a21(), eye(d)) && near(a.a12() - a.a22(), eye(d));
    c.self_adjoint_form = near(a.a21(), a.a11()) && near(a.a12(), -a.a22());
    if (c.cohen_type) {
        c.cohen_T = a.a12();
        c.cohen_M = Mat(0.5 * (a.a12() + a.a22()));
        c.c_T = a.a12().determinant() * (eye(d) - a.a12()).determinant();
    }
    return c;
}

BlockMatrix sharp(const BlockMatrix& a) { return BlockMatrix::from_entries(a.inverse().transpose()); }

BlockMatrix derived(const BlockMatrix& a, Derived which) {
    const int d = a.dim();
    switch (which) {
        case Derived::C1: return preset::flip(d) * a * preset::reflect(d);
        case Derived::C2: return preset::reflect(d) * sharp(a) * preset::flip(d);
        case Derived::AJ: return a * preset::J(d);
        case Derived::Astar: return BlockMatrix::from_entries(preset::reflect(d).entries() * a.inverse());
    }
    return a;
}

CohenMaps cohen_maps(const Mat& t) {
    const int d = int(t.rows());
    CohenMaps m;
    m.T = t;
    m.P = Mat::Zero(2 * d, 2 * d);
    m.P.topLeftCorner(d, d) = -t;
    m.P.bottomRightCorner(d, d) = -(eye(d) - t);
    m.I_plus_P = Mat::Identity(2 * d, 2 * d) + m.P;
    if (is_invertible(t) && is_invertible(eye(d) - t)) {
        Mat u = Mat::Zero(2 * d, 2 * d);
        u.topLeftCorner(d, d) = -(eye(d) - t).inverse() * t;
        u.bottomRightCorner(d, d) = -t.inverse() * (eye(d) - t);
        m.U = u;
    }
    return m;
}

Mat cohen_T_of(const BlockMatrix& a) {
    auto c = classify(a);
    if (!c.cohen_type) throw Error(Errc::not_cohen_type, "matrix is not of Cohen type");
    return *c.cohen_T;
}

std::string describe(const BlockMatrix& a) {
    std::ostringstream os;
    os.precision(6);
    const auto& e = a.entries();
    os << "[";
    for (int i = 0; i < e.rows(); ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < e.cols(); ++j) os << (j ? " " : "") << e(i, j);
    }
    os << "]";
    return os.str();
}

}  // namespace matwig
