// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace matwig {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

inline constexpr double pi = 3.14159265358979323846;

enum class Errc {
    singular_matrix,
    non_positive_parameter,
    off_grid_shift,
    grid_mismatch,
    grid_not_self_dual,
    invalid_exponent,
    domain_tag_mismatch,
    not_right_regular,
    orthogonal_window_pair,
    not_cohen_tagged,
    not_cohen_type,
    unsupported,
    config,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

// Serial runs the same loops on the calling thread; results are bitwise identical.
enum class Exec { serial, parallel };

inline bool par(Exec e) { return e == Exec::parallel; }

}  // namespace matwig
