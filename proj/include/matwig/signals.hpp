// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "matwig/field.hpp"
#include "matwig/grid.hpp"
#include "matwig/interp.hpp"

namespace matwig {

using PointFn = std::function<cplx(const double*)>;

// A function on R^d: analytic (evaluable anywhere, optionally with a closed-form Fourier transform)
// or sampled on a grid in time or frequency units.
class Signal {
  public:
    enum class Kind { analytic, sampled };

    static Signal analytic(int dim, PointFn f, PointFn fourier = {}, std::string tag = {});
    static Signal sampled(const Grid& g, std::vector<cplx> values, Domain domain = Domain::time,
                          std::string tag = {});

    Kind kind() const { return kind_; }
    bool is_analytic() const { return kind_ == Kind::analytic; }
    int dim() const { return dim_; }
    const std::string& tag() const { return tag_; }

    // Analytic: exact. Sampled: band-limited Catmull-Rom interpolation, zero outside the box.
    cplx operator()(const double* t) const;
    cplx operator()(double t) const { return (*this)(&t); }

    bool has_fourier() const { return bool(fourier_); }
    cplx fourier(const double* w) const;
    const PointFn& fn() const { return f_; }

    const Grid& grid() const;
    Domain domain() const { return domain_; }
    const std::vector<cplx>& samples() const;

    // Values at the grid points (time units). Exact for analytic signals and same-grid samples.
    std::vector<cplx> on(const Grid& g) const;

  private:
    Kind kind_ = Kind::analytic;
    int dim_ = 1;
    PointFn f_, fourier_;
    std::string tag_;
    std::shared_ptr<const Grid> grid_;
    std::shared_ptr<const std::vector<cplx>> samples_;
    std::shared_ptr<const Resampler> interp_;
    Domain domain_ = Domain::time;
};

Signal gaussian(double lambda, int d = 1);
Signal hermite(int k);
Signal chirp(double rate, int d = 1);
Signal tf_shift(const Signal& f, const std::vector<double>& x0, const std::vector<double>& w0,
                const Grid* g = nullptr);
Signal sum(const std::vector<Signal>& terms, const std::vector<cplx>& coeffs = {});
Signal dilate(const Signal& f, double lambda);  // |lambda|^{d/2} f(lambda t)
Signal conj(const Signal& f);
Signal sample(const Signal& f, const Grid& g);

cplx inner(const Signal& f, const Signal& g, const Grid& grid);
cplx inner(const std::vector<cplx>& f, const std::vector<cplx>& g, const Grid& grid);
double norm(const Signal& f, const Grid& grid);
double norm(const std::vector<cplx>& f, const Grid& grid);
double lp_norm(const std::vector<cplx>& f, const Grid& grid, double p);  // p = inf allowed

// Discrete L^{p,q}: inner p-norm over axis 1, outer q-norm over axis 2.
double mixed_norm(const Field2& F, double p, double q);

}  // namespace matwig
