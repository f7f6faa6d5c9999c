#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "fracwalk/quadrature.hpp"

namespace fracwalk {

using quad::budget_error;

// Target law: symmetric alpha-stable at time t, characteristic function
// exp(-t |kappa|^alpha).  theta is fixed to zero; any other value is
// rejected at construction.
struct StableParams {
    double alpha;
    double t;
    double theta;

    StableParams(double alpha_, double t_, double theta_ = 0.0);
};

struct QuadratureConfig {
    double kappa_max = 0.0;  // 0 = derive from abs_tol and t
    int panels = 64;         // minimum seed panel count
    double abs_tol = 1e-8;

    void validate() const;
};

// Generalized binomial coefficient C(alpha, k).  Total function; exact zero
// for integer alpha with k > alpha.  Stable for k well beyond 10^6 (product
// form for small k, log-gamma form for large k).
double binom_alpha(double alpha, long long k);

// b(alpha) = Gamma(alpha+1) sin(alpha pi/2) / pi.  b(2) is an exact zero.
double b_coeff(double alpha);

// c(alpha) = 2 cos(alpha pi/2)/(1 - alpha), continuously extended to pi at
// alpha = 1; c(2) = 1 exactly (the discontinuous special value).
double c_coeff(double alpha);

// Riemann zeta for s > 1 (absolute error well below 1e-12).
double riemann_zeta(double s);

// exp(-t |kappa|^alpha).
double char_fn(const StableParams& p, double kappa);

// Density and CDF of the target law by numerical Fourier inversion.
// Two algebraic routes are used internally: the cosine/sine form on the real
// axis for moderate |x|, and a rotated-contour form (ray r e^{i phi},
// phi = min(pi/2, pi/(2 alpha))) whose integrand is damped like
// e^{-|x| r sin(phi)}, for large |x| where the axis form would need
// unboundedly many oscillation panels.  Throws budget_error when a
// configuration defeats the evaluation budget.
double stable_density(const StableParams& p, double x, const QuadratureConfig& q = {});
double stable_cdf(const StableParams& p, double x, const QuadratureConfig& q = {});

// Force one route or the other; used by cross-checking tests and the
// dispatcher above.  The axis route's cost grows with |x|; the rotated route
// requires 0 < alpha < 2 and x != 0.
double stable_density_axis(const StableParams& p, double x, const QuadratureConfig& q);
double stable_density_rotated(const StableParams& p, double x, const QuadratureConfig& q);
double stable_cdf_axis(const StableParams& p, double x, const QuadratureConfig& q);
double stable_cdf_rotated(const StableParams& p, double x, const QuadratureConfig& q);

// Grid evaluation (OpenMP over points) and its serial reference.
std::vector<double> density_grid(const StableParams& p, const std::vector<double>& xs,
                                 const QuadratureConfig& q = {});
std::vector<double> density_grid_serial(const StableParams& p, const std::vector<double>& xs,
                                        const QuadratureConfig& q = {});
std::vector<double> cdf_grid(const StableParams& p, const std::vector<double>& xs,
                             const QuadratureConfig& q = {});
std::vector<double> cdf_grid_serial(const StableParams& p, const std::vector<double>& xs,
                                    const QuadratureConfig& q = {});

}  // namespace fracwalk
