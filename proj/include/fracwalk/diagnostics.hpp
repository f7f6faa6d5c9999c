#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracwalk/kernels.hpp"
#include "fracwalk/montecarlo.hpp"
#include "fracwalk/stable.hpp"

namespace fracwalk {

// One (kappa, h) cell of a characteristic-function convergence table.
struct ConvergenceCell {
    bool admissible = false;
    double error = 0.0;        // |yhat(kappa, t_n; h) - exp(-t_n |kappa|^alpha)|
    long long n = 0;
    double realized_tn = 0.0;
    std::string note;          // why the cell is inadmissible, when it is
};

struct ConvergenceReport {
    ModelTag model;
    double alpha;
    double t;
    std::vector<double> kappa_grid;
    std::vector<double> h_sequence;                  // strictly decreasing
    std::vector<std::vector<ConvergenceCell>> cells; // [kappa][h]
    std::vector<double> observed_rates;              // per kappa, slope over last 3 levels

    // max-over-kappa error per h level (admissible cells only).
    std::vector<double> max_errors() const;
    bool monotone_decreasing() const;
};

struct CfModelSpec {
    ModelTag model;
    double alpha;
    double coeff;                  // mu or lambda
    std::string coeff_name = "mu";
    int radius = 0;
    // Control switch: evolve Gillis-Weiss at alpha=2 with the naive
    // tau = lambda h^2 instead of the log-corrected law.
    bool gw2_naive_scaling = false;
};

ConvergenceReport cf_convergence(const CfModelSpec& spec, const std::vector<double>& kappa_grid,
                                 const std::vector<double>& h_sequence, double t);

// Kolmogorov-Smirnov sup distance between the empirical CDF of the sample
// set and the target stable CDF at the realized t_n (which must match
// target.t).  Uses the Cauchy/Gauss closed forms at alpha = 1, 2 and a
// cached monotone-interpolated CDF grid when N > 10^4.
double ks_statistic(const SampleSet& samples, const StableParams& target);

// Cached target CDF on a fine grid (arctan-transformed abscissa), linear
// monotone interpolation in between, direct evaluation outside the grid.
class StableCdfCache {
  public:
    StableCdfCache(const StableParams& target, int nodes = 4097);
    double operator()(double x) const;
    double interp_error_estimate() const { return interp_error_; }

  private:
    StableParams params_;
    double scale_;
    double u_max_;
    std::vector<double> us_;
    std::vector<double> cdf_;
    double interp_error_;
};

// l1 = sum_j |y_j - cell integral of g_alpha|, linf = max_j |y_j/h - g(x_j)|
// at the state's realized time (must match target.t).
std::pair<double, double> lattice_error(const LatticeState& state, const StableParams& target);

// rho(nu) = int_0^inf w^{alpha-1} e^{-nu w} / (w^2+1) dw.  nu = 0 permitted
// for alpha < 2; alpha = 2 with nu = 0 diverges and is rejected.
double rho_integral(double alpha, double nu);

struct AppendixRow {
    double alpha;
    double nu;
    double rho;
    // alpha < 2: rho * 2 sin(alpha pi/2) / pi  (-> 1);
    // alpha = 2: rho / log(1/nu)               (-> 1).
    double rho_ratio;
    // [1 - p~(e^{i nu})] / (lambda c_alpha nu^alpha) for the Gillis-Weiss
    // kernel, c_alpha = pi / (Gamma(alpha+1) sin(alpha pi/2)); alpha < 2 only.
    std::optional<double> gw_ratio;
};

struct AppendixReport {
    double lambda;  // GW coefficient used for the direct generating-function check
    std::vector<AppendixRow> rows;
};

AppendixReport appendix_limits_check(const std::vector<double>& alpha_grid,
                                     const std::vector<double>& nu_sequence,
                                     double gw_lambda = 0.1);

// Least-squares slope of log(err) vs log(h) over the last `levels` points.
double fit_decay_rate(const std::vector<double>& hs, const std::vector<double>& errs,
                      int levels = 3);

}  // namespace fracwalk
