#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fracwalk/kernels.hpp"

namespace fracwalk {

struct Window {
    long long jmin;
    long long jmax;

    long long size() const { return jmax - jmin + 1; }
};

// Sojourn masses y_j on a finite index window.  Mass convolved past the
// window edges is absorbed and tallied in boundary_loss, so
// sum(values) + boundary_loss stays constant under evolve.
struct LatticeState {
    double h;
    double tau;
    long long n;  // time index, t_n = n tau
    Window window;
    std::vector<double> values;  // y_{jmin}..y_{jmax}
    double boundary_loss;

    double t() const { return static_cast<double>(n) * tau; }
    double x_of(long long j) const { return static_cast<double>(j) * h; }
    double& at(long long j) { return values[static_cast<std::size_t>(j - window.jmin)]; }
    double at(long long j) const { return values[static_cast<std::size_t>(j - window.jmin)]; }
    double total_mass() const;
};

// Kronecker start y_0 = 1; the window must contain 0.
LatticeState init_delta(double h, double tau, Window window);

// Cell masses from a density by the midpoint rule, y_j = h f(x_j).
// Negative density values are rejected.
LatticeState init_from_density(double h, double tau, Window window,
                               const std::function<double(double)>& f);

// Exact closed-form cells for the built-in Cauchy and Gauss targets.
LatticeState init_from_cauchy(double h, double tau, Window window, double t);
LatticeState init_from_gauss(double h, double tau, Window window, double t);

// Redistribution y_j <- sum_k p_k y_{j-k}, `steps` times.  Uses the kernel's
// lazy-walker probabilities (tail on k=0).  OpenMP over window cells; the
// serial variant is the reference implementation.
void evolve(LatticeState& state, const TransitionKernel& kernel, long long steps);
void evolve_serial(LatticeState& state, const TransitionKernel& kernel, long long steps);

// (x_j, y_j / h) density estimates.
std::vector<std::pair<double, double>> lattice_profile(const LatticeState& state);

// Suggested half-width so that boundary loss stays negligible for a run to
// time t: ceil(6 t^{1/alpha} / h) plus a per-step safety margin.
long long suggested_half_width(double alpha, double t, double h, long long steps,
                               long long kernel_radius);

}  // namespace fracwalk
