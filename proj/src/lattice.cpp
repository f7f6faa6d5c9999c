#include "fracwalk/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracwalk/summation.hpp"

namespace fracwalk {

namespace {

constexpr double pi = std::numbers::pi;

void check_grid(double h, double tau, const Window& w, const char* who) {
    if (!(h > 0.0)) throw std::invalid_argument(std::string(who) + ": h must be positive");
    if (!(tau > 0.0)) throw std::invalid_argument(std::string(who) + ": tau must be positive");
    if (w.jmin > w.jmax) throw std::invalid_argument(std::string(who) + ": empty window");
}

}  // namespace

double LatticeState::total_mass() const {
    KahanSum s;
    for (double v : values) s.add(v);
    return s.value();
}

LatticeState init_delta(double h, double tau, Window window) {
    check_grid(h, tau, window, "init_delta");
    if (window.jmin > 0 || window.jmax < 0)
        throw std::invalid_argument("init_delta: window must contain j = 0");
    LatticeState s{h, tau, 0, window,
                   std::vector<double>(static_cast<std::size_t>(window.size()), 0.0), 0.0};
    s.at(0) = 1.0;
    return s;
}

LatticeState init_from_density(double h, double tau, Window window,
                               const std::function<double(double)>& f) {
    check_grid(h, tau, window, "init_from_density");
    LatticeState s{h, tau, 0, window,
                   std::vector<double>(static_cast<std::size_t>(window.size()), 0.0), 0.0};
    for (long long j = window.jmin; j <= window.jmax; ++j) {
        const double v = f(s.x_of(j));
        if (v < 0.0) throw std::invalid_argument("init_from_density: density is negative at a cell");
        s.at(j) = h * v;  // midpoint rule for the cell integral
    }
    return s;
}

LatticeState init_from_cauchy(double h, double tau, Window window, double t) {
    check_grid(h, tau, window, "init_from_cauchy");
    if (!(t > 0.0)) throw std::invalid_argument("init_from_cauchy: t must be positive");
    LatticeState s{h, tau, 0, window,
                   std::vector<double>(static_cast<std::size_t>(window.size()), 0.0), 0.0};
    for (long long j = window.jmin; j <= window.jmax; ++j) {
        const double x = s.x_of(j);
        s.at(j) = (std::atan((x + h / 2.0) / t) - std::atan((x - h / 2.0) / t)) / pi;
    }
    return s;
}

LatticeState init_from_gauss(double h, double tau, Window window, double t) {
    check_grid(h, tau, window, "init_from_gauss");
    if (!(t > 0.0)) throw std::invalid_argument("init_from_gauss: t must be positive");
    LatticeState s{h, tau, 0, window,
                   std::vector<double>(static_cast<std::size_t>(window.size()), 0.0), 0.0};
    const double den = 2.0 * std::sqrt(t);
    for (long long j = window.jmin; j <= window.jmax; ++j) {
        const double x = s.x_of(j);
        s.at(j) = 0.5 * (std::erf((x + h / 2.0) / den) - std::erf((x - h / 2.0) / den));
    }
    return s;
}

namespace {

// One redistribution step into `next`; mass leaving the window is the
// difference of the window sums (the kernel row sums to 1 exactly by the
// lazy-walker convention).
void step(const LatticeState& s, const TransitionKernel& kernel, std::vector<double>& next,
          bool parallel) {
    const long long size = s.window.size();
    const long long K = kernel.radius;
    const double* y = s.values.data();
    double* out = next.data();
    const double* p = kernel.probs.data();
    const double p0 = kernel.probs[0] + kernel.tail_mass;

#pragma omp parallel for schedule(static) if (parallel)
    for (long long i = 0; i < size; ++i) {
        const long long lo = std::max(-K, i - (size - 1));
        const long long hi = std::min(K, i);
        double acc = 0.0;
        for (long long k = lo; k <= hi; ++k) {
            const double pk = k == 0 ? p0 : p[k < 0 ? -k : k];
            acc += pk * y[i - k];
        }
        out[i] = acc;
    }
}

void evolve_impl(LatticeState& state, const TransitionKernel& kernel, long long steps,
                 bool parallel) {
    if (steps < 0) throw std::invalid_argument("evolve: steps must be >= 0");
    std::vector<double> next(state.values.size());
    for (long long m = 0; m < steps; ++m) {
        const double before = state.total_mass();
        step(state, kernel, next, parallel);
        state.values.swap(next);
        state.boundary_loss += before - state.total_mass();
        state.n += 1;
    }
}

}  // namespace

void evolve(LatticeState& state, const TransitionKernel& kernel, long long steps) {
    evolve_impl(state, kernel, steps, true);
}

void evolve_serial(LatticeState& state, const TransitionKernel& kernel, long long steps) {
    evolve_impl(state, kernel, steps, false);
}

std::vector<std::pair<double, double>> lattice_profile(const LatticeState& state) {
    std::vector<std::pair<double, double>> out;
    out.reserve(state.values.size());
    for (long long j = state.window.jmin; j <= state.window.jmax; ++j) {
        out.emplace_back(state.x_of(j), state.at(j) / state.h);
    }
    return out;
}

long long suggested_half_width(double alpha, double t, double h, long long steps,
                               long long kernel_radius) {
    if (!(h > 0.0)) throw std::invalid_argument("suggested_half_width: h must be positive");
    const double bulk = 6.0 * std::pow(t, 1.0 / alpha) / h;
    const double safety = std::sqrt(static_cast<double>(std::max<long long>(steps, 1))) *
                          std::min<double>(static_cast<double>(kernel_radius), 64.0);
    return static_cast<long long>(std::ceil(bulk + safety)) + 1;
}

}  // namespace fracwalk
