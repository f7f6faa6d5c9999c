#include "fracwalk/stable.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace fracwalk {

namespace {

constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;

bool is_nonneg_integer(double a) { return a >= 0.0 && a == std::floor(a); }

// log |Gamma(x)| with explicit sign; x must not be a pole.
double lgamma_signed(double x, int& sign) {
    if (x > 0.0) {
        sign = 1;
    } else {
        const long long m = static_cast<long long>(std::floor(-x));
        sign = (m % 2 == 0) ? -1 : 1;
    }
    return std::lgamma(x);
}

}  // namespace

StableParams::StableParams(double alpha_, double t_, double theta_)
    : alpha(alpha_), t(t_), theta(theta_) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("StableParams: alpha must lie in (0, 2]");
    if (!(t > 0.0)) throw std::invalid_argument("StableParams: t must be positive");
    if (theta != 0.0)
        throw std::invalid_argument("StableParams: only the symmetric case theta = 0 is supported");
}

void QuadratureConfig::validate() const {
    if (kappa_max < 0.0) throw std::invalid_argument("QuadratureConfig: kappa_max must be >= 0");
    if (panels < 16) throw std::invalid_argument("QuadratureConfig: panels must be >= 16");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureConfig: abs_tol must be positive");
}

double binom_alpha(double alpha, long long k) {
    if (k < 0) throw std::invalid_argument("binom_alpha: k must be >= 0");
    if (k == 0) return 1.0;
    // Integer alpha truncates the series exactly; downstream kernels rely
    // on these being true zeros, not round-off residue.
    if (is_nonneg_integer(alpha) && static_cast<double>(k) > alpha) return 0.0;
    if (k <= 1024) {
        double c = 1.0;
        for (long long j = 1; j <= k; ++j) {
            c *= (alpha - static_cast<double>(j) + 1.0) / static_cast<double>(j);
        }
        return c;
    }
    // C(alpha, k) = (-1)^k Gamma(k - alpha) / (Gamma(k+1) Gamma(-alpha))
    int s1 = 1, s2 = 1;
    const double lg = lgamma_signed(static_cast<double>(k) - alpha, s1) -
                      std::lgamma(static_cast<double>(k) + 1.0) - lgamma_signed(-alpha, s2);
    const double sign = ((k % 2 == 0) ? 1.0 : -1.0) * s1 * s2;
    return sign * std::exp(lg);
}

double b_coeff(double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("b_coeff: alpha must lie in (0, 2]");
    if (alpha == 2.0) return 0.0;  // sin(pi) vanishes exactly here
    return std::tgamma(alpha + 1.0) * std::sin(alpha * pi / 2.0) / pi;
}

double c_coeff(double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("c_coeff: alpha must lie in (0, 2]");
    if (alpha == 1.0) return pi;  // removable singularity
    if (alpha == 2.0) return 1.0; // genuine jump: the limit from below is 2
    return 2.0 * std::cos(alpha * pi / 2.0) / (1.0 - alpha);
}

double riemann_zeta(double s) {
    if (!(s > 1.0)) throw std::domain_error("riemann_zeta: s must be > 1");
    constexpr int N = 64;
    double sum = 0.0;
    for (int k = N; k >= 1; --k) sum += std::pow(static_cast<double>(k), -s);
    const double Ns = std::pow(static_cast<double>(N), -s);
    double val = sum + static_cast<double>(N) * Ns / (s - 1.0) - 0.5 * Ns;
    // Euler-Maclaurin tail, Bernoulli terms B2..B8.
    double rising = s;
    double npow = Ns / N;
    val += (1.0 / 12.0) * rising * npow;
    rising *= (s + 1.0) * (s + 2.0);
    npow /= static_cast<double>(N) * N;
    val -= (1.0 / 720.0) * rising * npow;
    rising *= (s + 3.0) * (s + 4.0);
    npow /= static_cast<double>(N) * N;
    val += (1.0 / 30240.0) * rising * npow;
    rising *= (s + 5.0) * (s + 6.0);
    npow /= static_cast<double>(N) * N;
    val -= (1.0 / 1209600.0) * rising * npow;
    return val;
}

double char_fn(const StableParams& p, double kappa) {
    return std::exp(-p.t * std::pow(std::abs(kappa), p.alpha));
}

namespace {

// Truncation point: t kappa^alpha = log(1/tol) plus a correction for the
// algebraic prefactor the tail integral picks up when alpha < 1.
double auto_kappa_max(double alpha, double t, double tol) {
    const double L = std::log(1.0 / tol) + 5.0;
    double k = std::pow(L / t, 1.0 / alpha);
    for (int i = 0; i < 3; ++i) {
        const double extra =
            std::max(0.0, 1.0 / alpha - 1.0) * std::log(std::max(k, 1.0));
        k = std::pow((L + extra) / t, 1.0 / alpha);
    }
    return k;
}

// Seed panels on [kappa0, kmax]: geometric growth capped by the width that
// keeps the cos(kappa x) factor resolved.  Adaptive bisection refines on top.
std::vector<double> axis_edges(double kappa0, double kmax, double x_abs) {
    const double w_osc = 5.0 / std::max(x_abs, 5.0 / (0.25 * kmax));
    return quad::graded_edges(kappa0, kmax, w_osc, kappa0);
}

struct AxisSetup {
    double kappa0;
    double kmax;
    std::vector<double> edges;
};

AxisSetup axis_setup(const StableParams& p, double x, const QuadratureConfig& q) {
    double kmax;
    if (q.kappa_max > 0.0) {
        if (!(std::exp(-p.t * std::pow(q.kappa_max, p.alpha)) < q.abs_tol))
            throw std::invalid_argument(
                "stable quadrature: kappa_max too small for abs_tol (exp(-t kappa_max^alpha) "
                "must fall below abs_tol)");
        kmax = q.kappa_max;
    } else {
        kmax = auto_kappa_max(p.alpha, p.t, q.abs_tol);
    }
    const double kappa0 = std::min(1e-12, kmax * 1e-15);
    AxisSetup s{kappa0, kmax, axis_edges(kappa0, kmax, std::abs(x))};
    // honor the configured minimum panel count
    while (static_cast<int>(s.edges.size()) - 1 < q.panels) {
        std::vector<double> finer;
        finer.reserve(s.edges.size() * 2);
        for (std::size_t i = 0; i + 1 < s.edges.size(); ++i) {
            finer.push_back(s.edges[i]);
            finer.push_back(0.5 * (s.edges[i] + s.edges[i + 1]));
        }
        finer.push_back(s.edges.back());
        s.edges = std::move(finer);
    }
    return s;
}

double rotation_angle(double alpha) { return std::min(pi / 2.0, pi / (2.0 * alpha)); }

// Ray length so that e^{-|x| r sin(phi)} * e^{-t r^alpha cos(alpha phi)}
// is below tolerance at the far end (either factor suffices).
double ray_length(double alpha, double t, double x_abs, double tol) {
    const double L = std::log(1.0 / tol) + 5.0;
    const double phi = rotation_angle(alpha);
    const double Rx = L / (x_abs * std::sin(phi));
    const double ca = std::cos(alpha * phi);
    const double Rt = ca > 1e-9 ? std::pow(L / (t * ca), 1.0 / alpha)
                                : std::numeric_limits<double>::infinity();
    return std::min(Rx, Rt);
}

std::vector<double> ray_edges(double alpha, double t, double x_abs, double r_from, double R) {
    const double phi = rotation_angle(alpha);
    // oscillation rate: x cos(phi) from the shifted exponential plus the
    // largest local rate of the t r^alpha phase term
    double rate = x_abs * std::cos(phi);
    if (alpha > 1.0) rate += t * alpha * std::pow(R, alpha - 1.0);
    const double w_osc = 5.0 / std::max(rate, 5.0 / (0.25 * (R - r_from) + 1e-300));
    return quad::graded_edges(r_from, R, w_osc, std::max(r_from, R * 1e-9));
}

}  // namespace

double stable_density_axis(const StableParams& p, double x, const QuadratureConfig& q) {
    const double a = p.alpha, t = p.t, ax = std::abs(x);
    const AxisSetup s = axis_setup(p, x, q);
    // [0, kappa0] by series: integrand = cos(kappa x) exp(-t kappa^alpha)
    const double k0 = s.kappa0;
    double head = k0 - t * std::pow(k0, a + 1.0) / (a + 1.0) - ax * ax * k0 * k0 * k0 / 6.0;
    const auto f = [=](double k) { return std::cos(k * ax) * std::exp(-t * std::pow(k, a)); };
    const double body = quad::integrate_panels(f, s.edges, q.abs_tol * pi * 0.5);
    return std::max((head + body) / pi, 0.0);
}

double stable_density_rotated(const StableParams& p, double x, const QuadratureConfig& q) {
    const double a = p.alpha, t = p.t, ax = std::abs(x);
    if (!(a < 2.0) || ax == 0.0)
        throw std::invalid_argument("stable_density_rotated: needs alpha < 2 and x != 0");
    const double phi = rotation_angle(a);
    const cplx eiphi = std::polar(1.0, phi);
    const cplx eiaphi = std::polar(1.0, a * phi);
    const double R = ray_length(a, t, ax, q.abs_tol);
    const double r0 = 1e-12;
    // integrand is 1 - t r^alpha e^{i alpha phi} + O(r) at the origin
    const cplx head = cplx(r0, 0.0) - t * eiaphi * std::pow(r0, a + 1.0) / (a + 1.0);
    const auto f = [=](double r) {
        return std::exp(cplx(0.0, ax * r) * eiphi - t * std::pow(r, a) * eiaphi);
    };
    const cplx body = quad::integrate_panels(f, ray_edges(a, t, ax, r0, R), q.abs_tol * pi * 0.5);
    return std::max((eiphi * (head + body)).real() / pi, 0.0);
}

double stable_cdf_axis(const StableParams& p, double x, const QuadratureConfig& q) {
    const double a = p.alpha, t = p.t;
    const AxisSetup s = axis_setup(p, x, q);
    const double k0 = s.kappa0;
    const double head = x * (k0 - t * std::pow(k0, a + 1.0) / (a + 1.0));
    const auto f = [=](double k) {
        return std::sin(k * x) / k * std::exp(-t * std::pow(k, a));
    };
    const double body = quad::integrate_panels(f, s.edges, q.abs_tol * pi * 0.5);
    return std::clamp(0.5 + (head + body) / pi, 0.0, 1.0);
}

double stable_cdf_rotated(const StableParams& p, double x, const QuadratureConfig& q) {
    const double a = p.alpha, t = p.t, ax = std::abs(x);
    if (!(a < 2.0) || ax == 0.0)
        throw std::invalid_argument("stable_cdf_rotated: needs alpha < 2 and x != 0");
    const double phi = rotation_angle(a);
    const cplx eiphi = std::polar(1.0, phi);
    const cplx eiaphi = std::polar(1.0, a * phi);
    const double R = ray_length(a, t, ax, q.abs_tol);

    cplx total{};
    const double r1 = std::min(1.0, R);
    if (a < 1.0) {
        // u = r^alpha removes the r^{alpha-1} endpoint singularity:
        // integrand du = e^{i ax u^{1/a} e^{i phi}} (1 - e^{-t u e^{i a phi}}) / (a u)
        const double u1 = std::pow(r1, a);
        const auto g = [=](double u) {
            const double r = std::pow(u, 1.0 / a);
            const cplx one_minus = 1.0 - std::exp(-t * u * eiaphi);
            return std::exp(cplx(0.0, ax * r) * eiphi) * one_minus / (a * u);
        };
        // analytic limit at u -> 0 is t e^{i a phi}/a; panels may start at 0
        total += quad::integrate_panels(g, quad::graded_edges(0.0, u1, u1 / 4.0, u1 / 64.0),
                                        q.abs_tol * pi * 0.25);
    } else {
        const auto f0 = [=](double r) {
            if (r == 0.0) return cplx{};
            const cplx one_minus = 1.0 - std::exp(-t * std::pow(r, a) * eiaphi);
            return std::exp(cplx(0.0, ax * r) * eiphi) * one_minus / r;
        };
        total += quad::integrate_panels(f0, quad::graded_edges(0.0, r1, r1 / 4.0, r1 / 64.0),
                                        q.abs_tol * pi * 0.25);
    }
    if (R > r1) {
        const auto f = [=](double r) {
            const cplx one_minus = 1.0 - std::exp(-t * std::pow(r, a) * eiaphi);
            return std::exp(cplx(0.0, ax * r) * eiphi) * one_minus / r;
        };
        total += quad::integrate_panels(f, ray_edges(a, t, ax, r1, R), q.abs_tol * pi * 0.25);
    }
    const double upper = std::clamp(total.imag() / pi, 0.0, 0.5);
    return x > 0.0 ? 1.0 - upper : upper;
}

namespace {

bool prefer_rotated(const StableParams& p, double x, const QuadratureConfig& q, double kmax_hint) {
    if (!(p.alpha < 2.0) || x == 0.0) return false;
    const double est_panels = kmax_hint * std::abs(x) / 5.0;
    (void)q;
    return est_panels > 2500.0;
}

}  // namespace

double stable_density(const StableParams& p, double x, const QuadratureConfig& q) {
    q.validate();
    if (p.alpha == 2.0 && std::abs(x) > 50.0 * std::sqrt(p.t)) return 0.0;  // below 1e-270
    const double kmax = q.kappa_max > 0.0 ? q.kappa_max : auto_kappa_max(p.alpha, p.t, q.abs_tol);
    if (prefer_rotated(p, x, q, kmax)) return stable_density_rotated(p, x, q);
    return stable_density_axis(p, x, q);
}

double stable_cdf(const StableParams& p, double x, const QuadratureConfig& q) {
    q.validate();
    if (x == 0.0) return 0.5;
    if (p.alpha == 2.0 && std::abs(x) > 50.0 * std::sqrt(p.t)) return x > 0.0 ? 1.0 : 0.0;
    const double kmax = q.kappa_max > 0.0 ? q.kappa_max : auto_kappa_max(p.alpha, p.t, q.abs_tol);
    if (prefer_rotated(p, x, q, kmax)) return stable_cdf_rotated(p, x, q);
    return stable_cdf_axis(p, x, q);
}

std::vector<double> density_grid_serial(const StableParams& p, const std::vector<double>& xs,
                                        const QuadratureConfig& q) {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = stable_density(p, xs[i], q);
    return out;
}

std::vector<double> density_grid(const StableParams& p, const std::vector<double>& xs,
                                 const QuadratureConfig& q) {
    std::vector<double> out(xs.size());
    const long long n = static_cast<long long>(xs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < n; ++i) out[i] = stable_density(p, xs[i], q);
    return out;
}

std::vector<double> cdf_grid_serial(const StableParams& p, const std::vector<double>& xs,
                                    const QuadratureConfig& q) {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = stable_cdf(p, xs[i], q);
    return out;
}

std::vector<double> cdf_grid(const StableParams& p, const std::vector<double>& xs,
                             const QuadratureConfig& q) {
    std::vector<double> out(xs.size());
    const long long n = static_cast<long long>(xs.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < n; ++i) out[i] = stable_cdf(p, xs[i], q);
    return out;
}

}  // namespace fracwalk
