#include "fracwalk/kernels.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "fracwalk/stable.hpp"
#include "fracwalk/summation.hpp"

namespace fracwalk {

namespace {

constexpr double pi = std::numbers::pi;
using cplx = std::complex<double>;

constexpr int radius_cap = 1 << 20;
constexpr double gl_binom_tail_target = 1e-8;
constexpr double gw_tail_target = 1e-6;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void check_alpha_range(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument(std::string(who) + ": alpha must lie in (0, 2]");
}

void check_coeff_bound(double coeff, double bound, const char* who, const char* name) {
    if (!(coeff > 0.0))
        throw std::invalid_argument(std::string(who) + ": " + name + " must be positive");
    if (coeff > bound)
        throw std::invalid_argument(std::string(who) + ": " + name + " = " + fmt(coeff) +
                                    " violates the admissibility bound " + fmt(bound));
}

// Atoms that are analytically zero at the admissibility boundary may round
// to tiny negatives; clamp those, treat anything worse as a logic error.
double clamp_atom(double p) {
    if (p >= 0.0) return p;
    if (p > -1e-12) return 0.0;
    throw std::logic_error("kernel construction produced a negative probability");
}

int resolve_radius(int radius, const char* who) {
    if (radius < 0) throw std::invalid_argument(std::string(who) + ": radius must be >= 0");
    if (radius > 0 && radius < 1)
        throw std::invalid_argument(std::string(who) + ": radius must be >= 1");
    return radius;
}

}  // namespace

const char* model_name(ModelTag m) {
    switch (m) {
        case ModelTag::grunwald_letnikov: return "gl";
        case ModelTag::gillis_weiss: return "gw";
        case ModelTag::globally_binomial: return "binom";
        case ModelTag::chechkin_gonchar: return "cg";
    }
    return "?";
}

ModelTag model_from_name(const std::string& name) {
    if (name == "gl") return ModelTag::grunwald_letnikov;
    if (name == "gw") return ModelTag::gillis_weiss;
    if (name == "binom") return ModelTag::globally_binomial;
    if (name == "cg") return ModelTag::chechkin_gonchar;
    throw std::invalid_argument("unknown model '" + name + "' (expected gl, gw, binom or cg)");
}

double gl_mu_bound(double alpha) {
    check_alpha_range(alpha, "gl_mu_bound");
    if (alpha == 1.0)
        throw std::invalid_argument("gl_mu_bound: alpha = 1 is singular for the Grunwald-Letnikov walk");
    const double c = std::cos(alpha * pi / 2.0);
    return alpha < 1.0 ? c : std::abs(c) / alpha;
}

double gw_lambda_bound(double alpha) {
    check_alpha_range(alpha, "gw_lambda_bound");
    return 1.0 / (2.0 * riemann_zeta(alpha + 1.0));
}

double gw_mu_bound(double alpha) {
    check_alpha_range(alpha, "gw_mu_bound");
    if (alpha == 2.0)
        throw std::invalid_argument("gw_mu_bound: the mu parameterization degenerates at alpha = 2 (b(2) = 0)");
    return 1.0 / (2.0 * b_coeff(alpha) * riemann_zeta(alpha + 1.0));
}

double binom_mu_bound(double alpha) {
    check_alpha_range(alpha, "binom_mu_bound");
    return c_coeff(alpha) / 2.0;
}

double TransitionKernel::mu_value() const {
    switch (model) {
        case ModelTag::grunwald_letnikov: return coeff;
        case ModelTag::gillis_weiss:
            if (coeff_name == "mu") return coeff;
            if (alpha == 2.0)
                throw std::domain_error("TransitionKernel: no mu form for Gillis-Weiss at alpha = 2");
            return coeff / b_coeff(alpha);
        case ModelTag::globally_binomial:
            return coeff_name == "mu" ? coeff : c_coeff(alpha) * coeff;
        default:
            throw std::domain_error("TransitionKernel: model carries no lattice coefficient");
    }
}

double TransitionKernel::lambda_value() const {
    switch (model) {
        case ModelTag::gillis_weiss:
            return coeff_name == "lambda" ? coeff : coeff * b_coeff(alpha);
        case ModelTag::globally_binomial:
            return coeff_name == "lambda" ? coeff : coeff / c_coeff(alpha);
        default:
            throw std::domain_error("TransitionKernel: model has no lambda parameterization");
    }
}

TransitionKernel gl_kernel(double alpha, double mu, int radius) {
    check_alpha_range(alpha, "gl_kernel");
    if (alpha == 1.0)
        throw std::invalid_argument("gl_kernel: alpha = 1 is singular for the Grunwald-Letnikov walk");
    check_coeff_bound(mu, gl_mu_bound(alpha), "gl_kernel", "mu");
    radius = resolve_radius(radius, "gl_kernel");

    const double c = std::cos(alpha * pi / 2.0);
    const double cfac = mu / (2.0 * c);
    const bool case_a = alpha < 1.0;

    TransitionKernel k{ModelTag::grunwald_letnikov, alpha, mu, "mu", 0, {}, 0.0};
    k.probs.reserve(radius > 0 ? radius + 1 : 1024);
    k.probs.push_back(clamp_atom(case_a ? 1.0 - mu / c : 1.0 + mu * alpha / c));

    KahanSum sum;
    sum.add(k.probs[0]);
    // signed binomial term carried by recurrence; positive for admissible mu
    double term = 0.0;
    const int cap = radius > 0 ? radius : radius_cap;
    int K = 0;
    double tail = 1.0;
    for (int kk = 1; kk <= cap; ++kk) {
        double p;
        if (case_a) {
            // p_k = (-1)^{k+1} cfac C(alpha, k)
            if (kk == 1) {
                term = alpha;
            } else {
                term *= (static_cast<double>(kk - 1) - alpha) / static_cast<double>(kk);
            }
            p = cfac * term;
        } else {
            if (kk == 1) {
                term = alpha * (alpha - 1.0) / 2.0;  // C(alpha, 2)
                p = -cfac * (1.0 + term);
            } else {
                // u_k = (-1)^k C(alpha, k+1)
                if (kk == 2) {
                    term = alpha * (alpha - 1.0) * (alpha - 2.0) / 6.0;  // C(alpha,3), u_2 = +C
                } else {
                    term *= (static_cast<double>(kk) - alpha) / static_cast<double>(kk + 1);
                }
                p = cfac * term;
            }
        }
        p = clamp_atom(p);
        k.probs.push_back(p);
        sum.add(2.0 * p);
        K = kk;
        tail = 1.0 - sum.value();
        if (radius == 0 && tail <= gl_binom_tail_target && kk >= 8) break;
    }
    k.radius = K;
    k.tail_mass = std::max(tail, 0.0);
    return k;
}

TransitionKernel gw_kernel(double alpha, double lambda, int radius) {
    check_alpha_range(alpha, "gw_kernel");
    check_coeff_bound(lambda, gw_lambda_bound(alpha), "gw_kernel", "lambda");
    radius = resolve_radius(radius, "gw_kernel");

    const double s = alpha + 1.0;
    const double zs = riemann_zeta(s);

    TransitionKernel k{ModelTag::gillis_weiss, alpha, lambda, "lambda", 0, {}, 0.0};
    k.probs.reserve(radius > 0 ? radius + 1 : 1024);
    k.probs.push_back(clamp_atom(1.0 - 2.0 * lambda * zs));

    KahanSum partial;  // sum_{k<=K} k^{-s}
    const int cap = radius > 0 ? radius : radius_cap;
    int K = 0;
    for (int kk = 1; kk <= cap; ++kk) {
        const double ks = std::pow(static_cast<double>(kk), -s);
        k.probs.push_back(lambda * ks);
        partial.add(ks);
        K = kk;
        if (radius == 0 && 2.0 * lambda * (zs - partial.value()) <= gw_tail_target && kk >= 8) break;
    }
    k.radius = K;
    k.tail_mass = std::max(2.0 * lambda * (zs - partial.value()), 0.0);
    return k;
}

TransitionKernel gw_kernel_mu(double alpha, double mu, int radius) {
    check_alpha_range(alpha, "gw_kernel_mu");
    if (alpha == 2.0)
        throw std::invalid_argument("gw_kernel_mu: the mu form is rejected at alpha = 2 (b(2) = 0)");
    check_coeff_bound(mu, gw_mu_bound(alpha), "gw_kernel_mu", "mu");
    TransitionKernel k = gw_kernel(alpha, mu * b_coeff(alpha), radius);
    k.coeff = mu;
    k.coeff_name = "mu";
    return k;
}

TransitionKernel binom_kernel_lambda(double alpha, double lambda, int radius) {
    check_alpha_range(alpha, "binom_kernel_lambda");
    check_coeff_bound(lambda, binom_lambda_bound, "binom_kernel_lambda", "lambda");
    radius = resolve_radius(radius, "binom_kernel_lambda");

    TransitionKernel k{ModelTag::globally_binomial, alpha, lambda, "lambda", 0, {}, 0.0};
    k.probs.reserve(radius > 0 ? radius + 1 : 1024);
    k.probs.push_back(clamp_atom(1.0 - 2.0 * lambda));

    KahanSum sum;
    sum.add(k.probs[0]);
    const int cap = radius > 0 ? radius : radius_cap;
    int K = 0;
    double tail = 1.0;
    double term = 0.0;  // (-1)^{k+1} C(alpha, k+1) / (alpha - 1), positive
    for (int kk = 1; kk <= cap; ++kk) {
        double p;
        if (alpha == 1.0) {
            p = lambda / (static_cast<double>(kk) * (kk + 1.0));
        } else {
            if (kk == 1) {
                term = alpha / 2.0;  // C(alpha,2)/(alpha-1)
            } else {
                term *= (static_cast<double>(kk) - alpha) / static_cast<double>(kk + 1);
            }
            p = lambda * term;
        }
        p = clamp_atom(p);
        k.probs.push_back(p);
        sum.add(2.0 * p);
        K = kk;
        tail = 1.0 - sum.value();
        if (radius == 0 && tail <= gl_binom_tail_target && kk >= 8) break;
    }
    k.radius = K;
    k.tail_mass = std::max(tail, 0.0);
    return k;
}

TransitionKernel binom_kernel(double alpha, double mu, int radius) {
    check_alpha_range(alpha, "binom_kernel");
    check_coeff_bound(mu, binom_mu_bound(alpha), "binom_kernel", "mu");
    TransitionKernel k = binom_kernel_lambda(alpha, mu / c_coeff(alpha), radius);
    k.coeff = mu;
    k.coeff_name = "mu";
    return k;
}

ScalingLaw scaling_for(const TransitionKernel& kernel) {
    if (kernel.model == ModelTag::gillis_weiss && kernel.alpha == 2.0)
        return {kernel.model, kernel.alpha, kernel.lambda_value(), ScalingForm::log_corrected};
    return {kernel.model, kernel.alpha, kernel.mu_value(), ScalingForm::power_law};
}

ScalingLaw cg_scaling(double alpha, double b) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::invalid_argument("cg_scaling: alpha must lie in (0, 2)");
    if (!(b > 0.0)) throw std::invalid_argument("cg_scaling: b must be positive");
    const double mu = b * pi / (std::tgamma(alpha + 1.0) * std::sin(alpha * pi / 2.0));
    return {ModelTag::chechkin_gonchar, alpha, mu, ScalingForm::power_law};
}

double scaling_tau(const ScalingLaw& law, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("scaling_tau: h must be positive");
    if (law.form == ScalingForm::log_corrected) {
        if (!(h < 1.0))
            throw std::invalid_argument("scaling_tau: the log-corrected law requires 0 < h < 1");
        return law.coeff * h * h * std::log(1.0 / h);
    }
    return law.coeff * std::pow(h, law.alpha);
}

double gen_fn(const TransitionKernel& kernel, double phase) {
    // truncated cosine series; tail mass intentionally contributes nothing,
    // so the result differs from the exact p~ by at most tail_mass
    KahanSum sum;
    double cm1 = 1.0;                 // cos(0)
    double c = std::cos(phase);      // cos(phase)
    const double twoc = 2.0 * c;
    const int K = kernel.radius;
    for (int k = 1; k <= K; ++k) {
        if (k % 4096 == 0) {  // contain recurrence drift over ~10^6 terms
            cm1 = std::cos((k - 1) * phase);
            c = std::cos(static_cast<double>(k) * phase);
        }
        sum.add(kernel.probs[static_cast<std::size_t>(k)] * c);
        const double cn = twoc * c - cm1;
        cm1 = c;
        c = cn;
    }
    return kernel.probs[0] + 2.0 * sum.value();
}

namespace {

double require_real(const cplx& v, const char* who) {
    if (std::abs(v.imag()) > 1e-12)
        throw std::logic_error(std::string(who) + ": imaginary residue above 1e-12");
    return v.real();
}

}  // namespace

double gen_fn_closed(const TransitionKernel& kernel, double phase) {
    if (phase == 0.0) return 1.0;
    const double a = kernel.alpha;
    const cplx z = std::polar(1.0, phase);
    const cplx zi = std::polar(1.0, -phase);
    switch (kernel.model) {
        case ModelTag::grunwald_letnikov: {
            const double mu = kernel.mu_value();
            const double c = std::cos(a * pi / 2.0);
            const cplx w1 = std::pow(1.0 - z, a);
            const cplx w2 = std::pow(1.0 - zi, a);
            const cplx v = a < 1.0 ? 1.0 - mu / (2.0 * c) * (w1 + w2)
                                   : 1.0 - mu / (2.0 * c) * (zi * w1 + z * w2);
            return require_real(v, "gen_fn_closed(gl)");
        }
        case ModelTag::globally_binomial: {
            const double lam = kernel.lambda_value();
            if (a == 1.0) {
                const cplx v = 1.0 - lam * ((1.0 - zi) * std::log(1.0 - z) +
                                            (1.0 - z) * std::log(1.0 - zi));
                return require_real(v, "gen_fn_closed(binom,alpha=1)");
            }
            const auto q = [&](const cplx& w, const cplx& winv) {
                return (1.0 - winv) * (std::pow(1.0 - w, a - 1.0) - 1.0) / (a - 1.0);
            };
            const cplx v = 1.0 - lam * (q(z, zi) + q(zi, z));
            return require_real(v, "gen_fn_closed(binom)");
        }
        default:
            throw std::invalid_argument("gen_fn_closed: no closed form for this model");
    }
}

std::vector<double> gen_fn_sweep_serial(const TransitionKernel& kernel,
                                        const std::vector<double>& phases) {
    std::vector<double> out(phases.size());
    for (std::size_t i = 0; i < phases.size(); ++i) out[i] = gen_fn(kernel, phases[i]);
    return out;
}

std::vector<double> gen_fn_sweep(const TransitionKernel& kernel,
                                 const std::vector<double>& phases) {
    std::vector<double> out(phases.size());
    const long long n = static_cast<long long>(phases.size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) out[i] = gen_fn(kernel, phases[i]);
    return out;
}

double ipow(double base, long long n) {
    if (n < 0) throw std::invalid_argument("ipow: n must be >= 0");
    double acc = 1.0;
    double b = base;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

double walk_char_fn(const TransitionKernel& kernel, double h, long long n, double kappa) {
    if (!(h > 0.0)) throw std::invalid_argument("walk_char_fn: h must be positive");
    if (n < 0) throw std::invalid_argument("walk_char_fn: n must be >= 0");
    return ipow(gen_fn(kernel, kappa * h), n);
}

}  // namespace fracwalk
