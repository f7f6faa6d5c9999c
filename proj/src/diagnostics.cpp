#include "fracwalk/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fracwalk/quadrature.hpp"
#include "fracwalk/summation.hpp"

namespace fracwalk {

namespace {

constexpr double pi = std::numbers::pi;

double cauchy_cdf(double x, double t) { return 0.5 + std::atan(x / t) / pi; }
double gauss_cdf(double x, double t) { return 0.5 * std::erfc(-x / (2.0 * std::sqrt(t))); }
double cauchy_pdf(double x, double t) { return t / (pi * (x * x + t * t)); }
double gauss_pdf(double x, double t) {
    return std::exp(-x * x / (4.0 * t)) / (2.0 * std::sqrt(pi * t));
}

TransitionKernel kernel_from_cf_spec(const CfModelSpec& spec) {
    switch (spec.model) {
        case ModelTag::grunwald_letnikov:
            return gl_kernel(spec.alpha, spec.coeff, spec.radius);
        case ModelTag::gillis_weiss:
            return spec.coeff_name == "mu" ? gw_kernel_mu(spec.alpha, spec.coeff, spec.radius)
                                           : gw_kernel(spec.alpha, spec.coeff, spec.radius);
        case ModelTag::globally_binomial:
            return spec.coeff_name == "mu" ? binom_kernel(spec.alpha, spec.coeff, spec.radius)
                                           : binom_kernel_lambda(spec.alpha, spec.coeff, spec.radius);
        default:
            throw std::invalid_argument(
                "cf_convergence: the Chechkin-Gonchar walk has no lattice kernel");
    }
}

}  // namespace

std::vector<double> ConvergenceReport::max_errors() const {
    std::vector<double> out(h_sequence.size(), 0.0);
    for (std::size_t ih = 0; ih < h_sequence.size(); ++ih) {
        double m = 0.0;
        bool any = false;
        for (std::size_t ik = 0; ik < kappa_grid.size(); ++ik) {
            const auto& c = cells[ik][ih];
            if (c.admissible) {
                m = std::max(m, c.error);
                any = true;
            }
        }
        out[ih] = any ? m : std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

bool ConvergenceReport::monotone_decreasing() const {
    const auto m = max_errors();
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        if (!(m[i + 1] < m[i])) return false;
    }
    return true;
}

ConvergenceReport cf_convergence(const CfModelSpec& spec, const std::vector<double>& kappa_grid,
                                 const std::vector<double>& h_sequence, double t) {
    if (kappa_grid.empty() || h_sequence.empty())
        throw std::invalid_argument("cf_convergence: empty grids");
    for (std::size_t i = 0; i + 1 < h_sequence.size(); ++i) {
        if (!(h_sequence[i + 1] < h_sequence[i]))
            throw std::invalid_argument("cf_convergence: h_sequence must be strictly decreasing");
    }
    if (!(t > 0.0)) throw std::invalid_argument("cf_convergence: t must be positive");

    ConvergenceReport rep;
    rep.model = spec.model;
    rep.alpha = spec.alpha;
    rep.t = t;
    rep.kappa_grid = kappa_grid;
    rep.h_sequence = h_sequence;
    rep.cells.assign(kappa_grid.size(), std::vector<ConvergenceCell>(h_sequence.size()));

    const long long nh = static_cast<long long>(h_sequence.size());
#pragma omp parallel for schedule(dynamic)
    for (long long ih = 0; ih < nh; ++ih) {
        const double h = h_sequence[static_cast<std::size_t>(ih)];
        try {
            const TransitionKernel kernel = kernel_from_cf_spec(spec);
            ScalingLaw law = scaling_for(kernel);
            if (spec.gw2_naive_scaling) {
                if (!(spec.model == ModelTag::gillis_weiss && spec.alpha == 2.0))
                    throw std::invalid_argument(
                        "cf_convergence: naive scaling control only applies to Gillis-Weiss at alpha = 2");
                law = {law.model, law.alpha, kernel.lambda_value(), ScalingForm::power_law};
            }
            const double tau = scaling_tau(law, h);
            const long long n = std::llround(t / tau);
            if (n < 1) {
                for (std::size_t ik = 0; ik < kappa_grid.size(); ++ik) {
                    auto& c = rep.cells[ik][static_cast<std::size_t>(ih)];
                    c.admissible = false;
                    c.note = "tau exceeds t (n < 1)";
                }
                continue;
            }
            const double tn = static_cast<double>(n) * tau;
            for (std::size_t ik = 0; ik < kappa_grid.size(); ++ik) {
                const double kappa = kappa_grid[ik];
                const double yhat = walk_char_fn(kernel, h, n, kappa);
                const double target = std::exp(-tn * std::pow(std::abs(kappa), spec.alpha));
                auto& c = rep.cells[ik][static_cast<std::size_t>(ih)];
                c.admissible = true;
                c.error = std::abs(yhat - target);
                c.n = n;
                c.realized_tn = tn;
            }
        } catch (const std::exception& e) {
            for (std::size_t ik = 0; ik < kappa_grid.size(); ++ik) {
                auto& c = rep.cells[ik][static_cast<std::size_t>(ih)];
                c.admissible = false;
                c.note = e.what();
            }
        }
    }

    rep.observed_rates.assign(kappa_grid.size(), 0.0);
    for (std::size_t ik = 0; ik < kappa_grid.size(); ++ik) {
        std::vector<double> hs, errs;
        for (std::size_t ih = 0; ih < h_sequence.size(); ++ih) {
            const auto& c = rep.cells[ik][ih];
            if (c.admissible && c.error > 0.0) {
                hs.push_back(h_sequence[ih]);
                errs.push_back(c.error);
            }
        }
        rep.observed_rates[ik] = hs.size() >= 2 ? fit_decay_rate(hs, errs) : 0.0;
    }
    return rep;
}

double fit_decay_rate(const std::vector<double>& hs, const std::vector<double>& errs, int levels) {
    if (hs.size() != errs.size() || hs.size() < 2)
        throw std::invalid_argument("fit_decay_rate: need matching vectors with >= 2 points");
    const std::size_t use = std::min<std::size_t>(static_cast<std::size_t>(levels), hs.size());
    const std::size_t from = hs.size() - use;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = from; i < hs.size(); ++i) {
        const double x = std::log(hs[i]);
        const double y = std::log(errs[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(use);
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

StableCdfCache::StableCdfCache(const StableParams& target, int nodes)
    : params_(target), scale_(std::pow(target.t, 1.0 / target.alpha)) {
    if (nodes < 33) throw std::invalid_argument("StableCdfCache: nodes must be >= 33");
    u_max_ = 0.99 * pi / 2.0;  // |x| <= scale * tan(u_max) interpolated, beyond: direct
    us_.resize(static_cast<std::size_t>(nodes));
    std::vector<double> xs(us_.size());
    for (std::size_t i = 0; i < us_.size(); ++i) {
        us_[i] = -u_max_ + 2.0 * u_max_ * static_cast<double>(i) / (nodes - 1);
        xs[i] = scale_ * std::tan(us_[i]);
    }
    cdf_ = cdf_grid(params_, xs);
    // enforce monotonicity against quadrature noise at the 1e-10 level
    for (std::size_t i = 1; i < cdf_.size(); ++i) cdf_[i] = std::max(cdf_[i], cdf_[i - 1]);

    // midpoint check on a stride, reported as the interpolation error bound
    double worst = 0.0;
    for (std::size_t i = 8; i + 8 < us_.size(); i += 64) {
        const double um = 0.5 * (us_[i] + us_[i + 1]);
        const double exact = stable_cdf(params_, scale_ * std::tan(um));
        const double interp = 0.5 * (cdf_[i] + cdf_[i + 1]);
        worst = std::max(worst, std::abs(exact - interp));
    }
    interp_error_ = worst;
}

double StableCdfCache::operator()(double x) const {
    const double u = std::atan(x / scale_);
    if (u <= -u_max_ || u >= u_max_) return stable_cdf(params_, x);
    const double pos = (u + u_max_) / (2.0 * u_max_) * static_cast<double>(us_.size() - 1);
    const std::size_t i = std::min(static_cast<std::size_t>(pos), us_.size() - 2);
    const double w = pos - static_cast<double>(i);
    return (1.0 - w) * cdf_[i] + w * cdf_[i + 1];
}

double ks_statistic(const SampleSet& samples, const StableParams& target) {
    if (samples.positions.empty()) throw std::invalid_argument("ks_statistic: empty sample set");
    if (std::abs(target.t - samples.realized_tn) > 1e-9 * std::max(1.0, target.t))
        throw std::invalid_argument(
            "ks_statistic: target t must equal the realized t_n of the samples");

    std::vector<double> x = samples.positions;
    std::sort(x.begin(), x.end());
    const double N = static_cast<double>(x.size());

    std::vector<double> g(x.size());
    if (target.alpha == 1.0) {
        for (std::size_t i = 0; i < x.size(); ++i) g[i] = cauchy_cdf(x[i], target.t);
    } else if (target.alpha == 2.0) {
        for (std::size_t i = 0; i < x.size(); ++i) g[i] = gauss_cdf(x[i], target.t);
    } else if (x.size() > 10'000) {
        const StableCdfCache cache(target);
        for (std::size_t i = 0; i < x.size(); ++i) g[i] = cache(x[i]);
    } else {
        for (std::size_t i = 0; i < x.size(); ++i) g[i] = stable_cdf(target, x[i]);
    }

    // sup over the step function needs both one-sided limits at each jump
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double hi = (static_cast<double>(i) + 1.0) / N - g[i];
        const double lo = g[i] - static_cast<double>(i) / N;
        d = std::max({d, hi, lo});
    }
    return d;
}

std::pair<double, double> lattice_error(const LatticeState& state, const StableParams& target) {
    if (!(state.n > 0)) throw std::invalid_argument("lattice_error: state has not evolved (t_n = 0)");
    if (std::abs(target.t - state.t()) > 1e-9 * std::max(1.0, target.t))
        throw std::invalid_argument("lattice_error: target t must equal the state's realized t_n");

    const double h = state.h;
    const double t = target.t;
    const double a = target.alpha;
    const long long size = state.window.size();

    std::vector<double> cell(static_cast<std::size_t>(size)), dens(static_cast<std::size_t>(size));
    if (a == 1.0) {
        for (long long i = 0; i < size; ++i) {
            const double x = state.x_of(state.window.jmin + i);
            cell[static_cast<std::size_t>(i)] =
                cauchy_cdf(x + h / 2.0, t) - cauchy_cdf(x - h / 2.0, t);
            dens[static_cast<std::size_t>(i)] = cauchy_pdf(x, t);
        }
    } else if (a == 2.0) {
        for (long long i = 0; i < size; ++i) {
            const double x = state.x_of(state.window.jmin + i);
            cell[static_cast<std::size_t>(i)] =
                gauss_cdf(x + h / 2.0, t) - gauss_cdf(x - h / 2.0, t);
            dens[static_cast<std::size_t>(i)] = gauss_pdf(x, t);
        }
    } else {
#pragma omp parallel for schedule(dynamic, 32)
        for (long long i = 0; i < size; ++i) {
            const double x = state.x_of(state.window.jmin + i);
            cell[static_cast<std::size_t>(i)] =
                stable_cdf(target, x + h / 2.0) - stable_cdf(target, x - h / 2.0);
            dens[static_cast<std::size_t>(i)] = stable_density(target, x);
        }
    }

    KahanSum l1;
    double linf = 0.0;
    for (long long i = 0; i < size; ++i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        l1.add(std::abs(state.values[ii] - cell[ii]));
        linf = std::max(linf, std::abs(state.values[ii] / h - dens[ii]));
    }
    return {l1.value(), linf};
}

double rho_integral(double alpha, double nu) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("rho_integral: alpha must lie in (0, 2]");
    if (nu < 0.0) throw std::invalid_argument("rho_integral: nu must be >= 0");
    if (alpha == 2.0 && nu == 0.0)
        throw std::domain_error("rho_integral: divergent at alpha = 2, nu = 0");

    constexpr double tol = 1e-8;
    // [0,1]: u = w^alpha absorbs the w^{alpha-1} factor exactly
    const auto inner = [=](double u) {
        const double w = std::pow(u, 1.0 / alpha);
        return std::exp(-nu * w) / (alpha * (w * w + 1.0));
    };
    const double head =
        quad::integrate_panels(inner, quad::graded_edges(0.0, 1.0, 0.25, 1.0 / 64.0), tol / 2.0);

    const auto outer = [=](double w) {
        return std::pow(w, alpha - 1.0) * std::exp(-nu * w) / (w * w + 1.0);
    };
    double body, tail = 0.0;
    if (nu > 0.0) {
        const double W = std::max(50.0, 50.0 / nu);
        body = quad::integrate_panels(outer, quad::graded_edges(1.0, W, W, 0.25), tol / 2.0);
    } else {
        const double W = 100.0;
        body = quad::integrate_panels(outer, quad::graded_edges(1.0, W, W, 0.25), tol / 2.0);
        // algebraic remainder: 1/(w^2+1) = sum (-1)^j w^{-2-2j}
        for (int j = 0; j < 4; ++j) {
            const double e = 2.0 + 2.0 * j - alpha;
            tail += (j % 2 == 0 ? 1.0 : -1.0) * std::pow(W, -e) / e;
        }
    }
    return head + body + tail;
}

AppendixReport appendix_limits_check(const std::vector<double>& alpha_grid,
                                     const std::vector<double>& nu_sequence, double gw_lambda) {
    if (alpha_grid.empty() || nu_sequence.empty())
        throw std::invalid_argument("appendix_limits_check: empty grids");
    for (std::size_t i = 0; i + 1 < nu_sequence.size(); ++i) {
        if (!(nu_sequence[i + 1] < nu_sequence[i]))
            throw std::invalid_argument("appendix_limits_check: nu_sequence must decrease");
    }
    AppendixReport rep;
    rep.lambda = gw_lambda;
    for (double a : alpha_grid) {
        TransitionKernel kernel{ModelTag::gillis_weiss, a, 0.0, "lambda", 0, {}, 0.0};
        bool have_kernel = false;
        if (a < 2.0) {
            kernel = gw_kernel(a, gw_lambda);
            have_kernel = true;
        }
        for (double nu : nu_sequence) {
            AppendixRow row{};
            row.alpha = a;
            row.nu = nu;
            row.rho = rho_integral(a, nu);
            if (a == 2.0) {
                row.rho_ratio = row.rho / std::log(1.0 / nu);
            } else {
                row.rho_ratio = row.rho * 2.0 * std::sin(a * pi / 2.0) / pi;
            }
            if (have_kernel) {
                const double c_alpha = pi / (std::tgamma(a + 1.0) * std::sin(a * pi / 2.0));
                const double one_minus_p = 1.0 - gen_fn(kernel, nu);
                row.gw_ratio = one_minus_p / (gw_lambda * c_alpha * std::pow(nu, a));
            }
            rep.rows.push_back(row);
        }
    }
    return rep;
}

}  // namespace fracwalk
