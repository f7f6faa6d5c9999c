#include "fracwalk/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracwalk/rng.hpp"
#include "fracwalk/stable.hpp"

namespace fracwalk {

namespace {

constexpr double pi = std::numbers::pi;

}  // namespace

const char* cg_variant_name(CgVariant v) {
    switch (v) {
        case CgVariant::power_ratio: return "power-ratio";
        case CgVariant::shifted_power: return "shifted-power";
        case CgVariant::exact_cauchy: return "exact-cauchy";
    }
    return "?";
}

CgVariant cg_variant_from_name(const std::string& name) {
    if (name == "power-ratio") return CgVariant::power_ratio;
    if (name == "shifted-power") return CgVariant::shifted_power;
    if (name == "exact-cauchy") return CgVariant::exact_cauchy;
    throw std::invalid_argument("unknown variant '" + name +
                                "' (expected power-ratio, shifted-power or exact-cauchy)");
}

CGDensitySpec CGDensitySpec::power_ratio(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::invalid_argument("CGDensitySpec: power-ratio requires alpha in (0, 2)");
    // |eps| = (alpha/2)(2u+1)/(1+u)^2 <= alpha |x|^{-alpha}, u = |x|^alpha
    return {CgVariant::power_ratio, alpha, alpha / 2.0, alpha, alpha / 2.0, alpha};
}

CGDensitySpec CGDensitySpec::shifted_power(double alpha) {
    if (!(alpha > 0.0 && alpha < 2.0))
        throw std::invalid_argument("CGDensitySpec: shifted-power requires alpha in (0, 2)");
    // first-order binomial bound: |eps| <= (alpha/2)(alpha+1)/|x| for |x| >= 1
    return {CgVariant::shifted_power, alpha, alpha / 2.0, 1.0, alpha / 2.0,
            alpha / 2.0 * (alpha + 1.0)};
}

CGDensitySpec CGDensitySpec::exact_cauchy() {
    return {CgVariant::exact_cauchy, 1.0, 1.0 / pi, 2.0, 1.0 / pi, 1.0 / pi};
}

double CGDensitySpec::density(double x) const {
    const double ax = std::abs(x);
    switch (variant) {
        case CgVariant::power_ratio: {
            const double u = std::pow(ax, alpha);
            return alpha * std::pow(ax, alpha - 1.0) / (2.0 * (1.0 + u) * (1.0 + u));
        }
        case CgVariant::shifted_power:
            return alpha / 2.0 * std::pow(1.0 + ax, -(alpha + 1.0));
        case CgVariant::exact_cauchy:
            return 1.0 / (pi * (1.0 + x * x));
    }
    return 0.0;
}

double CGDensitySpec::cdf(double x) const {
    switch (variant) {
        case CgVariant::power_ratio: {
            const double half = 0.5 / (1.0 + std::pow(std::abs(x), alpha));
            return x < 0.0 ? half : 1.0 - half;
        }
        case CgVariant::shifted_power: {
            const double half = 0.5 * std::pow(1.0 + std::abs(x), -alpha);
            return x < 0.0 ? half : 1.0 - half;
        }
        case CgVariant::exact_cauchy:
            return 0.5 + std::atan(x) / pi;
    }
    return 0.0;
}

double cg_inverse_cdf(const CGDensitySpec& spec, double y) {
    if (!(y > 0.0 && y < 1.0))
        throw std::invalid_argument("cg_inverse_cdf: y must lie in the open interval (0, 1)");
    if (spec.variant == CgVariant::exact_cauchy)
        throw std::invalid_argument("cg_inverse_cdf: use sample_cauchy_exact for the Cauchy walk");
    const bool upper = y >= 0.5;
    const double q = upper ? 1.0 - y : y;  // in (0, 1/2]
    double mag;
    if (spec.variant == CgVariant::power_ratio) {
        mag = std::pow(1.0 / (2.0 * q) - 1.0, 1.0 / spec.alpha);
    } else {
        mag = std::pow(2.0 * q, -1.0 / spec.alpha) - 1.0;
    }
    return upper ? mag : -mag;
}

double sample_cauchy_exact(double u) {
    if (!(u > 0.0 && u < 1.0))
        throw std::invalid_argument("sample_cauchy_exact: u must lie in the open interval (0, 1)");
    return std::tan(pi * (u - 0.5));
}

long long sample_step_discrete(const TransitionKernel& kernel, double u) {
    if (!(u >= 0.0 && u < 1.0))
        throw std::invalid_argument("sample_step_discrete: u must lie in [0, 1)");
    // fixed scan order 0, +1, -1, +2, -2, ...; tail mass rides on k = 0
    double cum = kernel.probs[0] + kernel.tail_mass;
    if (u < cum) return 0;
    for (long long k = 1; k <= kernel.radius; ++k) {
        const double pk = kernel.probs[static_cast<std::size_t>(k)];
        cum += pk;
        if (u < cum) return k;
        cum += pk;
        if (u < cum) return -k;
    }
    return -kernel.radius;  // u landed in accumulated rounding slack
}

DiscreteSampler::DiscreteSampler(const TransitionKernel& kernel) {
    cum_.reserve(2 * static_cast<std::size_t>(kernel.radius) + 1);
    double cum = kernel.probs[0] + kernel.tail_mass;
    cum_.push_back(cum);
    for (long long k = 1; k <= kernel.radius; ++k) {
        const double pk = kernel.probs[static_cast<std::size_t>(k)];
        cum += pk;
        cum_.push_back(cum);
        cum += pk;
        cum_.push_back(cum);
    }
}

long long DiscreteSampler::sample(double u) const {
    // first index with u < cum_, identical to the linear scan
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cum_.begin());
    if (idx >= cum_.size()) idx = cum_.size() - 1;
    if (idx == 0) return 0;
    const long long k = static_cast<long long>((idx + 1) / 2);
    return (idx % 2 == 1) ? k : -k;
}

void WalkConfig::validate() const {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("WalkConfig: alpha must lie in (0, 2]");
    if (!(h > 0.0)) throw std::invalid_argument("WalkConfig: h must be positive");
    if (!(t > 0.0)) throw std::invalid_argument("WalkConfig: t must be positive");
    if (num_samples < 1) throw std::invalid_argument("WalkConfig: num_samples must be >= 1");
    if (model == ModelTag::chechkin_gonchar) {
        if (variant == CgVariant::exact_cauchy && alpha != 1.0)
            throw std::invalid_argument("WalkConfig: the exact Cauchy walk requires alpha = 1");
        if (variant != CgVariant::exact_cauchy && !(alpha < 2.0))
            throw std::invalid_argument("WalkConfig: continuous-jump walks require alpha < 2");
    }
}

namespace {

TransitionKernel make_lattice_kernel(const WalkConfig& c) {
    switch (c.model) {
        case ModelTag::grunwald_letnikov:
            return gl_kernel(c.alpha, c.coeff, c.radius);
        case ModelTag::gillis_weiss:
            return c.coeff_name == "mu" ? gw_kernel_mu(c.alpha, c.coeff, c.radius)
                                        : gw_kernel(c.alpha, c.coeff, c.radius);
        case ModelTag::globally_binomial:
            return c.coeff_name == "mu" ? binom_kernel(c.alpha, c.coeff, c.radius)
                                        : binom_kernel_lambda(c.alpha, c.coeff, c.radius);
        default:
            throw std::logic_error("make_lattice_kernel: not a lattice model");
    }
}

}  // namespace

WalkPlan plan_walk(const WalkConfig& config) {
    config.validate();
    double tau;
    if (config.model == ModelTag::chechkin_gonchar) {
        if (config.variant == CgVariant::exact_cauchy) {
            tau = config.h;  // mu = 1, alpha = 1
        } else {
            const CGDensitySpec spec = config.variant == CgVariant::power_ratio
                                           ? CGDensitySpec::power_ratio(config.alpha)
                                           : CGDensitySpec::shifted_power(config.alpha);
            tau = scaling_tau(cg_scaling(config.alpha, spec.b), config.h);
        }
    } else {
        tau = scaling_tau(scaling_for(make_lattice_kernel(config)), config.h);
    }
    long long n = std::llround(config.t / tau);
    if (n < 1) n = 1;
    return {tau, n, static_cast<double>(n) * tau};
}

namespace {

SampleSet run_walks_impl(const WalkConfig& config, bool parallel) {
    const WalkPlan plan = plan_walk(config);
    SampleSet out{config, plan.n, plan.tau, plan.realized_tn, rng_name, {}};
    out.positions.assign(static_cast<std::size_t>(config.num_samples), 0.0);

    const long long N = config.num_samples;
    const long long n = plan.n;
    const double h = config.h;

    if (config.model == ModelTag::chechkin_gonchar) {
        if (config.variant == CgVariant::exact_cauchy) {
#pragma omp parallel for schedule(static) if (parallel)
            for (long long i = 0; i < N; ++i) {
                Xoshiro256pp rng = substream(config.seed, static_cast<std::uint64_t>(i));
                double s = 0.0;
                for (long long m = 0; m < n; ++m) s += std::tan(pi * (rng.uniform_open01() - 0.5));
                out.positions[static_cast<std::size_t>(i)] = h * s;
            }
        } else {
            const CGDensitySpec spec = config.variant == CgVariant::power_ratio
                                           ? CGDensitySpec::power_ratio(config.alpha)
                                           : CGDensitySpec::shifted_power(config.alpha);
#pragma omp parallel for schedule(static) if (parallel)
            for (long long i = 0; i < N; ++i) {
                Xoshiro256pp rng = substream(config.seed, static_cast<std::uint64_t>(i));
                double s = 0.0;
                for (long long m = 0; m < n; ++m) s += cg_inverse_cdf(spec, rng.uniform_open01());
                out.positions[static_cast<std::size_t>(i)] = h * s;
            }
        }
    } else {
        const TransitionKernel kernel = make_lattice_kernel(config);
        const DiscreteSampler sampler(kernel);
#pragma omp parallel for schedule(static) if (parallel)
        for (long long i = 0; i < N; ++i) {
            Xoshiro256pp rng = substream(config.seed, static_cast<std::uint64_t>(i));
            long long s = 0;
            for (long long m = 0; m < n; ++m) s += sampler.sample(rng.uniform01());
            out.positions[static_cast<std::size_t>(i)] = h * static_cast<double>(s);
        }
    }
    return out;
}

}  // namespace

SampleSet run_walks(const WalkConfig& config) { return run_walks_impl(config, true); }

SampleSet run_walks_serial(const WalkConfig& config) { return run_walks_impl(config, false); }

}  // namespace fracwalk
