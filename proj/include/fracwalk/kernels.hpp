#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fracwalk {

enum class ModelTag {
    grunwald_letnikov,
    gillis_weiss,
    globally_binomial,
    chechkin_gonchar,  // continuous jumps; carries no lattice kernel
};

const char* model_name(ModelTag m);
ModelTag model_from_name(const std::string& name);

// Symmetric lattice jump law {p_k}, stored as the nonnegative half
// p_0..p_K (p_{-k} = p_k by construction).  p_0 comes from the exact
// infinite-sum normalization, so 1 - sum of stored atoms is precisely the
// truncated tail, recorded in tail_mass.
struct TransitionKernel {
    ModelTag model;
    double alpha;
    double coeff;            // value of mu or lambda, see coeff_name
    std::string coeff_name;  // "mu" or "lambda"
    int radius;              // truncation K
    std::vector<double> probs;  // probs[k] = p_k for 0 <= k <= radius
    double tail_mass;           // 1 - sum_{|k|<=K} p_k  (>= 0)

    double prob(long long k) const {
        const long long a = k < 0 ? -k : k;
        return a <= radius ? probs[static_cast<std::size_t>(a)] : 0.0;
    }
    // Lazy-walker convention: the truncated tail sits on k = 0 for
    // evolution and sampling, preserving exact normalization.
    double evolution_prob(long long k) const {
        return prob(k) + (k == 0 ? tail_mass : 0.0);
    }

    double mu_value() const;      // throws for Gillis-Weiss at alpha = 2
    double lambda_value() const;  // throws for Grunwald-Letnikov (no lambda form)
};

// Admissibility bounds, exposed so error messages and tests can refer to
// the same values the constructors enforce.
double gl_mu_bound(double alpha);     // (4.8)/(4.9); alpha = 1 rejected
double gw_lambda_bound(double alpha); // 1/(2 zeta(alpha+1))
double gw_mu_bound(double alpha);     // 1/(2 b(alpha) zeta(alpha+1)); alpha < 2
double binom_mu_bound(double alpha);  // c(alpha)/2 in all three cases
inline constexpr double binom_lambda_bound = 0.5;

// radius = 0 selects the default truncation: smallest K with the estimated
// tail below 1e-8 (GL, binomial) or 1e-6 (GW), capped at 2^20.  The achieved
// tail_mass is recorded on the kernel either way.
TransitionKernel gl_kernel(double alpha, double mu, int radius = 0);
TransitionKernel gw_kernel(double alpha, double lambda, int radius = 0);
TransitionKernel gw_kernel_mu(double alpha, double mu, int radius = 0);
TransitionKernel binom_kernel(double alpha, double mu, int radius = 0);
TransitionKernel binom_kernel_lambda(double alpha, double lambda, int radius = 0);

enum class ScalingForm { power_law, log_corrected };

// tau = sigma(h) coupling.  log_corrected (tau = lambda h^2 log(1/h)) only
// for Gillis-Weiss at alpha = 2; everything else is tau = mu h^alpha.
struct ScalingLaw {
    ModelTag model;
    double alpha;
    double coeff;
    ScalingForm form;
};

ScalingLaw scaling_for(const TransitionKernel& kernel);
ScalingLaw cg_scaling(double alpha, double b);  // mu = b pi / (Gamma(alpha+1) sin(alpha pi/2))
double scaling_tau(const ScalingLaw& law, double h);

// Truncated-series generating function p~(e^{i phase}), real by symmetry.
// Convention: the raw stored sum; the truncated tail contributes nothing,
// so |gen_fn - exact p~| <= tail_mass and gen_fn(kernel, 0) = 1 - tail_mass.
double gen_fn(const TransitionKernel& kernel, double phase);

// Closed-form generating function; available for Grunwald-Letnikov and the
// globally binomial walk (complex arithmetic internally, asserts the
// imaginary residue is below 1e-12).  Throws for other models.
double gen_fn_closed(const TransitionKernel& kernel, double phase);

// Phase sweep (OpenMP over phases) and its serial reference.
std::vector<double> gen_fn_sweep(const TransitionKernel& kernel, const std::vector<double>& phases);
std::vector<double> gen_fn_sweep_serial(const TransitionKernel& kernel,
                                        const std::vector<double>& phases);

// n-step walk characteristic function (p~(e^{i kappa h}))^n.
double walk_char_fn(const TransitionKernel& kernel, double h, long long n, double kappa);

// Integer power by squaring (p~ may be negative; n >= 0).
double ipow(double base, long long n);

}  // namespace fracwalk
