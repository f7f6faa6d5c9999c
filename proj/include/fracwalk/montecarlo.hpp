#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fracwalk/kernels.hpp"

namespace fracwalk {

enum class CgVariant { power_ratio, shifted_power, exact_cauchy };

const char* cg_variant_name(CgVariant v);
CgVariant cg_variant_from_name(const std::string& name);

// Continuous jump density w(x) = (b + eps(|x|)) |x|^{-(alpha+1)} with
// |eps| <= min(K_bound, E_bound |x|^{-gamma}), plus its invertible CDF W.
struct CGDensitySpec {
    CgVariant variant;
    double alpha;
    double b;        // tail constant, alpha/2 for both proposed variants
    double gamma;    // decay exponent of eps
    double K_bound;  // global bound on |eps|
    double E_bound;  // |eps| <= E |x|^{-gamma} for |x| >= 1

    static CGDensitySpec power_ratio(double alpha);    // w unbounded at 0 if alpha < 1
    static CGDensitySpec shifted_power(double alpha);  // bounded; default for alpha < 1
    static CGDensitySpec exact_cauchy();               // alpha = 1, w = Cauchy

    double density(double x) const;  // w(x)
    double cdf(double x) const;      // W(x)
};

// Closed-form inverse of W for the power-ratio and shifted-power variants;
// antisymmetric around y = 1/2.  y outside (0,1) is rejected.
double cg_inverse_cdf(const CGDensitySpec& spec, double y);

// tan(pi (u - 1/2)); u in the open interval (0,1), endpoints rejected.
double sample_cauchy_exact(double u);

// Inversion sampling of a lattice kernel: offsets scanned in the fixed
// order 0, +1, -1, +2, -2, ... with the tail mass on 0.  O(K) scan;
// DiscreteSampler below reproduces it in O(log K).
long long sample_step_discrete(const TransitionKernel& kernel, double u);

class DiscreteSampler {
  public:
    explicit DiscreteSampler(const TransitionKernel& kernel);
    long long sample(double u) const;

  private:
    std::vector<double> cum_;  // cumulative in scan order
};

struct WalkConfig {
    ModelTag model;
    double alpha = 1.0;
    double coeff = 0.0;                           // mu or lambda for lattice models
    std::string coeff_name = "mu";                // which one coeff is
    CgVariant variant = CgVariant::shifted_power; // for chechkin_gonchar
    double h = 0.01;
    double t = 1.0;
    long long num_samples = 1;
    std::uint64_t seed = 0;
    int radius = 0;  // kernel truncation override (0 = default policy)

    void validate() const;
};

struct SampleSet {
    WalkConfig config;
    long long n;         // steps per walk, round(t / tau), at least 1
    double tau;
    double realized_tn;  // n * tau
    std::string generator;  // RNG identity, for reproducibility records
    std::vector<double> positions;
};

// Terminal positions S_n = h sum Y_m for num_samples independent walks.
// Sample i draws from RNG substream(seed, i), so output is bit-identical
// for any thread count.  OpenMP over samples; serial variant is the
// reference implementation.
SampleSet run_walks(const WalkConfig& config);
SampleSet run_walks_serial(const WalkConfig& config);

// The tau/n bookkeeping shared by both variants and by diagnostics.
struct WalkPlan {
    double tau;
    long long n;
    double realized_tn;
};
WalkPlan plan_walk(const WalkConfig& config);

}  // namespace fracwalk
