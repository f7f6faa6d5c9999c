#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracwalk::quad {

// Raised when an integral cannot be resolved within the evaluation budget.
// Distinct from invalid-argument errors so callers can tell "your config is
// wrong" apart from "the integrand defeated the quadrature".
class budget_error : public std::runtime_error {
  public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// 16-point Gauss-Legendre rule on [-1, 1].
inline constexpr std::array<double, 16> gl16_nodes = {
    -0.9894009349916499326,   -0.94457502307323257608, -0.86563120238783174388,
    -0.7554044083550030339,   -0.61787624440264374845, -0.45801677765722738634,
    -0.28160355077925891323,  -0.095012509837637440185, 0.095012509837637440185,
    0.28160355077925891323,   0.45801677765722738634,   0.61787624440264374845,
    0.7554044083550030339,    0.86563120238783174388,   0.94457502307323257608,
    0.9894009349916499326};

inline constexpr std::array<double, 16> gl16_weights = {
    0.027152459411754094852, 0.062253523938647892863, 0.09515851168249278481,
    0.12462897125553387205,  0.14959598881657673208,  0.16915651939500253819,
    0.18260341504492358887,  0.18945061045506849629,  0.18945061045506849629,
    0.18260341504492358887,  0.16915651939500253819,  0.14959598881657673208,
    0.12462897125553387205,  0.09515851168249278481,  0.062253523938647892863,
    0.027152459411754094852};

template <typename F>
auto gl16(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    using R = decltype(f(mid));
    R acc{};
    for (int i = 0; i < 16; ++i) {
        acc += static_cast<R>(gl16_weights[i] * f(mid + half * gl16_nodes[i]));
    }
    return acc * half;
}

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

// Adaptive composite Gauss-Legendre over a list of seed panels.  Each seed
// panel gets an equal share of the absolute tolerance (width-proportional
// shares would starve the geometrically graded micro-panels near endpoint
// singularities) and is bisected until the whole-vs-halves estimate
// stabilizes.  Works for real and complex integrands.
template <typename F>
auto integrate_panels(F&& f, const std::vector<double>& edges, double abs_tol,
                      long max_evals = 4'000'000) {
    using R = decltype(f(0.0));
    if (edges.size() < 2) throw std::invalid_argument("integrate_panels: need at least one panel");
    long evals = 0;

    struct Item {
        double a, b;
        R whole;
        double tol;
        int depth;
    };

    R result{};
    std::vector<Item> stack;
    stack.reserve(64);
    const double share = abs_tol / (2.0 * static_cast<double>(edges.size() - 1));
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double a = edges[i], b = edges[i + 1];
        stack.push_back({a, b, gl16(f, a, b), share, 0});
        evals += 16;
    }
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        const double m = 0.5 * (it.a + it.b);
        const R left = gl16(f, it.a, m);
        const R right = gl16(f, m, it.b);
        evals += 32;
        if (evals > max_evals) throw budget_error("quadrature budget exceeded");
        const double err = magnitude(it.whole - (left + right));
        const double floor = 5e-16 * (1.0 + magnitude(left) + magnitude(right));
        if (err < it.tol || err < floor || it.depth >= 48) {
            result += left + right;
        } else {
            stack.push_back({it.a, m, left, 0.5 * it.tol, it.depth + 1});
            stack.push_back({m, it.b, right, 0.5 * it.tol, it.depth + 1});
        }
    }
    return result;
}

// Panel edges growing geometrically from `a` (ratio 2), with panel width
// additionally capped by `max_width` so oscillatory factors stay resolved.
inline std::vector<double> graded_edges(double a, double b, double max_width,
                                        double first = 0.0) {
    std::vector<double> e;
    e.push_back(a);
    double x = a;
    double step = first > 0.0 ? first : std::max(1e-4 * (b - a), 1e-12);
    while (x < b) {
        step = std::min({step * 2.0, max_width, b - x});
        x += step;
        e.push_back(x);
    }
    e.back() = b;
    return e;
}

}  // namespace fracwalk::quad
