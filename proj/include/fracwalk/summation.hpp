#pragma once

#include <cmath>

namespace fracwalk {

// Neumaier compensated summation; keeps long probability sums at O(eps)
// error instead of O(n eps).
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

}  // namespace fracwalk
