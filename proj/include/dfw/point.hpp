#pragma once

#include <cmath>
#include <vector>

#include "dfw/errors.hpp"

namespace dfw {

using Point = std::vector<double>;

/// Euclidean distance, optionally with per-axis positive weights eta_j:
/// r = sqrt(sum_j eta_j (x_j - c_j)^2). Isotropic mode is the all-ones case.
struct DistanceMetric {
    enum class Mode { Isotropic, Anisotropic };
    Mode mode = Mode::Isotropic;
    std::vector<double> weights;  // anisotropic only, length = spatial dimension

    static DistanceMetric isotropic() { return DistanceMetric{}; }
    static DistanceMetric anisotropic(std::vector<double> w) {
        for (double v : w)
            if (!(v > 0.0)) throw DomainError("anisotropic weights must be positive");
        return DistanceMetric{Mode::Anisotropic, std::move(w)};
    }

    bool operator==(const DistanceMetric&) const = default;
};

inline double distance(const DistanceMetric& metric, const Point& x, const Point& c) {
    if (x.size() != c.size())
        throw NumericalError("distance: point dimension mismatch");
    if (metric.mode == DistanceMetric::Mode::Anisotropic && metric.weights.size() != x.size())
        throw NumericalError("distance: metric weight dimension mismatch");
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const double d = x[j] - c[j];
        const double w = metric.mode == DistanceMetric::Mode::Anisotropic ? metric.weights[j] : 1.0;
        s += w * d * d;
    }
    return std::sqrt(s);
}

}  // namespace dfw
