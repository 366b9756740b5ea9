#pragma once

#include <cmath>

#include "orbita/errors.hpp"

namespace orbita {

/// Orbit label p1 > p2 > p3 with the derived symmetric functions that appear
/// throughout the orbit geometry.
struct WeightVector {
    double p1, p2, p3;

    WeightVector(double a, double b, double c) : p1(a), p2(b), p3(c) {
        if (!(p1 > p2 && p2 > p3))
            throw DegenerateOrbit("WeightVector: weights must be strictly ordered");
    }

    double lambda() const { return p1 - p2; }
    double mu() const { return p2 - p3; }
    double l_max() const { return p1 - p3; }

    double weight(int i) const { return i == 0 ? p1 : (i == 1 ? p2 : p3); }

    double s1() const { return p1 + p2 + p3; }
    double s2() const { return p1 * p1 + p2 * p2 + p3 * p3; }
    double s3() const { return p1 * p1 * p1 + p2 * p2 * p2 + p3 * p3 * p3; }
    double s11() const { return p1 * p2 + p2 * p3 + p1 * p3; }
    double s111() const { return p1 * p2 * p3; }
    double sb111() const { return (p1 - p2) * (p2 - p3) * (p1 - p3); }
    double sa111() const {
        return (p1 + p2 - 2 * p3) * (p2 + p3 - 2 * p1) * (p1 + p3 - 2 * p2);
    }
    double p_mean() const { return s1() / 3.0; }
    double p_geo() const { return std::cbrt(p1 * p2 * p3); }

    /// S_L(L) = sqrt(4 (S2 - S11) - 3 L^2) / 2, real for all physical L.
    double sl(double l) const {
        double r = 4.0 * (s2() - s11()) - 3.0 * l * l;
        return 0.5 * std::sqrt(r < 0 ? 0.0 : r);
    }
    /// Upper bound of S_L realness, Lbar^2 = 4/3 (S2 - S11).
    double lbar2() const { return 4.0 / 3.0 * (s2() - s11()); }

    /// Characteristic action scale used for relative tolerances.
    double scale() const {
        return std::fmax(1.0, std::fmax(std::abs(p1), std::abs(p3)));
    }
};

} // namespace orbita
