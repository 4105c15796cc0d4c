#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "szego/weights.hpp"

namespace szego::testing {

// (1/2 pi i) \oint_{|t|=radius} f(t) / (t - z) dt by the trapezoidal rule;
// spectrally accurate for analytic integrands, the independent oracle for
// the projection-based operators.
inline Complex cauchy_quadrature(const std::function<Complex(Complex)>& f, double radius, Complex z,
                                 int nodes = 4096) {
    Complex acc = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const Complex t = std::polar(radius, 2.0 * M_PI * j / nodes);
        const Complex dt = Complex(0.0, 1.0) * t;  // d/dtheta of the parametrization
        acc += f(t) / (t - z) * dt;
    }
    return acc / (Complex(0.0, 1.0) * 2.0 * M_PI * static_cast<double>(nodes)) * (2.0 * M_PI);
}

inline std::vector<Complex> random_points_in_disc(double radius, int count, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(pts.size()) < count) {
        const double x = 2.0 * unit(gen) - 1.0;
        const double y = 2.0 * unit(gen) - 1.0;
        if (x * x + y * y <= 1.0) pts.push_back(radius * Complex(x, y));
    }
    return pts;
}

// closed forms for w = |z - a|^2, 0 < a < 1 (single simple pole of D_e)
struct SinglePoleForms {
    double a;

    Complex F(Complex z) const { return z * (1.0 - a * z) / (z - a); }
    Complex f1_inside(int n, Complex z) const {
        return (std::pow(z, n + 1) * (1.0 - a * z) - std::pow(a, n + 1) * (1.0 - a * a)) / (a - z);
    }
    Complex f1_outside(int n, Complex z) const { return std::pow(a, n + 1) * (1.0 - a * a) / (z - a); }
    // f2/f3 by residue calculus from the operator definitions; cross-checked
    // against contour quadrature and, through the Verblunsky series, against
    // the exact moment computation
    Complex f2(int n, Complex z) const { return std::pow(a, 2 * n + 2) * (1.0 - a * a) / (1.0 - a * z); }
    Complex f3(int n, Complex z) const {
        return std::pow(a, 2 * n + 2) * (1.0 - a * a) * (std::pow(z, n + 1) - std::pow(a, n + 1)) / (a - z);
    }
    Complex g1(int n, Complex z) const { return std::pow(a, n) * (1.0 - a * a) / (1.0 - a * z); }
    Complex g2(int n, Complex z) const {
        return -std::pow(a, n) * (1.0 - a * a) * (std::pow(z, n + 1) - std::pow(a, n + 1)) / (z - a);
    }
    double c_neg(int m) const { return std::pow(a, m) * (1.0 - a * a); }  // c_{-m}, m >= 1
};

}  // namespace szego::testing
