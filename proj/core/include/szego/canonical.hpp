#pragma once

#include <optional>

#include "szego/cauchy_ops.hpp"

namespace szego {

enum class Region { Inside, Middle, Outside };

struct EvalRegion {
    Region region = Region::Inside;
    double effective_r = 0.0;  // radius actually used (re-radius may adjust it)
};

struct MonicPolynomial {
    int degree = 0;
    std::vector<Complex> coeffs;  // ascending powers, coeffs[degree] == 1 exactly
    std::optional<std::vector<Complex>> zeros;

    Complex eval(Complex z) const {
        Complex acc = 0.0;
        for (int k = degree; k >= 0; --k) acc = acc * z + coeffs[static_cast<std::size_t>(k)];
        return acc;
    }
};

struct ValueWithBound {
    Complex value;
    double bound = 0.0;
};

struct RealWithBound {
    double value = 0.0;
    double bound = 0.0;
};

EvalRegion classify_region(Complex z, const CanonicalSeries& series);

// Phi_n anywhere in the plane through the three-region representation; when
// z falls inside a contour exclusion band the series is rebuilt at an
// adjusted radius and the middle formula applied.
ValueWithBound eval_phi(int n, Complex z, const CanonicalSeries& series, const SzegoData& data);

struct VerblunskyEstimate {
    Complex alpha;
    double bound = 0.0;           // certified error of alpha
    Complex leading_order;        // -conj(c_{-n-1}), the first-term surrogate
    double gap_bound = 0.0;       // certified |alpha - leading_order|, O(r^{3n})
};

VerblunskyEstimate verblunsky_canonical(int n, const SzegoData& data, double r);
RealWithBound kappa_canonical(int n, const SzegoData& data, double r);

// Coefficients via sampling the middle formula on the unit circle; when
// max_bound is given it receives the largest certified sample bound (a
// max-norm bound on the coefficient error).
MonicPolynomial phi_coefficients(int n, const CanonicalSeries& series, const SzegoData& data,
                                 double* max_bound = nullptr);

}  // namespace szego
