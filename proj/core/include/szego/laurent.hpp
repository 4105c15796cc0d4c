#pragma once

#include <limits>
#include <vector>

#include "szego/weights.hpp"

namespace szego {

enum class LaurentPart { NonNegative, Negative };

// Which circle a Cauchy-transform branch was defined on, and which side of
// it the branch lives on.
enum class ContourTag { None, InsideTr, OutsideTr, InsideT1r, OutsideT1r };

// A function analytic on an annulus r_in < |z| < r_out, held as a truncated
// two-sided Laurent series. The common currency of the operator algebra.
struct AnnulusFunction {
    std::vector<Complex> coeffs;  // coefficient of z^k at index k - k_min
    int k_min = 0;
    double r_in = 0.0;
    double r_out = std::numeric_limits<double>::infinity();
    ContourTag contour = ContourTag::None;
    // Band-edge provenance: an open edge means coefficients beyond it were
    // dropped at magnitude <= edge_lo/hi and continue geometrically at the
    // validity radii; a closed edge is exact (e.g. after a projection).
    bool open_lo = false;
    bool open_hi = false;
    double edge_lo = 0.0;
    double edge_hi = 0.0;

    static AnnulusFunction one();
    static AnnulusFunction zero();

    int k_max() const { return k_min + static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }

    Complex at(int k) const {
        const int i = k - k_min;
        if (i < 0 || i >= static_cast<int>(coeffs.size())) return 0.0;
        return coeffs[static_cast<std::size_t>(i)];
    }

    Complex eval(Complex z) const;
    // evaluation plus a bound on the contribution of the truncated band
    // edges, continued geometrically at the validity radii
    Complex eval_with_tail(Complex z, double& tail) const;
    double max_abs_coeff() const;
    // sum_k |a_k| s^k: an upper bound for the sup of |f| on the circle |z| = s
    double coeff_norm_on_circle(double s) const;
    double max_on_circle(double s, int samples) const;

    void trim(double rel_floor = 1e-26);
};

AnnulusFunction laurent_project(const AnnulusFunction& f, LaurentPart part);
// coefficient convolution; validity is the intersection annulus
AnnulusFunction laurent_multiply(const AnnulusFunction& a, const AnnulusFunction& b);
// multiply by z^shift
AnnulusFunction laurent_shift(const AnnulusFunction& f, int shift);

}  // namespace szego
