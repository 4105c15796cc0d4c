#include "szego/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace szego {

AnnulusFunction AnnulusFunction::one() {
    AnnulusFunction f;
    f.coeffs = {1.0};
    f.k_min = 0;
    return f;
}

AnnulusFunction AnnulusFunction::zero() { return {}; }

Complex AnnulusFunction::eval(Complex z) const {
    // split at k = 0: ascending powers of z and of 1/z keep partial products stable
    Complex s = 0.0;
    if (k_max() >= 0) {
        Complex zk = 1.0;
        for (int j = 0; j < std::max(k_min, 0); ++j) zk *= z;
        for (int k = std::max(k_min, 0); k <= k_max(); ++k) {
            s += at(k) * zk;
            zk *= z;
        }
    }
    if (k_min < 0) {
        const Complex w = 1.0 / z;
        Complex wk = w;
        for (int k = -1; k >= k_min; --k) {
            s += at(k) * wk;
            wk *= w;
        }
    }
    return s;
}

Complex AnnulusFunction::eval_with_tail(Complex z, double& tail) const {
    tail = 0.0;
    if (is_zero()) return 0.0;
    const double mod = std::abs(z);
    if (open_lo) {
        if (r_in > 0.0 && mod > r_in)
            tail += edge_lo * std::pow(mod, k_min - 1) / (1.0 - r_in / mod);
        else if (r_in > 0.0)
            tail = std::numeric_limits<double>::infinity();  // inside the decay radius
    }
    if (open_hi && mod > 0.0) {
        if (mod < r_out)
            tail += edge_hi * std::pow(mod, k_max() + 1) / (1.0 - mod / r_out);
        else
            tail = std::numeric_limits<double>::infinity();
    }
    return eval(z);
}

double AnnulusFunction::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs) m = std::max(m, std::abs(c));
    return m;
}

double AnnulusFunction::coeff_norm_on_circle(double s) const {
    double total = 0.0;
    for (int k = k_min; k <= k_max(); ++k) total += std::abs(at(k)) * std::pow(s, k);
    return total;
}

double AnnulusFunction::max_on_circle(double s, int samples) const {
    double m = 0.0;
    for (int j = 0; j < samples; ++j) {
        const Complex z = std::polar(s, 2.0 * M_PI * j / samples);
        m = std::max(m, std::abs(eval(z)));
    }
    return m;
}

void AnnulusFunction::trim(double rel_floor) {
    const double floor = rel_floor * max_abs_coeff();
    std::size_t lo = 0, hi = coeffs.size();
    while (lo < hi && std::abs(coeffs[lo]) <= floor) ++lo;
    while (hi > lo && std::abs(coeffs[hi - 1]) <= floor) --hi;
    if (lo > 0) {
        open_lo = true;
        edge_lo = std::max(edge_lo, floor);
    }
    if (hi < coeffs.size()) {
        open_hi = true;
        edge_hi = std::max(edge_hi, floor);
    }
    if (lo == hi) {
        coeffs.clear();
        k_min = 0;
        return;
    }
    coeffs = std::vector<Complex>(coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                                  coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
    k_min += static_cast<int>(lo);
}

AnnulusFunction laurent_project(const AnnulusFunction& f, LaurentPart part) {
    AnnulusFunction out;
    if (part == LaurentPart::NonNegative) {
        if (f.k_max() < 0) {
            // empty but possibly inexact: sub-floor coefficients may exist
            out.open_hi = f.open_hi;
            out.edge_hi = f.open_hi ? f.edge_hi : 0.0;
            return out;
        }
        out.k_min = std::max(f.k_min, 0);
        for (int k = out.k_min; k <= f.k_max(); ++k) out.coeffs.push_back(f.at(k));
        out.r_in = 0.0;
        out.r_out = f.r_out;
        // the cut at k = 0 is exact; a floored lower edge survives only when
        // it sits inside the kept range
        out.open_lo = f.open_lo && f.k_min > 0;
        out.edge_lo = out.open_lo ? f.edge_lo : 0.0;
        out.open_hi = f.open_hi;
        out.edge_hi = f.edge_hi;
    } else {
        if (f.k_min >= 0) {
            out.open_lo = f.open_lo;
            out.edge_lo = f.open_lo ? f.edge_lo : 0.0;
            return out;
        }
        out.k_min = f.k_min;
        for (int k = f.k_min; k <= std::min(f.k_max(), -1); ++k) out.coeffs.push_back(f.at(k));
        out.r_in = f.r_in;
        out.r_out = std::numeric_limits<double>::infinity();
        out.open_hi = f.open_hi && f.k_max() < -1;
        out.edge_hi = out.open_hi ? f.edge_hi : 0.0;
        out.open_lo = f.open_lo;
        out.edge_lo = f.edge_lo;
    }
    out.trim(0.0);
    return out;
}

AnnulusFunction laurent_multiply(const AnnulusFunction& a, const AnnulusFunction& b) {
    AnnulusFunction out;
    if (a.is_zero() || b.is_zero()) {
        // inexact emptiness propagates: the product of a sub-floor tail with
        // a nonzero factor stays sub-floor-scale but not identically zero
        double a_norm = 0.0, b_norm = 0.0;
        for (const auto& c : a.coeffs) a_norm += std::abs(c);
        for (const auto& c : b.coeffs) b_norm += std::abs(c);
        const double a_edge = std::max(a.edge_lo, a.edge_hi);
        const double b_edge = std::max(b.edge_lo, b.edge_hi);
        const double carried = a_edge * std::max(b_norm, b_edge) + b_edge * std::max(a_norm, a_edge);
        if (carried > 0.0) {
            out.open_lo = out.open_hi = true;
            out.edge_lo = out.edge_hi = carried;
        }
        return out;
    }
    out.k_min = a.k_min + b.k_min;
    out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    out.r_in = std::max(a.r_in, b.r_in);
    out.r_out = std::min(a.r_out, b.r_out);

    double a_norm = 0.0, b_norm = 0.0;
    for (const auto& c : a.coeffs) a_norm += std::abs(c);
    for (const auto& c : b.coeffs) b_norm += std::abs(c);
    out.open_lo = a.open_lo || b.open_lo;
    out.open_hi = a.open_hi || b.open_hi;
    out.edge_lo = a.edge_lo * b_norm + b.edge_lo * a_norm + a.edge_lo * b.edge_lo;
    out.edge_hi = a.edge_hi * b_norm + b.edge_hi * a_norm + a.edge_hi * b.edge_hi;
    out.trim();
    return out;
}

AnnulusFunction laurent_shift(const AnnulusFunction& f, int shift) {
    AnnulusFunction out = f;
    out.k_min += shift;
    return out;
}

}  // namespace szego
