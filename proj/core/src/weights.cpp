#include "szego/weights.hpp"

#include <algorithm>
#include <cmath>

namespace szego {

namespace {

// integer power, exponents are small
Complex cpow_int(Complex z, int m) {
    if (m < 0) return 1.0 / cpow_int(z, -m);
    Complex r = 1.0;
    for (int i = 0; i < m; ++i) r *= z;
    return r;
}

void normalize_factor(const std::vector<ZeroSpec>& given, bool is_pole, std::vector<ZeroSpec>& inside,
                      double& norm_constant) {
    for (const auto& zs : given) {
        const double mod = std::abs(zs.location);
        if (zs.multiplicity < 1) raise(ErrorKind::Config, "multiplicity must be >= 1");
        if (std::abs(mod - 1.0) < kCircleTol)
            raise(is_pole ? ErrorKind::PoleOnCircle : ErrorKind::ZeroOnCircle,
                  "singularity within 1e-12 of the unit circle");
        if (mod == 0.0) continue;  // |z|^m == 1 on the circle, drops out
        if (mod < 1.0) {
            inside.push_back(zs);
        } else {
            // |z - a| = |a| |z - 1/conj(a)| on the circle: reflect inside
            inside.push_back({1.0 / std::conj(zs.location), zs.multiplicity});
            const double scale = std::pow(mod, zs.multiplicity);
            norm_constant = is_pole ? norm_constant / scale : norm_constant * scale;
        }
    }
}

}  // namespace

WeightSpec WeightSpec::polynomial(const std::vector<ZeroSpec>& zeros) {
    WeightSpec w;
    w.kind_ = WeightKind::PolynomialModSq;
    w.given_zeros_ = zeros;
    normalize_factor(zeros, false, w.zeros_in_, w.norm_constant_);
    for (const auto& zs : w.zeros_in_) w.origin_power_ += zs.multiplicity;
    return w;
}

WeightSpec WeightSpec::rational(const std::vector<ZeroSpec>& zeros, const std::vector<ZeroSpec>& poles) {
    WeightSpec w;
    w.kind_ = WeightKind::RationalModSq;
    w.given_zeros_ = zeros;
    w.given_poles_ = poles;
    normalize_factor(zeros, false, w.zeros_in_, w.norm_constant_);
    normalize_factor(poles, true, w.poles_in_, w.norm_constant_);
    for (const auto& zs : w.zeros_in_) w.origin_power_ += zs.multiplicity;
    for (const auto& ps : w.poles_in_) w.origin_power_ -= ps.multiplicity;
    return w;
}

WeightSpec WeightSpec::essential(Complex a, EssentialSign sign) {
    const double mod = std::abs(a);
    if (mod == 0.0 || mod >= 1.0) raise(ErrorKind::BadCenter, "essential center needs 0 < |a| < 1");
    WeightSpec w;
    w.kind_ = WeightKind::EssentialExp;
    w.essential_center_ = a;
    w.essential_sign_ = sign;
    return w;
}

WeightSpec WeightSpec::log_laurent(const std::vector<Complex>& half_coeffs) {
    WeightSpec w;
    w.kind_ = WeightKind::LogLaurent;
    w.log_coeffs_ = half_coeffs;
    if (w.log_coeffs_.empty()) w.log_coeffs_.push_back(0.0);
    if (std::abs(w.log_coeffs_[0].imag()) > kCircleTol)
        raise(ErrorKind::Config, "l_0 of a log-Laurent weight must be real");
    w.log_coeffs_[0] = w.log_coeffs_[0].real();
    return w;
}

double WeightSpec::log_weight(double theta) const {
    const Complex t = std::polar(1.0, theta);
    switch (kind_) {
        case WeightKind::PolynomialModSq:
        case WeightKind::RationalModSq: {
            double s = 0.0;
            for (const auto& zs : given_zeros_) s += 2.0 * zs.multiplicity * std::log(std::abs(t - zs.location));
            for (const auto& ps : given_poles_) s -= 2.0 * ps.multiplicity * std::log(std::abs(t - ps.location));
            return s;
        }
        case WeightKind::EssentialExp: {
            const double v = 2.0 * (1.0 / (essential_center_ - t)).real();
            return essential_sign_ == EssentialSign::Plus ? v : -v;
        }
        case WeightKind::LogLaurent: {
            double s = log_coeffs_[0].real();
            Complex tk = 1.0;
            for (std::size_t k = 1; k < log_coeffs_.size(); ++k) {
                tk *= t;
                s += 2.0 * (log_coeffs_[k] * tk).real();
            }
            return s;
        }
    }
    return 0.0;
}

double WeightSpec::tau() const {
    switch (kind_) {
        case WeightKind::PolynomialModSq:
        case WeightKind::RationalModSq:
            return 1.0 / norm_constant_;
        case WeightKind::EssentialExp:
            return 1.0;
        case WeightKind::LogLaurent:
            raise(ErrorKind::UnknownStructure, "no closed-form tau for log-Laurent weights");
    }
    return 1.0;
}

Complex WeightSpec::D_inner(Complex z) const {
    switch (kind_) {
        case WeightKind::PolynomialModSq:
        case WeightKind::RationalModSq: {
            Complex v = norm_constant_;
            for (const auto& zs : zeros_in_) v *= cpow_int(1.0 - std::conj(zs.location) * z, zs.multiplicity);
            for (const auto& ps : poles_in_) v /= cpow_int(1.0 - std::conj(ps.location) * z, ps.multiplicity);
            return v;
        }
        case WeightKind::EssentialExp: {
            const Complex e = z / (std::conj(essential_center_) * z - 1.0);
            return std::exp(essential_sign_ == EssentialSign::Plus ? e : -e);
        }
        case WeightKind::LogLaurent:
            raise(ErrorKind::UnknownStructure, "no closed-form D_i for log-Laurent weights");
    }
    return 0.0;
}

Complex WeightSpec::D_outer(Complex z) const {
    switch (kind_) {
        case WeightKind::PolynomialModSq:
        case WeightKind::RationalModSq: {
            Complex v = cpow_int(z, origin_power_) / norm_constant_;
            for (const auto& ps : poles_in_) v *= cpow_int(z - ps.location, ps.multiplicity);
            for (const auto& zs : zeros_in_) v /= cpow_int(z - zs.location, zs.multiplicity);
            return v;
        }
        case WeightKind::EssentialExp: {
            const Complex e = 1.0 / (z - essential_center_);
            return std::exp(essential_sign_ == EssentialSign::Plus ? e : -e);
        }
        case WeightKind::LogLaurent:
            raise(ErrorKind::UnknownStructure, "no closed-form D_e for log-Laurent weights");
    }
    return 0.0;
}

Complex WeightSpec::F(Complex z) const { return D_inner(z) * D_outer(z); }

WeightMeta WeightSpec::classify() const {
    if (kind_ == WeightKind::LogLaurent)
        raise(ErrorKind::UnknownStructure, "log-Laurent weights carry no closed-form singularity data");

    WeightMeta meta;
    if (kind_ == WeightKind::EssentialExp) {
        meta.rho = std::abs(essential_center_);
        meta.has_essential = true;
        return meta;
    }

    for (const auto& zs : zeros_in_) meta.rho = std::max(meta.rho, std::abs(zs.location));
    for (const auto& ps : poles_in_) meta.rho = std::max(meta.rho, std::abs(ps.location));

    // poles of D_e inside the disc sit at the zeros of R
    double pole_radius = 0.0;
    for (const auto& zs : zeros_in_) pole_radius = std::max(pole_radius, std::abs(zs.location));
    int max_mult = 0;
    for (const auto& zs : zeros_in_)
        if (std::abs(std::abs(zs.location) - pole_radius) < kCircleTol) max_mult = std::max(max_mult, zs.multiplicity);

    for (const auto& zs : zeros_in_) {
        PoleData p;
        p.location = zs.location;
        p.multiplicity = zs.multiplicity;
        p.di_at = D_inner(zs.location);
        // de_hat = lim (z-a)^m D_e(z), the other factors evaluated at a
        Complex v = cpow_int(zs.location, origin_power_) / norm_constant_;
        for (const auto& ps : poles_in_) v *= cpow_int(zs.location - ps.location, ps.multiplicity);
        for (const auto& other : zeros_in_) {
            if (&other == &zs) continue;
            v /= cpow_int(zs.location - other.location, other.multiplicity);
        }
        p.de_hat = v;
        p.dominant = std::abs(std::abs(zs.location) - pole_radius) < kCircleTol && zs.multiplicity == max_mult;
        meta.de_poles.push_back(p);
    }
    std::sort(meta.de_poles.begin(), meta.de_poles.end(), [](const PoleData& a, const PoleData& b) {
        if (a.dominant != b.dominant) return a.dominant;
        return std::arg(a.location) < std::arg(b.location);
    });
    return meta;
}

}  // namespace szego
