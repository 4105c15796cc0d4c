#pragma once

#include <complex>
#include <vector>

#include "szego/errors.hpp"

namespace szego {

using Complex = std::complex<double>;

enum class WeightKind { PolynomialModSq, RationalModSq, EssentialExp, LogLaurent };
enum class EssentialSign { Plus, Minus };

struct ZeroSpec {
    Complex location;
    int multiplicity = 1;
};

// A pole of the exterior Szego function D_e inside the unit disc, with the
// local data entering the residue formulas: D_i(a) and
// de_hat = lim_{z->a} (z-a)^m D_e(z).
struct PoleData {
    Complex location;
    int multiplicity = 1;
    Complex di_at;
    Complex de_hat;
    bool dominant = false;
};

struct WeightMeta {
    double rho = 0.0;  // working singularity radius; 0 for Lebesgue-like weights
    std::vector<PoleData> de_poles;
    bool has_essential = false;
};

// Tolerance below which a zero/pole counts as sitting on the unit circle and
// is rejected: the weight class requires analyticity in an annulus around it.
inline constexpr double kCircleTol = 1e-12;

// A strictly positive analytic weight on the unit circle, immutable after
// construction. Polynomial/rational kinds are stored both as given and in the
// normalized representation R (no zeros or poles in |z| >= 1, R(inf) > 0),
// from which all closed-form Szego data derives.
class WeightSpec {
  public:
    static WeightSpec polynomial(const std::vector<ZeroSpec>& zeros);
    static WeightSpec rational(const std::vector<ZeroSpec>& zeros, const std::vector<ZeroSpec>& poles);
    static WeightSpec essential(Complex a, EssentialSign sign);
    // half_coeffs = l_0, l_1, ..., l_K of log w; l_{-k} = conj(l_k) implied.
    static WeightSpec log_laurent(const std::vector<Complex>& half_coeffs);
    static WeightSpec lebesgue() { return polynomial({}); }

    WeightKind kind() const { return kind_; }
    bool has_closed_form() const { return kind_ != WeightKind::LogLaurent; }

    double log_weight(double theta) const;
    WeightMeta classify() const;

    // normalized representation R = C z^{-q} prod (z-alpha)^m / prod (z-beta)^mu
    const std::vector<ZeroSpec>& zeros_inside() const { return zeros_in_; }
    const std::vector<ZeroSpec>& poles_inside() const { return poles_in_; }
    int origin_power() const { return origin_power_; }
    double norm_constant() const { return norm_constant_; }

    Complex essential_center() const { return essential_center_; }
    EssentialSign essential_sign() const { return essential_sign_; }
    const std::vector<Complex>& log_coeffs() const { return log_coeffs_; }

    // closed-form Szego functions; UnknownStructure for LogLaurent
    double tau() const;
    Complex D_inner(Complex z) const;
    Complex D_outer(Complex z) const;
    Complex F(Complex z) const;

    // as given by the caller, for exact log-weight evaluation
    const std::vector<ZeroSpec>& given_zeros() const { return given_zeros_; }
    const std::vector<ZeroSpec>& given_poles() const { return given_poles_; }

  private:
    WeightSpec() = default;

    WeightKind kind_ = WeightKind::PolynomialModSq;
    std::vector<ZeroSpec> given_zeros_;
    std::vector<ZeroSpec> given_poles_;
    std::vector<ZeroSpec> zeros_in_;
    std::vector<ZeroSpec> poles_in_;
    int origin_power_ = 0;
    double norm_constant_ = 1.0;
    Complex essential_center_;
    EssentialSign essential_sign_ = EssentialSign::Plus;
    std::vector<Complex> log_coeffs_;
};

}  // namespace szego
