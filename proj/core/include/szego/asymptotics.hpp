#pragma once

#include <span>
#include <string>
#include <vector>

#include "szego/szego_function.hpp"

namespace szego {

// log C(n, k) via log-gamma; overflow-safe far past any practical degree
double log_binomial(int n, int k);
double binomial(int n, int k);

// z^n D_e(z)/tau, the exterior limit of Phi_n
Complex exterior_approx(int n, Complex z, const SzegoData& data);

// default pole exclusion: 0.05 * rho
double default_pole_exclusion(double rho);

// Residue approximation built from the local Laurent data of F at every
// listed pole. include_exterior_term = false drops the z^n D_e/tau term
// (the deep-interior variant).
Complex residue_approx(int n, Complex z, std::span<const PoleData> poles, const SzegoData& data,
                       bool include_exterior_term = true, double epsilon = -1.0);

// Dominant-pole approximation: only the poles flagged dominant contribute,
// each through its leading residue term.
Complex dominant_approx(int n, Complex z, std::span<const PoleData> poles, const SzegoData& data,
                        double epsilon = -1.0);

// G_n(z) = sum_k w_k e^{2 pi i (n-m+1) theta_k} / (a_k - z) over the
// dominant poles, theta_1 = 1 and theta_k the normalized argument offsets.
Complex eval_Gn(int n, Complex z, std::span<const PoleData> poles);
// zeros of G_n (degree <= l-1 polynomial roots)
std::vector<Complex> gn_zeros(int n, std::span<const PoleData> poles);

struct ClockPrediction {
    int n = 0;
    int m = 1;          // dominant multiplicity
    double rho = 0.0;
    double v_n = 0.0;            // rho * C(n, m-1)^{1/n}
    double radius = 0.0;         // rho (1 + log C(n, m-1) / n)
    double spacing = 0.0;        // 2 pi / n
};

ClockPrediction clock_predict(int n, const WeightMeta& meta);

struct ClockGap {
    double arg_before = 0.0;  // arguments of the zeros flanking the gap
    double arg_after = 0.0;
    double normalized_width = 0.0;  // spacing * n / 2pi
    std::string nearest_kind;       // "pole" | "G_n zero"
    Complex nearest_object;
};

struct ClockReport {
    int n = 0;
    int count = 0;  // zeros inside the radial window
    double window = 0.0;
    double spacing_mean = 0.0;     // normalized; gaps included
    double spacing_max_dev = 0.0;  // max |normalized - 1| outside detected gaps
    double radius_median = 0.0;
    double radius_mean_abs_dev = 0.0;
    std::vector<ClockGap> gaps;
};

// Bulk-zero statistics against the clock prediction. Zeros within `window`
// of v_n count as bulk; NoBulkZeros if fewer than n/2 qualify.
ClockReport clock_report(std::span<const Complex> zeros, const ClockPrediction& prediction,
                         std::span<const PoleData> poles, double window);

// Rationality of the normalized argument offsets cannot be inferred from
// floating point; the caller declares the arithmetic structure.
struct ArithmeticDecl {
    enum class Kind { Rational, IrrationalPair, Grid };
    Kind kind = Kind::Rational;
    // Rational: theta_k = p_k/q_k (per dominant pole, matching order)
    std::vector<std::pair<long, long>> fractions;
    // IrrationalPair (v = 2, l = 2): locus sample count
    int samples = 512;
    // Grid: irrational coefficients r_kj (j >= 2) per pole plus grid steps
    std::vector<std::vector<double>> irrational_coeffs;
    int grid_steps = 64;
};

struct AccumulationSet {
    std::vector<Complex> points;
    bool is_locus = false;  // true: sampled curve/cloud rather than a finite set
};

AccumulationSet accumulation_points(std::span<const PoleData> poles, const ArithmeticDecl& decl,
                                    double rho);

struct SaddleData {
    EssentialSign kind = EssentialSign::Plus;
    double a = 0.0;
    int n = 0;
    Complex t_plus;
    Complex t_minus;
    Complex psi_at_saddle;  // Psi_n(t_+)
    Complex F_at_saddle;    // F(t_+)
};

// Saddle points of Psi_n(t) = log t + (t/(at-1) + 1/(t-a))/(n+1) (Plus kind;
// the Minus kind flips the sign of the F-exponent). Newton from the
// parabolic seeds a +- sqrt(a/(n+1)) resp. a +- i sqrt(a/(n+1)).
SaddleData saddle_solve(EssentialSign kind, double a, int n);

Complex psi_derivative(EssentialSign kind, double a, int n, Complex t);
Complex psi_value(EssentialSign kind, double a, int n, Complex t);
Complex scattering_value(EssentialSign kind, double a, Complex t);  // F(t) closed form

// Leading-order Verblunsky asymptotics at an essential singularity.
Complex essential_verblunsky(const SaddleData& saddle);

}  // namespace szego
