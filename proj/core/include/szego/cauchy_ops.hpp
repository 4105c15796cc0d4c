#pragma once

#include <vector>

#include "szego/laurent.hpp"
#include "szego/szego_function.hpp"

namespace szego {

// A Cauchy transform over a circle defines two analytic functions, one on
// each side of the contour. Both are kept.
struct CauchyPair {
    AnnulusFunction inside;
    AnnulusFunction outside;
    bool is_zero() const { return inside.is_zero() && outside.is_zero(); }
};

// Laurent data of F and 1/F on the annulus rho < |z| < 1/rho. The symmetry
// conj(F(1/conj z)) = 1/F(z) makes the 1/F coefficients the conjugate
// reversal of the F coefficients.
AnnulusFunction F_series(const SzegoData& data);
AnnulusFunction invF_series(const SzegoData& data);

// sampled max of |F| on T_r (512 nodes); the a-priori bounds multiply this
// by the 1.05 safety factor
double lambda_on_circle(const SzegoData& data, double r);
inline constexpr double kLambdaSafety = 1.05;

// exclusion band around the contours: closer evaluations re-radius instead
inline constexpr double kContourBand = 1e-3;

// M_n^i(f) = -(1/tau^2) * Cauchy transform over T_r of f F t^n.
CauchyPair apply_Mi(int n, const AnnulusFunction& f, const SzegoData& data, double r);
// M_n^e(f) = tau^2 * Cauchy transform over T_{1/r} of f / (F t^n).
CauchyPair apply_Me(int n, const AnnulusFunction& f, const SzegoData& data, double r);

// distance-free prefactor of the iterate bounds; callers divide by the
// distance to the relevant circle
double term_bound(int k, int n, double r, double lambda, double tau);
// least n satisfying the convergence condition lambda * r^n < 1/r - r
int min_admissible_n(double r, double lambda);

struct CanonicalSeries {
    int n = 0;
    double r = 0.0;
    double lambda = 0.0;  // sampled max, before the safety factor
    double tau = 1.0;
    double rho = 0.0;
    int depth = 0;                   // iterates stored: f^(1..depth), g^(1..depth)
    std::vector<CauchyPair> f_iter;  // f^(k) at index k-1
    std::vector<CauchyPair> g_iter;  // shifted sequence g^(k) at index k-1
    double e_tail = 0.0;             // certified remainder prefactors past the stored terms
    double i_tail = 0.0;
    double g_even_tail = 0.0;        // same, for the shifted sequence's even terms
    bool exactly_terminated = false; // both chains vanished identically (no rounding floor)

    double lambda_safe() const { return lambda * kLambdaSafety; }
};

// Builds the iterated sequences at degree n over the contour pair T_r and
// T_{1/r}; iteration stops once the a-priori term bound falls below stop_tol
// (or an iterate vanishes identically), never past k_max.
CanonicalSeries iterate(int n, int k_max, const SzegoData& data, double r, double stop_tol = 1e-18);

enum class SeriesKind { E, I };

struct SeriesValue {
    Complex value;
    double bound;  // certified remainder, distance scaling included
};

SeriesValue eval_series(const CanonicalSeries& series, Complex z, SeriesKind which);

// working radius default (1+rho)/2
double default_radius(double rho);

}  // namespace szego
