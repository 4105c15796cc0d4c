#pragma once

#include <string>
#include <vector>

#include "szego/canonical.hpp"
#include "szego/cplx.hpp"
#include "szego/weights.hpp"

namespace szego {

// Oracle working precision. Double-double is the default: |alpha_n| ~ rho^n
// loses binary64 relative accuracy near n ~ 50 already for rho = 1/2.
struct PrecisionSpec {
    enum class Kind { Binary64, DoubleDouble, Digits };
    Kind kind = Kind::DoubleDouble;
    int digits = 50;  // mpfr decimal digits, Kind::Digits only

    static PrecisionSpec parse(const std::string& text);  // "f64" | "dd" | "d<N>"
    std::string name() const;
};

struct MomentTable {
    std::vector<CplxDD> m;  // m_k at index k, k = 0..n_max+1; m_{-k} = conj(m_k)
    PrecisionSpec precision;
    int nodes_used = 0;

    CplxDD at(int k) const {
        const int a = k < 0 ? -k : k;
        return k < 0 ? conj(m[static_cast<std::size_t>(a)]) : m[static_cast<std::size_t>(a)];
    }
    int max_index() const { return static_cast<int>(m.size()) - 1; }
};

struct OracleResult {
    std::vector<CplxDD> alphas;              // alpha_0 .. alpha_{nmax-1}
    std::vector<DD> kappas;                  // kappa_0 .. kappa_nmax
    std::vector<std::vector<CplxDD>> monic;  // Phi_0 .. Phi_nmax, ascending coefficients
    PrecisionSpec precision;

    Complex alpha(int n) const { return to_std(alphas[static_cast<std::size_t>(n)]); }
    double kappa(int n) const { return to_double(kappas[static_cast<std::size_t>(n)]); }
    MonicPolynomial monic_at(int n) const;
};

// Trigonometric moments m_k = int e^{-ik theta} w d theta by the trapezoidal
// rule, node count doubled until stabilization in the working precision.
MomentTable moments(const WeightSpec& spec, int n_max, PrecisionSpec precision);

// Szego recurrence driven by moment inner products, O(n^2) per step.
OracleResult levinson(const MomentTable& table, int n_max);

OracleResult oracle_run(const WeightSpec& spec, int n_max, PrecisionSpec precision);

// Aberth-Ehrlich simultaneous root iteration. Zeros at the origin are
// deflated exactly before iterating.
std::vector<Complex> zeros_aberth(const MonicPolynomial& p, double tol = 1e-12);

struct ZeroCluster {
    Complex location;
    int count = 1;
    double radius = 0.0;
};
std::vector<ZeroCluster> cluster_zeros(const std::vector<Complex>& zeros, double tol = 1e-12);

// Canonical-side estimates laid out for comparison against the oracle.
struct CanonicalEstimates {
    int n_min = 0;
    std::vector<VerblunskyEstimate> alphas;  // alpha_{n_min} ...
    std::vector<RealWithBound> kappas;       // kappa_{n_min} ...
    std::vector<MonicPolynomial> monic;      // Phi_{n_min} ...
    std::vector<double> monic_bounds;        // max-norm bound per row of `monic`
};

struct CompareRow {
    int n = 0;
    double alpha_err = 0.0, alpha_bound = 0.0;
    double kappa_err = 0.0, kappa_bound = 0.0;
    double coeff_err = 0.0, coeff_bound = 0.0;
    bool within_bounds = true;
};

struct CompareReport {
    std::vector<CompareRow> rows;
    bool all_within_bounds = true;
};

CompareReport compare(const CanonicalEstimates& canonical, const OracleResult& oracle);

}  // namespace szego
