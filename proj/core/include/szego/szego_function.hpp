#pragma once

#include <optional>
#include <span>
#include <vector>

#include "szego/weights.hpp"

namespace szego {

// Fourier coefficients of log w: l_k for 0 <= k <= K, with l_{-k} = conj(l_k).
struct FourierLog {
    std::vector<Complex> coeffs;  // index k holds l_k
    int node_count = 0;
    double tail_bound = 0.0;

    Complex l(int k) const {
        const int a = k < 0 ? -k : k;
        if (a >= static_cast<int>(coeffs.size())) return 0.0;
        return k < 0 ? std::conj(coeffs[a]) : coeffs[a];
    }
};

enum class Side { Inner, Exterior };

// Szego data of a weight: tau, evaluators for D_i/D_e and the two-sided
// Laurent coefficients of the scattering function F = D_i * D_e.
struct SzegoData {
    FourierLog fourier;
    double tau = 1.0;
    std::vector<Complex> c;  // c_{k} stored at index k + c_offset
    int c_offset = 0;
    double c_edge_lo = 0.0;  // magnitude floor at the first index beyond the band
    double c_edge_hi = 0.0;
    double rho_hat = 0.0;
    std::optional<WeightSpec> weight;  // closed forms when the kind admits them

    Complex c_at(int k) const {
        const int i = k + c_offset;
        if (i < 0 || i >= static_cast<int>(c.size())) return 0.0;
        return c[static_cast<std::size_t>(i)];
    }
    int c_min() const { return -c_offset; }
    int c_max() const { return static_cast<int>(c.size()) - 1 - c_offset; }
};

// Discrete Fourier transform of log w over N equispaced nodes (N a power of
// two, N >= 64); exact for trigonometric polynomials of degree < N/2.
FourierLog log_fourier(const WeightSpec& spec, int node_count);

// Doubles the node count from 512 until the discarded band drops below
// 1e-14 * max|l_k|; TailTooLarge past 2^20 nodes.
FourierLog log_fourier_auto(const WeightSpec& spec);

SzegoData build_szego(const FourierLog& fourier);
SzegoData build_szego(const WeightSpec& spec);  // log_fourier_auto + closed-form attach

Complex eval_D(const SzegoData& data, Complex z, Side side);
// F via its Laurent coefficients; valid in rho_hat < |z| < 1/rho_hat.
Complex eval_F(const SzegoData& data, Complex z);

double estimate_rho(const SzegoData& data);
double estimate_rho_from_decay(std::span<const double> magnitudes);  // geometric fit over tail

}  // namespace szego
