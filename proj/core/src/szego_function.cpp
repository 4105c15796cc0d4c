#include "szego/szego_function.hpp"

#include <algorithm>
#include <cmath>

#include "szego/fft.hpp"

namespace szego {

namespace {

constexpr double kTailFactor = 1e-14;
constexpr int kMaxLogNodes = 1 << 20;
// Relative floor for Laurent bands. Sits above the transform's rounding
// plateau so flat noise never enters a band and gets amplified off-circle.
constexpr double kCoeffFloor = 1e-15;

FourierLog transform_log(const WeightSpec& spec, int n) {
    std::vector<std::complex<double>> samples(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) samples[static_cast<std::size_t>(j)] = spec.log_weight(2.0 * M_PI * j / n);
    fft(samples);

    FourierLog out;
    out.node_count = n;
    const int half = n / 2;
    out.coeffs.resize(static_cast<std::size_t>(half));
    for (int k = 0; k < half; ++k) out.coeffs[static_cast<std::size_t>(k)] = samples[static_cast<std::size_t>(k)] / double(n);
    out.coeffs[0] = out.coeffs[0].real();

    // aliasing estimate: magnitude over the top octave of resolved indices
    double tail = 0.0;
    for (int k = half / 2; k <= half; ++k) {
        const int idx = k == half ? half : k;
        tail = std::max(tail, std::abs(samples[static_cast<std::size_t>(idx)]) / double(n));
        tail = std::max(tail, std::abs(samples[static_cast<std::size_t>(n - idx)]) / double(n));
    }
    out.tail_bound = tail;

    // trim trailing negligible coefficients
    double scale = 0.0;
    for (const auto& c : out.coeffs) scale = std::max(scale, std::abs(c));
    std::size_t keep = out.coeffs.size();
    while (keep > 1 && std::abs(out.coeffs[keep - 1]) < kCoeffFloor * scale) --keep;
    out.coeffs.resize(keep);
    return out;
}

}  // namespace

FourierLog log_fourier(const WeightSpec& spec, int node_count) {
    if (node_count < 64 || !is_pow2(static_cast<std::size_t>(node_count)))
        raise(ErrorKind::Config, "node count must be a power of two >= 64");
    return transform_log(spec, node_count);
}

FourierLog log_fourier_auto(const WeightSpec& spec) {
    for (int n = 512; n <= kMaxLogNodes; n *= 2) {
        FourierLog f = transform_log(spec, n);
        double scale = 0.0;
        for (const auto& c : f.coeffs) scale = std::max(scale, std::abs(c));
        if (f.tail_bound <= kTailFactor * std::max(scale, 1e-30)) return f;
    }
    raise(ErrorKind::TailTooLarge, "log-weight spectrum did not settle below tolerance at 2^20 nodes");
}

namespace {

// scaled Laurent coefficients of F on the circle of the given radius:
// returns h_j = c_j * radius^j for j = -n/2..n/2-1 (wrapped FFT layout).
// The closed form is used when the weight carries one: the truncated log
// spectrum loses accuracy geometrically when continued off the unit circle,
// while for log-Laurent weights the stored l_k are the exact data.
std::vector<std::complex<double>> f_coeffs_on_circle(const SzegoData& data, double radius, int n) {
    std::vector<std::complex<double>> samples(static_cast<std::size_t>(n));
    if (data.weight && data.weight->has_closed_form()) {
        for (int j = 0; j < n; ++j)
            samples[static_cast<std::size_t>(j)] = data.weight->F(std::polar(radius, 2.0 * M_PI * j / n));
    } else {
        const FourierLog& f = data.fourier;
        const int klog = static_cast<int>(f.coeffs.size()) - 1;
        std::vector<std::complex<double>> spec(static_cast<std::size_t>(n), 0.0);
        for (int k = 1; k <= klog && k < n / 2; ++k) {
            spec[static_cast<std::size_t>(k)] += f.l(k) * std::pow(radius, k);
            spec[static_cast<std::size_t>(n - k)] -= f.l(-k) * std::pow(radius, -k);
        }
        ifft(spec);
        for (int j = 0; j < n; ++j)
            samples[static_cast<std::size_t>(j)] = std::exp(spec[static_cast<std::size_t>(j)] * double(n));
        fft(samples);
        for (auto& v : samples) v /= double(n);
        return samples;
    }
    fft(samples);
    for (auto& v : samples) v /= double(n);
    return samples;
}

// Laurent coefficients of F. Sampling only on the unit circle would give
// every c_k the same absolute floor ~1e-16, which outer-branch evaluation
// near T_rho amplifies like |z|^{-k}; extracting the negative side on T_s
// and the positive side on T_{1/s} (s between rho and 1) makes coefficient
// errors decay geometrically instead.
void compute_c(SzegoData& data, double rho_guess) {
    const double s = 0.5 * (1.0 + std::min(std::max(rho_guess, 0.0), 1.0 - 1e-6));
    const int klog = static_cast<int>(data.fourier.coeffs.size()) - 1;
    int n = std::max<int>(512, static_cast<int>(next_pow2(static_cast<std::size_t>(8 * std::max(klog, 1)))));

    for (;; n *= 2) {
        if (n > kMaxLogNodes) raise(ErrorKind::TailTooLarge, "Laurent band of F did not close below the floor");
        const auto inner = f_coeffs_on_circle(data, s, n);
        const auto outer = f_coeffs_on_circle(data, 1.0 / s, n);

        double peak_in = 0.0, peak_out = 0.0;
        for (const auto& v : inner) peak_in = std::max(peak_in, std::abs(v));
        for (const auto& v : outer) peak_out = std::max(peak_out, std::abs(v));
        double edge = 0.0;
        for (int k = n / 4; k <= n / 2; ++k) {
            edge = std::max(edge, std::abs(inner[static_cast<std::size_t>(n - k)]) / peak_in);
            edge = std::max(edge, std::abs(outer[static_cast<std::size_t>(k % n)]) / peak_out);
        }
        if (edge > kCoeffFloor) continue;

        int kmax = 0, kmin = 0;
        for (int k = 0; k < n / 2; ++k)
            if (std::abs(outer[static_cast<std::size_t>(k)]) >= kCoeffFloor * peak_out) kmax = k;
        for (int k = 1; k <= n / 2; ++k)
            if (std::abs(inner[static_cast<std::size_t>(n - k)]) >= kCoeffFloor * peak_in) kmin = -k;

        data.c_offset = -kmin;
        data.c.assign(static_cast<std::size_t>(kmax - kmin + 1), 0.0);
        for (int k = kmin; k <= -1; ++k)
            data.c[static_cast<std::size_t>(k - kmin)] =
                inner[static_cast<std::size_t>(n + k)] * std::pow(s, -k);
        for (int k = 0; k <= kmax; ++k)
            data.c[static_cast<std::size_t>(k - kmin)] =
                outer[static_cast<std::size_t>(k)] * std::pow(s, k);
        // band-edge magnitudes measured from the actually dropped
        // coefficients (exactly zero when the transform is exact), so exact
        // terminations stay exact downstream
        data.c_edge_lo = 0.0;
        data.c_edge_hi = 0.0;
        for (int k = kmax + 1; k <= n / 2; ++k)
            data.c_edge_hi = std::max(
                data.c_edge_hi, std::abs(outer[static_cast<std::size_t>(k)]) * std::pow(s, kmax + 1));
        for (int k = -n / 2; k < kmin; ++k)
            data.c_edge_lo = std::max(
                data.c_edge_lo, std::abs(inner[static_cast<std::size_t>(n + k)]) * std::pow(s, -kmin + 1));
        return;
    }
}

}  // namespace

namespace {

double rho_from_c(const SzegoData& data) {
    std::vector<double> mags;
    for (int k = 1; k <= -data.c_min(); ++k) mags.push_back(std::abs(data.c_at(-k)));
    return mags.size() >= 10 ? estimate_rho_from_decay(mags) : 0.0;
}

}  // namespace

SzegoData build_szego(const FourierLog& fourier) {
    SzegoData data;
    data.fourier = fourier;
    data.tau = std::exp(-0.5 * fourier.l(0).real());
    // provisional band on centered circles seeds the rho estimate, then the
    // band is rebuilt with sampling circles matched to it
    compute_c(data, 0.0);
    data.rho_hat = rho_from_c(data);
    if (data.rho_hat > 0.0) {
        compute_c(data, data.rho_hat);
        data.rho_hat = rho_from_c(data);
    }
    return data;
}

SzegoData build_szego(const WeightSpec& spec) {
    SzegoData data;
    data.fourier = log_fourier_auto(spec);
    data.tau = std::exp(-0.5 * data.fourier.l(0).real());
    data.weight = spec;
    if (spec.has_closed_form()) {
        data.rho_hat = spec.classify().rho;
        compute_c(data, data.rho_hat);
    } else {
        compute_c(data, 0.0);
        data.rho_hat = rho_from_c(data);
        if (data.rho_hat > 0.0) compute_c(data, data.rho_hat);
        data.rho_hat = rho_from_c(data);
    }
    return data;
}

Complex eval_D(const SzegoData& data, Complex z, Side side) {
    const double mod = std::abs(z);
    if (side == Side::Inner) {
        if (data.rho_hat > 0.0 && mod >= 1.0 / data.rho_hat)
            raise(ErrorKind::OutOfDomain, "inner Szego function needs |z| < 1/rho");
        if (data.weight && data.weight->has_closed_form()) return data.weight->D_inner(z);
        Complex s = 0.5 * data.fourier.l(0);
        Complex zk = 1.0;
        for (int k = 1; k < static_cast<int>(data.fourier.coeffs.size()); ++k) {
            zk *= z;
            s += data.fourier.l(k) * zk;
        }
        return std::exp(s);
    }
    if (mod <= data.rho_hat)
        raise(ErrorKind::OutOfDomain, "exterior Szego function needs |z| > rho");
    if (data.weight && data.weight->has_closed_form()) return data.weight->D_outer(z);
    Complex s = -0.5 * data.fourier.l(0);
    const Complex w = 1.0 / z;
    Complex wk = 1.0;
    for (int k = 1; k < static_cast<int>(data.fourier.coeffs.size()); ++k) {
        wk *= w;
        s -= data.fourier.l(-k) * wk;
    }
    return std::exp(s);
}

Complex eval_F(const SzegoData& data, Complex z) {
    Complex s = data.c_at(0);
    Complex zk = 1.0;
    for (int k = 1; k <= data.c_max(); ++k) {
        zk *= z;
        s += data.c_at(k) * zk;
    }
    const Complex w = 1.0 / z;
    Complex wk = 1.0;
    for (int k = 1; k <= -data.c_min(); ++k) {
        wk *= w;
        s += data.c_at(-k) * wk;
    }
    return s;
}

double estimate_rho_from_decay(std::span<const double> magnitudes) {
    // Least-squares slope of log|c_k| vs k over the last 60% of the usable
    // range. Two guards on top of the plain fit: a window-of-3 envelope (the
    // magnitudes oscillate when several singularities share a modulus) and a
    // relative floor that drops the flat rounding-noise plateau of the band.
    double peak = 0.0;
    for (double m : magnitudes) peak = std::max(peak, m);
    if (peak < 1e-300) return 0.0;
    const double guard = 1e-13 * peak;

    std::vector<double> envelope;
    for (std::size_t k = 0; k < magnitudes.size(); ++k) {
        double e = magnitudes[k];
        if (k + 1 < magnitudes.size()) e = std::max(e, magnitudes[k + 1]);
        if (k + 2 < magnitudes.size()) e = std::max(e, magnitudes[k + 2]);
        if (e <= guard) break;
        envelope.push_back(e);
    }

    std::vector<std::pair<double, double>> pts;
    const std::size_t start = envelope.size() * 2 / 5;
    for (std::size_t k = start; k < envelope.size(); ++k)
        if (envelope[k] > 1e-300) pts.emplace_back(static_cast<double>(k + 1), std::log(envelope[k]));
    if (pts.size() < 5) return 0.0;  // effectively no decaying tail: Lebesgue-like

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(pts.size());
    const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    if (!(slope < 0.0))
        raise(ErrorKind::InsufficientDecay, "coefficients do not decay geometrically");
    return std::min(std::exp(slope), 1.0 - 1e-12);
}

double estimate_rho(const SzegoData& data) {
    if (data.weight && data.weight->has_closed_form()) return data.weight->classify().rho;
    std::vector<double> mags;
    double peak = 0.0;
    for (int k = 1; k <= -data.c_min(); ++k) {
        mags.push_back(std::abs(data.c_at(-k)));
        peak = std::max(peak, mags.back());
    }
    if (mags.empty() || peak < 1e-300) return 0.0;  // F is constant: Lebesgue convention
    if (mags.size() < 10) raise(ErrorKind::InsufficientDecay, "need at least 10 usable coefficients");
    return estimate_rho_from_decay(mags);
}

}  // namespace szego
