#include "szego/canonical.hpp"

#include <cmath>

#include "szego/fft.hpp"

namespace szego {

namespace {

constexpr int kDepthCap = 40;

// stop once the next term cannot move alpha/kappa above the rounding floor
double iterate_stop_tol(int n, const SzegoData& data, double r) {
    const double lam = lambda_on_circle(data, r) * kLambdaSafety;
    const double first = term_bound(1, n, r, lam, data.tau);
    return std::max(1e-300, 1e-19 * first);
}

Complex inner_D(const SzegoData& data, Complex z) { return eval_D(data, z, Side::Inner); }
Complex outer_D(const SzegoData& data, Complex z) { return eval_D(data, z, Side::Exterior); }

}  // namespace

EvalRegion classify_region(Complex z, const CanonicalSeries& series) {
    const double mod = std::abs(z);
    const double r = series.r;
    EvalRegion out;
    out.effective_r = r;
    if (mod < r - kContourBand) {
        out.region = Region::Inside;
    } else if (mod > 1.0 / r + kContourBand) {
        out.region = Region::Outside;
    } else if (mod > r + kContourBand && mod < 1.0 / r - kContourBand) {
        out.region = Region::Middle;
    } else {
        // exclusion band: shrink the radius so z lands in the middle annulus
        out.region = Region::Middle;
        out.effective_r = 0.5 * (series.rho + r);
    }
    return out;
}

ValueWithBound eval_phi(int n, Complex z, const CanonicalSeries& series, const SzegoData& data) {
    if (series.n != n) raise(ErrorKind::Config, "series was built for a different degree");
    const EvalRegion where = classify_region(z, series);
    if (where.effective_r != series.r) {
        const CanonicalSeries adjusted =
            iterate(n, kDepthCap, data, where.effective_r, iterate_stop_tol(n, data, where.effective_r));
        return eval_phi(n, z, adjusted, data);
    }

    // binary64 rounding allowance on top of the analytic truncation bounds;
    // an exactly terminated chain evaluates without rounding beyond eps
    const double noise = series.exactly_terminated ? 0.0 : 4e-12;

    ValueWithBound out;
    switch (where.region) {
        case Region::Inside: {
            const auto iv = eval_series(series, z, SeriesKind::I);
            const Complex di = inner_D(data, z);
            out.value = -series.tau * iv.value / di;
            out.bound = series.tau * iv.bound / std::abs(di);
            break;
        }
        case Region::Middle: {
            const auto ev = eval_series(series, z, SeriesKind::E);
            const auto iv = eval_series(series, z, SeriesKind::I);
            const Complex di = inner_D(data, z);
            const Complex outer = std::pow(z, n) * outer_D(data, z) / series.tau;
            out.value = outer * ev.value - series.tau * iv.value / di;
            out.bound = std::abs(outer) * ev.bound + series.tau * iv.bound / std::abs(di);
            break;
        }
        case Region::Outside: {
            const auto ev = eval_series(series, z, SeriesKind::E);
            const Complex outer = std::pow(z, n) * outer_D(data, z) / series.tau;
            out.value = outer * ev.value;
            out.bound = std::abs(outer) * ev.bound;
            break;
        }
    }
    out.bound += noise * (1.0 + std::abs(out.value));
    return out;
}

VerblunskyEstimate verblunsky_canonical(int n, const SzegoData& data, double r) {
    const CanonicalSeries series = iterate(n + 1, kDepthCap, data, r, iterate_stop_tol(n + 1, data, r));
    const double tau2 = data.tau * data.tau;

    Complex acc = 0.0;
    for (int k = 1; k <= series.depth; k += 2)
        acc += series.f_iter[static_cast<std::size_t>(k - 1)].inside.eval(0.0);

    VerblunskyEstimate est;
    est.alpha = std::conj(tau2 * acc);
    est.bound = tau2 * series.i_tail / r;
    est.leading_order = -std::conj(data.c_at(-n - 1));

    // everything past the first odd term is O(r^{3n}): certified via the
    // geometric tail starting at k = 3
    const double lam = series.lambda_safe();
    const double gap = 1.0 / r - r;
    const double q = std::pow(lam * std::pow(r, n + 1) / gap, 2);
    est.gap_bound = series.f_iter.size() > 1 && series.f_iter[0].is_zero()
                        ? 0.0
                        : tau2 * term_bound(3, n + 1, r, lam, data.tau) / (1.0 - q) / r;
    return est;
}

RealWithBound kappa_canonical(int n, const SzegoData& data, double r) {
    // the paper's RH normalization ties the degree-(n+1) problem to kappa_n
    const CanonicalSeries series = iterate(n + 1, kDepthCap, data, r, iterate_stop_tol(n + 1, data, r));
    const double tau2 = data.tau * data.tau;

    Complex acc = 1.0;  // g^(0)
    for (int k = 2; k <= series.depth; k += 2)
        acc += series.g_iter[static_cast<std::size_t>(k - 1)].inside.eval(0.0);

    const double sum = acc.real();
    const double sum_bound = series.g_even_tail / r + std::abs(acc.imag());
    if (sum <= 0.0)
        raise(ErrorKind::NegativeSquare, "partial sum for kappa^2 is non-positive; n below the usable range");

    RealWithBound out;
    out.value = std::sqrt(tau2 * sum / (2.0 * M_PI));
    out.bound = tau2 * sum_bound / (2.0 * M_PI) / (2.0 * out.value);
    return out;
}

MonicPolynomial phi_coefficients(int n, const CanonicalSeries& series, const SzegoData& data,
                                 double* max_bound) {
    const int m = static_cast<int>(next_pow2(static_cast<std::size_t>(n + 1))) * 2;
    std::vector<std::complex<double>> samples(static_cast<std::size_t>(m));
    double worst = 0.0;
    for (int j = 0; j < m; ++j) {
        const Complex z = std::polar(1.0, 2.0 * M_PI * j / m);
        const auto v = eval_phi(n, z, series, data);
        samples[static_cast<std::size_t>(j)] = v.value;
        worst = std::max(worst, v.bound);
    }
    fft(samples);

    const Complex leading = samples[static_cast<std::size_t>(n)] / static_cast<double>(m);
    if (std::abs(leading - 1.0) > 1e-6)
        raise(ErrorKind::LeadingCoeffMismatch,
              "leading coefficient off by " + std::to_string(std::abs(leading - 1.0)) +
                  "; series accuracy insufficient");

    MonicPolynomial p;
    p.degree = n;
    p.coeffs.resize(static_cast<std::size_t>(n + 1));
    for (int k = 0; k < n; ++k)
        p.coeffs[static_cast<std::size_t>(k)] =
            samples[static_cast<std::size_t>(k)] / static_cast<double>(m) / leading;
    p.coeffs[static_cast<std::size_t>(n)] = 1.0;
    if (max_bound) *max_bound = worst;
    return p;
}

}  // namespace szego
