#include "szego/cauchy_ops.hpp"

#include <cmath>

namespace szego {

namespace {

AnnulusFunction scaled(AnnulusFunction f, double s) {
    for (auto& c : f.coeffs) c *= s;
    return f;
}

double core_bound(int k, int n, double r, double lambda, double tau, bool shifted_sequence) {
    // log-space keeps r^{kn} well away from under/overflow
    const double gap = 1.0 / r - r;
    double lg = k * std::log(lambda) + static_cast<double>(k) * n * std::log(r) - (k - 1) * std::log(gap);
    if (k % 2 == 1) {
        if (shifted_sequence)
            lg += 2.0 * std::log(tau) - std::log(r);
        else
            lg += std::log(r) - 2.0 * std::log(tau);
    }
    return std::exp(lg);
}

}  // namespace

AnnulusFunction F_series(const SzegoData& data) {
    AnnulusFunction f;
    f.k_min = data.c_min();
    f.coeffs = data.c;
    f.r_in = data.rho_hat;
    f.r_out = data.rho_hat > 0.0 ? 1.0 / data.rho_hat : std::numeric_limits<double>::infinity();
    // the band was cut at the numeric floor; its edges continue at rho
    f.open_lo = true;
    f.edge_lo = data.c_edge_lo;
    f.open_hi = true;
    f.edge_hi = data.c_edge_hi;
    return f;
}

AnnulusFunction invF_series(const SzegoData& data) {
    AnnulusFunction f = F_series(data);
    AnnulusFunction g = f;
    for (int k = f.k_min; k <= f.k_max(); ++k)
        g.coeffs[static_cast<std::size_t>(f.k_max() - k)] = std::conj(f.at(k));
    g.k_min = -f.k_max();
    g.open_lo = f.open_hi;
    g.edge_lo = f.edge_hi;
    g.open_hi = f.open_lo;
    g.edge_hi = f.edge_lo;
    return g;
}

double lambda_on_circle(const SzegoData& data, double r) {
    return F_series(data).max_on_circle(r, 512);
}

CauchyPair apply_Mi(int n, const AnnulusFunction& f, const SzegoData& data, double r) {
    if (!(f.r_in < r && r < f.r_out))
        raise(ErrorKind::AnnulusMismatch, "operand annulus does not contain T_r");
    AnnulusFunction g = laurent_shift(laurent_multiply(f, F_series(data)), n);
    g = scaled(std::move(g), 1.0 / (data.tau * data.tau));

    CauchyPair out;
    out.inside = scaled(laurent_project(g, LaurentPart::NonNegative), -1.0);
    out.inside.r_in = 0.0;
    out.inside.r_out = g.r_out;
    out.inside.contour = ContourTag::InsideTr;
    out.outside = laurent_project(g, LaurentPart::Negative);
    out.outside.r_in = g.r_in;
    out.outside.r_out = std::numeric_limits<double>::infinity();
    out.outside.contour = ContourTag::OutsideTr;
    return out;
}

CauchyPair apply_Me(int n, const AnnulusFunction& f, const SzegoData& data, double r) {
    if (!(f.r_in < 1.0 / r && 1.0 / r < f.r_out))
        raise(ErrorKind::AnnulusMismatch, "operand annulus does not contain T_{1/r}");
    AnnulusFunction h = laurent_shift(laurent_multiply(f, invF_series(data)), -n);
    h = scaled(std::move(h), data.tau * data.tau);

    CauchyPair out;
    out.inside = laurent_project(h, LaurentPart::NonNegative);
    out.inside.r_in = 0.0;
    out.inside.r_out = h.r_out;
    out.inside.contour = ContourTag::InsideT1r;
    out.outside = scaled(laurent_project(h, LaurentPart::Negative), -1.0);
    out.outside.r_in = h.r_in;
    out.outside.r_out = std::numeric_limits<double>::infinity();
    out.outside.contour = ContourTag::OutsideT1r;
    return out;
}

double term_bound(int k, int n, double r, double lambda, double tau) {
    return core_bound(k, n, r, lambda, tau, false);
}

int min_admissible_n(double r, double lambda) {
    const double gap = 1.0 / r - r;
    const double t = std::log(gap / lambda) / std::log(r);
    int n = static_cast<int>(std::floor(t)) + 1;
    return std::max(n, 0);
}

CanonicalSeries iterate(int n, int k_max, const SzegoData& data, double r, double stop_tol) {
    if (!(data.rho_hat < r && r < 1.0)) raise(ErrorKind::Config, "working radius must satisfy rho < r < 1");

    CanonicalSeries s;
    s.n = n;
    s.r = r;
    s.rho = data.rho_hat;
    s.tau = data.tau;
    s.lambda = lambda_on_circle(data, r);

    const double gap = 1.0 / r - r;
    const double lam = s.lambda_safe();
    if (!(lam * std::pow(r, n) < gap))
        raise(ErrorKind::ConvergenceConditionViolated,
              "condition Lambda r^n < 1/r - r fails; minimal admissible n is " +
                  std::to_string(min_admissible_n(r, lam)));

    const AnnulusFunction one = AnnulusFunction::one();
    bool f_alive = true, g_alive = true;
    for (int k = 1; k <= k_max; ++k) {
        if (k % 2 == 1) {
            const AnnulusFunction& fin = (k == 1) ? one : s.f_iter[static_cast<std::size_t>(k - 2)].inside;
            s.f_iter.push_back(f_alive ? apply_Mi(n, fin, data, r) : CauchyPair{});
            const AnnulusFunction& gin = (k == 1) ? one : s.g_iter[static_cast<std::size_t>(k - 2)].outside;
            s.g_iter.push_back(g_alive ? apply_Me(n, gin, data, r) : CauchyPair{});
        } else {
            s.f_iter.push_back(f_alive ? apply_Me(n, s.f_iter[static_cast<std::size_t>(k - 2)].outside, data, r)
                                       : CauchyPair{});
            s.g_iter.push_back(g_alive ? apply_Mi(n, s.g_iter[static_cast<std::size_t>(k - 2)].inside, data, r)
                                       : CauchyPair{});
        }
        f_alive = f_alive && !s.f_iter.back().is_zero();
        g_alive = g_alive && !s.g_iter.back().is_zero();
        s.depth = k;
        if (!f_alive && !g_alive) {
            s.exactly_terminated = true;
            break;
        }
        const double next = std::max(core_bound(k + 1, n, r, lam, s.tau, false),
                                     core_bound(k + 1, n, r, lam, s.tau, true));
        if (next < stop_tol) break;
    }

    // geometric tails past the stored depth; a dead chain terminates exactly
    const double q = std::pow(lam * std::pow(r, n) / gap, 2);
    const double tail_from = 1.0 / (1.0 - q);
    const int first_even = s.depth % 2 == 0 ? s.depth + 2 : s.depth + 1;
    const int first_odd = s.depth % 2 == 0 ? s.depth + 1 : s.depth + 2;
    s.e_tail = f_alive ? core_bound(first_even, n, r, lam, s.tau, false) * tail_from : 0.0;
    s.i_tail = f_alive ? core_bound(first_odd, n, r, lam, s.tau, false) * tail_from : 0.0;
    s.g_even_tail = g_alive ? core_bound(first_even, n, r, lam, s.tau, true) * tail_from : 0.0;
    return s;
}

SeriesValue eval_series(const CanonicalSeries& series, Complex z, SeriesKind which) {
    const double mod = std::abs(z);
    const double circle = which == SeriesKind::E ? 1.0 / series.r : series.r;
    const double dist = std::abs(mod - circle);
    if (dist < kContourBand)
        raise(ErrorKind::OnContour, "evaluation point inside the contour exclusion band");

    SeriesValue out{0.0, 0.0};
    if (which == SeriesKind::E) {
        out.value = 1.0;  // f^(0)
        for (int k = 2; k <= series.depth; k += 2) {
            const CauchyPair& p = series.f_iter[static_cast<std::size_t>(k - 1)];
            double tail = 0.0;
            out.value += (mod < circle ? p.inside : p.outside).eval_with_tail(z, tail);
            out.bound += tail;
        }
        out.bound += series.e_tail / dist;
    } else {
        for (int k = 1; k <= series.depth; k += 2) {
            const CauchyPair& p = series.f_iter[static_cast<std::size_t>(k - 1)];
            double tail = 0.0;
            out.value += (mod < circle ? p.inside : p.outside).eval_with_tail(z, tail);
            out.bound += tail;
        }
        out.bound += series.i_tail / dist;
    }
    return out;
}

double default_radius(double rho) { return 0.5 * (1.0 + rho); }

}  // namespace szego
