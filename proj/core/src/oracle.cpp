#include "szego/oracle.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cmath>

#include "szego/fft.hpp"
#include "szego/parallel.hpp"

namespace szego {

using MpReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                             boost::multiprecision::et_off>;

namespace {

// scalar shims so one Levinson implementation serves every precision
template <class R>
struct Ops;

template <>
struct Ops<double> {
    static double from(double x) { return x; }
    static double eps() { return 2.220446049250313e-16; }
    static double two_pi() { return 2.0 * M_PI; }
    static DD to_dd(double x) { return DD(x); }
    static double sqrt_(double x) { return std::sqrt(x); }
    static double exp_(double x) { return std::exp(x); }
    static void sincos_(double x, double& s, double& c) {
        s = std::sin(x);
        c = std::cos(x);
    }
};

template <>
struct Ops<DD> {
    static DD from(double x) { return DD(x); }
    static double eps() { return 4.93e-32; }
    static DD two_pi() { return ddc::two_pi; }
    static DD to_dd(DD x) { return x; }
    static DD sqrt_(DD x) { return sqrt(x); }
    static DD exp_(DD x) { return exp(x); }
    static void sincos_(DD x, DD& s, DD& c) { sincos(x, s, c); }
};

template <>
struct Ops<MpReal> {
    static MpReal from(double x) { return MpReal(x); }
    static double eps() { return std::pow(10.0, -static_cast<double>(MpReal::default_precision())); }
    static MpReal two_pi() { return 2 * boost::multiprecision::acos(MpReal(-1)); }
    static DD to_dd(const MpReal& x) {
        const double hi = x.convert_to<double>();
        const double lo = MpReal(x - hi).convert_to<double>();
        return DD(hi, lo);
    }
    static MpReal sqrt_(const MpReal& x) { return boost::multiprecision::sqrt(x); }
    static MpReal exp_(const MpReal& x) { return boost::multiprecision::exp(x); }
    static void sincos_(const MpReal& x, MpReal& s, MpReal& c) {
        s = boost::multiprecision::sin(x);
        c = boost::multiprecision::cos(x);
    }
};

template <class R>
R to_real(double x) {
    return Ops<R>::from(x);
}

template <class R>
Cplx<R> to_cplx(Complex z) {
    return {Ops<R>::from(z.real()), Ops<R>::from(z.imag())};
}

template <class R>
R ipow(R base, int m) {
    R acc = Ops<R>::from(1.0);
    for (int i = 0; i < m; ++i) acc = acc * base;
    return acc;
}

// nodes[t] = exp(2 pi i t / N); t/N is exact for power-of-two N
template <class R>
std::vector<Cplx<R>> unit_nodes(int n) {
    std::vector<Cplx<R>> nodes(static_cast<std::size_t>(n));
    const R tp = Ops<R>::two_pi();
    for (int t = 0; t < n; ++t) {
        R s, c;
        Ops<R>::sincos_(tp * to_real<R>(static_cast<double>(t) / n), s, c);
        nodes[static_cast<std::size_t>(t)] = {c, s};
    }
    return nodes;
}

template <class R>
std::vector<R> weight_samples(const WeightSpec& spec, const std::vector<Cplx<R>>& nodes) {
    const int n = static_cast<int>(nodes.size());
    std::vector<R> w(static_cast<std::size_t>(n));
    const R one = to_real<R>(1.0), two = to_real<R>(2.0);

    switch (spec.kind()) {
        case WeightKind::PolynomialModSq:
        case WeightKind::RationalModSq:
            for (int j = 0; j < n; ++j) {
                const Cplx<R> t = nodes[static_cast<std::size_t>(j)];
                R v = one;
                for (const auto& zs : spec.given_zeros())
                    v = v * ipow(abs2(t - to_cplx<R>(zs.location)), zs.multiplicity);
                for (const auto& ps : spec.given_poles())
                    v = v / ipow(abs2(t - to_cplx<R>(ps.location)), ps.multiplicity);
                w[static_cast<std::size_t>(j)] = v;
            }
            break;
        case WeightKind::EssentialExp: {
            const Cplx<R> a = to_cplx<R>(spec.essential_center());
            const double sign = spec.essential_sign() == EssentialSign::Plus ? 2.0 : -2.0;
            for (int j = 0; j < n; ++j) {
                const Cplx<R> u = a - nodes[static_cast<std::size_t>(j)];
                w[static_cast<std::size_t>(j)] = Ops<R>::exp_(to_real<R>(sign) * u.re / abs2(u));
            }
            break;
        }
        case WeightKind::LogLaurent:
            for (int j = 0; j < n; ++j) {
                const Cplx<R> t = nodes[static_cast<std::size_t>(j)];
                R lw = to_real<R>(spec.log_coeffs()[0].real());
                Cplx<R> tk{one, to_real<R>(0.0)};
                for (std::size_t k = 1; k < spec.log_coeffs().size(); ++k) {
                    tk = tk * t;
                    const Cplx<R> lk = to_cplx<R>(spec.log_coeffs()[k]);
                    lw = lw + two * (lk * tk).re;
                }
                w[static_cast<std::size_t>(j)] = Ops<R>::exp_(lw);
            }
            break;
    }
    return w;
}

template <class R>
std::vector<Cplx<R>> moment_pass(const WeightSpec& spec, int k_max, int n) {
    const auto nodes = unit_nodes<R>(n);
    const auto w = weight_samples<R>(spec, nodes);
    const R scale = Ops<R>::two_pi() / to_real<R>(static_cast<double>(n));
    const Cplx<R> zero{to_real<R>(0.0), to_real<R>(0.0)};

    std::vector<Cplx<R>> m(static_cast<std::size_t>(k_max + 1), zero);
    for (int k = 0; k <= k_max; ++k) {
        Cplx<R> acc = zero;
        for (int j = 0; j < n; ++j) {
            const long long t = (static_cast<long long>(j) * k) % n;
            acc += w[static_cast<std::size_t>(j)] * conj(nodes[static_cast<std::size_t>(t)]);
        }
        m[static_cast<std::size_t>(k)] = Cplx<R>{scale, to_real<R>(0.0)} * acc;
    }
    return m;
}

template <class R>
MomentTable moments_impl(const WeightSpec& spec, int n_max, PrecisionSpec precision) {
    const int k_max = n_max + 1;
    int n = static_cast<int>(next_pow2(static_cast<std::size_t>(std::max(4 * n_max, 1024))));
    auto prev = moment_pass<R>(spec, k_max, n);
    while (n <= (1 << 20)) {
        n *= 2;
        auto cur = moment_pass<R>(spec, k_max, n);
        R diff = to_real<R>(0.0);
        for (std::size_t i = 0; i < cur.size(); ++i) {
            const R d = Ops<R>::sqrt_(abs2(cur[i] - prev[i]));
            if (diff < d) diff = d;
        }
        const R m0 = cur[0].re;
        // stabilization threshold: working epsilon scaled by the summation length
        const R tol = to_real<R>(16.0 * n * Ops<R>::eps()) * m0;
        if (diff <= tol) {
            MomentTable table;
            table.precision = precision;
            table.nodes_used = n;
            table.m.resize(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i)
                table.m[i] = {Ops<R>::to_dd(cur[i].re), Ops<R>::to_dd(cur[i].im)};
            return table;
        }
        prev = std::move(cur);
    }
    raise(ErrorKind::QuadratureStall, "moments did not stabilize at 2^20 nodes");
}

template <class R>
Cplx<R> moment_r(const MomentTable& table, int k);

template <>
Cplx<double> moment_r<double>(const MomentTable& table, int k) {
    const CplxDD v = table.at(k);
    return {to_double(v.re), to_double(v.im)};
}
template <>
Cplx<DD> moment_r<DD>(const MomentTable& table, int k) {
    return table.at(k);
}
template <>
Cplx<MpReal> moment_r<MpReal>(const MomentTable& table, int k) {
    const CplxDD v = table.at(k);
    return {MpReal(v.re.hi) + MpReal(v.re.lo), MpReal(v.im.hi) + MpReal(v.im.lo)};
}

// <f, g> = sum_{j,k} f_j conj(g_k) m_{k-j} for coefficient vectors
template <class R>
Cplx<R> inner_product(const std::vector<Cplx<R>>& f, const std::vector<Cplx<R>>& g,
                      const MomentTable& table) {
    Cplx<R> acc{to_real<R>(0.0), to_real<R>(0.0)};
    for (std::size_t j = 0; j < f.size(); ++j)
        for (std::size_t k = 0; k < g.size(); ++k)
            acc += f[j] * conj(g[k]) * moment_r<R>(table, static_cast<int>(k) - static_cast<int>(j));
    return acc;
}

template <class R>
OracleResult levinson_impl(const MomentTable& table, int n_max) {
    OracleResult out;
    out.precision = table.precision;

    std::vector<Cplx<R>> phi = {Cplx<R>{to_real<R>(1.0), to_real<R>(0.0)}};
    R norm2 = moment_r<R>(table, 0).re;
    if (!(to_double(Ops<R>::to_dd(norm2)) > 0.0)) raise(ErrorKind::LostPositivity, "m_0 must be positive");

    auto push_state = [&](const std::vector<Cplx<R>>& p, const R& nrm2) {
        std::vector<CplxDD> row(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) row[i] = {Ops<R>::to_dd(p[i].re), Ops<R>::to_dd(p[i].im)};
        out.monic.push_back(std::move(row));
        out.kappas.push_back(Ops<R>::to_dd(to_real<R>(1.0) / Ops<R>::sqrt_(nrm2)));
    };
    push_state(phi, norm2);

    for (int n = 0; n < n_max; ++n) {
        std::vector<Cplx<R>> zphi(phi.size() + 1, Cplx<R>{to_real<R>(0.0), to_real<R>(0.0)});
        for (std::size_t i = 0; i < phi.size(); ++i) zphi[i + 1] = phi[i];
        std::vector<Cplx<R>> star(phi.size());
        for (std::size_t i = 0; i < phi.size(); ++i) star[i] = conj(phi[phi.size() - 1 - i]);

        Cplx<R> alpha_bar = inner_product<R>(zphi, star, table);
        alpha_bar = {alpha_bar.re / norm2, alpha_bar.im / norm2};
        const R one_minus = to_real<R>(1.0) - abs2(alpha_bar);
        if (!(to_double(Ops<R>::to_dd(one_minus)) > 0.0))
            raise(ErrorKind::LostPositivity,
                  "1 - |alpha_" + std::to_string(n) + "|^2 <= 0; rerun at higher precision");

        std::vector<Cplx<R>> next(zphi.size());
        for (std::size_t i = 0; i < next.size(); ++i) {
            const Cplx<R> s = i < star.size() ? star[i] : Cplx<R>{to_real<R>(0.0), to_real<R>(0.0)};
            next[i] = zphi[i] - alpha_bar * s;
        }
        phi = std::move(next);
        norm2 = norm2 * one_minus;
        out.alphas.push_back({Ops<R>::to_dd(alpha_bar.re), -Ops<R>::to_dd(alpha_bar.im)});
        push_state(phi, norm2);
    }
    return out;
}

}  // namespace

PrecisionSpec PrecisionSpec::parse(const std::string& text) {
    PrecisionSpec p;
    if (text == "f64" || text == "double" || text == "binary64") {
        p.kind = Kind::Binary64;
    } else if (text == "dd" || text == "double-double") {
        p.kind = Kind::DoubleDouble;
    } else if (!text.empty() && text[0] == 'd' && text.find_first_not_of("0123456789", 1) == std::string::npos &&
               text.size() > 1) {
        p.kind = Kind::Digits;
        p.digits = std::max(10, std::atoi(text.c_str() + 1));
    } else {
        raise(ErrorKind::Config, "unknown precision '" + text + "' (use f64, dd, or d<digits>)");
    }
    return p;
}

std::string PrecisionSpec::name() const {
    switch (kind) {
        case Kind::Binary64: return "binary64";
        case Kind::DoubleDouble: return "dd";
        case Kind::Digits: return "d" + std::to_string(digits);
    }
    return "";
}

MomentTable moments(const WeightSpec& spec, int n_max, PrecisionSpec precision) {
    if (n_max < 1) raise(ErrorKind::Config, "n_max must be >= 1");
    switch (precision.kind) {
        case PrecisionSpec::Kind::Binary64:
            return moments_impl<double>(spec, n_max, precision);
        case PrecisionSpec::Kind::DoubleDouble:
            return moments_impl<DD>(spec, n_max, precision);
        case PrecisionSpec::Kind::Digits:
            MpReal::default_precision(static_cast<unsigned>(precision.digits));
            return moments_impl<MpReal>(spec, n_max, precision);
    }
    raise(ErrorKind::Config, "bad precision");
}

OracleResult levinson(const MomentTable& table, int n_max) {
    if (n_max > table.max_index())
        raise(ErrorKind::Config, "moment table too short for requested degree");
    switch (table.precision.kind) {
        case PrecisionSpec::Kind::Binary64:
            return levinson_impl<double>(table, n_max);
        case PrecisionSpec::Kind::DoubleDouble:
            return levinson_impl<DD>(table, n_max);
        case PrecisionSpec::Kind::Digits:
            MpReal::default_precision(static_cast<unsigned>(table.precision.digits));
            return levinson_impl<MpReal>(table, n_max);
    }
    raise(ErrorKind::Config, "bad precision");
}

OracleResult oracle_run(const WeightSpec& spec, int n_max, PrecisionSpec precision) {
    return levinson(moments(spec, n_max, precision), n_max);
}

MonicPolynomial OracleResult::monic_at(int n) const {
    const auto& row = monic[static_cast<std::size_t>(n)];
    MonicPolynomial p;
    p.degree = static_cast<int>(row.size()) - 1;
    p.coeffs.resize(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) p.coeffs[i] = to_std(row[i]);
    p.coeffs.back() = 1.0;
    return p;
}

std::vector<Complex> zeros_aberth(const MonicPolynomial& p, double tol) {
    if (p.degree < 1) raise(ErrorKind::Config, "root finding needs degree >= 1");
    double maxc = 0.0;
    for (const auto& c : p.coeffs) maxc = std::max(maxc, std::abs(c));

    // deflate exact zeros at the origin; thresholded deflation would eat the
    // genuinely tiny trailing coefficients of high-degree Phi_n
    std::vector<Complex> coeffs = p.coeffs;
    std::vector<Complex> roots;
    while (coeffs.size() > 1 && coeffs.front() == Complex(0.0, 0.0)) {
        roots.push_back(0.0);
        coeffs.erase(coeffs.begin());
    }
    const int d = static_cast<int>(coeffs.size()) - 1;
    if (d == 0) return roots;

    const double r0 = std::clamp(std::pow(std::abs(coeffs[0]), 0.5 / d), 0.05, 2.0);
    std::vector<Complex> z(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        z[static_cast<std::size_t>(i)] = std::polar(r0, 2.0 * M_PI * i / d + 0.5 / d);

    std::vector<Complex> znew(z.size());
    for (int sweep = 0; sweep < 500; ++sweep) {
        // Jacobi-style update: corrections computed from the previous sweep,
        // barrier afterwards; deterministic for any worker count
        parallel_for(z.size(), [&](std::size_t i) {
            Complex pv = 0.0, dv = 0.0;
            for (int k = d; k >= 0; --k) {
                dv = dv * z[i] + pv;
                pv = pv * z[i] + coeffs[static_cast<std::size_t>(k)];
            }
            const Complex w = dv == 0.0 ? Complex(1e-30, 0.0) : pv / dv;
            Complex s = 0.0;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            znew[i] = z[i] - w / (1.0 - w * s);
        });
        double step = 0.0, res = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            step = std::max(step, std::abs(znew[i] - z[i]) / (1.0 + std::abs(znew[i])));
            z[i] = znew[i];
            Complex pv = 0.0;
            for (int k = d; k >= 0; --k) pv = pv * z[i] + coeffs[static_cast<std::size_t>(k)];
            res = std::max(res, std::abs(pv));
        }
        // step settles at the rounding jitter of the root set; the residual
        // contract is the primary gate
        if (step <= 1e-10 && res <= tol * maxc) {
            roots.insert(roots.end(), z.begin(), z.end());
            return roots;
        }
    }
    raise(ErrorKind::NoConvergence, "Aberth iteration did not converge in 500 sweeps");
}

std::vector<ZeroCluster> cluster_zeros(const std::vector<Complex>& zeros, double tol) {
    std::vector<ZeroCluster> clusters;
    for (const auto& z : zeros) clusters.push_back({z, 1, 0.0});

    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < clusters.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < clusters.size() && !merged; ++j) {
                const int m = clusters[i].count + clusters[j].count;
                const double guard = 4.0 * std::pow(tol, 1.0 / m);
                if (std::abs(clusters[i].location - clusters[j].location) <= guard) {
                    const double wi = clusters[i].count, wj = clusters[j].count;
                    const Complex center =
                        (wi * clusters[i].location + wj * clusters[j].location) / (wi + wj);
                    const double radius =
                        std::max(clusters[i].radius + std::abs(clusters[i].location - center),
                                 clusters[j].radius + std::abs(clusters[j].location - center));
                    clusters[i] = {center, m, radius};
                    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
        }
    }
    return clusters;
}

CompareReport compare(const CanonicalEstimates& canonical, const OracleResult& oracle) {
    CompareReport report;
    // rounding allowance on top of the analytic truncation bounds (the
    // canonical side runs in binary64)
    const auto slack = [](double scale) { return 1e-13 * std::max(1.0, scale); };

    for (std::size_t i = 0; i < canonical.alphas.size(); ++i) {
        const int n = canonical.n_min + static_cast<int>(i);
        CompareRow row;
        row.n = n;
        row.alpha_err = std::abs(canonical.alphas[i].alpha - oracle.alpha(n));
        row.alpha_bound = canonical.alphas[i].bound;
        bool ok = row.alpha_err <= row.alpha_bound + slack(std::abs(oracle.alpha(n)));
        if (i < canonical.kappas.size()) {
            row.kappa_err = std::abs(canonical.kappas[i].value - oracle.kappa(n));
            row.kappa_bound = canonical.kappas[i].bound;
            ok = ok && row.kappa_err <= row.kappa_bound + slack(oracle.kappa(n));
        }
        if (i < canonical.monic.size()) {
            const auto om = oracle.monic_at(n);
            double err = 0.0;
            for (int k = 0; k <= om.degree; ++k)
                err = std::max(err, std::abs(canonical.monic[i].coeffs[static_cast<std::size_t>(k)] -
                                             om.coeffs[static_cast<std::size_t>(k)]));
            row.coeff_err = err;
            row.coeff_bound = i < canonical.monic_bounds.size() ? canonical.monic_bounds[i] : 0.0;
            ok = ok && err <= row.coeff_bound + slack(1.0);
        }
        row.within_bounds = ok;
        report.all_within_bounds = report.all_within_bounds && ok;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace szego
