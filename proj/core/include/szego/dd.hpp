#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace szego {

// Double-double arithmetic (~31 significant digits), the default oracle
// precision. Unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h), lo(0.0) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}
};

namespace ddk {

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

}  // namespace ddk

inline DD operator+(DD a, DD b) {
    DD s = ddk::two_sum(a.hi, b.hi);
    DD t = ddk::two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = ddk::quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return ddk::quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
    DD p = ddk::two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return ddk::quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
    const double q1 = a.hi / b.hi;
    DD r = a - b * DD(q1);
    const double q2 = r.hi / b.hi;
    r = r - b * DD(q2);
    const double q3 = r.hi / b.hi;
    DD q = ddk::quick_two_sum(q1, q2);
    return q + DD(q3);
}

inline DD& operator+=(DD& a, DD b) { return a = a + b; }
inline DD& operator-=(DD& a, DD b) { return a = a - b; }
inline DD& operator*=(DD& a, DD b) { return a = a * b; }
inline DD& operator/=(DD& a, DD b) { return a = a / b; }

inline bool operator<(DD a, DD b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DD a, DD b) { return b < a; }
inline bool operator<=(DD a, DD b) { return !(b < a); }
inline bool operator>=(DD a, DD b) { return !(a < b); }
inline bool operator==(DD a, DD b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(DD a, DD b) { return !(a == b); }

inline double to_double(DD a) { return a.hi; }
inline DD fabs(DD a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline DD ldexp(DD a, int e) { return {std::ldexp(a.hi, e), std::ldexp(a.lo, e)}; }

inline DD sqrt(DD a) {
    if (a.hi == 0.0 && a.lo == 0.0) return {};
    // Karp's high/low split: y approximates sqrt, one correction step.
    const double x = 1.0 / std::sqrt(a.hi);
    const double y = a.hi * x;
    DD y2 = ddk::two_prod(y, y);
    DD corr = (a - y2) * DD(x * 0.5);
    return DD(y) + corr;
}

namespace ddc {
inline constexpr DD pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr DD two_pi{6.283185307179586232e+00, 2.449293598294706414e-16};
inline constexpr DD half_pi{1.570796326794896558e+00, 6.123233995736766036e-17};
inline constexpr DD ln2{6.931471805599452862e-01, 2.319046813846299558e-17};
}  // namespace ddc

inline DD exp(DD a) {
    if (a.hi > 709.0) return {HUGE_VAL, 0.0};
    if (a.hi < -709.0) return {};
    const double m = std::round(a.hi / ddc::ln2.hi);
    DD r = a - ddc::ln2 * DD(m);
    // |r| <= ln2/2; 26 Taylor terms reach below 1e-38
    DD sum(1.0), term(1.0);
    for (int k = 1; k <= 26; ++k) {
        term = term * r / DD(static_cast<double>(k));
        sum += term;
    }
    return ldexp(sum, static_cast<int>(m));
}

inline DD log(DD a) {
    // Newton correction of the double log: log a = y + a e^{-y} - 1
    double y0 = std::log(a.hi);
    DD y(y0);
    for (int i = 0; i < 2; ++i) y = y + a * exp(-y) - DD(1.0);
    return y;
}

namespace ddk {

// sin/cos on |r| <= pi/4 by Taylor series
inline void sincos_taylor(DD r, DD& s, DD& c) {
    DD r2 = r * r;
    DD term = r;
    s = r;
    for (int k = 1; k <= 14; ++k) {
        term = term * r2 / DD(static_cast<double>(2 * k) * static_cast<double>(2 * k + 1));
        s = (k % 2 == 1) ? s - term : s + term;
    }
    term = DD(1.0);
    c = DD(1.0);
    for (int k = 1; k <= 14; ++k) {
        term = term * r2 / DD(static_cast<double>(2 * k - 1) * static_cast<double>(2 * k));
        c = (k % 2 == 1) ? c - term : c + term;
    }
}

}  // namespace ddk

inline void sincos(DD a, DD& s, DD& c) {
    const double k = std::round(a.hi / ddc::half_pi.hi);
    DD r = a - ddc::half_pi * DD(k);
    DD sr, cr;
    ddk::sincos_taylor(r, sr, cr);
    switch (static_cast<std::int64_t>(k) & 3) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = -sr; break;
        case 2: s = -sr; c = -cr; break;
        default: s = -cr; c = sr; break;
    }
}

inline DD sin(DD a) {
    DD s, c;
    sincos(a, s, c);
    return s;
}

inline DD cos(DD a) {
    DD s, c;
    sincos(a, s, c);
    return c;
}

}  // namespace szego
