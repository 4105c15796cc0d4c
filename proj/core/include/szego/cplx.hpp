#pragma once

#include <complex>

#include "szego/dd.hpp"

namespace szego {

// Minimal complex-over-anything template. Used by the oracle so the same
// Levinson code runs in binary64, double-double and mpfr scalars.
template <class R>
struct Cplx {
    R re{};
    R im{};

    Cplx() = default;
    Cplx(R r) : re(r) {}
    Cplx(R r, R i) : re(r), im(i) {}
};

template <class R>
Cplx<R> operator+(const Cplx<R>& a, const Cplx<R>& b) {
    return {a.re + b.re, a.im + b.im};
}
template <class R>
Cplx<R> operator-(const Cplx<R>& a, const Cplx<R>& b) {
    return {a.re - b.re, a.im - b.im};
}
template <class R>
Cplx<R> operator-(const Cplx<R>& a) {
    return {-a.re, -a.im};
}
template <class R>
Cplx<R> operator*(const Cplx<R>& a, const Cplx<R>& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <class R>
Cplx<R> operator*(const R& s, const Cplx<R>& a) {
    return {s * a.re, s * a.im};
}
template <class R>
Cplx<R> operator/(const Cplx<R>& a, const Cplx<R>& b) {
    const R d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
template <class R>
Cplx<R>& operator+=(Cplx<R>& a, const Cplx<R>& b) {
    return a = a + b;
}
template <class R>
Cplx<R>& operator-=(Cplx<R>& a, const Cplx<R>& b) {
    return a = a - b;
}
template <class R>
Cplx<R>& operator*=(Cplx<R>& a, const Cplx<R>& b) {
    return a = a * b;
}

template <class R>
Cplx<R> conj(const Cplx<R>& a) {
    return {a.re, -a.im};
}
template <class R>
R abs2(const Cplx<R>& a) {
    return a.re * a.re + a.im * a.im;
}

using CplxDD = Cplx<DD>;

inline std::complex<double> to_std(const CplxDD& a) { return {to_double(a.re), to_double(a.im)}; }
inline CplxDD from_std(const std::complex<double>& a) { return {DD(a.real()), DD(a.imag())}; }

}  // namespace szego
