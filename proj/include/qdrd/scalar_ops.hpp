#pragma once

#include <cmath>
#include <complex>

#include "qdrd/op_counter.hpp"

namespace qdrd {

using Complex = std::complex<double>;

// Counted scalar primitives. All library arithmetic goes through these so
// the per-phase ledger reflects exactly what was executed.

inline double radd(double a, double b, OpCounter& t) {
    t.count_adds();
    return a + b;
}

inline double rsub(double a, double b, OpCounter& t) {
    t.count_adds();
    return a - b;
}

inline double rmul(double a, double b, OpCounter& t) {
    t.count_mults();
    return a * b;
}

inline double rdiv(double a, double b, OpCounter& t) {
    t.count_divs();
    return a / b;
}

inline double rsqrt(double a, OpCounter& t) {
    t.count_sqrts();
    return std::sqrt(a);
}

inline Complex cadd(Complex a, Complex b, OpCounter& t) {
    t.count_adds(2);
    return {a.real() + b.real(), a.imag() + b.imag()};
}

inline Complex csub(Complex a, Complex b, OpCounter& t) {
    t.count_adds(2);
    return {a.real() - b.real(), a.imag() - b.imag()};
}

// 4 real multiplies + 2 real adds, the unit used by the complexity ledger.
inline Complex cmul(Complex a, Complex b, OpCounter& t) {
    t.count_mults(4);
    t.count_adds(2);
    return {a.real() * b.real() - a.imag() * b.imag(),
            a.real() * b.imag() + a.imag() * b.real()};
}

inline Complex cscale(double s, Complex a, OpCounter& t) {
    t.count_mults(2);
    return {s * a.real(), s * a.imag()};
}

inline Complex cdiv_real(Complex a, double d, OpCounter& t) {
    t.count_divs(2);
    return {a.real() / d, a.imag() / d};
}

// |z|^2 as 2 multiplies + 1 add; never a square root.
inline double cabs2(Complex a, OpCounter& t) {
    t.count_mults(2);
    t.count_adds(1);
    return a.real() * a.real() + a.imag() * a.imag();
}

} // namespace qdrd
