#pragma once

#include <cmath>

namespace wr {
namespace detail {

// Double-double value v = hi + lo with |lo| <= ulp(hi)/2, ~31 significant digits.
// Used for the ill-conditioned alternating sums (terminating hypergeometric series,
// indefinite-weight bilinear pairings) where plain doubles lose most of their digits.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD dd_from(double x) { return {x, 0.0}; }

inline double dd_to_double(const DD& x) { return x.hi + x.lo; }

// hi + lo == a + b exactly.
inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b| or a == 0
inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

// hi + lo == a * b exactly.
inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(const DD& a, const DD& b) {
    const DD s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline DD dd_add_d(const DD& a, double b) {
    const DD s = two_sum(a.hi, b);
    return quick_two_sum(s.hi, s.lo + a.lo);
}

inline DD dd_neg(const DD& a) { return {-a.hi, -a.lo}; }

inline DD dd_sub(const DD& a, const DD& b) { return dd_add(a, dd_neg(b)); }

inline DD dd_mul(const DD& a, const DD& b) {
    const DD p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DD dd_mul_d(const DD& a, double b) {
    const DD p = two_prod(a.hi, b);
    return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline DD dd_div(const DD& a, const DD& b) {
    const double q1 = a.hi / b.hi;
    DD r = dd_sub(a, dd_mul_d(b, q1));
    const double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul_d(b, q2));
    const double q3 = r.hi / b.hi;
    return dd_add_d(quick_two_sum(q1, q2), q3);
}

inline DD dd_abs(const DD& a) { return a.hi < 0.0 ? dd_neg(a) : a; }

inline DD dd_sqrt(const DD& a) {
    if (a.hi == 0.0 && a.lo == 0.0) return {0.0, 0.0};
    const double x = std::sqrt(a.hi);
    const DD r = dd_sub(a, two_prod(x, x));
    return quick_two_sum(x, r.hi / (2.0 * x));
}

// Rising factorial (x)_n; the base is carried in full precision.
inline DD dd_pochhammer(const DD& x, int n) {
    DD out = dd_from(1.0);
    for (int k = 0; k < n; ++k) out = dd_mul(out, dd_add_d(x, static_cast<double>(k)));
    return out;
}

inline DD dd_factorial(int n) {
    DD out = dd_from(1.0);
    for (int k = 2; k <= n; ++k) out = dd_mul_d(out, static_cast<double>(k));
    return out;
}

}  // namespace detail
}  // namespace wr
