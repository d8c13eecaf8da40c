#include "cubic7/exactnum/interval.hpp"

#include <algorithm>

#include "cubic7/errors.hpp"

namespace cubic7 {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator*(const Rational& s, const Interval& a) {
    if (sgn(s) >= 0) return {s * a.lo, s * a.hi};
    return {s * a.hi, s * a.lo};
}

Interval round_out(const Interval& a, unsigned bits) {
    Integer scale = Integer(1) << bits;
    Rational lo(floor_of(a.lo * scale), scale);
    Rational hi(ceil_of(a.hi * scale), scale);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

Interval sqrt_enclosure(const Interval& a, unsigned bits) {
    if (sgn(a.lo) < 0) throw MathError("sqrt enclosure of negative interval");
    Integer scale = Integer(1) << bits;
    Integer s2 = scale * scale;
    Integer lo_root = isqrt(floor_of(a.lo * s2));
    Integer hi_arg = ceil_of(a.hi * s2);
    Integer hi_root = isqrt(hi_arg);
    if (hi_root * hi_root != hi_arg) hi_root += 1;
    Rational lo(lo_root, scale), hi(hi_root, scale);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

Box operator+(const Box& a, const Box& b) { return {a.re + b.re, a.im + b.im}; }

Box operator-(const Box& a, const Box& b) { return {a.re - b.re, a.im - b.im}; }

Box operator*(const Box& a, const Box& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Box operator*(const Rational& s, const Box& a) { return {s * a.re, s * a.im}; }

Box round_out(const Box& a, unsigned bits) { return {round_out(a.re, bits), round_out(a.im, bits)}; }

}  // namespace cubic7
