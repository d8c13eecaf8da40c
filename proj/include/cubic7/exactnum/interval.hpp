#pragma once

#include "cubic7/exactnum/rational.hpp"

namespace cubic7 {

// Closed interval with exact rational endpoints.
struct Interval {
    Rational lo, hi;

    static Interval point(const Rational& v) { return {v, v}; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    Rational width() const { return hi - lo; }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& s, const Interval& a);

// Widens to dyadic endpoints with denominator 2^bits.
Interval round_out(const Interval& a, unsigned bits);
// Enclosure of sqrt over an interval with lo >= 0.
Interval sqrt_enclosure(const Interval& a, unsigned bits);

// Rectangular complex enclosure.
struct Box {
    Interval re, im;

    static Box point(const Rational& v) { return {Interval::point(v), Interval::point(Rational(0))}; }
};

Box operator+(const Box& a, const Box& b);
Box operator-(const Box& a, const Box& b);
Box operator*(const Box& a, const Box& b);
Box operator*(const Rational& s, const Box& a);
Box round_out(const Box& a, unsigned bits);

}  // namespace cubic7
