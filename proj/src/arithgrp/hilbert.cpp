#include "cubic7/arithgrp/hilbert.hpp"

#include <algorithm>
#include <random>

namespace cubic7 {

namespace {

NumberMatrix square2(const AlgebraicNumber& a, const AlgebraicNumber& b, const AlgebraicNumber& c,
                     const AlgebraicNumber& d) {
    NumberMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

QuadInteger entry(const NumberMatrix& m, std::size_t i, std::size_t j) {
    auto q = QuadInteger::from_number(m(i, j));
    if (!q) throw FieldMismatch("entry " + m(i, j).display() + " is outside Q(sqrt21)");
    return *q;
}

// c0 + c1 t with t^2 = sqrt6.
struct QuarticElement {
    AlgebraicNumber c0, c1;
    friend QuarticElement operator*(const QuarticElement& x, const QuarticElement& y) {
        return {x.c0 * y.c0 + x.c1 * y.c1 * root(6), x.c0 * y.c1 + x.c1 * y.c0};
    }
    friend QuarticElement operator+(const QuarticElement& x, const QuarticElement& y) {
        return {x.c0 + y.c0, x.c1 + y.c1};
    }
};

using QuarticMatrix = std::array<std::array<QuarticElement, 2>, 2>;

QuarticMatrix multiply(const QuarticMatrix& x, const QuarticMatrix& y) {
    QuarticMatrix out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) out[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return out;
}

}  // namespace

std::optional<QuadInteger> QuadInteger::from_number(const AlgebraicNumber& x) {
    auto parts = radical_parts(x);
    QuadInteger q{0, 0};
    for (const auto& [r, c] : parts) {
        if (r == 1) q.a = c;
        else if (r == 21) q.b = c;
        else return std::nullopt;
    }
    return q;
}

AlgebraicNumber QuadInteger::value() const { return AlgebraicNumber(a) * root(1) + AlgebraicNumber(b) * root(21); }

bool QuadInteger::integral() const {
    Rational a2 = 2 * a, b2 = 2 * b;
    if (!is_integral(a2) || !is_integral(b2)) return false;
    return (Integer(a2) - Integer(b2)) % 2 == 0;
}

QuadInteger operator*(const QuadInteger& x, const QuadInteger& y) {
    return {x.a * y.a + 21 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadInteger QuadInteger::inverse() const {
    Rational n = norm();
    if (n == 0) throw DivisionByZero("zero has no inverse");
    return {a / n, -b / n};
}

QuadInteger prime_over_seven() { return {Rational(7, 2), Rational(1, 2)}; }

QuadInteger fundamental_unit() { return {Rational(5, 2), Rational(1, 2)}; }

bool in_prime(const QuadInteger& x) { return (x * prime_over_seven().inverse()).integral(); }

bool in_prime_inverse(const QuadInteger& x) { return (x * prime_over_seven()).integral(); }

std::pair<NumberMatrix, NumberMatrix> hilbert_map(const NumberMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw DimensionMismatch("expected a 2x2 matrix");
    QuadInteger a = entry(m, 0, 0), b = entry(m, 0, 1), c = entry(m, 1, 0), d = entry(m, 1, 1);
    QuadInteger det{a.a * d.a + 21 * a.b * d.b - b.a * c.a - 21 * b.b * c.b, a.a * d.b + a.b * d.a - b.a * c.b - b.b * c.a};
    if (det.a != 1 || det.b != 0) throw NotUnimodular("determinant is not 1");
    NumberMatrix first = square2(a.value(), b.value(), c.value(), d.value());
    // C [[a',b'],[c',d']] C^-1 = [[d', -c'], [-b', a']].
    NumberMatrix second = square2(d.conjugate().value(), -c.conjugate().value(), -b.conjugate().value(),
                                  a.conjugate().value());
    return {first, second};
}

bool hilbert_member(const NumberMatrix& m) {
    QuadInteger a = entry(m, 0, 0), b = entry(m, 0, 1), c = entry(m, 1, 0), d = entry(m, 1, 1);
    return a.integral() && d.integral() && in_prime_inverse(b) && in_prime(c);
}

NumberMatrix hilbert_preimage(const NumberMatrix& h1) {
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) entry(h1, i, j);
    return h1;
}

std::vector<NumberMatrix> hilbert_sample(unsigned count, long height, unsigned seed) {
    std::mt19937 rng(seed);
    QuadInteger pi = prime_over_seven(), eps = fundamental_unit();
    QuadInteger one{1, 0};
    auto elementary = [&](int kind) {
        QuadInteger zero{0, 0};
        switch (kind) {
            case 0: return std::array<QuadInteger, 4>{one, pi.inverse(), zero, one};
            case 1: return std::array<QuadInteger, 4>{one, QuadInteger{Rational(-1, 2), Rational(1, 2)}, zero, one};
            case 2: return std::array<QuadInteger, 4>{one, zero, pi, one};
            case 3: return std::array<QuadInteger, 4>{one, zero, pi * QuadInteger{Rational(1, 2), Rational(1, 2)}, one};
            default: return std::array<QuadInteger, 4>{eps, zero, zero, eps.inverse()};
        }
    };
    auto mul = [](const std::array<QuadInteger, 4>& x, const std::array<QuadInteger, 4>& y) {
        auto add = [](const QuadInteger& p, const QuadInteger& q) { return QuadInteger{p.a + q.a, p.b + q.b}; };
        return std::array<QuadInteger, 4>{add(x[0] * y[0], x[1] * y[2]), add(x[0] * y[1], x[1] * y[3]),
                                          add(x[2] * y[0], x[3] * y[2]), add(x[2] * y[1], x[3] * y[3])};
    };
    auto inv = [](const std::array<QuadInteger, 4>& x) {
        auto neg = [](const QuadInteger& p) { return QuadInteger{-p.a, -p.b}; };
        return std::array<QuadInteger, 4>{x[3], neg(x[1]), neg(x[2]), x[0]};
    };
    auto small = [height](const std::array<QuadInteger, 4>& x) {
        for (const auto& e : x)
            if (abs(e.a) > height || abs(e.b) > height) return false;
        return true;
    };
    std::uniform_int_distribution<int> kind(0, 4), flip(0, 1);
    std::vector<NumberMatrix> out;
    std::array<QuadInteger, 4> cur{one, QuadInteger{0, 0}, QuadInteger{0, 0}, one};
    unsigned guard = 0;
    while (out.size() < count && guard++ < 1000 * (count + 1)) {
        auto g = elementary(kind(rng));
        if (flip(rng)) g = inv(g);
        auto next = mul(cur, g);
        if (!small(next)) {
            cur = {one, QuadInteger{0, 0}, QuadInteger{0, 0}, one};
            continue;
        }
        cur = next;
        out.push_back(square2(cur[0].value(), cur[1].value(), cur[2].value(), cur[3].value()));
    }
    return out;
}

HilbertRoundtrip hilbert_roundtrip(const NumberMatrix& m) {
    auto [h1, h2] = hilbert_map(m);
    auto e = rank4_retype(h1, h2);
    if (!e) throw MathError("Hilbert image did not retype");
    HilbertRoundtrip out{m, *e, gammaprime_member(*e), false, false};
    out.identity_coset = e->type == rank4_types()[0];
    auto [g1, g2] = e->pair();
    out.round_trips = hilbert_preimage(g1) == m || hilbert_preimage(-g1) == m;
    return out;
}

std::string Quaternion::to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + "," + std::to_string(s) + ")";
}

NumberMatrix quaternion_matrix(const Quaternion& x) {
    AlgebraicNumber s21 = root(21), one = root(1);
    AlgebraicNumber p(x.p), q(x.q), r(x.r), s(x.s);
    return square2(p * one + q * s21, r * one + s * s21, AlgebraicNumber(6) * (r * one - s * s21), p * one - q * s21);
}

NumberMatrix conjugate_by_quartic(const NumberMatrix& x) {
    AlgebraicNumber zero = AlgebraicNumber(0) * root(1), one = root(1);
    AlgebraicNumber inv_sqrt6 = root(6) / AlgebraicNumber(6);
    // 6^(-1/4) = t / sqrt6.
    QuarticElement t{zero, one}, t_inv{zero, inv_sqrt6}, z{zero, zero};
    QuarticElement minus_t{zero, -one}, minus_t_inv{zero, -inv_sqrt6};
    QuarticMatrix a{{{{z, t_inv}}, {{minus_t, z}}}};
    QuarticMatrix a_inv{{{{z, minus_t_inv}}, {{t, z}}}};
    QuarticMatrix xx{{{{{x(0, 0), zero}, {x(0, 1), zero}}}, {{{x(1, 0), zero}, {x(1, 1), zero}}}}};
    auto y = multiply(multiply(a, xx), a_inv);
    NumberMatrix out(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            if (!y[i][j].c1.is_zero()) throw MathError("conjugation left the tube field");
            out(i, j) = y[i][j].c0;
        }
    return out;
}

QuaternionEmbedding quaternion_embed(const Quaternion& x) {
    if (x.reduced_norm() != 1) throw NormNotOne(x.to_string() + " has reduced norm " + std::to_string(x.reduced_norm()));
    NumberMatrix h = conjugate_by_quartic(quaternion_matrix(x));
    IntMatrix image = [&] {
        auto m = as_integer_matrix(phi1(h));
        if (!m) throw NonIntegralImage(x.to_string());
        return *m;
    }();
    auto e = rank3_retype(image);
    if (!e) throw MathError("quaternion image did not retype");
    QuaternionEmbedding out{x, *e, image, false};
    out.even_coords = std::all_of(e->coords.begin(), e->coords.end(), [](long c) { return c % 2 == 0; });
    if (e->type != rank3_identity_type()) throw MathError("quaternion image is not in the identity coset");
    return out;
}

std::vector<Quaternion> quaternion_units(long box) {
    std::vector<Quaternion> out;
    for (long p = -box; p <= box; ++p)
        for (long q = -box; q <= box; ++q)
            for (long r = -box; r <= box; ++r)
                for (long s = -box; s <= box; ++s) {
                    Quaternion x{p, q, r, s};
                    if (x.reduced_norm() != 1) continue;
                    if (q == 0 && r == 0 && s == 0) continue;
                    out.push_back(x);
                }
    auto sup = [](const Quaternion& x) { return std::max({std::labs(x.p), std::labs(x.q), std::labs(x.r), std::labs(x.s)}); };
    auto l1 = [](const Quaternion& x) { return std::labs(x.p) + std::labs(x.q) + std::labs(x.r) + std::labs(x.s); };
    std::stable_sort(out.begin(), out.end(), [&](const Quaternion& a, const Quaternion& b) {
        if (sup(a) != sup(b)) return sup(a) < sup(b);
        if (l1(a) != l1(b)) return l1(a) < l1(b);
        return std::tie(b.p, b.q, b.r, b.s) < std::tie(a.p, a.q, a.r, a.s);
    });
    return out;
}

bool mod3_lemma(long box) {
    for (long u = -box; u <= box; ++u)
        for (long v = -box; v <= box; ++v)
            for (long w = -box; w <= box; ++w)
                for (long x = -box; x <= box; ++x)
                    if (u * u - 21 * v * v - 6 * w * w + 14 * x * x == 4 && x % 3 != 0) return false;
    return true;
}

}  // namespace cubic7
