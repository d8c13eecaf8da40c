#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubic7/exactnum/field.hpp"

namespace cubic7 {

enum class Sign { negative = -1, zero = 0, positive = 1 };

// Immutable element of a catalog field, stored as integer numerators over a
// common positive denominator in the power basis of the field generator.
class AlgebraicNumber {
public:
    AlgebraicNumber();
    AlgebraicNumber(int v);
    AlgebraicNumber(long v);
    AlgebraicNumber(const Integer& v);
    AlgebraicNumber(const Rational& v);
    AlgebraicNumber(FieldPtr field, const std::vector<Rational>& coords);

    static AlgebraicNumber generator(const FieldPtr& field);
    // Reduces an arbitrary polynomial in the generator.
    static AlgebraicNumber from_poly(const FieldPtr& field, const QPoly& p);

    const FieldPtr& field() const { return field_; }
    std::vector<Rational> coords() const;
    Rational coord(int i) const;
    QPoly to_poly() const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational to_rational() const;

    AlgebraicNumber inverse() const;
    AlgebraicNumber pow(long e) const;
    // Complex conjugation under the designated embedding.
    AlgebraicNumber conj() const;
    // Multiquadratic automorphism negating sqrt(r_i) for each bit i of flips.
    AlgebraicNumber galois(unsigned flips) const;

    Box enclosure(unsigned bits) const;
    std::complex<double> approx() const;

    // "(c0, c1, ...) over m(a)"
    std::string to_string() const;
    // Human-readable form using named constants: "1/2 + 3*zeta7^2".
    std::string display() const;
    std::size_t hash() const;

    friend AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend AlgebraicNumber operator-(const AlgebraicNumber& a);
    friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);
    friend bool operator!=(const AlgebraicNumber& a, const AlgebraicNumber& b) { return !(a == b); }

    AlgebraicNumber& operator+=(const AlgebraicNumber& o) { return *this = *this + o; }
    AlgebraicNumber& operator-=(const AlgebraicNumber& o) { return *this = *this - o; }
    AlgebraicNumber& operator*=(const AlgebraicNumber& o) { return *this = *this * o; }
    AlgebraicNumber& operator/=(const AlgebraicNumber& o) { return *this = *this / o; }

private:
    friend AlgebraicNumber coerce(const AlgebraicNumber& x, const FieldPtr& to);
    AlgebraicNumber scaled(const Rational& q) const;
    void normalize();

    FieldPtr field_;
    std::vector<Integer> num_;
    Integer den_{1};
};

using Number = AlgebraicNumber;
using NumberMatrix = Matrix<AlgebraicNumber>;

inline bool is_zero(const AlgebraicNumber& x) { return x.is_zero(); }

struct AlgebraicHash {
    std::size_t operator()(const AlgebraicNumber& x) const { return x.hash(); }
};

// Image of x in a field containing its field.
AlgebraicNumber coerce(const AlgebraicNumber& x, const FieldPtr& to);
// Smallest field of the two holding both operands.
FieldPtr common_field(const AlgebraicNumber& a, const AlgebraicNumber& b);

Sign sign_of(const AlgebraicNumber& x);
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

// exp(2 pi i k / n) inside f.
AlgebraicNumber root_of_unity(int n, long k, const FieldPtr& f);
// Generator exp(2 pi i / n) of Q(zeta_n).
AlgebraicNumber zeta(int n);
// Principal square root: positive, or positive imaginary part.
std::optional<AlgebraicNumber> try_sqrt(long d, const FieldPtr& f);
AlgebraicNumber sqrt_in(long d, const FieldPtr& f);
AlgebraicNumber sqrt_of(long d);
// Named constants: zetaN, omega, i, sqrtN, sqrt-N.
std::optional<AlgebraicNumber> named_constant(std::string_view name);

AlgebraicNumber parse_algebraic(std::string_view text);
// Norm down to Q: product of all embeddings via the multiplication matrix.
Rational field_norm(const AlgebraicNumber& x);

NumberMatrix to_number_matrix(const QMatrix& m);
NumberMatrix coerce(const NumberMatrix& m, const FieldPtr& to);
FieldPtr common_field(const NumberMatrix& m);

}  // namespace cubic7
