#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cubic7/arithgrp/tube_domain.hpp"

namespace cubic7 {

// a + b sqrt21 in Q(sqrt21).
struct QuadInteger {
    Rational a, b;

    static std::optional<QuadInteger> from_number(const AlgebraicNumber& x);
    AlgebraicNumber value() const;
    QuadInteger conjugate() const { return {a, -b}; }
    Rational norm() const { return a * a - 21 * b * b; }
    Rational trace() const { return 2 * a; }
    // 2a, 2b integers of equal parity.
    bool integral() const;
    friend QuadInteger operator*(const QuadInteger& x, const QuadInteger& y);
    QuadInteger inverse() const;
};

// (7 + sqrt21) / 2, generator of the prime over 7.
QuadInteger prime_over_seven();
// (5 + sqrt21) / 2.
QuadInteger fundamental_unit();
bool in_prime(const QuadInteger& x);
bool in_prime_inverse(const QuadInteger& x);

// M -> (M, C M' C^-1) with ' the Galois conjugation and C = [[0,-1],[1,0]].
std::pair<NumberMatrix, NumberMatrix> hilbert_map(const NumberMatrix& m);
// a, d integral, b in the inverse prime, c in the prime.
bool hilbert_member(const NumberMatrix& m);
// First factor of a pair in the identity coset, read back over Q(sqrt21).
NumberMatrix hilbert_preimage(const NumberMatrix& h1);
// Random words in elementary generators of the Hilbert group; entries stay
// below height in absolute value on every radical part.
std::vector<NumberMatrix> hilbert_sample(unsigned count, long height, unsigned seed = 1);

struct HilbertRoundtrip {
    NumberMatrix m;
    TypedElementRank4 element;
    IntMatrix image;
    bool identity_coset = false;
    bool round_trips = false;
};
HilbertRoundtrip hilbert_roundtrip(const NumberMatrix& m);

// p + q i + r j + s k with i^2 = 21, j^2 = 6.
struct Quaternion {
    long p = 0, q = 0, r = 0, s = 0;
    long reduced_norm() const { return p * p - 21 * q * q - 6 * r * r + 126 * s * s; }
    std::string to_string() const;
};
NumberMatrix quaternion_matrix(const Quaternion& x);
// A X A^-1 with A = [[0, 6^(-1/4)], [-6^(1/4), 0]], evaluated over the
// extension by 6^(1/4); errors if the result leaves the tube field.
NumberMatrix conjugate_by_quartic(const NumberMatrix& x);

struct QuaternionEmbedding {
    Quaternion unit;
    TypedElementRank3 element;
    IntMatrix image;
    bool even_coords = false;
};
QuaternionEmbedding quaternion_embed(const Quaternion& x);
// Norm one quaternions with |coords| <= box other than +-1, by sup norm, then l1 norm,
// then lexicographic descending.
std::vector<Quaternion> quaternion_units(long box);
// Every solution of u^2 - 21v^2 - 6w^2 + 14x^2 = 4 in the box has 3 | x.
bool mod3_lemma(long box);

}  // namespace cubic7
