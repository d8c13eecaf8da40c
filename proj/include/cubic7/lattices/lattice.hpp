#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic7/exactnum/matrix.hpp"

namespace cubic7 {

using IntMatrix = Matrix<Integer>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Nondegenerate integral lattice given by its symmetric Gram matrix.
class Lattice {
public:
    explicit Lattice(IntMatrix gram);

    const IntMatrix& gram() const { return gram_; }
    std::size_t rank() const { return gram_.rows(); }
    Integer determinant() const { return det_; }
    // (positive, negative) from an exact congruence diagonalization.
    std::pair<int, int> signature() const { return signature_; }
    bool is_even() const;

    Integer norm(const IntVector& v) const;
    Rational pairing(const RatVector& x, const RatVector& y) const;

private:
    IntMatrix gram_;
    Integer det_;
    std::pair<int, int> signature_;
};

// Rank 3 lattice with Gram [[-2,1,0],[1,10,0],[0,0,-28]].
Lattice transcendental_rank3();
// Rank 4 lattice with Gram [[-2,1,0,0],[1,10,0,0],[0,0,0,7],[0,0,7,0]].
Lattice transcendental_rank4();
Lattice hyperbolic_plane();
Lattice a2_lattice();
Lattice e8_lattice();

// Quoted genus symbols for the two transcendental lattices. Stored as
// annotations only; the group orders and q-values they encode are verified.
std::string genus_annotation(const Lattice& l);

Lattice lattice_from_json(const std::string& text);

struct SmithForm {
    IntMatrix u, d, v;  // u * m * v = d
};
SmithForm smith_normal_form(const IntMatrix& m);
Integer integer_determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

// A_L = L^dual / L as a product of cyclic groups of order invariant_factors[i],
// generated by generators[i] in basis coordinates.
struct DiscriminantGroup {
    std::size_t rank = 0;  // of the ambient lattice
    std::vector<Integer> invariant_factors;
    std::vector<RatVector> generators;
    std::vector<Rational> q_values;             // in [0, 2)
    std::vector<std::vector<Rational>> b_values;  // in [0, 1)

    Integer order() const;
    // Element sum c_i * generators[i] reduced mod L.
    RatVector element(const std::vector<long>& coeffs) const;
    // Calls f on the coefficient vector of every element.
    template <typename F>
    void for_each(F f) const {
        std::vector<long> c(invariant_factors.size(), 0);
        for (;;) {
            f(c);
            std::size_t i = 0;
            for (; i < c.size(); ++i) {
                if (++c[i] < invariant_factors[i].get_si()) break;
                c[i] = 0;
            }
            if (i == c.size()) return;
        }
    }
};

DiscriminantGroup discriminant_group(const Lattice& l);
Rational discriminant_q(const Lattice& l, const RatVector& x);  // in [0, 2)
Rational discriminant_b(const Lattice& l, const RatVector& x, const RatVector& y);  // in [0, 1)
// q(x+y) - q(x) - q(y) = 2 b(x,y) mod 2 over every pair of elements.
bool polarization_consistent(const Lattice& l, const DiscriminantGroup& a);
std::string discriminant_json(const Lattice& l, const DiscriminantGroup& a);

struct MilgramReport {
    int phase = 0;           // Gauss sum is sqrt|A| * exp(2 pi i phase / 8)
    int signature_mod8 = 0;  // (p - q) mod 8
    bool matches = false;
};
MilgramReport milgram_phase(const Lattice& l);

// Nonzero v with v.G.v = 0 and max |v_i| <= bound, split over workers.
// Among hits the smallest sup norm wins, then the earliest leading coordinate.
std::optional<IntVector> isotropic_search(const Lattice& l, long bound, unsigned workers = 0);

// sum_{i <= j} coeffs(i, j) x_i x_j
struct QuadraticForm {
    IntMatrix coeffs;
    std::size_t variables() const { return coeffs.rows(); }
    Integer eval(const std::vector<Integer>& x) const;
};
// Quadratic polynomial in x1..xn.
QuadraticForm parse_quadratic_form(const std::string& text, int nvars);
// v.G.v / 2 for an even lattice.
QuadraticForm half_norm_form(const Lattice& l);

// True iff the form has no primitive zero modulo the prime power.
bool local_obstruction(const QuadraticForm& f, long modulus);

}  // namespace cubic7
