#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubic7/exactnum/algebraic.hpp"
#include "cubic7/lattices/lattice.hpp"

namespace cubic7 {

// Q(sqrt2, sqrt3, sqrt7), home of every radical below.
FieldPtr tube_field();
// sqrt(d) in tube_field for d dividing 42.
AlgebraicNumber root(long d);
// x = sum over d of parts[d] * sqrt(d); zero parts omitted.
std::map<long, Rational> radical_parts(const AlgebraicNumber& x);

NumberMatrix to_number_matrix(const IntMatrix& m);
std::optional<IntMatrix> as_integer_matrix(const NumberMatrix& m);

// h -> B A(h) B^-1 on the rank 3 lattice basis; h in SL2.
NumberMatrix phi1(const NumberMatrix& h);
// (h1, h2) -> B (h1 kron h2) B^-1 on the rank 4 lattice basis.
NumberMatrix phi2(const NumberMatrix& h1, const NumberMatrix& h2);
NumberMatrix sl2_inverse(const NumberMatrix& h);

bool preserves_gram(const IntMatrix& m, const Lattice& l);
IntMatrix isometry_inverse(const IntMatrix& m, const Lattice& l);
// Orientation on a fixed negative definite 2-plane is preserved.
bool in_o_plus(const IntMatrix& m, const Lattice& l);

enum class Z3Action { preserves, negates };
std::string to_string(Z3Action a);
// Order 3 element of the discriminant group.
RatVector three_part_generator(const Lattice& l);
Z3Action z3_action(const IntMatrix& m, const Lattice& l);

using TypeQuad = std::array<long, 4>;
using Label = std::array<int, 3>;
std::string to_string(const TypeQuad& t);
std::string to_string(const Label& l);

// [[(u su' + v sv')/2, (w sw' + x sx')/2], [(w sw' - x sx')/2, (u su' - v sv')/2]]
// with s = sqrt and type (u', v', w', x').
struct TypedElementRank3 {
    TypeQuad type{};
    std::array<long, 4> coords{};  // u, v, w, x
    NumberMatrix matrix() const;
    long norm() const;  // u^2 u' - v^2 v' - w^2 w' + x^2 x'
    std::string to_string() const;
    bool operator==(const TypedElementRank3& o) const = default;
};

// Klein-four orbits of (1,21,6,14) and (2,42,3,7).
std::vector<TypeQuad> rank3_types();
TypeQuad rank3_identity_type();
// u = v and w = x mod 2.
bool rank3_parity_rule(const TypedElementRank3& e);
IntMatrix gamma2_member(const TypedElementRank3& e);
// Preimage of an integral matrix under phi1, first nonzero coordinate positive.
std::optional<TypedElementRank3> rank3_retype(const IntMatrix& m);
TypeQuad rank3_compose(const TypeQuad& a, const TypeQuad& b);
// Norm 4 solutions with integral image and |coords| <= radius; cached.
const std::vector<TypedElementRank3>& enumerate_rank3(const TypeQuad& t, long radius);

struct Table2Row {
    TypedElementRank3 representative;
    bool member = false;
    Z3Action z3 = Z3Action::preserves;
    bool quoted_preserves = false;
    Label quoted_label{};
    Label computed_label{};
};
struct Table2Report {
    std::vector<Table2Row> rows;
    bool labels_form_group = false;  // composition is label addition
    bool z3_column_matches = false;
    bool cosets_closed = false;      // H h stays in H
    bool normal = false;             // r H r^-1 stays in H
    std::vector<std::string> flagged;
};
Table2Report verify_table2(long sample_radius = 6);

struct IsometryBoxScan {
    std::size_t isometries = 0;     // O(T1) with entries bounded by the box
    std::size_t special = 0;        // of which in SO+
    std::size_t retyped = 0;        // SO+ members rebuilt exactly from a typed element
    std::size_t stray_retypes = 0;  // non SO+ members that retyped
};
IsometryBoxScan rank3_isometry_scan(long box);

// h1 = [[(a1 sa + b1 sb)/2, (g1 sg + d1 sd)/(2 s7)], [s7 (g2 sg - d2 sd)/2, (a2 sa - b2 sb)/2]]
// h2 = [[(a2 sa + b2 sb)/2, s7 (g2 sg + d2 sd)/2], [(g1 sg - d1 sd)/(2 s7), (a1 sa - b1 sb)/2]]
struct TypedElementRank4 {
    TypeQuad type{};
    std::array<long, 8> coords{};  // a1, a2, b1, b2, g1, g2, d1, d2
    std::pair<NumberMatrix, NumberMatrix> pair() const;
    long norm() const;  // a1 a2 a - b1 b2 b - g1 g2 g + d1 d2 d
    bool determinant_rule() const;  // a1 b2 - a2 b1 = g1 d2 - g2 d1
    std::string to_string() const;
    bool operator==(const TypedElementRank4& o) const = default;
};

std::vector<TypeQuad> rank4_types();
std::vector<TypeQuad> rank4_excluded_types();  // orbit of (2,42,6,14)
IntMatrix gammaprime_member(const TypedElementRank4& e);
std::optional<TypedElementRank4> rank4_retype(const NumberMatrix& h1, const NumberMatrix& h2);
TypeQuad rank4_compose(const TypeQuad& a, const TypeQuad& b);

struct Table3Row {
    TypedElementRank4 representative;
    IntMatrix image;
    Z3Action z3 = Z3Action::preserves;
};
struct Table3Report {
    std::vector<Table3Row> rows;
    bool klein_four = false;
    bool normal = false;
    bool excluded_rejected = false;  // excluded types fail on a small box
    std::size_t excluded_residues = 0;  // see excluded_residue_survivors
};
Table3Report verify_table3(unsigned samples = 20);

// Octuples mod 4 of an excluded type meeting parity, norm 4 and the determinant
// rule; zero rules the excluded orbit out for all integers.
std::size_t excluded_residue_survivors();
// Seeded random words in unipotent and unit generators of the identity coset.
std::vector<TypedElementRank4> sample_rank4_identity(unsigned count, unsigned seed, unsigned max_length = 4);

IntMatrix lattice_involution();  // diag(1,1) plus the negated swap on the rank 4 lattice
std::pair<NumberMatrix, NumberMatrix> f_hat_pair();

struct InvolutionReport {
    bool p_in_o_plus = false;
    bool p_squared_identity = false;
    Integer p_det;
    Z3Action minus_id_rank3 = Z3Action::preserves;
    bool minus_id_rank3_o_plus = false;
    bool f_hat_integral = false;
    bool f_hat_involution = false;
    Integer f_hat_det;
    bool f_hat_o_plus = false;
    Z3Action f_hat_z3 = Z3Action::preserves;
};
InvolutionReport involution_checks();

}  // namespace cubic7
