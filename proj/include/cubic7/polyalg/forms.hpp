#pragma once

#include <optional>
#include <vector>

#include "cubic7/polyalg/poly.hpp"

namespace cubic7 {

// (A F)(x) = F(x A) for a row vector x; act(A B, F) = act(A, act(B, F)).
Poly act(const NumberMatrix& a, const Poly& f);

// Echelonized basis of the forms of the given degree fixed by every generator.
std::vector<Poly> invariant_subspace(const std::vector<NumberMatrix>& generators, int degree, int nvars);

std::vector<Poly> jacobian(const Poly& f);
// Hessian of f restricted to the affine chart x_chart = 1, at p scaled into that chart.
NumberMatrix hessian_at(const Poly& f, int chart, const std::vector<AlgebraicNumber>& p);
bool euler_relation_holds(const Poly& f);
bool gradient_vanishes(const Poly& f, const std::vector<AlgebraicNumber>& p);

enum class FamilyTag { C7, F21, L27 };

struct FamilyPoint {
    FamilyTag tag;
    std::vector<AlgebraicNumber> coeffs;
};

// The eight C7 monomials: x_i^2 x_{i+1} (i = 1..6, cyclic), x1x3x5, x2x4x6.
std::vector<Poly> c7_monomials();
// a(x1^2x2 + x3^2x4 + x5^2x6) + b(x2^2x3 + x4^2x5 + x6^2x1) + c x1x3x5 + d x2x4x6.
std::vector<Poly> f21_basis();
// Sum of cubes minus the cube of the sum.
Poly l27_f1();
// The second invariant with x7 = -(x1 + ... + x6).
Poly l27_f2();
Poly f_ab(const AlgebraicNumber& a, const AlgebraicNumber& b);

Poly family_embed(const FamilyPoint& p);
// [a,b,c,d] as C7 coefficients [a,b,a,b,a,b,c,d].
FamilyPoint f21_to_c7(const FamilyPoint& p);
std::optional<FamilyPoint> f21_coordinates(const Poly& f);
std::optional<FamilyPoint> c7_coordinates(const Poly& f);

}  // namespace cubic7
