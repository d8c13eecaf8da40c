#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubic7/polyalg/forms.hpp"

namespace cubic7 {

// a^2 b^2 - 6ab + 4a + 4b - 3
AlgebraicNumber discriminant_G(const AlgebraicNumber& a, const AlgebraicNumber& b);

struct CurveMembership {
    // on_twist[j]: (a, b) lies on omega^j Z(G), i.e. G(omega^-j a, omega^-j b) = 0.
    std::array<bool, 3> on_twist{};
    int count() const;
};
CurveMembership discriminant_curve(const AlgebraicNumber& a, const AlgebraicNumber& b);

struct SingularPoint {
    std::vector<AlgebraicNumber> coords;
    // Parametrization data when produced by singular_points; k in 0..2, l in 0..6.
    bool parametrized = false;
    int k = 0;
    int l = 0;
    AlgebraicNumber t;
};

// Exact singular points of F_{a,b}, each re-verified by gradient vanishing.
std::vector<SingularPoint> singular_points(const AlgebraicNumber& a, const AlgebraicNumber& b);

enum class SingularityTag { A1, A2, higher_order, higher_corank, nonisolated };
std::string to_string(SingularityTag tag);

struct SingularityClass {
    SingularityTag tag;
    int corank;
    std::size_t hessian_rank;
    // Cubic coefficient along the kernel direction when the corank is 1.
    std::optional<AlgebraicNumber> cubic_term;
};

// Affine input: f need not be homogeneous; p is a point where the gradient vanishes.
SingularityClass classify_affine(const Poly& f, const std::vector<AlgebraicNumber>& p);
// Projective input: F homogeneous, chart chosen at the first nonzero coordinate.
SingularityClass classify(const CubicForm& f, const std::vector<AlgebraicNumber>& p);

struct ZeroPatternReport {
    int patterns_checked = 0;
    // Bitmasks of zero coordinates not excluded by the linear argument.
    std::vector<unsigned> unresolved;
};
// Shows no singular point of F_{a,b} has a zero coordinate by linear elimination per zero pattern.
ZeroPatternReport zero_pattern_check(const AlgebraicNumber& a, const AlgebraicNumber& b);

// (A, B) with [a, b, c, d] in the torus orbit of F_{A,B}; needs a, b nonzero.
std::optional<std::array<AlgebraicNumber, 2>> ab_plane_coordinates(const FamilyPoint& p);

}  // namespace cubic7
