#pragma once

#include <array>
#include <string>
#include <vector>

#include "cubic7/singular/singular.hpp"

namespace cubic7 {

// f1 + lambda f2 moved into the F21 family by S.
FamilyPoint pencil_to_f21(const AlgebraicNumber& lambda);

// Target F21 point of the determinantal member after the scaling g.
FamilyPoint determinantal_target();

struct SurfaceParametrization {
    // Index into {z1^2, z2^2, z3^2, z1z2, z1z3, z2z3} for each of the six coordinates.
    std::array<int, 6> slots;
    std::vector<Poly> coordinates() const;
    std::string to_string() const;
};

// Assignments of the six quadratic monomials whose image lies in the singular locus of the form.
std::vector<SurfaceParametrization> singular_surface_parametrizations(const CubicForm& f);

struct DeterminantalCheck {
    bool reaches_target;   // moved F21 point equals [1, 0, -2, -1] up to scalar
    bool used_gtau;
    bool surface_singular;  // a Veronese surface lies in the singular locus
};
DeterminantalCheck determinantal_check(const FamilyPoint& f21);

struct TableRow {
    std::string equation;
    AlgebraicNumber lambda;
    std::string expected;
    std::string computed;
    std::size_t singular_count;
    bool matches;
};
// The six singular members of the pencil with their computed singular loci.
std::vector<TableRow> l27_table_scan();

struct VeroneseResult {
    bool x1_reaches_target;
    std::vector<SurfaceParametrization> valid;
    SurfaceParametrization chosen;
    // Coordinates where the chosen assignment differs from the quoted one.
    std::vector<int> differing_slots;
    bool locus_in_fourfold;
    bool f1_gives_sextic;
    bool f2_gives_sextic;
    AlgebraicNumber f1_scale;
    AlgebraicNumber f2_scale;
};
// z1^5 z3 + z2^5 z1 + z3^5 z2 - 5 z1^2 z2^2 z3^2
Poly klein_sextic();
// Throws ParametrizationMismatch if no assignment parametrizes the singular surface.
VeroneseResult veronese_sextic();

}  // namespace cubic7
