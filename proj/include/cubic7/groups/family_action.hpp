#pragma once

#include <array>
#include <string>
#include <vector>

#include "cubic7/exactnum/upoly.hpp"
#include "cubic7/groups/matrix_group.hpp"
#include "cubic7/polyalg/forms.hpp"

namespace cubic7 {

using NumberPoly = UPoly<AlgebraicNumber>;

// R with F21-coordinates of act(g, sum c_i b_i) equal to R c; throws NotInNormalizer.
ProjectiveMatrix induced_family_action(const ProjectiveMatrix& g);
// diag(1, t, 1, t, 1, t) scales [a, b, c, d] by t^w, read off from the basis monomials.
std::array<int, 4> torus_weights();

struct CosetLabel {
    int k_power;
    int tau_power;
    std::string name() const;
};
// k^n gtau^e for n < 3, e < 2: representatives of the normalizer modulo F21 and the torus.
std::vector<std::pair<CosetLabel, ProjectiveMatrix>> normalizer_coset_reps();

struct CosetSolution {
    CosetLabel label;
    bool whole_torus = false;
    // Monic squarefree condition on t with the factor t removed; constant 1 when no t works.
    NumberPoly condition;
    std::vector<AlgebraicNumber> roots;
    // Order modulo F21 of torus(root) * rep, one per root.
    std::vector<int> orders;
};

struct StabilizerReport {
    std::vector<CosetSolution> cosets;
    bool infinite = false;
    // |Stab| / |F21| when finite.
    std::size_t quotient_order = 0;
    bool all_roots_found = true;
    int max_order = 1;
    std::string summary() const;
};

StabilizerReport stabilizer_check(const FamilyPoint& p);
StabilizerReport stabilizer_check(const FamilyPoint& p,
                                  const std::vector<std::pair<CosetLabel, ProjectiveMatrix>>& reps);

// Coordinates of h in the pencil spanned by f1, f2, if h lies in it.
std::optional<std::array<AlgebraicNumber, 2>> pencil_coordinates(const Poly& h);

struct PencilStabilizer {
    std::size_t group_order;
    std::size_t stabilizer_order;
    bool extra_involution;
};
// Elements of L2(7) x| C2 fixing [c1 f1 + c2 f2], via the induced action on the pencil.
PencilStabilizer pencil_stabilizer(const FamilyPoint& p);

}  // namespace cubic7
