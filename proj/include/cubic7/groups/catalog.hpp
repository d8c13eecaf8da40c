#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "cubic7/groups/matrix_group.hpp"

namespace cubic7 {

// sigma as 0-based images from cycle notation such as "(12)(36)" or "(1,2)(3,6)".
std::vector<int> parse_cycles(std::string_view cycles, int n);
// A with A[sigma(j)][j] = 1, so e_j maps to e_sigma(j).
NumberMatrix permutation_matrix(std::string_view cycles, int n);
bool is_permutation_matrix(const NumberMatrix& m);

// 7x7 change of basis splitting the permutation module into the sum-zero part and the trivial line.
NumberMatrix transition_matrix();
// Top-left 6x6 block of T^-1 M T; throws DimensionMismatch if M does not preserve the splitting.
NumberMatrix psi_inverse(const NumberMatrix& m7);
NumberMatrix psi(const NumberMatrix& m6);

ProjectiveMatrix g7();
ProjectiveMatrix g3();
ProjectiveMatrix gtau();
ProjectiveMatrix k_element();
// diag(1, t, 1, t, 1, t)
ProjectiveMatrix torus(const AlgebraicNumber& t);
// -2 zeta7^5 - 2 zeta7^3 - zeta7 - 1
AlgebraicNumber s_constant();
// diag(1, 1/s, 1, 1/s, 1, 1/s)
ProjectiveMatrix scaling_g();
// Determinant -1 involution on the rank-4 lattice.
ProjectiveMatrix involution_P();

MatrixGroup build_c7();
MatrixGroup build_f21();
MatrixGroup build_l27();
MatrixGroup build_l27_c2();

struct EReport {
    NumberMatrix model;      // 7x7
    ProjectiveMatrix prime;  // 6x6 block
    bool square_matches;     // E^2 = (162)(457)
    bool normalizes_l27;
    bool is_permutation;
};
EReport build_E();
ProjectiveMatrix e_prime();

// Conjugates of g7, g3 inside the 7-point model: (1234567) and (235)(476).
ProjectiveMatrix g7_model();
ProjectiveMatrix g3_model();
// Averaging intertwiner with S g7' = g7 S and S g3' = g3 S; throws SingularS.
ProjectiveMatrix build_S();

struct IdentityCheck {
    std::string name;
    bool holds;
};
std::vector<IdentityCheck> conjugation_identities();

// Catalog name ("g7", "g3", "gtau", "k", "E", "P", "S", "g") or a 7-point cycle word mapped through psi_inverse.
ProjectiveMatrix catalog_element(std::string_view name);
// One entry per line; blank lines and text after '#' are ignored.
std::vector<ProjectiveMatrix> load_generators(std::istream& in);
std::vector<ProjectiveMatrix> load_generators_file(const std::string& path);

}  // namespace cubic7
