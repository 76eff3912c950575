#pragma once

#include <vector>

#include "orbcat/quiver.hpp"

namespace orbcat {

// Small exact integer matrices for the Grothendieck-group computations.
using IMat = std::vector<std::vector<long long>>;

IMat imat_identity(int m);
IMat imat_mul(const IMat& a, const IMat& b);
IMat imat_transpose(const IMat& a);
IMat imat_sub(const IMat& a, const IMat& b);
IMat imat_neg(const IMat& a);
bool imat_eq(const IMat& a, const IMat& b);
long long imat_det(IMat a);  // fraction-free elimination

// E_ij = delta_ij - #arrows i -> j, for a type-A quiver.
IMat euler_matrix(const Quiver& q);
// Antisymmetrized Euler form E - E^T.
IMat skew_form(const Quiver& q);

// Transvection along the i-th simple class: x -> x - x_i . (S e_i),
// equivalently the row action x -> x + <s_i, x> s_i for the skew form.
IMat braid_generator(const Quiver& q, int i);

// Exact matrix identities T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1} and far
// commutation; form preservation T S T^T = S is checked separately.
bool verify_braid_relations(const Quiver& q);
bool preserves_form(const Quiver& q, const IMat& t);

// K_0 action of the orbit functor: -Phi^{-1} for the transposed Coxeter
// matrix -C^{-T} C (classes written against the simple basis).
IMat k0_class_of_orbit_functor(const Quiver& q);

struct QuotientAction {
    std::vector<long long> invariants;  // diagonal of the reduced 1 - [F] (0 = free factor)
    std::vector<IMat> images;           // induced generator actions in the reduced basis
    bool trivial = false;
};
// Quotient lattice coker(1 - [F]) with the induced braid generator action.
QuotientAction orbit_quotient_action(const Quiver& q);

}  // namespace orbcat
