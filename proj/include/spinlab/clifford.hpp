#pragma once

#include <vector>

#include "spinlab/form.hpp"
#include "spinlab/types.hpp"

namespace spinlab {

// Real Clifford representation: n generator matrices G_i on R^N with
// G_i G_j + G_j G_i = -2 delta_ij I, each G_i skew-symmetric and orthogonal.
struct CliffordRep {
    int n = 0;
    int N = 0;
    std::vector<Matrix> g;
    Matrix volume;  // ordered product G_1 ... G_n

    const Matrix& gen(int i) const { return g[i - 1]; }  // 1-based frame index

    // Max residual over the defining relations; 0 for an exact rep.
    double relation_residual() const;
};

// Quaternionic operators acting on the spinor space of the dim-5 rep.
struct QuaternionicOps {
    Matrix j1, j2, j3;
};

// The explicit Cl_6 representation on R^8 (generators given matrix by matrix).
CliffordRep rep_cl6();

// rho_{n-1}(v) = rho_n(v e_n): generators G_i G_n for i < n.
CliffordRep restrict_rep(const CliffordRep& rep);

// A Cl_8 representation on R^16 built by doubling rep_cl6; its volume is
// diag(I_8, -I_8), so W+ is the span of the first eight coordinates.
CliffordRep rep_cl8();

// Convenience chain: n=6 the explicit rep, n<6 by restriction, n=7,8 from rep_cl8.
CliffordRep rep_for_dim(int n);

// Shared immutable instances of the above (representations never change).
const CliffordRep& cached_rep(int n);
const QuaternionicOps& cached_quaternionic_ops();

// Orthogonal projectors (I +- volume)/2 for n = 0 mod 4.
std::pair<Matrix, Matrix> chirality_split(const CliffordRep& rep);

// j1 = rho_5(nu_5), j2 = rho_6(e_6), j3 = j1 j2, for rho_5 = restrict(rep_cl6).
QuaternionicOps quaternionic_ops_dim5();

// Clifford action of a homogeneous form: a basis k-form acts as the ordered
// product G_{i1} ... G_{ik}; extends linearly. Degree 0 acts by scaling.
Spinor clifford_action(const Form& a, const CliffordRep& rep, const Spinor& phi);
Matrix action_matrix(const Form& a, const CliffordRep& rep);

}  // namespace spinlab
