#pragma once

#include "spinlab/algebra.hpp"
#include "spinlab/clifford.hpp"

namespace spinlab {

// Direct sum with a flat torus factor: 8-n closed coframe directions appended.
MetricLieAlgebra lift_algebra(const MetricLieAlgebra& alg, int k = -1);

// Identification of the dim-n spinor space with W+ of rep8, intertwining
// rho_n(v) with rho_8(v e_{n+1}) on W+.
struct LiftMap {
    int n = 0;
    Matrix wplus;        // 16x8, orthonormal basis of the +1 eigenspace of nu_8
    Matrix intertwiner;  // 8x8 orthogonal T with T rho_n(e_i) = A_i T
    double residual = 0.0;

    Spinor apply(const Spinor& eta) const { return wplus * (intertwiner * eta); }
};

LiftMap make_lift_map(const CliffordRep& rep_n, const CliffordRep& rep8, double tol = 1e-8);

// Shared lift maps for the cached representation chain, n in {4,5,6}.
const LiftMap& cached_lift_map(int n);

// Lift of a unit spinor to a positive unit spinor of the dim-8 product.
Spinor lift_spinor(const Spinor& eta, const CliffordRep& rep_n, const CliffordRep& rep8);

// Omega(W,X,Y,Z) = 1/2 <(-WXYZ + WZYX) eta, eta> over the coframe 4-tuples.
Form spin7_form(const Spinor& eta8, const CliffordRep& rep8);

struct Spin7Data {
    Form omega4;
    Form tau1;             // 1-form
    Form tau3_residual;    // the star(tau3) part of dOmega (degree 5)
    Form tau3;             // its Hodge preimage (degree 3)
    bool balanced = false;
    double tau1_norm = 0.0;
    double dOmega_norm = 0.0;
    double reconstruction_residual = 0.0;     // dOmega - tau1^Omega - residual
    double tau3_wedge_omega_norm = 0.0;       // Lambda^3_48 membership check
    double star_dOmega_wedge_omega_norm = 0.0;  // independent balanced criterion
};

// dOmega = tau1 ^ Omega + star(tau3); tau1 by least squares against {e^i ^ Omega}.
Spin7Data spin7_torsion(const MetricLieAlgebra& alg8, const Form& omega4, double tol = 1e-8);

}  // namespace spinlab
