#pragma once

#include <array>

#include "spinlab/algebra.hpp"
#include "spinlab/clifford.hpp"
#include "spinlab/dirac.hpp"

namespace spinlab {

// Invariants of the squared Dirac operator in dimension 5:
// 16 D^2 = mu I + (v action) j1, with mu = sum ||de^i||^2.
struct Dim5Invariants {
    double mu = 0.0;
    Vector v;     // frame coordinates of v
    Form v_form;  // same data as a 1-form
};

// Dimension 6 analogue: 16 D^2 = mu I + (gamma action) j.
struct Dim6Invariants {
    double mu = 0.0;
    Form gamma;  // 2-form
};

// The total 4-form G with 16 D^2 = sum ||de^i||^2 + Clifford action of G,
// valid on any nilpotent frame.
Form dirac_square_four_form(const MetricLieAlgebra& alg);

Dim5Invariants mu_v(const MetricLieAlgebra& alg);
Dim6Invariants mu_gamma(const MetricLieAlgebra& alg);

// |mu - ||v||| <= tol * max(mu, 1).
bool is_harmonic_metric_dim5(const MetricLieAlgebra& alg, double tol = 1e-9);

// SU(2) structure extracted from a unit spinor (dim 5).
struct SU2Structure {
    Form alpha;                 // unit 1-form
    std::array<Form, 3> omega;  // fundamental 2-forms
    Vector reeb;                // alpha sharp
    Matrix xi_basis;            // 5x4, orthonormal columns spanning ker alpha,
                                // adapted so that J_k are the standard quaternions
    std::array<Matrix, 3> J;    // 4x4 complex structures in xi coordinates

    Form xi_coframe(int a) const;  // a-th basis vector of xi as a 1-form
};

SU2Structure su2_from_spinor(const Spinor& eta, const CliffordRep& rep5,
                             const QuaternionicOps& ops);

// nabla_{e_i} eta for an invariant spinor, from the Koszul coefficients.
Spinor covariant_derivative_spinor(const MetricLieAlgebra& alg, const CliffordRep& rep,
                                   const Spinor& eta, int i);

// Components of nabla eta in the decomposition
//   nabla_X eta = S(X_xi) eta + alpha(X) V_xi eta + sum_l (Theta_l(X_xi) + alpha(X) phi_l) j_l eta
// together with the splitting of S into trace, sigma_k, J_k and su(2) parts.
struct ConnectionComponents {
    Matrix S;  // 4x4 endomorphism of xi (in xi coordinates)
    double mu_S = 0.0;
    std::array<double, 3> lambda{};
    std::array<Matrix, 3> S_parts;  // sigma_k components
    Matrix S0;                      // su(2) component
    Vector V_xi;                    // 4-vector, xi coordinates
    std::array<Vector, 3> Theta;    // 1-forms on xi, xi coordinates
    std::array<double, 3> phi{};
    double residual = 0.0;          // reconstruction residual over the frame
};

ConnectionComponents connection_components(const MetricLieAlgebra& alg, const CliffordRep& rep5,
                                           const QuaternionicOps& ops, const Spinor& eta);

// Dirac value predicted by the connection components (the spinor D eta).
Spinor dirac_from_components(const SU2Structure& s, const ConnectionComponents& c,
                             const CliffordRep& rep5, const QuaternionicOps& ops,
                             const Spinor& eta);

// Torsion of an SU(2) structure:
//   d alpha   = sum_l tau0[l] omega_l + alpha ^ tau1_4 + tau2_4
//   d omega_k = sum_l tau0k(k,l) alpha ^ omega_l + tau1[k] ^ omega_k + alpha ^ tau2[k]
struct SU2Torsion {
    std::array<double, 3> tau0{};
    Form tau1_4;
    Form tau2_4;
    Matrix tau0k;               // 3x3
    std::array<Form, 3> tau1;   // 1-forms on xi
    std::array<Form, 3> tau2;   // su(2)-valued 2-forms
    double residual = 0.0;
};

SU2Torsion su2_torsion(const MetricLieAlgebra& alg, const SU2Structure& s);

// d omega_1 = 0 and d(alpha ^ omega_k) = 0 for k = 2,3.
bool is_hypo(const MetricLieAlgebra& alg, const SU2Structure& s, double tol = 1e-10);

struct SU3Structure {
    Form omega;       // fundamental 2-form
    Form theta_plus;  // real part of the complex volume form
};

SU3Structure su3_from_spinor(const Spinor& eta, const CliffordRep& rep6);

}  // namespace spinlab
