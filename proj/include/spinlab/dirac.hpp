#pragma once

#include "spinlab/algebra.hpp"
#include "spinlab/clifford.hpp"

namespace spinlab {

enum class DiracSource { general, nilpotent, rank1, squared_lemma };

// Matrix of 4*Dirac (or of 16*Dirac^2 when squared) on invariant spinors.
struct DiracMatrix {
    Matrix mat;
    bool squared = false;
    DiracSource source = DiracSource::general;
};

// 4 D phi = -sum_i (e^i ^ de^i + i(e_i) de^i) phi.
DiracMatrix assemble_dirac(const MetricLieAlgebra& alg, const CliffordRep& rep);

// Nilpotent frame: the contraction terms vanish and the matrix is symmetric.
DiracMatrix assemble_dirac_nilpotent(const MetricLieAlgebra& alg, const CliffordRep& rep);

// Rank-1 solvable extension, with e^0 mapped to the last frame index n+1:
// 4 D phi = -sum_i (e^i ^ d_n e^i + i(e_i) d_n e^i + e^0 ^ e^i ^ D(e^i)) phi - tr(D) e^0 phi.
DiracMatrix assemble_dirac_rank1(const MetricLieAlgebra& n_alg, const Derivation& D,
                                 const CliffordRep& rep);

// 16 D^2 phi = (sum_i -(de^i)^2 + sum_{i<j} (e^{ij} de^i de^j - de^j de^i e^{ij})) phi,
// via Clifford products of the identified forms.
DiracMatrix assemble_dirac_squared(const MetricLieAlgebra& alg, const CliffordRep& rep);

struct SpectrumReport {
    Vector eigenvalues;  // sorted ascending; singular values for non-symmetric sources
    Matrix kernel_basis; // orthonormal columns
    int kernel_dim = 0;
    double tol = 0.0;
    double matrix_norm = 0.0;  // 2-norm
};

SpectrumReport kernel(const DiracMatrix& M, double tol = 1e-9);
SpectrumReport spectrum(const DiracMatrix& M);

}  // namespace spinlab
