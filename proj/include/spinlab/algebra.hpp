#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spinlab/form.hpp"

namespace spinlab {

// Structure equations that fail d.d = 0.
struct JacobiError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Metric Lie algebra given by structure equations de^i (2-forms) over an
// orthonormal coframe (e^1,...,e^n).
struct MetricLieAlgebra {
    int dim = 0;
    std::vector<Form> differentials;  // differentials[i-1] = de^i, degree 2
    Orientation orientation{+1};
    std::string name;

    const Form& d(int i) const { return differentials[i - 1]; }

    // Every de^k involves only e^{ij} with i,j < k.
    bool nilpotent_frame() const;

    // max_i ||d(de^i)||; zero iff the Jacobi identity holds.
    double jacobi_residual() const;

    // Throws std::invalid_argument when Jacobi fails beyond tol.
    void validate(double tol = 1e-10) const;
};

// Chevalley-Eilenberg differential extending de^i by the Leibniz rule.
Form cev_differential(const MetricLieAlgebra& alg, const Form& a);

// Derivation of a nilpotent algebra, acting on the coframe:
// D(e^i) = sum_j matrix(i,j) e^j.
struct Derivation {
    Matrix matrix;

    Form apply(const MetricLieAlgebra& alg, int i) const;  // D(e^i) as a 1-form
    Form apply(const MetricLieAlgebra& alg, const Form& a) const;  // derivation extension

    // || d_n(D a) - D(d_n a) || over the coframe; zero for a genuine derivation.
    double residual(const MetricLieAlgebra& alg) const;
};

// Rank-1 solvable extension: appends e^0 as the LAST coframe index n+1 with
// de^0 = 0 and d e^i += D(e^i) ^ e^0.
MetricLieAlgebra rank1_extension(const MetricLieAlgebra& n_alg, const Derivation& D,
                                 double tol = 1e-10);

// Direct sum with k abelian coframe directions appended.
MetricLieAlgebra pad_abelian(const MetricLieAlgebra& alg, int k);

}  // namespace spinlab
