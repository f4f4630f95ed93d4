#include "spinlab/dirac.hpp"

#include <algorithm>
#include <stdexcept>

namespace spinlab {

namespace {

void check_dims(const MetricLieAlgebra& alg, const CliffordRep& rep, const char* who) {
    if (alg.dim != rep.n) throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

Matrix general_dirac_matrix(const MetricLieAlgebra& alg, const CliffordRep& rep) {
    Matrix m = Matrix::Zero(rep.N, rep.N);
    for (int i = 1; i <= alg.dim; ++i) {
        const Form ei = Form::basis(alg.dim, 1u << (i - 1));
        m -= action_matrix(wedge(ei, alg.d(i)), rep);
        m -= action_matrix(contract(i, alg.d(i)), rep);
    }
    return m;
}

}  // namespace

DiracMatrix assemble_dirac(const MetricLieAlgebra& alg, const CliffordRep& rep) {
    check_dims(alg, rep, "assemble_dirac");
    return {general_dirac_matrix(alg, rep), false, DiracSource::general};
}

DiracMatrix assemble_dirac_nilpotent(const MetricLieAlgebra& alg, const CliffordRep& rep) {
    check_dims(alg, rep, "assemble_dirac_nilpotent");
    if (!alg.nilpotent_frame())
        throw std::invalid_argument("assemble_dirac_nilpotent: frame not nilpotent");
    Matrix m = Matrix::Zero(rep.N, rep.N);
    for (int i = 1; i <= alg.dim; ++i)
        m -= action_matrix(wedge(Form::basis(alg.dim, 1u << (i - 1)), alg.d(i)), rep);
    return {std::move(m), false, DiracSource::nilpotent};
}

DiracMatrix assemble_dirac_rank1(const MetricLieAlgebra& n_alg, const Derivation& D,
                                 const CliffordRep& rep) {
    if (rep.n != n_alg.dim + 1)
        throw std::invalid_argument("assemble_dirac_rank1: rep dimension must be dim+1");
    if (!n_alg.nilpotent_frame())
        throw std::invalid_argument("assemble_dirac_rank1: frame not nilpotent");
    if (D.residual(n_alg) > 1e-10)
        throw std::invalid_argument("assemble_dirac_rank1: matrix is not a derivation");

    const int n = n_alg.dim;
    const int dim = n + 1;
    const Form e0 = Form::basis(dim, 1u << n);
    Matrix m = Matrix::Zero(rep.N, rep.N);
    for (int i = 1; i <= n; ++i) {
        Form dni(dim, 2);  // d_n e^i, regarded in the extended coframe
        for (const auto& [mask, c] : n_alg.d(i).terms()) dni.add_term(mask, c);
        Form Dei(dim, 1);
        for (int j = 1; j <= n; ++j) Dei.add_term(1u << (j - 1), D.matrix(i - 1, j - 1));
        const Form ei = Form::basis(dim, 1u << (i - 1));
        m -= action_matrix(wedge(ei, dni), rep);
        m -= action_matrix(contract(i, dni), rep);
        m -= action_matrix(wedge(wedge(e0, ei), Dei), rep);
    }
    m -= D.matrix.trace() * action_matrix(e0, rep);
    return {std::move(m), false, DiracSource::rank1};
}

DiracMatrix assemble_dirac_squared(const MetricLieAlgebra& alg, const CliffordRep& rep) {
    check_dims(alg, rep, "assemble_dirac_squared");
    if (!alg.nilpotent_frame())
        throw std::invalid_argument("assemble_dirac_squared: frame not nilpotent");
    const int n = alg.dim;
    Matrix m = Matrix::Zero(rep.N, rep.N);
    std::vector<Matrix> dmat(n);
    for (int i = 0; i < n; ++i) dmat[i] = action_matrix(alg.d(i + 1), rep);
    for (int i = 0; i < n; ++i) m -= dmat[i] * dmat[i];
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const Matrix eij = action_matrix(Form::basis(n, (1u << (i - 1)) | (1u << (j - 1))), rep);
            m += eij * dmat[i - 1] * dmat[j - 1] - dmat[j - 1] * dmat[i - 1] * eij;
        }
    return {std::move(m), true, DiracSource::squared_lemma};
}

namespace {

bool numerically_symmetric(const Matrix& m) {
    return (m - m.transpose()).cwiseAbs().maxCoeff() <=
           1e-10 * std::max(1.0, m.cwiseAbs().maxCoeff());
}

}  // namespace

SpectrumReport kernel(const DiracMatrix& M, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("kernel: tol must be positive");
    SpectrumReport rep;
    rep.tol = tol;
    const int N = (int)M.mat.rows();

    if (numerically_symmetric(M.mat)) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (M.mat + M.mat.transpose()));
        if (es.info() != Eigen::Success)
            throw std::runtime_error("kernel: eigendecomposition failed");
        rep.eigenvalues = es.eigenvalues();
        rep.matrix_norm = rep.eigenvalues.cwiseAbs().maxCoeff();
        std::vector<int> ker;
        for (int i = 0; i < N; ++i)
            if (std::abs(rep.eigenvalues[i]) <= tol * rep.matrix_norm) ker.push_back(i);
        rep.kernel_dim = (int)ker.size();
        rep.kernel_basis = Matrix(N, rep.kernel_dim);
        for (int k = 0; k < rep.kernel_dim; ++k) rep.kernel_basis.col(k) = es.eigenvectors().col(ker[k]);
    } else {
        Eigen::JacobiSVD<Matrix> svd(M.mat, Eigen::ComputeFullV);
        Vector sv = svd.singularValues();  // descending
        rep.eigenvalues = sv.reverse();
        rep.matrix_norm = sv.size() ? sv[0] : 0.0;
        std::vector<int> ker;
        for (int i = 0; i < N; ++i)
            if (sv[i] <= tol * rep.matrix_norm) ker.push_back(i);
        rep.kernel_dim = (int)ker.size();
        rep.kernel_basis = Matrix(N, rep.kernel_dim);
        for (int k = 0; k < rep.kernel_dim; ++k) rep.kernel_basis.col(k) = svd.matrixV().col(ker[k]);
    }

    // Kernel vectors are re-verified by direct multiplication.
    for (int k = 0; k < rep.kernel_dim; ++k) {
        const double r = (M.mat * rep.kernel_basis.col(k)).norm();
        if (r > 10.0 * tol * std::max(rep.matrix_norm, 1.0))
            throw std::runtime_error("kernel: candidate kernel vector fails verification");
    }
    return rep;
}

SpectrumReport spectrum(const DiracMatrix& M) {
    if (!numerically_symmetric(M.mat))
        throw std::invalid_argument("spectrum: matrix is not symmetric; use kernel() for singular values");
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (M.mat + M.mat.transpose()));
    if (es.info() != Eigen::Success) throw std::runtime_error("spectrum: eigendecomposition failed");
    SpectrumReport rep;
    rep.eigenvalues = es.eigenvalues();
    rep.matrix_norm = rep.eigenvalues.size() ? rep.eigenvalues.cwiseAbs().maxCoeff() : 0.0;
    rep.kernel_basis = Matrix(M.mat.rows(), 0);
    return rep;
}

}  // namespace spinlab
