#include "spinlab/spin7.hpp"

#include <cmath>
#include <stdexcept>

namespace spinlab {

MetricLieAlgebra lift_algebra(const MetricLieAlgebra& alg, int k) {
    if (k < 0) k = 8 - alg.dim;
    if (alg.dim < 4 || alg.dim > 7 || alg.dim + k != 8)
        throw std::invalid_argument("lift_algebra: need 4 <= dim <= 7 and dim + k = 8");
    MetricLieAlgebra out = pad_abelian(alg, k);
    out.name = alg.name.empty() ? "" : alg.name + "xT" + std::to_string(k);
    return out;
}

LiftMap make_lift_map(const CliffordRep& rep_n, const CliffordRep& rep8, double tol) {
    if (rep8.n != 8 || rep8.N != 16) throw std::invalid_argument("make_lift_map: rep8 must be Cl_8 on R^16");
    const int n = rep_n.n;
    if (n < 4 || n > 6 || rep_n.N != 8)
        throw std::invalid_argument("make_lift_map: base rep must be Cl_4..Cl_6 on R^8");

    LiftMap lm;
    lm.n = n;

    // Orthonormal basis of the +1 eigenspace of nu_8 (which is symmetric).
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rep8.volume + rep8.volume.transpose()));
    Matrix wp(16, 8);
    int c = 0;
    for (int i = 0; i < 16; ++i)
        if (es.eigenvalues()[i] > 0) {
            if (c == 8) throw std::runtime_error("make_lift_map: W+ dimension exceeds 8");
            wp.col(c++) = es.eigenvectors().col(i);
        }
    if (c != 8) throw std::runtime_error("make_lift_map: W+ dimension is not 8");
    lm.wplus = wp;

    // A_i = action of e_i e_{n+1} restricted to W+.
    std::vector<Matrix> A(n);
    for (int i = 0; i < n; ++i)
        A[i] = wp.transpose() * (rep8.g[i] * rep8.g[n]) * wp;

    // Solve T rho_n(e_i) = A_i T as a nullspace problem in vec(T).
    Matrix K(64 * n, 64);
    const Matrix id8 = Matrix::Identity(8, 8);
    for (int i = 0; i < n; ++i) {
        // vec(T R) = (R^T (x) I) vec(T), vec(A T) = (I (x) A) vec(T)
        Matrix block = Matrix::Zero(64, 64);
        const Matrix Rt = rep_n.g[i].transpose();
        for (int p = 0; p < 8; ++p)
            for (int q = 0; q < 8; ++q) {
                block.block(8 * p, 8 * q, 8, 8) = Rt(p, q) * id8;  // (R^T (x) I)
                if (p == q) block.block(8 * p, 8 * q, 8, 8) -= A[i];
            }
        K.block(64 * i, 0, 64, 64) = block;
    }
    Eigen::JacobiSVD<Matrix> svd(K, Eigen::ComputeFullV);
    const Vector t = svd.matrixV().col(63);
    Matrix T(8, 8);
    for (int q = 0; q < 8; ++q) T.col(q) = t.segment(8 * q, 8);
    T *= std::sqrt(8.0) / T.norm();  // any nonzero solution is conformal-orthogonal

    double res = (T.transpose() * T - id8).cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i)
        res = std::max(res, (T * rep_n.g[i] - A[i] * T).cwiseAbs().maxCoeff());
    lm.intertwiner = T;
    lm.residual = res;
    if (res > tol) throw std::runtime_error("make_lift_map: intertwining residual too large");
    return lm;
}

const LiftMap& cached_lift_map(int n) {
    switch (n) {
        case 4: { static const LiftMap m = make_lift_map(cached_rep(4), cached_rep(8)); return m; }
        case 5: { static const LiftMap m = make_lift_map(cached_rep(5), cached_rep(8)); return m; }
        case 6: { static const LiftMap m = make_lift_map(cached_rep(6), cached_rep(8)); return m; }
        default: throw std::invalid_argument("cached_lift_map: n must be 4..6");
    }
}

Spinor lift_spinor(const Spinor& eta, const CliffordRep& rep_n, const CliffordRep& rep8) {
    if (std::abs(eta.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("lift_spinor: spinor must be unit");
    const LiftMap lm = make_lift_map(rep_n, rep8);
    return lm.apply(eta);
}

Form spin7_form(const Spinor& eta8, const CliffordRep& rep8) {
    if (rep8.n != 8) throw std::invalid_argument("spin7_form: need the dim-8 representation");
    if (std::abs(eta8.norm() - 1.0) > 1e-8)
        throw std::invalid_argument("spin7_form: spinor must be unit");
    if ((rep8.volume * eta8 - eta8).norm() > 1e-8)
        throw std::invalid_argument("spin7_form: spinor must be positive (nu_8 eta = eta)");

    Form omega(8, 4);
    for (int i = 1; i <= 8; ++i)
        for (int j = i + 1; j <= 8; ++j)
            for (int k = j + 1; k <= 8; ++k)
                for (int l = k + 1; l <= 8; ++l) {
                    const Spinor wxyz =
                        rep8.g[i - 1] * (rep8.g[j - 1] * (rep8.g[k - 1] * (rep8.g[l - 1] * eta8)));
                    const Spinor wzyx =
                        rep8.g[i - 1] * (rep8.g[l - 1] * (rep8.g[k - 1] * (rep8.g[j - 1] * eta8)));
                    const double val = 0.5 * (wzyx - wxyz).dot(eta8);
                    omega.add_term((1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1)) |
                                       (1u << (l - 1)),
                                   val);
                }
    omega.prune(1e-14);
    return omega;
}

Spin7Data spin7_torsion(const MetricLieAlgebra& alg8, const Form& omega4, double tol) {
    if (alg8.dim != 8) throw std::invalid_argument("spin7_torsion: dimension must be 8");
    Spin7Data out;
    out.omega4 = omega4;

    const Form dOmega = cev_differential(alg8, omega4);
    out.dOmega_norm = dOmega.norm();

    // tau1 from the normal equations over the basis {e^i ^ Omega}.
    std::vector<Form> basis;
    for (int i = 1; i <= 8; ++i) basis.push_back(wedge(Form::basis(8, 1u << (i - 1)), omega4));
    Matrix G(8, 8);
    Vector rhs(8);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) G(i, j) = basis[i].inner(basis[j]);
        rhs[i] = basis[i].inner(dOmega);
    }
    const Vector x = G.ldlt().solve(rhs);
    out.tau1 = Form(8, 1);
    for (int i = 0; i < 8; ++i) out.tau1.add_term(1u << i, x[i]);
    out.tau1_norm = out.tau1.norm();

    Form recon = Form(8, 5);
    for (int i = 0; i < 8; ++i) recon += x[i] * basis[i];
    out.tau3_residual = dOmega - recon;
    out.reconstruction_residual = 0.0;  // exact by construction of the residual split
    // star.star = -1 on 3-forms in dim 8, so the preimage flips sign.
    out.tau3 = -1.0 * hodge_star(out.tau3_residual, alg8.orientation);
    out.tau3_wedge_omega_norm = wedge(out.tau3, omega4).norm();

    out.star_dOmega_wedge_omega_norm = wedge(hodge_star(dOmega, alg8.orientation), omega4).norm();
    out.balanced = out.tau1_norm <= tol;
    return out;
}

}  // namespace spinlab
