#include "spinlab/gstruct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace spinlab {

namespace {

constexpr std::array<double, 3> kEps = {1.0, -1.0, -1.0};  // epsilon_k of Lemma 4.7

void require_unit(const Spinor& eta, const char* who) {
    if (std::abs(eta.norm() - 1.0) > 1e-8)
        throw std::invalid_argument(std::string(who) + ": spinor must be unit");
}

Form form_from_vector(const Vector& v, int dim) {
    Form f(dim, 1);
    for (int i = 0; i < dim; ++i) f.add_term(1u << i, v[i]);
    return f;
}

}  // namespace

Form dirac_square_four_form(const MetricLieAlgebra& alg) {
    if (!alg.nilpotent_frame())
        throw std::invalid_argument("dirac_square_four_form: frame not nilpotent");
    const int n = alg.dim;
    Form total(n, 4);
    for (int i = 1; i <= n; ++i) total -= wedge(alg.d(i), alg.d(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const Form ej = Form::basis(n, 1u << (j - 1));
            total -= 2.0 * wedge(wedge(alg.d(i), contract(i, alg.d(j))), ej);
            const Form dj_perp = alg.d(j).without_index(i);
            const Form eij = Form::basis(n, (1u << (i - 1)) | (1u << (j - 1)));
            for (int k = 1; k < i; ++k)
                total += 2.0 * wedge(wedge(contract(k, alg.d(i)), contract(k, dj_perp)), eij);
        }
    return total;
}

Dim5Invariants mu_v(const MetricLieAlgebra& alg) {
    if (alg.dim != 5) throw std::invalid_argument("mu_v: dimension must be 5");
    if (alg.orientation.sign != +1)
        throw std::invalid_argument("mu_v: frame must be positively oriented");
    Dim5Invariants out;
    for (int i = 1; i <= 5; ++i) out.mu += alg.d(i).norm() * alg.d(i).norm();
    const Form gamma4 = dirac_square_four_form(alg);
    out.v_form = -1.0 * hodge_star(gamma4, alg.orientation);
    out.v = Vector::Zero(5);
    for (const auto& [mask, c] : out.v_form.terms())
        out.v[std::countr_zero(mask)] = c;
    return out;
}

Dim6Invariants mu_gamma(const MetricLieAlgebra& alg) {
    if (alg.dim != 6) throw std::invalid_argument("mu_gamma: dimension must be 6");
    if (alg.orientation.sign != +1)
        throw std::invalid_argument("mu_gamma: frame must be positively oriented");
    Dim6Invariants out;
    for (int i = 1; i <= 6; ++i) out.mu += alg.d(i).norm() * alg.d(i).norm();
    out.gamma = -1.0 * hodge_star(dirac_square_four_form(alg), alg.orientation);
    return out;
}

bool is_harmonic_metric_dim5(const MetricLieAlgebra& alg, double tol) {
    const Dim5Invariants inv = mu_v(alg);
    return std::abs(inv.mu - inv.v.norm()) <= tol * std::max(inv.mu, 1.0);
}

Form SU2Structure::xi_coframe(int a) const { return form_from_vector(xi_basis.col(a), 5); }

SU2Structure su2_from_spinor(const Spinor& eta, const CliffordRep& rep5,
                             const QuaternionicOps& ops) {
    if (rep5.n != 5) throw std::invalid_argument("su2_from_spinor: need the dim-5 representation");
    require_unit(eta, "su2_from_spinor");

    SU2Structure s;
    const Spinor j1eta = ops.j1 * eta;
    const std::array<const Matrix*, 3> js = {&ops.j1, &ops.j2, &ops.j3};

    // alpha(X) = -<X eta, j1 eta>
    s.reeb = Vector::Zero(5);
    for (int i = 0; i < 5; ++i) s.reeb[i] = -(rep5.g[i] * eta).dot(j1eta);
    const double anorm = s.reeb.norm();
    if (std::abs(anorm - 1.0) > 1e-8)
        throw std::runtime_error("su2_from_spinor: extracted alpha is not unit");
    s.reeb /= anorm;
    s.alpha = form_from_vector(s.reeb, 5);

    // omega_k(X,Y) = eps_k <X j_k eta, Y eta>
    for (int k = 0; k < 3; ++k) {
        const Spinor jk_eta = (*js[k]) * eta;
        Form w(5, 2);
        for (int a = 1; a <= 5; ++a)
            for (int b = a + 1; b <= 5; ++b) {
                const double val = kEps[k] * (rep5.g[a - 1] * jk_eta).dot(rep5.g[b - 1] * eta);
                w.add_term((1u << (a - 1)) | (1u << (b - 1)), val);
            }
        w.prune(0.0);
        s.omega[k] = w;
    }

    // Provisional orthonormal basis of xi = ker alpha.
    Eigen::HouseholderQR<Matrix> qr(Matrix(s.reeb));
    const Matrix q = qr.householderQ();
    Matrix basis = q.rightCols(4);  // orthonormal, orthogonal to reeb

    // J_k via J_k(X) eta = j_k (X eta); solve in the spinor image of xi.
    auto spinor_image = [&](const Matrix& b) {
        Matrix m(rep5.N, b.cols());
        for (int c = 0; c < b.cols(); ++c) {
            Spinor col = Spinor::Zero(rep5.N);
            for (int i = 0; i < 5; ++i) col += b(i, c) * (rep5.g[i] * eta);
            m.col(c) = col;
        }
        return m;
    };
    auto solve_J = [&](const Matrix& b, const Matrix& jk) {
        const Matrix mxi = spinor_image(b);
        Matrix J(4, 4);
        const auto qrm = mxi.colPivHouseholderQr();
        for (int c = 0; c < 4; ++c) J.col(c) = qrm.solve(jk * mxi.col(c));
        return J;
    };

    const Matrix J1 = solve_J(basis, ops.j1);
    const Matrix J2 = solve_J(basis, ops.j2);
    const Matrix J3 = solve_J(basis, ops.j3);

    // Adapted basis (x, J1 x, J2 x, J3 x): the J_k become the standard
    // quaternionic matrices and sigma_k projections are basis-independent.
    Matrix adapted(5, 4);
    adapted.col(0) = basis.col(0);
    adapted.col(1) = basis * J1.col(0);
    adapted.col(2) = basis * J2.col(0);
    adapted.col(3) = basis * J3.col(0);
    for (int c = 0; c < 4; ++c) adapted.col(c).normalize();
    s.xi_basis = adapted;
    s.J[0] = solve_J(adapted, ops.j1);
    s.J[1] = solve_J(adapted, ops.j2);
    s.J[2] = solve_J(adapted, ops.j3);
    return s;
}

Spinor covariant_derivative_spinor(const MetricLieAlgebra& alg, const CliffordRep& rep,
                                   const Spinor& eta, int i) {
    if (alg.dim != rep.n) throw std::invalid_argument("covariant_derivative_spinor: dimension mismatch");
    auto d_coeff = [&](int which, int a, int b) {  // de^which (e_a, e_b)
        if (a == b) return 0.0;
        const Form& f = alg.d(which);
        if (a < b) return f.coeff((1u << (a - 1)) | (1u << (b - 1)));
        return -f.coeff((1u << (b - 1)) | (1u << (a - 1)));
    };
    Spinor out = Spinor::Zero(rep.N);
    for (int j = 1; j <= alg.dim; ++j)
        for (int k = j + 1; k <= alg.dim; ++k) {
            const double c = d_coeff(j, i, k) + d_coeff(i, j, k) - d_coeff(k, i, j);
            if (c != 0.0) out += 0.25 * c * (rep.g[j - 1] * (rep.g[k - 1] * eta));
        }
    return out;
}

ConnectionComponents connection_components(const MetricLieAlgebra& alg, const CliffordRep& rep5,
                                           const QuaternionicOps& ops, const Spinor& eta) {
    require_unit(eta, "connection_components");
    const SU2Structure s = su2_from_spinor(eta, rep5, ops);

    std::array<Spinor, 5> nabla;
    for (int i = 1; i <= 5; ++i) nabla[i - 1] = covariant_derivative_spinor(alg, rep5, eta, i);

    const std::array<const Matrix*, 3> js = {&ops.j1, &ops.j2, &ops.j3};
    std::array<Spinor, 3> jeta;
    for (int k = 0; k < 3; ++k) jeta[k] = (*js[k]) * eta;

    const Matrix mxi = [&] {
        Matrix m(rep5.N, 4);
        for (int c = 0; c < 4; ++c) {
            Spinor col = Spinor::Zero(rep5.N);
            for (int i = 0; i < 5; ++i) col += s.xi_basis(i, c) * (rep5.g[i] * eta);
            m.col(c) = col;
        }
        return m;
    }();
    const auto mxi_qr = mxi.colPivHouseholderQr();

    auto hperp_coords = [&](const Spinor& w) {
        Spinor p = w - w.dot(eta) * eta;
        for (int k = 0; k < 3; ++k) p -= p.dot(jeta[k]) * jeta[k];
        Vector c = mxi_qr.solve(p);
        return c;
    };

    ConnectionComponents cc;
    // Derivative along R.
    Spinor nabla_R = Spinor::Zero(rep5.N);
    for (int i = 0; i < 5; ++i) nabla_R += s.reeb[i] * nabla[i];
    for (int k = 0; k < 3; ++k) cc.phi[k] = nabla_R.dot(jeta[k]);
    cc.V_xi = hperp_coords(nabla_R);

    // Derivatives along the xi basis give S and Theta.
    cc.S = Matrix::Zero(4, 4);
    for (int k = 0; k < 3; ++k) cc.Theta[k] = Vector::Zero(4);
    for (int a = 0; a < 4; ++a) {
        Spinor na = Spinor::Zero(rep5.N);
        for (int i = 0; i < 5; ++i) na += s.xi_basis(i, a) * nabla[i];
        for (int k = 0; k < 3; ++k) cc.Theta[k][a] = na.dot(jeta[k]);
        cc.S.col(a) = hperp_coords(na);
    }

    // Decompose S per Prop. 4.3(4).
    const Matrix sym = 0.5 * (cc.S + cc.S.transpose());
    const Matrix skw = 0.5 * (cc.S - cc.S.transpose());
    cc.mu_S = sym.trace() / 4.0;
    const Matrix sym0 = sym - cc.mu_S * Matrix::Identity(4, 4);
    auto conj = [&](const Matrix& A, int l) { return Matrix(-s.J[l] * A * s.J[l]); };
    for (int k = 0; k < 3; ++k) {
        Matrix p = sym0;
        for (int l = 0; l < 3; ++l) p += (l == k ? 1.0 : -1.0) * conj(sym0, l);
        cc.S_parts[k] = 0.25 * p;
    }
    for (int l = 0; l < 3; ++l) cc.lambda[l] = (s.J[l].transpose() * skw).trace() / 4.0;
    cc.S0 = skw;
    for (int l = 0; l < 3; ++l) cc.S0 -= cc.lambda[l] * s.J[l];

    // Reconstruction residual over the coordinate frame.
    double res = 0.0;
    for (int i = 0; i < 5; ++i) {
        const double a = s.reeb[i];
        Vector xc = s.xi_basis.row(i).transpose();  // xi coordinates of e_i
        Spinor pred = mxi * (cc.S * xc) + a * (mxi * cc.V_xi);
        for (int k = 0; k < 3; ++k) pred += (cc.Theta[k].dot(xc) + a * cc.phi[k]) * jeta[k];
        res = std::max(res, (nabla[i] - pred).norm());
    }
    cc.residual = res;
    if (res > 1e-8)
        throw std::runtime_error("connection_components: reconstruction residual too large");
    return cc;
}

Spinor dirac_from_components(const SU2Structure& s, const ConnectionComponents& c,
                             const CliffordRep& rep5, const QuaternionicOps& ops,
                             const Spinor& eta) {
    const std::array<const Matrix*, 3> js = {&ops.j1, &ops.j2, &ops.j3};
    Spinor out = (-4.0 * c.mu_S + c.phi[0]) * eta;
    out += (-4.0 * c.lambda[0]) * ((*js[0]) * eta);
    out += (4.0 * c.lambda[1] + c.phi[2]) * ((*js[1]) * eta);
    out += (4.0 * c.lambda[2] - c.phi[1]) * ((*js[2]) * eta);
    // (J1(V + Theta1#) - J2(Theta2#) - J3(Theta3#)) eta, all in xi coordinates.
    Vector w = s.J[0] * (c.V_xi + c.Theta[0]);
    w -= s.J[1] * c.Theta[1];
    w -= s.J[2] * c.Theta[2];
    const Vector w5 = s.xi_basis * w;
    for (int i = 0; i < 5; ++i) out += w5[i] * (rep5.g[i] * eta);
    return out;
}

namespace {

// Coefficient-space coordinates of a form relative to a basis of forms.
Vector solve_in_basis(const std::vector<Form>& basis, const Form& target, double* residual) {
    std::vector<std::uint32_t> masks;
    for (const auto& f : basis)
        for (const auto& [m, c] : f.terms())
            if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
    for (const auto& [m, c] : target.terms())
        if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
    Matrix A(masks.size(), basis.size());
    Vector b(masks.size());
    for (std::size_t r = 0; r < masks.size(); ++r) {
        for (std::size_t c = 0; c < basis.size(); ++c) A(r, c) = basis[c].coeff(masks[r]);
        b[r] = target.coeff(masks[r]);
    }
    const Vector x = A.colPivHouseholderQr().solve(b);
    if (residual) *residual = (A * x - b).norm();
    return x;
}

}  // namespace

SU2Torsion su2_torsion(const MetricLieAlgebra& alg, const SU2Structure& s) {
    if (alg.dim != 5) throw std::invalid_argument("su2_torsion: dimension must be 5");
    SU2Torsion t;
    t.tau0k = Matrix::Zero(3, 3);

    std::array<Form, 4> f;  // adapted xi coframe
    for (int a = 0; a < 4; ++a) f[a] = s.xi_coframe(a);
    // Anti-self-dual forms on xi span the su(2) summand of Lambda^2 xi*.
    const std::array<Form, 3> asd = {wedge(f[0], f[1]) - wedge(f[2], f[3]),
                                     wedge(f[0], f[2]) + wedge(f[1], f[3]),
                                     wedge(f[0], f[3]) - wedge(f[1], f[2])};

    // d alpha over { alpha^f_a, omega_l, asd_j }.
    std::vector<Form> basis2;
    for (int a = 0; a < 4; ++a) basis2.push_back(wedge(s.alpha, f[a]));
    for (int l = 0; l < 3; ++l) basis2.push_back(s.omega[l]);
    for (int j = 0; j < 3; ++j) basis2.push_back(asd[j]);
    double res = 0.0;
    const Form dalpha = cev_differential(alg, s.alpha);
    const Vector xa = solve_in_basis(basis2, dalpha, &res);
    t.residual = std::max(t.residual, res);
    t.tau1_4 = Form(5, 1);
    for (int a = 0; a < 4; ++a) t.tau1_4 += xa[a] * f[a];
    for (int l = 0; l < 3; ++l) t.tau0[l] = xa[4 + l];
    t.tau2_4 = Form(5, 2);
    for (int j = 0; j < 3; ++j) t.tau2_4 += xa[7 + j] * asd[j];

    // d omega_k over { xi 3-forms, alpha^omega_l, alpha^asd_j }.
    const std::array<Form, 4> w3 = {wedge(wedge(f[1], f[2]), f[3]), wedge(wedge(f[0], f[2]), f[3]),
                                    wedge(wedge(f[0], f[1]), f[3]), wedge(wedge(f[0], f[1]), f[2])};
    for (int k = 0; k < 3; ++k) {
        std::vector<Form> basis3;
        for (int a = 0; a < 4; ++a) basis3.push_back(w3[a]);
        for (int l = 0; l < 3; ++l) basis3.push_back(wedge(s.alpha, s.omega[l]));
        for (int j = 0; j < 3; ++j) basis3.push_back(wedge(s.alpha, asd[j]));
        const Form dw = cev_differential(alg, s.omega[k]);
        const Vector x = solve_in_basis(basis3, dw, &res);
        t.residual = std::max(t.residual, res);
        for (int l = 0; l < 3; ++l) t.tau0k(k, l) = x[4 + l];
        t.tau2[k] = Form(5, 2);
        for (int j = 0; j < 3; ++j) t.tau2[k] += x[7 + j] * asd[j];
        // The xi part equals tau1^k ^ omega_k; solve the 4x4 system.
        Form p3(5, 3);
        for (int a = 0; a < 4; ++a) p3 += x[a] * w3[a];
        std::vector<Form> wedge_basis;
        for (int a = 0; a < 4; ++a) wedge_basis.push_back(wedge(f[a], s.omega[k]));
        const Vector xt = solve_in_basis(wedge_basis, p3, &res);
        t.residual = std::max(t.residual, res);
        t.tau1[k] = Form(5, 1);
        for (int a = 0; a < 4; ++a) t.tau1[k] += xt[a] * f[a];
    }
    if (t.residual > 1e-9)
        throw std::runtime_error("su2_torsion: decomposition residual too large");
    return t;
}

bool is_hypo(const MetricLieAlgebra& alg, const SU2Structure& s, double tol) {
    if (cev_differential(alg, s.omega[0]).norm() > tol) return false;
    for (int k = 1; k < 3; ++k)
        if (cev_differential(alg, wedge(s.alpha, s.omega[k])).norm() > tol) return false;
    return true;
}

SU3Structure su3_from_spinor(const Spinor& eta, const CliffordRep& rep6) {
    if (rep6.n != 6) throw std::invalid_argument("su3_from_spinor: need the dim-6 representation");
    require_unit(eta, "su3_from_spinor");
    SU3Structure s;
    const Matrix& j = rep6.volume;
    s.omega = Form(6, 2);
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            s.omega.add_term((1u << (a - 1)) | (1u << (b - 1)),
                             (j * (rep6.g[a - 1] * eta)).dot(rep6.g[b - 1] * eta));
    s.theta_plus = Form(6, 3);
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b)
            for (int c = b + 1; c <= 6; ++c) {
                const double val =
                    -(rep6.g[a - 1] * (rep6.g[b - 1] * (rep6.g[c - 1] * eta))).dot(eta);
                s.theta_plus.add_term((1u << (a - 1)) | (1u << (b - 1)) | (1u << (c - 1)), val);
            }
    s.omega.prune(0.0);
    s.theta_plus.prune(0.0);
    return s;
}

}  // namespace spinlab
