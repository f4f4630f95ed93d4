#include "spinlab/algebra.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace spinlab {

bool MetricLieAlgebra::nilpotent_frame() const {
    for (int k = 1; k <= dim; ++k) {
        const std::uint32_t allowed = (1u << (k - 1)) - 1u;  // indices < k
        for (const auto& [mask, c] : d(k).terms())
            if (mask & ~allowed) return false;
    }
    return true;
}

double MetricLieAlgebra::jacobi_residual() const {
    double r = 0.0;
    for (int i = 1; i <= dim; ++i) r = std::max(r, cev_differential(*this, d(i)).norm());
    return r;
}

void MetricLieAlgebra::validate(double tol) const {
    if ((int)differentials.size() != dim) throw std::invalid_argument("algebra: differential count mismatch");
    for (int i = 1; i <= dim; ++i) {
        if (d(i).dim() != dim) throw std::invalid_argument("algebra: differential dimension mismatch");
        const Form dd = cev_differential(*this, d(i));
        if (dd.norm() > tol)
            throw JacobiError("Jacobi identity fails on e" + std::to_string(i) + " (residual " +
                              std::to_string(dd.norm()) + ")");
    }
}

Form cev_differential(const MetricLieAlgebra& alg, const Form& a) {
    if (a.dim() != alg.dim) throw std::invalid_argument("cev_differential: dimension mismatch");
    Form out(alg.dim, a.degree() + 1);
    // d(e^{i1...ik}) = sum_j (-1)^{j-1} de^{ij} ^ e^{i1...^ij...ik}
    for (const auto& [mask, c] : a.terms()) {
        int pos = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1, ++pos) {
            const int b = std::countr_zero(rest);
            const double sign = (pos & 1) ? -1.0 : 1.0;
            const Form partial = wedge(alg.d(b + 1), Form::basis(alg.dim, mask & ~(1u << b)));
            out += (c * sign) * partial;
        }
    }
    return out;
}

Form Derivation::apply(const MetricLieAlgebra& alg, int i) const {
    Form out(alg.dim, 1);
    for (int j = 1; j <= alg.dim; ++j) out.add_term(1u << (j - 1), matrix(i - 1, j - 1));
    return out;
}

Form Derivation::apply(const MetricLieAlgebra& alg, const Form& a) const {
    Form out(alg.dim, a.degree());
    for (const auto& [mask, c] : a.terms()) {
        int pos = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1, ++pos) {
            const Form left = Form::basis(alg.dim, mask & ((1u << std::countr_zero(rest)) - 1u));
            const std::uint32_t hi = mask & ~((2u << std::countr_zero(rest)) - 1u);
            out += c * wedge(wedge(left, apply(alg, std::countr_zero(rest) + 1)),
                             Form::basis(alg.dim, hi));
        }
    }
    return out;
}

double Derivation::residual(const MetricLieAlgebra& alg) const {
    double r = 0.0;
    for (int i = 1; i <= alg.dim; ++i) {
        const Form lhs = cev_differential(alg, apply(alg, i));
        const Form rhs = apply(alg, alg.d(i));
        r = std::max(r, (lhs - rhs).norm());
    }
    return r;
}

MetricLieAlgebra rank1_extension(const MetricLieAlgebra& n_alg, const Derivation& D, double tol) {
    if (!n_alg.nilpotent_frame()) throw std::invalid_argument("rank1_extension: frame not nilpotent");
    if (D.matrix.rows() != n_alg.dim || D.matrix.cols() != n_alg.dim)
        throw std::invalid_argument("rank1_extension: derivation size mismatch");
    if (D.residual(n_alg) > tol)
        throw std::invalid_argument("rank1_extension: matrix is not a derivation");

    MetricLieAlgebra out;
    out.dim = n_alg.dim + 1;
    out.orientation = n_alg.orientation;
    out.name = n_alg.name.empty() ? "" : n_alg.name + "+rank1";
    out.differentials.assign(out.dim, Form(out.dim, 2));
    const Form e0 = Form::basis(out.dim, 1u << n_alg.dim);
    for (int i = 1; i <= n_alg.dim; ++i) {
        Form di(out.dim, 2);
        for (const auto& [mask, c] : n_alg.d(i).terms()) di.add_term(mask, c);
        Form Dei(out.dim, 1);
        for (int j = 1; j <= n_alg.dim; ++j) Dei.add_term(1u << (j - 1), D.matrix(i - 1, j - 1));
        out.differentials[i - 1] = di + wedge(Dei, e0);
    }
    return out;
}

MetricLieAlgebra pad_abelian(const MetricLieAlgebra& alg, int k) {
    MetricLieAlgebra out;
    out.dim = alg.dim + k;
    out.orientation = alg.orientation;
    out.name = alg.name;
    out.differentials.assign(out.dim, Form(out.dim, 2));
    for (int i = 1; i <= alg.dim; ++i)
        for (const auto& [mask, c] : alg.d(i).terms()) out.differentials[i - 1].add_term(mask, c);
    return out;
}

}  // namespace spinlab
