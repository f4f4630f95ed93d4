#include "spinlab/clifford.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace spinlab {

namespace {

// E_{ij}: skew endomorphism of R^8 sending the i-th canonical vector to the
// j-th one, the j-th to minus the i-th, zero on the orthogonal complement.
void add_E(Matrix& m, int i, int j, double s) {
    m(j - 1, i - 1) += s;
    m(i - 1, j - 1) -= s;
}

double rep_residual(const CliffordRep& rep) {
    double r = 0.0;
    const Matrix id = Matrix::Identity(rep.N, rep.N);
    for (int i = 0; i < rep.n; ++i) {
        for (int j = 0; j < rep.n; ++j) {
            const Matrix anti = rep.g[i] * rep.g[j] + rep.g[j] * rep.g[i];
            const Matrix target = (i == j) ? Matrix(-2.0 * id) : Matrix::Zero(rep.N, rep.N).eval();
            r = std::max(r, (anti - target).cwiseAbs().maxCoeff());
        }
        r = std::max(r, (rep.g[i] + rep.g[i].transpose()).cwiseAbs().maxCoeff());
        r = std::max(r, (rep.g[i].transpose() * rep.g[i] - id).cwiseAbs().maxCoeff());
    }
    return r;
}

Matrix ordered_volume(const std::vector<Matrix>& g, int N) {
    Matrix v = Matrix::Identity(N, N);
    for (const auto& gi : g) v = v * gi;
    return v;
}

}  // namespace

double CliffordRep::relation_residual() const { return rep_residual(*this); }

CliffordRep rep_cl6() {
    CliffordRep rep;
    rep.n = 6;
    rep.N = 8;
    rep.g.assign(6, Matrix::Zero(8, 8));

    add_E(rep.g[0], 1, 8, +1); add_E(rep.g[0], 2, 7, +1); add_E(rep.g[0], 3, 6, -1); add_E(rep.g[0], 4, 5, -1);
    add_E(rep.g[1], 1, 7, -1); add_E(rep.g[1], 2, 8, +1); add_E(rep.g[1], 3, 5, +1); add_E(rep.g[1], 4, 6, -1);
    add_E(rep.g[2], 1, 6, -1); add_E(rep.g[2], 2, 5, +1); add_E(rep.g[2], 3, 8, -1); add_E(rep.g[2], 4, 7, +1);
    add_E(rep.g[3], 1, 5, -1); add_E(rep.g[3], 2, 6, -1); add_E(rep.g[3], 3, 7, -1); add_E(rep.g[3], 4, 8, -1);
    add_E(rep.g[4], 1, 3, -1); add_E(rep.g[4], 2, 4, -1); add_E(rep.g[4], 5, 7, +1); add_E(rep.g[4], 6, 8, +1);
    add_E(rep.g[5], 1, 4, +1); add_E(rep.g[5], 2, 3, -1); add_E(rep.g[5], 5, 8, -1); add_E(rep.g[5], 6, 7, +1);

    rep.volume = ordered_volume(rep.g, rep.N);
    return rep;
}

CliffordRep restrict_rep(const CliffordRep& rep) {
    if (rep.n < 2) throw std::invalid_argument("restrict_rep: need n >= 2");
    CliffordRep out;
    out.n = rep.n - 1;
    out.N = rep.N;
    out.g.reserve(out.n);
    const Matrix& last = rep.g[rep.n - 1];
    for (int i = 0; i < out.n; ++i) out.g.push_back(rep.g[i] * last);
    out.volume = ordered_volume(out.g, out.N);
    return out;
}

CliffordRep rep_cl8() {
    // Doubling of rep_cl6 on R^16 = R^2 (x) R^8:
    //   H_i = sigma1 (x) G_i (i<=6),  H_7 = sigma1 (x) nu_6,  H_8 = J (x) I,
    // with sigma1 = [[0,1],[1,0]] and J = [[0,1],[-1,0]].  Its volume works
    // out to sigma3 (x) I, so W+ is spanned by the first eight coordinates.
    const CliffordRep r6 = rep_cl6();
    CliffordRep rep;
    rep.n = 8;
    rep.N = 16;
    rep.g.assign(8, Matrix::Zero(16, 16));

    auto sigma1_block = [&](const Matrix& a) {
        Matrix m = Matrix::Zero(16, 16);
        m.block(0, 8, 8, 8) = a;
        m.block(8, 0, 8, 8) = a;
        return m;
    };
    for (int i = 0; i < 6; ++i) rep.g[i] = sigma1_block(r6.g[i]);
    rep.g[6] = sigma1_block(r6.volume);
    rep.g[7].block(0, 8, 8, 8) = Matrix::Identity(8, 8);
    rep.g[7].block(8, 0, 8, 8) = -Matrix::Identity(8, 8);

    rep.volume = ordered_volume(rep.g, rep.N);
    return rep;
}

CliffordRep rep_for_dim(int n) {
    switch (n) {
        case 4: return restrict_rep(restrict_rep(rep_cl6()));
        case 5: return restrict_rep(rep_cl6());
        case 6: return rep_cl6();
        case 7: return restrict_rep(rep_cl8());
        case 8: return rep_cl8();
        default: throw std::invalid_argument("rep_for_dim: n must be 4..8");
    }
}

std::pair<Matrix, Matrix> chirality_split(const CliffordRep& rep) {
    if (rep.n % 4 != 0) throw std::invalid_argument("chirality_split: n must be 0 mod 4");
    const Matrix id = Matrix::Identity(rep.N, rep.N);
    return {0.5 * (id + rep.volume), 0.5 * (id - rep.volume)};
}

QuaternionicOps quaternionic_ops_dim5() {
    const CliffordRep r6 = rep_cl6();
    const CliffordRep r5 = restrict_rep(r6);
    QuaternionicOps ops;
    ops.j1 = r5.volume;
    ops.j2 = r6.g[5];
    ops.j3 = ops.j1 * ops.j2;
    return ops;
}

const CliffordRep& cached_rep(int n) {
    switch (n) {
        case 4: { static const CliffordRep r = rep_for_dim(4); return r; }
        case 5: { static const CliffordRep r = rep_for_dim(5); return r; }
        case 6: { static const CliffordRep r = rep_for_dim(6); return r; }
        case 7: { static const CliffordRep r = rep_for_dim(7); return r; }
        case 8: { static const CliffordRep r = rep_for_dim(8); return r; }
        default: throw std::invalid_argument("cached_rep: n must be 4..8");
    }
}

const QuaternionicOps& cached_quaternionic_ops() {
    static const QuaternionicOps ops = quaternionic_ops_dim5();
    return ops;
}

Spinor clifford_action(const Form& a, const CliffordRep& rep, const Spinor& phi) {
    if (a.dim() != rep.n) throw std::invalid_argument("clifford_action: dimension mismatch");
    if (phi.size() != rep.N) throw std::invalid_argument("clifford_action: spinor size mismatch");
    Spinor out = Spinor::Zero(rep.N);
    for (const auto& [mask, c] : a.terms()) {
        Spinor v = phi;
        // apply G_{ik} first, G_{i1} last => product G_{i1}...G_{ik} phi
        std::uint32_t rest = mask;
        std::vector<int> idx;
        while (rest) {
            idx.push_back(std::countr_zero(rest));
            rest &= rest - 1;
        }
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) v = rep.g[*it] * v;
        out += c * v;
    }
    return out;
}

Matrix action_matrix(const Form& a, const CliffordRep& rep) {
    if (a.dim() != rep.n) throw std::invalid_argument("action_matrix: dimension mismatch");
    Matrix out = Matrix::Zero(rep.N, rep.N);
    for (const auto& [mask, c] : a.terms()) {
        Matrix m = Matrix::Identity(rep.N, rep.N);
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) m = m * rep.g[std::countr_zero(rest)];
        out += c * m;
    }
    return out;
}

}  // namespace spinlab
