#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinlab/clifford.hpp"

using namespace spinlab;

TEST_CASE("the explicit Cl_6 matrices") {
    const CliffordRep r = rep_cl6();
    REQUIRE(r.n == 6);
    REQUIRE(r.N == 8);

    Spinor u1 = Spinor::Zero(8), u2 = Spinor::Zero(8);
    u1[0] = 1.0;
    u2[1] = 1.0;
    // e1 contains +E_18, e3 contains +E_25
    CHECK((r.g[0] * u1 - Vector::Unit(8, 7)).norm() == 0.0);
    CHECK((r.g[2] * u2 - Vector::Unit(8, 4)).norm() == 0.0);
    CHECK((r.g[0] * r.g[0] + Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(r.relation_residual() == 0.0);
}

TEST_CASE("representation invariants along the whole chain") {
    for (int n = 4; n <= 8; ++n) {
        const CliffordRep& r = cached_rep(n);
        CHECK(r.relation_residual() <= 1e-12);
        // volume commutes with generators for odd n, anticommutes for even n
        const double sign = (n % 2) ? 1.0 : -1.0;
        for (int i = 0; i < n; ++i)
            CHECK((r.volume * r.g[i] - sign * r.g[i] * r.volume).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("restriction: rho_5 = rho_6 (. e_6)") {
    const CliffordRep r6 = rep_cl6();
    const CliffordRep r5 = restrict_rep(r6);
    CHECK((r5.g[0] - r6.g[0] * r6.g[5]).cwiseAbs().maxCoeff() == 0.0);

    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        Vector v(5);
        for (int i = 0; i < 5; ++i) v[i] = rng.uniform(-1.0, 1.0);
        Matrix rv = Matrix::Zero(8, 8);
        for (int i = 0; i < 5; ++i) rv += v[i] * r5.g[i];
        CHECK((rv * rv + v.squaredNorm() * Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("restricting twice: the Cl_4 volume splits evenly") {
    const CliffordRep r4 = restrict_rep(restrict_rep(rep_cl6()));
    REQUIRE(r4.n == 4);
    CHECK((r4.volume * r4.volume - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() <= 1e-12);
    // dense eigendecomposition: the +1 / -1 eigenspaces both have dimension 4
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (r4.volume + r4.volume.transpose()));
    int plus = 0, minus = 0;
    for (int i = 0; i < 8; ++i) (es.eigenvalues()[i] > 0 ? plus : minus)++;
    CHECK(plus == 4);
    CHECK(minus == 4);
}

TEST_CASE("Cl_8 doubling") {
    const CliffordRep r8 = rep_cl8();
    REQUIRE(r8.N == 16);
    CHECK(r8.relation_residual() <= 1e-12);
    CHECK((r8.volume * r8.volume - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() <= 1e-12);

    // each generator maps the +1 eigenspace of nu_8 onto the -1 eigenspace
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (r8.volume + r8.volume.transpose()));
    Matrix wp(16, 8), wm(16, 8);
    int p = 0, m = 0;
    for (int i = 0; i < 16; ++i) {
        if (es.eigenvalues()[i] > 0)
            wp.col(p++) = es.eigenvectors().col(i);
        else
            wm.col(m++) = es.eigenvectors().col(i);
    }
    REQUIRE(p == 8);
    REQUIRE(m == 8);
    for (int i = 0; i < 8; ++i) {
        const Matrix blot = wp.transpose() * r8.g[i] * wp;  // W+ -> W+ block must vanish
        CHECK(blot.cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("restricting Cl_8 twice gives another valid Cl_6 representation") {
    const CliffordRep again = restrict_rep(restrict_rep(rep_cl8()));
    CHECK(again.n == 6);
    CHECK(again.relation_residual() <= 1e-12);
}

TEST_CASE("chirality projectors") {
    for (int n : {4, 8}) {
        const CliffordRep& r = cached_rep(n);
        const auto [pp, pm] = chirality_split(r);
        CHECK(std::abs(pp.trace() - r.N / 2.0) <= 1e-12);
        CHECK(std::abs(pm.trace() - r.N / 2.0) <= 1e-12);
        CHECK((pp * pp - pp).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((pp + pm - Matrix::Identity(r.N, r.N)).cwiseAbs().maxCoeff() <= 1e-12);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const Matrix ev = r.g[i] * r.g[j];
                CHECK((pp * ev - ev * pp).cwiseAbs().maxCoeff() <= 1e-12);
            }
    }
    CHECK_THROWS_AS(chirality_split(cached_rep(5)), std::invalid_argument);
}

TEST_CASE("quaternionic operators in dimension 5") {
    const QuaternionicOps ops = quaternionic_ops_dim5();
    const CliffordRep& r5 = cached_rep(5);
    const Matrix id = Matrix::Identity(8, 8);

    CHECK((ops.j1 * ops.j1 + id).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((ops.j2 * ops.j2 + id).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((ops.j3 * ops.j3 + id).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((ops.j1 * ops.j2 - ops.j3).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((ops.j1 * ops.j2 + ops.j2 * ops.j1).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((ops.j1 * ops.j3 + ops.j3 * ops.j1).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((ops.j2 * ops.j3 + ops.j3 * ops.j2).cwiseAbs().maxCoeff() <= 1e-12);

    for (int i = 0; i < 5; ++i) {
        CHECK((ops.j2 * r5.g[i] + r5.g[i] * ops.j2).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((ops.j1 * r5.g[i] - r5.g[i] * ops.j1).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((ops.j3 * r5.g[i] + r5.g[i] * ops.j3).cwiseAbs().maxCoeff() <= 1e-12);
    }
    for (const Matrix* j : {&ops.j1, &ops.j2, &ops.j3})
        CHECK((j->transpose() * (*j) - id).cwiseAbs().maxCoeff() <= 1e-12);
}
