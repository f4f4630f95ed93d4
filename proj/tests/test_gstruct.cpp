#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinlab/catalog.hpp"
#include "spinlab/gstruct.hpp"
#include "spinlab/parse.hpp"

using namespace spinlab;

namespace {
const CliffordRep& r5() { return cached_rep(5); }
const CliffordRep& r6() { return cached_rep(6); }
const QuaternionicOps& qops() { return cached_quaternionic_ops(); }
}  // namespace

TEST_CASE("mu and v on the table rows") {
    SUBCASE("N5,6") {
        Rng rng(31);
        for (int t = 0; t < 10; ++t) {
            const double a = rng.nonzero(), b = rng.nonzero();
            const Dim5Invariants inv =
                mu_v(find_family("N5,6").instantiate({{"mu12", a}, {"mu34", b}}));
            CHECK(inv.mu == doctest::Approx(a * a + b * b));
            CHECK(inv.v[4] == doctest::Approx(2.0 * a * b));
            CHECK(inv.v.head(4).norm() <= 1e-14);
        }
    }
    SUBCASE("L4+A1") {
        const Dim5Invariants inv = mu_v(find_family("L4+A1").instantiate(
            {{"mu12", 1.2}, {"lam12", 0.5}, {"lam13", -0.7}, {"mu14", 0.9}}));
        CHECK(inv.v[0] == doctest::Approx(-2.0 * 1.2 * (-0.7)));
        CHECK(inv.v.tail(4).norm() <= 1e-14);
    }
    SUBCASE("abelian") {
        const Dim5Invariants inv = mu_v(find_family("A5").instantiate({}));
        CHECK(inv.mu == 0.0);
        CHECK(inv.v.norm() == 0.0);
    }
}

TEST_CASE("the squared-operator identity 16D^2 = mu I + v j1") {
    Rng rng(32);
    for (const std::string name : {"N5,4", "N5,3", "N5,1"}) {
        const ParameterFamily& fam = find_family(name);
        for (int t = 0; t < 10; ++t) {
            const MetricLieAlgebra alg = fam.instantiate(fam.sample(rng));
            const Dim5Invariants inv = mu_v(alg);
            const DiracMatrix sq = assemble_dirac_squared(alg, r5());
            const Matrix rhs = inv.mu * Matrix::Identity(8, 8) +
                               action_matrix(inv.v_form, r5()) * qops().j1;
            CHECK((sq.mat - rhs).cwiseAbs().maxCoeff() <= 1e-10);
        }
    }
}

TEST_CASE("spectrum law over 200 random dim-5 bindings") {
    Rng rng(42);
    const std::vector<std::string> names = {"L3+A2", "L4+A1", "N5,6", "N5,5",
                                            "N5,4",  "N5,3",  "N5,2", "N5,1"};
    for (int t = 0; t < 200; ++t) {
        const ParameterFamily& fam = find_family(names[t % names.size()]);
        const MetricLieAlgebra alg = fam.instantiate(fam.sample(rng));
        const Dim5Invariants inv = mu_v(alg);
        const SpectrumReport sp = spectrum(assemble_dirac_nilpotent(alg, r5()));
        const double hi = std::sqrt(inv.mu + inv.v.norm());
        const double lo = std::sqrt(std::max(0.0, inv.mu - inv.v.norm()));
        Vector expect(8);
        expect << -hi, -hi, -lo, -lo, lo, lo, hi, hi;
        CHECK((sp.eigenvalues - expect).cwiseAbs().maxCoeff() <= 1e-8);
    }
}

TEST_CASE("harmonicity predicate") {
    CHECK(is_harmonic_metric_dim5(
        find_family("N5,5").instantiate({{"mu12", 0.8}, {"mu13", 0.8}})));
    CHECK_FALSE(is_harmonic_metric_dim5(
        find_family("L3+A2").instantiate({{"mu12", 1.0}})));
    Rng rng(33);
    const ParameterFamily& n53 = find_family("N5,3");
    for (int t = 0; t < 20; ++t)
        CHECK_FALSE(is_harmonic_metric_dim5(n53.instantiate(n53.sample(rng))));
    // cross-validation against the kernel
    const ParameterFamily& n56 = find_family("N5,6");
    for (int t = 0; t < 20; ++t) {
        const Bindings b = n56.sample(rng);
        const MetricLieAlgebra alg = n56.instantiate(b);
        const bool pred = is_harmonic_metric_dim5(alg);
        const bool ker = kernel(assemble_dirac_nilpotent(alg, r5()), 1e-8).kernel_dim > 0;
        CHECK(pred == ker);
    }
}

TEST_CASE("mu and gamma in dimension 6") {
    SUBCASE("L3+L3 printed formula, including the lam23 = 0 reduction") {
        for (double l23 : {0.3, 0.0}) {
            const Bindings b = {{"mu12", 1.1}, {"mu34", 0.8}, {"lam13_5", 0.5},
                                {"lam13_6", -0.4}, {"lam23", l23}};
            const Dim6Invariants inv = mu_gamma(find_family("L3+L3").instantiate(b));
            Form expect(6, 2);
            expect.add_term(0b001001, -2.0 * 1.1 * (-0.4));  // e14
            expect.add_term(0b001100, -2.0 * 0.5 * l23);     // e34
            expect.add_term(0b001010, -2.0 * 1.1 * l23);     // e24
            expect.add_term(0b000110, +2.0 * 0.5 * 0.8);     // e23
            CHECK((inv.gamma - expect).norm() <= 1e-14);
        }
    }
    SUBCASE("abelian") {
        const Dim6Invariants inv = mu_gamma(find_family("A6").instantiate({}));
        CHECK(inv.mu == 0.0);
        CHECK(inv.gamma.is_zero());
    }
    SUBCASE("matrix identity on a fixed non-decomposable row") {
        const MetricLieAlgebra alg = find_family("N6,24").instantiate({});
        const Dim6Invariants inv = mu_gamma(alg);
        const DiracMatrix sq = assemble_dirac_squared(alg, r6());
        const Matrix rhs = inv.mu * Matrix::Identity(8, 8) +
                           action_matrix(inv.gamma, r6()) * r6().volume;
        CHECK((sq.mat - rhs).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("SU(2) extraction from the N5,6 kernel spinor phi_1") {
    const MetricLieAlgebra alg = find_family("N5,6").instantiate({{"mu12", 1.0}, {"mu34", -1.0}});
    Spinor eta = Spinor::Zero(8);
    eta[0] = 1.0;
    REQUIRE((assemble_dirac_nilpotent(alg, r5()).mat * eta).norm() <= 1e-12);

    const SU2Structure s = su2_from_spinor(eta, r5(), qops());
    CHECK(std::abs(s.reeb[4]) == doctest::Approx(1.0));
    CHECK(s.reeb.head(4).norm() <= 1e-12);

    Form w1(5, 2), w2(5, 2), w3(5, 2);
    w1.add_term(0b00011, 1.0);
    w1.add_term(0b01100, 1.0);        // e12 + e34
    w2.add_term(0b01001, -1.0);
    w2.add_term(0b00110, -1.0);       // -(e14 + e23)
    w3.add_term(0b00101, 1.0);
    w3.add_term(0b01010, -1.0);       // e13 - e24
    CHECK((s.omega[0] - w1).norm() <= 1e-12);
    CHECK((s.omega[1] - w2).norm() <= 1e-12);
    CHECK((s.omega[2] - w3).norm() <= 1e-12);

    CHECK(is_hypo(alg, s));
    const SU2Torsion t = su2_torsion(alg, s);
    Form d_expect(5, 2);
    d_expect.add_term(0b00011, 1.0);
    d_expect.add_term(0b01100, -1.0);  // mu12 (e12 - e34)
    CHECK((t.tau2_4 - d_expect).norm() <= 1e-12);
    CHECK(std::abs(t.tau0[0]) + std::abs(t.tau0[1]) + std::abs(t.tau0[2]) <= 1e-12);
    CHECK(t.tau1_4.norm() <= 1e-12);
}

TEST_CASE("SU(2) compatibility conditions for arbitrary unit spinors") {
    Rng rng(34);
    for (int t = 0; t < 30; ++t) {
        const Spinor eta = random_unit_vector(rng, 8);
        const SU2Structure s = su2_from_spinor(eta, r5(), qops());
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                CHECK(wedge(s.omega[i], s.omega[j]).norm() <= 1e-12);
        const Form sq1 = wedge(s.omega[0], s.omega[0]);
        CHECK((wedge(s.omega[1], s.omega[1]) - sq1).norm() <= 1e-12);
        CHECK((wedge(s.omega[2], s.omega[2]) - sq1).norm() <= 1e-12);
        CHECK(wedge(s.alpha, sq1).norm() > 0.1);  // alpha ^ omega1^2 != 0
        // quaternion relations of the J's
        CHECK((s.J[0] * s.J[1] - s.J[2]).cwiseAbs().maxCoeff() <= 1e-12);
        for (int k = 0; k < 3; ++k)
            CHECK((s.J[k] * s.J[k] + Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK_FALSE(s.alpha.is_zero());
    }
    CHECK_THROWS_AS(su2_from_spinor(2.0 * random_unit_vector(rng, 8), r5(), qops()),
                    std::invalid_argument);
}

TEST_CASE("quaternionic phase changes flip the omegas in the stated pattern") {
    Rng rng(35);
    const std::array<const Matrix*, 3> js = {&qops().j1, &qops().j2, &qops().j3};
    for (int t = 0; t < 10; ++t) {
        const Spinor eta = random_unit_vector(rng, 8);
        const SU2Structure base = su2_from_spinor(eta, r5(), qops());
        for (int k = 0; k < 3; ++k) {
            const SU2Structure moved = su2_from_spinor((*js[k]) * eta, r5(), qops());
            CHECK((moved.alpha - base.alpha).norm() <= 1e-12);
            for (int l = 0; l < 3; ++l) {
                const double sign = (k == l) ? 1.0 : -1.0;
                CHECK((moved.omega[l] - sign * base.omega[l]).norm() <= 1e-12);
            }
        }
    }
}

TEST_CASE("Lemma 4.2: star_xi(beta ^ omega_k) = -J_k beta on covectors") {
    Rng rng(36);
    for (int t = 0; t < 10; ++t) {
        const Spinor eta = random_unit_vector(rng, 8);
        const SU2Structure s = su2_from_spinor(eta, r5(), qops());
        for (int k = 0; k < 3; ++k) {
            // work in the adapted xi coordinates, oriented by omega_1^2
            Form wk(4, 2);
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) wk.add_term((1u << a) | (1u << b), s.J[k](b, a));
            Vector beta(4);
            for (int a = 0; a < 4; ++a) beta[a] = rng.uniform(-1.0, 1.0);
            Form bf(4, 1);
            for (int a = 0; a < 4; ++a) bf.add_term(1u << a, beta[a]);
            const Form lhs = hodge_star(wedge(bf, wk), Orientation{+1});
            // (J_k beta)(X) = beta(J_k X): coordinates via the transpose
            const Vector jb = s.J[k].transpose() * beta;
            Form rhs(4, 1);
            for (int a = 0; a < 4; ++a) rhs.add_term(1u << a, -jb[a]);
            CHECK((lhs - rhs).norm() <= 1e-12);
        }
    }
}

TEST_CASE("covariant derivative of invariant spinors") {
    Rng rng(37);
    SUBCASE("abelian: flat") {
        const MetricLieAlgebra ab = find_family("A5").instantiate({});
        const Spinor eta = random_unit_vector(rng, 8);
        for (int i = 1; i <= 5; ++i)
            CHECK(covariant_derivative_spinor(ab, r5(), eta, i).norm() == 0.0);
    }
    SUBCASE("Dirac reconstruction and metric compatibility") {
        for (const std::string name : {"N5,6", "N5,2", "L4+A1"}) {
            const ParameterFamily& fam = find_family(name);
            const MetricLieAlgebra alg = fam.instantiate(fam.sample(rng));
            const Spinor eta = random_unit_vector(rng, 8);
            Spinor dirac = Spinor::Zero(8);
            for (int i = 1; i <= 5; ++i) {
                const Spinor nab = covariant_derivative_spinor(alg, r5(), eta, i);
                dirac += r5().g[i - 1] * nab;
                CHECK(std::abs(nab.dot(eta)) <= 1e-12);  // metric connection
            }
            const DiracMatrix M = assemble_dirac(alg, r5());
            CHECK((dirac - 0.25 * (M.mat * eta)).norm() <= 1e-10);
        }
    }
}

TEST_CASE("connection components reconstruct nabla and the Dirac value") {
    Rng rng(38);
    for (int t = 0; t < 10; ++t) {
        const ParameterFamily& fam = find_family(t % 2 ? "N5,4" : "N5,1");
        const MetricLieAlgebra alg = fam.instantiate(fam.sample(rng));
        const Spinor eta = random_unit_vector(rng, 8);
        const SU2Structure s = su2_from_spinor(eta, r5(), qops());
        const ConnectionComponents cc = connection_components(alg, r5(), qops(), eta);
        CHECK(cc.residual <= 1e-10);
        // S decomposition adds back up
        Matrix S = cc.mu_S * Matrix::Identity(4, 4) + cc.S0;
        for (int l = 0; l < 3; ++l) S += cc.S_parts[l] + cc.lambda[l] * s.J[l];
        CHECK((S - cc.S).cwiseAbs().maxCoeff() <= 1e-12);
        // the component formula for the Dirac operator
        const DiracMatrix M = assemble_dirac(alg, r5());
        const Spinor rhs = dirac_from_components(s, cc, r5(), qops(), eta);
        CHECK((0.25 * (M.mat * eta) - rhs).norm() <= 1e-10);
    }
}

TEST_CASE("harmonic kernel spinors satisfy v = -mu alpha_sharp") {
    const MetricLieAlgebra alg =
        find_family("N5,4").instantiate({{"mu12", 0.8}, {"lam12", 0.0}, {"lam13", 0.0},
                                         {"mu23", 1.3}, {"mu14", std::sqrt(1.3 * 1.3 - 0.64)}});
    const Dim5Invariants inv = mu_v(alg);
    REQUIRE(std::abs(inv.mu - inv.v.norm()) <= 1e-12);
    const SpectrumReport sp = kernel(assemble_dirac_nilpotent(alg, r5()), 1e-9);
    REQUIRE(sp.kernel_dim > 0);
    for (int k = 0; k < sp.kernel_dim; ++k) {
        const SU2Structure s = su2_from_spinor(sp.kernel_basis.col(k), r5(), qops());
        CHECK((inv.v + inv.mu * s.reeb).norm() <= 1e-8 * std::max(inv.mu, 1.0));
    }
}

TEST_CASE("torsion of the N5,5 harmonic structure") {
    const MetricLieAlgebra alg = find_family("N5,5").instantiate({{"mu12", 1.0}, {"mu13", -1.0}});
    Spinor eta = Spinor::Zero(8);
    eta[0] = eta[5] = 1.0 / std::sqrt(2.0);  // (phi_1 + phi_6)/sqrt(2)
    REQUIRE((assemble_dirac_nilpotent(alg, r5()).mat * eta).norm() <= 1e-12);
    const SU2Structure s = su2_from_spinor(eta, r5(), qops());
    CHECK(s.reeb[0] == doctest::Approx(-1.0));  // alpha = -e1
    const SU2Torsion t = su2_torsion(alg, s);
    Form expect(5, 2);  // mu13 (e25 + e34)
    expect.add_term(0b10010, -1.0);
    expect.add_term(0b01100, -1.0);
    CHECK((t.tau2[1] - expect).norm() <= 1e-12);
    CHECK(t.tau2[0].norm() <= 1e-12);
    CHECK(t.tau2[2].norm() <= 1e-12);
    CHECK(t.tau2_4.norm() <= 1e-12);
    CHECK(t.tau1_4.norm() <= 1e-12);
    for (int k = 0; k < 3; ++k) CHECK(t.tau1[k].norm() <= 1e-12);
    CHECK(t.tau0k.cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(is_hypo(alg, s));
}

TEST_CASE("torsion reconstruction and the tau0 symmetries") {
    Rng rng(39);
    for (int t = 0; t < 10; ++t) {
        const ParameterFamily& fam = find_family("N5,1");
        const MetricLieAlgebra alg = fam.instantiate(fam.sample(rng));
        const Spinor eta = random_unit_vector(rng, 8);
        const SU2Structure s = su2_from_spinor(eta, r5(), qops());
        const SU2Torsion tor = su2_torsion(alg, s);
        CHECK(tor.residual <= 1e-9);
        // d alpha reconstructs
        Form da(5, 2);
        for (int l = 0; l < 3; ++l) da += tor.tau0[l] * s.omega[l];
        da += wedge(s.alpha, tor.tau1_4);
        da += tor.tau2_4;
        CHECK((da - cev_differential(alg, s.alpha)).norm() <= 1e-10);
        // d omega_k reconstructs
        for (int k = 0; k < 3; ++k) {
            Form dk(5, 3);
            for (int l = 0; l < 3; ++l) dk += tor.tau0k(k, l) * wedge(s.alpha, s.omega[l]);
            dk += wedge(tor.tau1[k], s.omega[k]);
            dk += wedge(s.alpha, tor.tau2[k]);
            CHECK((dk - cev_differential(alg, s.omega[k])).norm() <= 1e-10);
        }
        CHECK(std::abs(tor.tau0k(0, 0) - tor.tau0k(1, 1)) <= 1e-10);
        CHECK(std::abs(tor.tau0k(1, 1) - tor.tau0k(2, 2)) <= 1e-10);
        for (int k = 0; k < 3; ++k)
            for (int l = k + 1; l < 3; ++l)
                CHECK(std::abs(tor.tau0k(k, l) + tor.tau0k(l, k)) <= 1e-10);
    }
}

TEST_CASE("harmonic N5,4 structures have a contact alpha") {
    // d alpha is proportional to mu14 e14 + mu23 e23 for every kernel spinor
    const double mu12 = 0.7, mu23 = 1.2, mu14 = std::sqrt(mu23 * mu23 - mu12 * mu12);
    const MetricLieAlgebra alg = find_family("N5,4").instantiate(
        {{"mu12", mu12}, {"lam12", 0.0}, {"lam13", 0.0}, {"mu14", mu14}, {"mu23", mu23}});
    const SpectrumReport sp = kernel(assemble_dirac_nilpotent(alg, r5()), 1e-9);
    REQUIRE(sp.kernel_dim > 0);
    Form dir(5, 2);
    dir.add_term(0b01001, mu14);
    dir.add_term(0b00110, mu23);
    for (int k = 0; k < sp.kernel_dim; ++k) {
        const SU2Structure s = su2_from_spinor(sp.kernel_basis.col(k), r5(), qops());
        const Form da = cev_differential(alg, s.alpha);
        const double coef = da.inner(dir) / (dir.norm() * dir.norm());
        CHECK(std::abs(coef) > 0.1);  // contact: d alpha nondegenerate on xi
        CHECK((da - coef * dir).norm() <= 1e-12);
    }
}

TEST_CASE("a generic non-harmonic structure is not hypo") {
    Rng rng(40);
    const ParameterFamily& fam = find_family("N5,4");
    const MetricLieAlgebra alg = fam.instantiate(fam.sample(rng));
    const Spinor eta = random_unit_vector(rng, 8);
    CHECK_FALSE(is_hypo(alg, su2_from_spinor(eta, r5(), qops())));
}

TEST_CASE("SU(3) structures from unit spinors in dimension 6") {
    Rng rng(41);
    for (int t = 0; t < 20; ++t) {
        const Spinor eta = random_unit_vector(rng, 8);
        const SU3Structure s = su3_from_spinor(eta, r6());
        // omega^3 is a volume form (nondegenerate J)
        const Form w3 = wedge(wedge(s.omega, s.omega), s.omega);
        CHECK(std::abs(w3.coeff(0b111111)) > 0.1);
        CHECK(wedge(s.omega, s.theta_plus).norm() <= 1e-12);
    }
    CHECK_THROWS_AS(su3_from_spinor(Spinor::Zero(8), r6()), std::invalid_argument);
}
