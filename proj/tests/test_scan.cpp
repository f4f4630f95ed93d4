#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinlab/gstruct.hpp"
#include "spinlab/scan.hpp"

using namespace spinlab;

TEST_CASE("N5,6 grid scan hits exactly the lines mu12 = +-mu34") {
    const ScanResult r = scan_grid(find_family("N5,6"),
                                   {{"mu12", -2.0, 2.0, 41}, {"mu34", -2.0, 2.0, 41}}, 1e-8);
    // 40 admissible values of mu12 (zero excluded by the margin), two lines
    CHECK(r.hits.size() == 80);
    for (const auto& h : r.hits) {
        CHECK(std::abs(std::abs(h.binding.at("mu12")) - std::abs(h.binding.at("mu34"))) <= 1e-12);
        CHECK(h.kernel_dim > 0);
    }
    CHECK(r.points_skipped > 0);  // the axes are inadmissible
    CHECK(r.miss_min_singular > 0.05);
}

TEST_CASE("abelian family: every grid point is a hit") {
    // pad the abelian algebra with a dummy axis over a free parameter
    ParameterFamily fam = find_family("A5");
    fam.params = {"unused"};
    fam.definition = "dim 5\norientation +1\n";
    const ScanResult r = scan_grid(fam, {{"unused", -1.0, 1.0, 7}}, 1e-8);
    CHECK(r.hits.size() == 7);
    for (const auto& h : r.hits) CHECK(h.kernel_dim == 8);
}

TEST_CASE("grid points that break Jacobi are skipped and logged") {
    ParameterFamily fam;
    fam.name = "bad";
    fam.dim = 5;
    fam.definition = "dim 5\nd e3 = e12\nd e5 = a*e34 + e12\n";
    fam.params = {"a"};
    const ScanResult r = scan_grid(fam, {{"a", -1.0, 1.0, 3}}, 1e-8);
    CHECK(r.points_skipped == 2);   // a = +-1 fail d.d = 0
    CHECK(r.points_evaluated == 1); // a = 0 is a valid algebra
}

TEST_CASE("closed-form samplers produce the right kernels") {
    const CliffordRep& r5 = cached_rep(5);
    Rng rng(61);
    for (const std::string name : {"N5,6", "N5,5", "N5,4", "N5,2", "N5,1"}) {
        const ParameterFamily& fam = find_family(name);
        for (int t = 0; t < 10; ++t) {
            const MetricLieAlgebra good = fam.instantiate(sample_satisfying(name, rng));
            CHECK(kernel(assemble_dirac_nilpotent(good, r5), 1e-8).kernel_dim > 0);
            const MetricLieAlgebra bad = fam.instantiate(sample_violating(name, rng, 0.05));
            CHECK(kernel(assemble_dirac_nilpotent(bad, r5), 1e-8).kernel_dim == 0);
        }
    }
}

TEST_CASE("solve_condition runs the satisfy/violate protocol") {
    const ClaimRecord c = solve_condition("N5,6", 3, 20);
    CHECK(c.id == "condition/N5,6");
    CHECK(c.pass);
    const ClaimRecord b = solve_condition("L3+L3/branch1", 3, 10);
    CHECK(b.pass);
}

TEST_CASE("the N5,2 sample point from the harmonicity condition") {
    // (mu12, mu14, lam12_4, lam13, mu13, lam12_5) = (1, 1, 0.3, -0.3, 0.7, 0.7)
    const MetricLieAlgebra alg = find_family("N5,2").instantiate({{"mu12", 1.0},
                                                                  {"mu14", 1.0},
                                                                  {"lam12_4", 0.3},
                                                                  {"lam13", -0.3},
                                                                  {"mu13", 0.7},
                                                                  {"lam12_5", 0.7}});
    CHECK(kernel(assemble_dirac_nilpotent(alg, cached_rep(5)), 1e-8).kernel_dim > 0);
}

TEST_CASE("the N5,1 worked solution branch") {
    // lam12_4 = lam13 = 0, mu12 = 1, mu14 = 2, mu13 = 1 forces
    // lam12_5 = mu12 mu13 / mu14 and mu23^2 = (mu14^2 - mu12^2)(mu13^2 + mu14^2)/mu14^2.
    const MetricLieAlgebra alg = find_family("N5,1").instantiate({{"mu12", 1.0},
                                                                  {"lam12_4", 0.0},
                                                                  {"mu13", 1.0},
                                                                  {"lam12_5", 0.5},
                                                                  {"lam13", 0.0},
                                                                  {"mu14", 2.0},
                                                                  {"mu23", std::sqrt(15.0) / 2.0}});
    const Dim5Invariants inv = mu_v(alg);
    CHECK(std::abs(inv.mu - inv.v.norm()) <= 1e-12);
    CHECK(kernel(assemble_dirac_nilpotent(alg, cached_rep(5)), 1e-8).kernel_dim > 0);
}

TEST_CASE("L3+L3 branch samplers give harmonic metrics") {
    const CliffordRep& r6 = cached_rep(6);
    Rng rng(62);
    for (const std::string br : {"L3+L3/branch1", "L3+L3/branch2"}) {
        for (int t = 0; t < 10; ++t) {
            const Bindings b = sample_satisfying(br, rng);
            const MetricLieAlgebra alg = find_family("L3+L3").instantiate(b);
            CHECK(kernel(assemble_dirac_nilpotent(alg, r6), 1e-8).kernel_dim > 0);
        }
    }
}

TEST_CASE("verify_paper is deterministic and serializes stably") {
    const VerificationReport a = verify_paper(7);
    const VerificationReport b = verify_paper(7);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.claims.size() >= 60);
    CHECK(a.all_pass());

    const std::string js = a.to_json();
    CHECK(js.find("\"schema\":1") != std::string::npos);
    CHECK(js.find("\"seed\":7") != std::string::npos);
    CHECK(js.find("\"id\":\"Thm6.1/L3+A1\"") != std::string::npos);
    CHECK(js.find("\"status\":\"fail\"") == std::string::npos);
    CHECK(a.find("6.3.2/N6,17") != nullptr);
    CHECK(a.find("nope") == nullptr);
}

TEST_CASE("sub-streams are tag-separated and reproducible") {
    Rng a = subrng(0, "x");
    Rng b = subrng(0, "x");
    Rng c = subrng(0, "y");
    const double va = a.uniform(0, 1), vb = b.uniform(0, 1), vc = c.uniform(0, 1);
    CHECK(va == vb);
    CHECK(va != vc);
}
