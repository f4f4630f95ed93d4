#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinlab/catalog.hpp"
#include "spinlab/dirac.hpp"

namespace spinlab {

struct GridAxis {
    std::string param;
    double lo = 0.0, hi = 0.0;
    int steps = 0;
};

struct ScanHit {
    Bindings binding;
    int kernel_dim = 0;
    double min_abs_eigenvalue = 0.0;
};

struct ScanResult {
    std::string family;
    std::string grid_spec;
    std::vector<ScanHit> hits;
    double miss_min_singular = 0.0;  // min singular value over admissible non-hit points
    long points_evaluated = 0;
    long points_skipped = 0;  // inadmissible (nonzero-margin) or Jacobi failures
};

// Evaluates min |eigenvalue| of 4*Dirac over the grid; hits where <= tol,
// each re-verified by kernel() at a 10x tighter relative tolerance.
// Points where a nonzero-constrained parameter falls inside the 0.1 margin
// are skipped. Parallel over grid points; SPINLAB_THREADS caps the pool.
ScanResult scan_grid(const ParameterFamily& family, const std::vector<GridAxis>& axes,
                     double tol = 1e-8);

// Deterministic per-topic random stream derived from a seed.
Rng subrng(std::uint64_t seed, const std::string& tag);

// Closed-form harmonicity conditions of the dim-5 families and the L3+L3
// branches: sampled bindings satisfying / violating (margin on the spectral
// gap mu - ||v||) the printed condition.
Bindings sample_satisfying(const std::string& family, Rng& rng);
Bindings sample_violating(const std::string& family, Rng& rng, double margin = 0.05);

struct ClaimRecord {
    std::string id;
    bool pass = false;
    double tol = 0.0;
    std::vector<std::pair<std::string, double>> values;
    std::string note;
};

// Sampling protocol for one closed-form condition: satisfying bindings must
// produce kernels, violating ones (spectral-gap margin 0.05) must not.
ClaimRecord solve_condition(const std::string& family, std::uint64_t seed, int samples = 100);

struct VerificationReport {
    std::uint64_t seed = 0;
    std::vector<ClaimRecord> claims;

    bool all_pass() const;
    const ClaimRecord* find(const std::string& id) const;
    // Canonical, byte-stable serialization (no timing data).
    std::string to_json() const;
};

namespace claims {
std::vector<ClaimRecord> dim4_negative(std::uint64_t seed);         // Thm 6.1
std::vector<ClaimRecord> dim5_v_table(std::uint64_t seed);          // Thm 6.5 proof table
std::vector<ClaimRecord> dim5_spectrum(std::uint64_t seed);         // Prop 6.3
std::vector<ClaimRecord> dim5_harmonicity(std::uint64_t seed);      // Thm 6.5
std::vector<ClaimRecord> dim5_alpha_v(std::uint64_t seed);          // Prop 6.4
std::vector<ClaimRecord> su2_worked_examples();                     // section 6.2
std::vector<ClaimRecord> connection_torsion(std::uint64_t seed);    // Props 4.13/4.15/4.16
std::vector<ClaimRecord> dim6_decomposable(std::uint64_t seed);     // Thm 6.9 + Lemma 6.8
std::vector<ClaimRecord> dim6_nondecomposable();                    // section 6.3.2 table
std::vector<ClaimRecord> spin7_lifts(std::uint64_t seed);           // Thm 3.3 + Lemmas 2.2/2.3
std::vector<ClaimRecord> representation_suite(std::uint64_t seed);  // rep invariants etc.
std::vector<ClaimRecord> harmonic_su2(std::uint64_t seed);          // end-of-sec-4 conditions
}  // namespace claims

// Runs every claim group in order; deterministic under the seed.
VerificationReport verify_paper(std::uint64_t seed);

int thread_budget();  // SPINLAB_THREADS, defaulting to hardware concurrency

}  // namespace spinlab
