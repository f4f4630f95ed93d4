// Acceptance suite: runs every verification criterion at its stated tolerance
// and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "spinlab/scan.hpp"

using namespace spinlab;

namespace {

constexpr std::uint64_t kSeed = 0;
int failures = 0;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(int criterion, const std::string& what, bool pass, double ms,
            const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s (%.0f ms)%s%s\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), ms, detail.empty() ? "" : " -- ", detail.c_str());
    if (!pass) ++failures;
}

struct GroupResult {
    bool pass = true;
    double ms = 0.0;
    std::string detail;
};

GroupResult run_group(const std::vector<ClaimRecord>& claims) {
    GroupResult g;
    for (const auto& c : claims)
        if (!c.pass) {
            g.pass = false;
            g.detail += c.id + " ";
        }
    return g;
}

}  // namespace

int main() {
    const auto all_t0 = Clock::now();

    {  // 1. dim-4 negative result, runtime < 1 s
        const auto t0 = Clock::now();
        GroupResult g = run_group(claims::dim4_negative(kSeed));
        const double ms = ms_since(t0);
        if (ms >= 1000.0) {
            g.pass = false;
            g.detail += "runtime ";
        }
        report(1, "Thm 6.1: no dim-4 harmonic spinors; L4 square identity", g.pass, ms, g.detail);
    }
    {  // 2. dim-5 v-table
        const auto t0 = Clock::now();
        const GroupResult g = run_group(claims::dim5_v_table(kSeed));
        report(2, "Thm 6.5 table: (mu, v) formulas and 16D^2 = mu I + v j1", g.pass, ms_since(t0),
               g.detail);
    }
    {  // 3. dim-5 spectrum law
        const auto t0 = Clock::now();
        const GroupResult g = run_group(claims::dim5_spectrum(kSeed));
        report(3, "Prop 6.3: eigenvalues +-(mu +- |v|)^(1/2), multiplicity 2", g.pass,
               ms_since(t0), g.detail);
    }
    {  // 4. harmonicity conditions
        const auto t0 = Clock::now();
        const GroupResult g = run_group(claims::dim5_harmonicity(kSeed));
        report(4, "Thm 6.5: closed-form harmonicity conditions, N5,3 exclusion", g.pass,
               ms_since(t0), g.detail);
    }
    {  // 5. Prop 6.4
        const auto t0 = Clock::now();
        const GroupResult g = run_group(claims::dim5_alpha_v(kSeed));
        report(5, "Prop 6.4: kernel spinors satisfy v = -mu alpha#", g.pass, ms_since(t0),
               g.detail);
    }
    {  // 6. SU(2) worked examples
        const auto t0 = Clock::now();
        const GroupResult g = run_group(claims::su2_worked_examples());
        report(6, "Sec 6.2: SU(2) structure and torsion of N5,6 / N5,5", g.pass, ms_since(t0),
               g.detail);
    }
    {  // 7. connection/Dirac and torsion component formulas
        const auto t0 = Clock::now();
        const GroupResult g = run_group(claims::connection_torsion(kSeed));
        report(7, "Props 4.13 / 4.15-4.16: connection component formulas", g.pass, ms_since(t0),
               g.detail);
    }
    {  // 8. dim-6 decomposable
        const auto t0 = Clock::now();
        const GroupResult g = run_group(claims::dim6_decomposable(kSeed));
        report(8, "Thm 6.9 + Lemma 6.8: decomposable dim-6 classification", g.pass, ms_since(t0),
               g.detail);
    }
    {  // 9. dim-6 non-decomposable, runtime < 5 s
        const auto t0 = Clock::now();
        GroupResult g = run_group(claims::dim6_nondecomposable());
        const double ms = ms_since(t0);
        if (ms >= 5000.0) {
            g.pass = false;
            g.detail += "runtime ";
        }
        report(9, "Sec 6.3.2: all 24 non-decomposable rows admit kernels", g.pass, ms, g.detail);
    }
    {  // 10. Spin(7) lifts
        const auto t0 = Clock::now();
        const GroupResult g = run_group(claims::spin7_lifts(kSeed));
        report(10, "Thm 3.3, Lemmas 2.2/2.3: lifts are balanced Spin(7)", g.pass, ms_since(t0),
               g.detail);
    }
    {  // 11. representation suite
        const auto t0 = Clock::now();
        const GroupResult g = run_group(claims::representation_suite(kSeed));
        report(11, "Clifford invariants, quaternions, Lemmas 5.6 / 4.7", g.pass, ms_since(t0),
               g.detail);
    }
    {  // 12. whole-suite determinism and runtime < 60 s
        const auto t0 = Clock::now();
        const VerificationReport a = verify_paper(kSeed);
        const VerificationReport b = verify_paper(kSeed);
        const double ms = ms_since(t0);
        const bool stable = a.to_json() == b.to_json();
        const bool fast = ms / 2.0 < 60000.0;
        std::string detail;
        if (!stable) detail += "reports differ ";
        if (!fast) detail += "runtime ";
        if (!a.all_pass()) detail += "claims fail ";
        report(12, "verify-paper: byte-stable report, runtime < 60 s", stable && fast && a.all_pass(),
               ms, detail);
    }

    std::printf("%s: %d criterion failure(s), total %.0f ms\n", failures ? "FAIL" : "PASS",
                failures, ms_since(all_t0));
    return failures ? 1 : 0;
}
