#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace spinlab {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Spinor = Eigen::VectorXd;

// Deterministic uniform draws. std::uniform_real_distribution is
// implementation-defined, so reports seeded from here would not be
// byte-stable across toolchains; this mapping is.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) {
        const double u = double(eng_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    // Uniform in [-bound, bound] with |value| > margin, for structure
    // constants that must stay away from degenerate loci.
    double nonzero(double bound = 2.0, double margin = 0.1) {
        double v = 0.0;
        do {
            v = uniform(-bound, bound);
        } while (std::abs(v) <= margin);
        return v;
    }

    int uniform_int(int lo, int hi) {
        return lo + int(eng_() % std::uint64_t(hi - lo + 1));
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

inline Vector random_unit_vector(Rng& rng, int n) {
    Vector v(n);
    // Box-Muller keeps the draw count per coordinate fixed.
    for (int i = 0; i < n; i += 2) {
        const double u1 = rng.uniform(1e-12, 1.0);
        const double u2 = rng.uniform(0.0, 1.0);
        const double r = std::sqrt(-2.0 * std::log(u1));
        v[i] = r * std::cos(2.0 * M_PI * u2);
        if (i + 1 < n) v[i + 1] = r * std::sin(2.0 * M_PI * u2);
    }
    return v / v.norm();
}

}  // namespace spinlab
