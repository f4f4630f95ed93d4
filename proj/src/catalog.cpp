#include "spinlab/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace spinlab {

MetricLieAlgebra ParameterFamily::instantiate(const Bindings& bindings) const {
    Bindings env = fixed;
    for (const auto& [k, v] : bindings) env[k] = v;
    for (const auto& p : params)
        if (!env.count(p)) throw std::invalid_argument("family " + name + ": unbound parameter " + p);
    for (const auto& p : nonzero)
        if (env.at(p) == 0.0)
            throw std::invalid_argument("family " + name + ": parameter " + p + " must be nonzero");
    MetricLieAlgebra alg = parse_algebra_file(definition, env);
    alg.name = name;
    return alg;
}

Bindings ParameterFamily::sample(Rng& rng, double bound, double margin) const {
    Bindings b;
    for (const auto& p : params)
        b[p] = nonzero.count(p) ? rng.nonzero(bound, margin) : rng.uniform(-bound, bound);
    return b;
}

namespace {

ParameterFamily fam(std::string name, std::string label, int dim, std::string body,
                    std::vector<std::string> params, std::vector<std::string> nonzero,
                    Bindings fixed = {}) {
    ParameterFamily f;
    f.name = std::move(name);
    f.label = std::move(label);
    f.dim = dim;
    f.definition = "dim " + std::to_string(dim) + "\norientation +1\n" + body;
    f.params = std::move(params);
    f.nonzero.insert(nonzero.begin(), nonzero.end());
    f.fixed = std::move(fixed);
    return f;
}

// Constant of the N6,3 row, evaluated from its closed form.
double n63_constant() {
    const double c = std::cbrt(459.0 + 12.0 * std::sqrt(177.0));
    return std::sqrt(3.0 * c * (c * c + 6.0 * c + 57.0)) / (3.0 * c);
}

std::vector<ParameterFamily> build_catalog() {
    std::vector<ParameterFamily> v;

    // ----- dimension 4 -----
    v.push_back(fam("L3+A1", "(0,0,0,12)", 4, "d e4 = mu12*e12\n", {"mu12"}, {"mu12"}));
    v.push_back(fam("L4", "(0,0,12,13)", 4,
                    "d e3 = mu12*e12\n"
                    "d e4 = lam12*e12 + mu13*e13\n",
                    {"mu12", "lam12", "mu13"}, {"mu12", "mu13"}));

    // ----- dimension 5 -----
    v.push_back(fam("L3+A2", "(0,0,0,0,12)", 5, "d e5 = mu12*e12\n", {"mu12"}, {"mu12"}));
    v.push_back(fam("L4+A1", "(0,0,12,13,0)", 5,
                    "d e4 = mu12*e12\n"
                    "d e5 = lam12*e12 + lam13*e13 + mu14*e14\n",
                    {"mu12", "lam12", "lam13", "mu14"}, {"mu12", "mu14"}));
    v.push_back(fam("N5,6", "(0,0,0,0,12+34)", 5, "d e5 = mu12*e12 + mu34*e34\n",
                    {"mu12", "mu34"}, {"mu12", "mu34"}));
    v.push_back(fam("N5,5", "(0,0,0,12,13)", 5,
                    "d e4 = mu12*e12\n"
                    "d e5 = mu13*e13\n",
                    {"mu12", "mu13"}, {"mu12", "mu13"}));
    v.push_back(fam("N5,4", "(0,0,0,12,14+23)", 5,
                    "d e4 = mu12*e12\n"
                    "d e5 = lam12*e12 + lam13*e13 + mu14*e14 + mu23*e23\n",
                    {"mu12", "lam12", "lam13", "mu14", "mu23"}, {"mu12", "mu14", "mu23"}));
    v.push_back(fam("N5,3", "(0,0,12,13,23)", 5,
                    "d e3 = mu12*e12\n"
                    "d e4 = lam12_4*e12 + mu13*e13\n"
                    "d e5 = lam12_5*e12 + mu23*e23\n",
                    {"mu12", "lam12_4", "mu13", "lam12_5", "mu23"}, {"mu12", "mu13", "mu23"}));
    v.push_back(fam("N5,2", "(0,0,12,13,14)", 5,
                    "d e3 = mu12*e12\n"
                    "d e4 = lam12_4*e12 + mu13*e13\n"
                    "d e5 = lam12_5*e12 + lam13*e13 + mu14*e14\n",
                    {"mu12", "lam12_4", "mu13", "lam12_5", "lam13", "mu14"},
                    {"mu12", "mu13", "mu14"}));
    v.push_back(fam("N5,1", "(0,0,12,13,14+23)", 5,
                    "d e3 = mu12*e12\n"
                    "d e4 = lam12_4*e12 + mu13*e13\n"
                    "d e5 = lam12_5*e12 + lam13*e13 + mu14*e14 + mu23*e23\n",
                    {"mu12", "lam12_4", "mu13", "lam12_5", "lam13", "mu14", "mu23"},
                    {"mu12", "mu13", "mu14", "mu23"}));

    // ----- dimension 6, decomposable -----
    v.push_back(fam("L3+A3", "(0,0,0,0,0,12)", 6, "d e6 = mu12*e12\n", {"mu12"}, {"mu12"}));
    v.push_back(fam("L3+L3", "(0,0,0,0,12,34)", 6,
                    "d e5 = mu12*e12 + lam13_5*e13\n"
                    "d e6 = lam13_6*e13 + lam23*e23 + mu34*e34\n",
                    {"mu12", "lam13_5", "lam13_6", "lam23", "mu34"}, {"mu12", "mu34"}));
    v.push_back(fam("L4+A2", "(0,0,12,13,0,0)", 6,
                    "d e5 = mu12*e12\n"
                    "d e6 = lam12*e12 + lam13*e13 + mu15*e15\n",
                    {"mu12", "lam12", "lam13", "mu15"}, {"mu12", "mu15"}));
    v.push_back(fam("N5,6+A1", "(0,0,0,0,12+34,0)", 6, "d e6 = mu12*e12 + mu34*e34\n",
                    {"mu12", "mu34"}, {"mu12", "mu34"}));
    v.push_back(fam("N5,5+A1", "(0,0,0,12,13,0)", 6,
                    "d e5 = mu12*e12\n"
                    "d e6 = mu13*e13\n",
                    {"mu12", "mu13"}, {"mu12", "mu13"}));
    v.push_back(fam("N5,4+A1", "(0,0,0,12,14+23,0)", 6,
                    "d e5 = mu12*e12\n"
                    "d e6 = lam12*e12 + lam13*e13 + lam14*e14 + mu15*e15 + mu23*e23\n",
                    {"mu12", "lam12", "lam13", "lam14", "mu15", "mu23"},
                    {"mu12", "mu15", "mu23"}));
    // The lam coefficient is shared between d e5 and d e6, as in the table.
    v.push_back(fam("N5,3+A1", "(0,0,12,13,23,0)", 6,
                    "d e4 = mu12*e12\n"
                    "d e5 = lam12_5*e12 + lam*e23 + mu14*e14\n"
                    "d e6 = lam12_6*e12 + lam*e13 + mu24*e24\n",
                    {"mu12", "lam12_5", "lam12_6", "lam", "mu14", "mu24"},
                    {"mu12", "mu14", "mu24"}));
    // lam13 is likewise shared between d e5 and d e6 in the printed row.
    v.push_back(fam("N5,2+A1", "(0,0,12,13,14,0)", 6,
                    "d e4 = mu12*e12\n"
                    "d e5 = lam12_5*e12 + lam13*e13 + mu14*e14\n"
                    "d e6 = lam12_6*e12 + lam13*e13 + lam14*e14 + mu15*e15\n",
                    {"mu12", "lam12_5", "lam12_6", "lam13", "lam14", "mu14", "mu15"},
                    {"mu12", "mu14", "mu15"}));
    v.push_back(fam("N5,1+A1", "(0,0,12,13,14+23,0)", 6,
                    "d e4 = mu12*e12\n"
                    "d e5 = lam12_5*e12 + mu14*lam13_4*e13 + mu14*e14\n"
                    "d e6 = lam12_6*e12 + lam13_6*e13 + lam14*e14 + mu15*e15 + mu24*lam13*e23 + mu24*e24\n",
                    {"mu12", "lam12_5", "lam12_6", "lam13_4", "lam13_6", "lam13", "lam14",
                     "mu14", "mu15", "mu24"},
                    {"mu12", "mu14", "mu15", "mu24"}));

    // ----- dimension 6, non-decomposable rows (fixed metrics) -----
    auto row = [&](std::string name, std::string label, std::string body, Bindings fixed = {}) {
        v.push_back(fam(std::move(name), std::move(label), 6, std::move(body), {}, {}, std::move(fixed)));
    };
    row("N6,24", "(0,0,0,0,12,13+24)", "d e5 = e12\nd e6 = 2*e13 + e24\n");
    row("N6,23", "(0,0,0,0,13-24,14+23)", "d e5 = e13 - e24\nd e6 = e14 + e23\n");
    row("N6,22", "(0,0,0,0,12,15+34)", "d e5 = e12\nd e6 = e14 + e15 + e34\n");
    row("N6,21", "(0,0,0,12,13,23)", "d e4 = e12\nd e5 = e13\nd e6 = 2*e23\n");
    row("N6,20", "(0,0,0,12,13,14)", "d e4 = e12\nd e5 = sqrt(2)*e13\nd e6 = e14\n");
    row("N6,19", "(0,0,0,12,13,14+23)",
        "d e4 = e12\nd e5 = e13\nd e6 = e14 + e23 + sqrt(2*(sqrt(2)-1))*e12\n");
    row("N6,18", "(0,0,0,12,13,24)",
        "d e4 = e12\nd e5 = e13\nd e6 = 2*e13 + sqrt(3)*e24 + e23\n");
    row("N6,17", "(0,0,0,12,13,15+24)",
        "d e4 = e12\nd e5 = e13\nd e6 = e12 + e15 + e23 + e24\n");
    row("N6,16", "(0,0,0,12,13,24-35)",
        "d e4 = e12\nd e5 = e13\nd e6 = -2*e23 + e24 - e35\n");
    row("N6,15", "(0,0,0,12,13,24+35)", "d e4 = e12\nd e5 = e13\nd e6 = e24 + e35\n");
    row("N6,14", "(0,0,0,12,14+23,13-24)",
        "d e4 = sqrt(2)*e12\nd e5 = sqrt(1/2)*e14 + e23\nd e6 = e13 - sqrt(1/2)*e24\n");
    row("N6,13", "(0,0,0,12,14,13+24)", "d e4 = e12\nd e5 = e14\nd e6 = e13 + e24\n");
    row("N6,12", "(0,0,0,12,14,23+24)", "d e4 = e12\nd e5 = e14\nd e6 = e23 + e24\n");
    row("N6,11", "(0,0,0,12,14,15+23)",
        "d e4 = e12\nd e5 = e14\nd e6 = e15 + sqrt(2)*e13 + e23\n");
    row("N6,10", "(0,0,0,12,14,15+23+24)",
        "d e4 = e12\nd e5 = e14 - 7/4*e13\nd e6 = e15 + e24 - 3/4*e23 + 2*e12\n");
    row("N6,9", "(0,0,0,12,14+23,15-34)",
        "d e4 = e12\nd e5 = e14 + e23\nd e6 = 1/4*e15 - 1/4*e34\n");
    row("N6,8", "(0,0,12,13,23,14)", "d e3 = e12\nd e4 = e13\nd e5 = e23\nd e6 = e14\n");
    row("N6,7", "(0,0,12,13,23,14-25)",
        "d e3 = e12\nd e4 = e13\nd e5 = e23\nd e6 = e14 - e25 - e12 + sqrt(2)*e23\n");
    row("N6,6", "(0,0,12,13,23,14+25)",
        "d e3 = e12\nd e4 = e13\nd e5 = e23\nd e6 = e14 + e25 + e12 + sqrt(2)*e23\n");
    row("N6,5", "(0,0,12,14,13,15)",
        "d e3 = e12\nd e4 = e13\nd e5 = 1/5*e14 + 1/5*e12\n"
        "d e6 = 1/5*e12 + 1/5*e14 + 1/5*sqrt(46)*e15\n");
    row("N6,4", "(0,0,12,13,14,15+23)",
        "d e3 = e12\nd e4 = e13\nd e5 = e14\nd e6 = e15 + e23 + e12\n");
    row("N6,3", "(0,0,12,13,14+23,15+24)",
        "d e3 = e12\nd e4 = e13\nd e5 = minv*e14 + minv*e23\nd e6 = m*e15 + e24\n",
        {{"m", n63_constant()}, {"minv", 1.0 / n63_constant()}});
    row("N6,2", "(0,0,12,13,14,15-34)",
        "d e3 = e12\nd e4 = e13\nd e5 = e14\nd e6 = e25 - e34 + sqrt(5)*e12\n");
    row("N6,1", "(0,0,12,13,14+23,15-34)",
        "d e3 = e12\nd e4 = e13\nd e5 = e14 + e23\nd e6 = e25 - e34 + (1+sqrt(5))*e12\n");

    // ----- abelian references -----
    v.push_back(fam("A4", "(0,0,0,0)", 4, "", {}, {}));
    v.push_back(fam("A5", "(0,0,0,0,0)", 5, "", {}, {}));
    v.push_back(fam("A6", "(0,0,0,0,0,0)", 6, "", {}, {}));

    return v;
}

}  // namespace

const std::vector<ParameterFamily>& catalog() {
    static const std::vector<ParameterFamily> c = build_catalog();
    return c;
}

const ParameterFamily& find_family(const std::string& name) {
    for (const auto& f : catalog())
        if (f.name == name) return f;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<std::string> nondecomposable_dim6_names() {
    std::vector<std::string> names;
    for (int k = 24; k >= 1; --k) names.push_back("N6," + std::to_string(k));
    return names;
}

}  // namespace spinlab
