#pragma once

#include <set>
#include <string>
#include <vector>

#include "spinlab/algebra.hpp"
#include "spinlab/parse.hpp"
#include "spinlab/types.hpp"

namespace spinlab {

// One table row: a structure-equation template over named parameters.
// `nonzero` parameters must be bound away from zero; the rest may vanish.
struct ParameterFamily {
    std::string name;
    std::string label;       // Salamon string of the isomorphism class, when printed
    int dim = 0;
    std::string definition;  // algebra-file text with parameter identifiers
    std::vector<std::string> params;
    std::set<std::string> nonzero;
    Bindings fixed;          // row constants (surds etc.), pre-evaluated

    MetricLieAlgebra instantiate(const Bindings& bindings) const;

    // Uniform draws in [-bound, bound]; nonzero parameters are redrawn until
    // |value| > margin.
    Bindings sample(Rng& rng, double bound = 2.0, double margin = 0.1) const;
};

// Every family of the dim-4, dim-5 and dim-6 tables, plus abelian references.
const std::vector<ParameterFamily>& catalog();

const ParameterFamily& find_family(const std::string& name);

// Names of the 24 fixed-coefficient non-decomposable dim-6 rows.
std::vector<std::string> nondecomposable_dim6_names();

}  // namespace spinlab
