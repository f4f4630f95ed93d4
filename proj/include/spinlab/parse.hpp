#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "spinlab/algebra.hpp"

namespace spinlab {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

using Bindings = std::map<std::string, double>;

// Coefficient expression: expr := term (('+'|'-') term)*, term := factor ('*' factor)*,
// factor := number | p/q | sqrt(expr) | identifier | '(' expr ')'.
double evaluate_coeff(const std::string& text, const Bindings& bindings);

// Salamon notation, e.g. "(0,0,12,13)" or "(0,0,0,12,13,15+24)"; terms admit
// coefficient expressions: "(0,0,mu12*12+sqrt(2)*34)".
MetricLieAlgebra parse_salamon(const std::string& text, const Bindings& bindings = {});

// Line-based algebra file:
//   dim <n> / orientation +1|-1 / param <name> = <expr> / d e<i> = <form-expr> / # comment
// Bindings passed in take precedence over param lines.
MetricLieAlgebra parse_algebra_file(const std::string& text, const Bindings& bindings = {});

// Accepts either format: a leading '(' selects Salamon.
MetricLieAlgebra parse_algebra_input(const std::string& text, const Bindings& bindings = {});

std::string render_salamon(const MetricLieAlgebra& alg);
std::string render_algebra_file(const MetricLieAlgebra& alg);

}  // namespace spinlab
