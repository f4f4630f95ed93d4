#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinlab/types.hpp"

namespace spinlab {

// Coframe orientation relative to (e^1,...,e^n).
struct Orientation {
    int sign = +1;
};

// Homogeneous exterior form over an orthonormal coframe of R^n.
// A basis k-form e^{i1...ik} (i1<...<ik, 1-based) is stored as the bitmask
// with bits i1-1,...,ik-1 set; terms map masks to coefficients.
class Form {
public:
    Form() = default;
    Form(int dim, int degree);

    static Form basis(int dim, std::uint32_t mask, double coeff = 1.0);
    static Form scalar(int dim, double value);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool is_zero(double tol = 0.0) const;

    const std::map<std::uint32_t, double>& terms() const { return terms_; }
    double coeff(std::uint32_t mask) const;
    void set_coeff(std::uint32_t mask, double value);
    void add_term(std::uint32_t mask, double value);
    void prune(double tol = 0.0);

    double norm() const;           // l2 norm of coefficients
    double inner(const Form& other) const;

    Form& operator+=(const Form& other);
    Form& operator-=(const Form& other);
    Form& operator*=(double s);

    // Terms whose index tuple avoids frame index i (the |_{<e_i>^perp} part).
    Form without_index(int i) const;

    std::string str() const;

private:
    int dim_ = 0;
    int degree_ = 0;
    std::map<std::uint32_t, double> terms_;

    void check_mask(std::uint32_t mask) const;
};

Form operator+(Form a, const Form& b);
Form operator-(Form a, const Form& b);
Form operator*(double s, Form a);

Form wedge(const Form& a, const Form& b);
Form contract(int v_index, const Form& a);
Form hodge_star(const Form& a, Orientation o);

// Parity of the permutation sorting the concatenation (a, b) of two disjoint
// increasing tuples; returns +1/-1, used by wedge and hodge_star.
int merge_sign(std::uint32_t a, std::uint32_t b);

std::string mask_indices(std::uint32_t mask);

}  // namespace spinlab
