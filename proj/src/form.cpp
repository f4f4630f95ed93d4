#include "spinlab/form.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace spinlab {

Form::Form(int dim, int degree) : dim_(dim), degree_(degree) {
    if (dim < 1 || dim > 16) throw std::invalid_argument("form dimension out of range");
    if (degree < 0) throw std::invalid_argument("form degree negative");
    // degree > dim is allowed and denotes the zero form of that degree
}

Form Form::basis(int dim, std::uint32_t mask, double coeff) {
    Form f(dim, std::popcount(mask));
    f.check_mask(mask);
    if (coeff != 0.0) f.terms_[mask] = coeff;
    return f;
}

Form Form::scalar(int dim, double value) {
    Form f(dim, 0);
    if (value != 0.0) f.terms_[0u] = value;
    return f;
}

void Form::check_mask(std::uint32_t mask) const {
    if (mask >> dim_) throw std::invalid_argument("form index exceeds dimension");
}

bool Form::is_zero(double tol) const {
    for (const auto& [m, c] : terms_)
        if (std::abs(c) > tol) return false;
    return true;
}

double Form::coeff(std::uint32_t mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? 0.0 : it->second;
}

void Form::set_coeff(std::uint32_t mask, double value) {
    check_mask(mask);
    if (std::popcount(mask) != degree_) throw std::invalid_argument("term degree mismatch");
    if (value == 0.0)
        terms_.erase(mask);
    else
        terms_[mask] = value;
}

void Form::add_term(std::uint32_t mask, double value) {
    check_mask(mask);
    if (std::popcount(mask) != degree_) throw std::invalid_argument("term degree mismatch");
    if (value == 0.0) return;
    auto [it, inserted] = terms_.try_emplace(mask, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0.0) terms_.erase(it);
    }
}

void Form::prune(double tol) {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = std::abs(it->second) <= tol ? terms_.erase(it) : std::next(it);
}

double Form::norm() const {
    double s = 0.0;
    for (const auto& [m, c] : terms_) s += c * c;
    return std::sqrt(s);
}

double Form::inner(const Form& other) const {
    if (dim_ != other.dim_) throw std::invalid_argument("form dimension mismatch");
    double s = 0.0;
    for (const auto& [m, c] : terms_) s += c * other.coeff(m);
    return s;
}

Form& Form::operator+=(const Form& other) {
    if (other.terms_.empty()) return *this;
    if (terms_.empty() && degree_ != other.degree_) degree_ = other.degree_;
    if (dim_ != other.dim_ || degree_ != other.degree_)
        throw std::invalid_argument("form dimension or degree mismatch in sum");
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Form& Form::operator-=(const Form& other) {
    Form neg = other;
    neg *= -1.0;
    return (*this) += neg;
}

Form& Form::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Form Form::without_index(int i) const {
    const std::uint32_t bit = 1u << (i - 1);
    Form out(dim_, degree_);
    for (const auto& [m, c] : terms_)
        if (!(m & bit)) out.terms_[m] = c;
    return out;
}

Form operator+(Form a, const Form& b) { return a += b; }
Form operator-(Form a, const Form& b) { return a -= b; }
Form operator*(double s, Form a) { return a *= s; }

int merge_sign(std::uint32_t a, std::uint32_t b) {
    // Count inversions between the tuples: pairs (x in a, y in b) with x > y.
    int inv = 0;
    for (std::uint32_t rest = b; rest; rest &= rest - 1) {
        const int y = std::countr_zero(rest);
        inv += std::popcount(a & ~((2u << y) - 1u));
    }
    return (inv & 1) ? -1 : +1;
}

Form wedge(const Form& a, const Form& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    Form out(a.dim(), a.degree() + b.degree());
    if (a.degree() + b.degree() > a.dim()) return out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            out.add_term(ma | mb, ca * cb * merge_sign(ma, mb));
        }
    return out;
}

Form contract(int v_index, const Form& a) {
    if (v_index < 1 || v_index > a.dim()) throw std::invalid_argument("contract: index out of range");
    const std::uint32_t bit = 1u << (v_index - 1);
    Form out(a.dim(), a.degree() == 0 ? 0 : a.degree() - 1);
    if (a.degree() == 0) return out;
    for (const auto& [m, c] : a.terms()) {
        if (!(m & bit)) continue;
        const int below = std::popcount(m & (bit - 1u));
        out.add_term(m & ~bit, (below & 1) ? -c : c);
    }
    return out;
}

Form hodge_star(const Form& a, Orientation o) {
    const std::uint32_t full = (a.dim() == 32 ? ~0u : (1u << a.dim()) - 1u);
    Form out(a.dim(), a.dim() - a.degree());
    for (const auto& [m, c] : a.terms()) {
        const std::uint32_t comp = full & ~m;
        // star(e^M) = s e^{M^c} with e^M ^ star(e^M) = sign * e^{1..n}.
        out.add_term(comp, c * merge_sign(m, comp) * o.sign);
    }
    return out;
}

std::string mask_indices(std::uint32_t mask) {
    std::string s;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1)
        s += std::to_string(std::countr_zero(rest) + 1);
    return s;
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    char buf[40];
    for (const auto& [m, c] : terms_) {
        const double ac = std::abs(c);
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        std::snprintf(buf, sizeof buf, "%.12g", ac);
        if (m == 0) {
            os << buf;
            continue;
        }
        if (ac != 1.0) os << buf << "*";
        os << "e" << mask_indices(m);
    }
    return os.str();
}

}  // namespace spinlab
