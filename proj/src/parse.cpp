#include "spinlab/parse.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace spinlab {

namespace {

class Scanner {
public:
    Scanner(const std::string& s, std::size_t base = 0) : s_(s), base_(base) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", base_ + pos_);
        return s_[pos_++];
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", base_ + pos_);
    }
    std::size_t here() { return base_ + pos_; }
    std::size_t pos() const { return pos_; }

    double number() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit((unsigned char)s_[pos_]) || s_[pos_] == '.'))
            ++pos_;
        if (pos_ == start) throw ParseError("expected number", base_ + start);
        return std::stod(s_.substr(start, pos_ - start));
    }

    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ >= s_.size() || !(std::isalpha((unsigned char)s_[pos_]) || s_[pos_] == '_'))
            throw ParseError("expected identifier", base_ + start);
        while (pos_ < s_.size() && (std::isalnum((unsigned char)s_[pos_]) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
    std::size_t base_;
};

class ExprParser {
public:
    ExprParser(Scanner& sc, const Bindings& env) : sc_(sc), env_(env) {}

    double expr() {
        double v = sc_.accept('-') ? -term() : term();
        for (;;) {
            if (sc_.accept('+'))
                v += term();
            else if (sc_.accept('-'))
                v -= term();
            else
                return v;
        }
    }

private:
    double term() {
        double v = factor();
        while (sc_.accept('*')) v *= factor();
        return v;
    }

    double factor() {
        const char c = sc_.peek();
        if (c == '(') {
            sc_.expect('(');
            const double v = expr();
            sc_.expect(')');
            return v;
        }
        if (std::isdigit((unsigned char)c) || c == '.') {
            double v = sc_.number();
            if (sc_.peek() == '/') {
                sc_.expect('/');
                const double q = sc_.number();
                if (q == 0.0) throw ParseError("division by zero", sc_.here());
                v /= q;
            }
            return v;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            const std::size_t at = sc_.here();
            const std::string name = sc_.identifier();
            if (name == "sqrt") {
                sc_.expect('(');
                const double v = expr();
                sc_.expect(')');
                if (v < 0.0) throw ParseError("sqrt of negative value", at);
                return std::sqrt(v);
            }
            auto it = env_.find(name);
            if (it == env_.end()) throw ParseError("unbound parameter '" + name + "'", at);
            return it->second;
        }
        throw ParseError("expected coefficient factor", sc_.here());
    }

    Scanner& sc_;
    const Bindings& env_;
};

double eval_expr_at(const std::string& text, std::size_t base, const Bindings& env) {
    Scanner sc(text, base);
    ExprParser ep(sc, env);
    const double v = ep.expr();
    if (!sc.done()) throw ParseError("trailing input after expression", sc.here());
    return v;
}

struct SignedChunk {
    double sign;
    std::string text;
    std::size_t base;
};

// Split at top-level +/- into signed chunks; parentheses protect their inside.
std::vector<SignedChunk> split_terms(const std::string& s, std::size_t base) {
    std::vector<SignedChunk> out;
    double sign = 1.0;
    std::string cur;
    std::size_t cur_base = base;
    int depth = 0;
    bool seen = false;
    auto flush = [&](std::size_t next_base, double next_sign) {
        if (!seen) throw ParseError("empty form term", cur_base);
        out.push_back({sign, cur, cur_base});
        cur.clear();
        sign = next_sign;
        cur_base = next_base;
        seen = false;
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            if (!seen && cur.empty()) {  // leading sign
                sign = (c == '-') ? -sign : sign;
                cur_base = base + i + 1;
                continue;
            }
            flush(base + i + 1, c == '-' ? -1.0 : 1.0);
            continue;
        }
        if (!std::isspace((unsigned char)c)) seen = true;
        cur += c;
    }
    if (depth != 0) throw ParseError("unbalanced parentheses", base + s.size());
    flush(base + s.size(), 1.0);
    return out;
}

std::size_t last_toplevel_star(const std::string& s) {
    int depth = 0;
    std::size_t at = std::string::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && s[i] == '*') at = i;
    }
    return at;
}

std::uint32_t parse_index_group(const std::string& s, std::size_t base, int dim, bool need_pair) {
    std::uint32_t mask = 0;
    int count = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (std::isspace((unsigned char)c)) continue;
        if (!std::isdigit((unsigned char)c)) throw ParseError("expected frame index digits", base + i);
        const int d = c - '0';
        if (d < 1 || d > dim) throw ParseError("frame index out of range 1..dim", base + i);
        const std::uint32_t bit = 1u << (d - 1);
        if (mask & bit) throw ParseError("repeated frame index", base + i);
        mask |= bit;
        ++count;
    }
    if (need_pair && count != 2) throw ParseError("expected a two-digit index pair", base);
    if (count == 0) throw ParseError("expected frame indices", base);
    return mask;
}

std::string strip(const std::string& s, std::size_t& base) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace((unsigned char)s[a])) ++a;
    while (b > a && std::isspace((unsigned char)s[b - 1])) --b;
    base += a;
    return s.substr(a, b - a);
}

// Salamon entry "mu12*12+sqrt(2)*34" or "15+24" or "0" -> 2-form.
Form parse_salamon_entry(const std::string& entry, std::size_t base, int dim, const Bindings& env) {
    Form out(dim, 2);
    std::size_t sbase = base;
    const std::string body = strip(entry, sbase);
    if (body == "0") return out;
    if (body.empty()) throw ParseError("empty entry", base);
    for (const auto& chunk : split_terms(body, sbase)) {
        std::size_t tbase = chunk.base;
        const std::string term = strip(chunk.text, tbase);
        const std::size_t star = last_toplevel_star(term);
        double coeff = 1.0;
        std::string pair = term;
        std::size_t pbase = tbase;
        if (star != std::string::npos) {
            coeff = eval_expr_at(term.substr(0, star), tbase, env);
            pair = term.substr(star + 1);
            pbase = tbase + star + 1;
        }
        const std::uint32_t mask = parse_index_group(pair, pbase, dim, true);
        out.add_term(mask, chunk.sign * coeff);
    }
    return out;
}

// File-mode right-hand side "c*e12 + e34 - 2*e15" or "0" -> 2-form.
Form parse_file_form(const std::string& rhs, std::size_t base, int dim, const Bindings& env) {
    Form out(dim, 2);
    std::size_t sbase = base;
    const std::string body = strip(rhs, sbase);
    if (body == "0") return out;
    if (body.empty()) throw ParseError("empty differential", base);
    for (const auto& chunk : split_terms(body, sbase)) {
        std::size_t tbase = chunk.base;
        const std::string term = strip(chunk.text, tbase);
        const std::size_t star = last_toplevel_star(term);
        double coeff = 1.0;
        std::string etok = term;
        std::size_t ebase = tbase;
        if (star != std::string::npos) {
            coeff = eval_expr_at(term.substr(0, star), tbase, env);
            etok = term.substr(star + 1);
            ebase = tbase + star + 1;
        }
        std::size_t ibase = ebase;
        etok = strip(etok, ibase);
        if (etok.empty() || etok[0] != 'e')
            throw ParseError("expected basis monomial e<ij>", ibase);
        const std::uint32_t mask = parse_index_group(etok.substr(1), ibase + 1, dim, false);
        if (std::popcount(mask) != 2) throw ParseError("differential term must be a 2-form", ibase);
        out.add_term(mask, chunk.sign * coeff);
    }
    return out;
}

}  // namespace

double evaluate_coeff(const std::string& text, const Bindings& bindings) {
    return eval_expr_at(text, 0, bindings);
}

MetricLieAlgebra parse_salamon(const std::string& text, const Bindings& bindings) {
    // Locate the parenthesized list and split at top-level commas.
    std::size_t open = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (std::isspace((unsigned char)text[i])) continue;
        if (text[i] == '(') open = i;
        break;
    }
    if (open == std::string::npos) throw ParseError("expected '('", 0);
    std::vector<std::string> entries;
    std::vector<std::size_t> bases;
    int depth = 0;
    std::string cur;
    std::size_t cur_base = open + 1;
    std::size_t close = std::string::npos;
    for (std::size_t i = open + 1; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') {
            if (depth == 0) {
                entries.push_back(cur);
                bases.push_back(cur_base);
                close = i;
                break;
            }
            --depth;
        }
        if (c == ',' && depth == 0) {
            entries.push_back(cur);
            bases.push_back(cur_base);
            cur.clear();
            cur_base = i + 1;
            continue;
        }
        cur += c;
    }
    if (close == std::string::npos) throw ParseError("unterminated Salamon string", text.size());
    for (std::size_t i = close + 1; i < text.size(); ++i)
        if (!std::isspace((unsigned char)text[i]))
            throw ParseError("trailing input after ')'", i);

    const int dim = (int)entries.size();
    if (dim < 2 || dim > 9) throw ParseError("Salamon notation supports dimensions 2..9", open);

    MetricLieAlgebra alg;
    alg.dim = dim;
    alg.differentials.assign(dim, Form(dim, 2));
    for (int i = 0; i < dim; ++i)
        alg.differentials[i] = parse_salamon_entry(entries[i], bases[i], dim, bindings);
    alg.validate();
    return alg;
}

MetricLieAlgebra parse_algebra_file(const std::string& text, const Bindings& bindings) {
    MetricLieAlgebra alg;
    Bindings env = bindings;
    std::istringstream is(text);
    std::string line;
    std::size_t line_start = 0;
    std::vector<std::tuple<int, std::string, std::size_t>> dlines;
    int dim = 0;
    int orientation = +1;
    std::string name;

    while (std::getline(is, line)) {
        const std::size_t base = line_start;
        line_start += line.size() + 1;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        Scanner sc(line, base);
        if (sc.done()) continue;
        const std::string head = sc.identifier();
        if (head == "dim") {
            dim = (int)sc.number();
            if (dim < 2 || dim > 16) throw ParseError("dim out of range 2..16", base);
            if (!sc.done()) throw ParseError("trailing input after dim", sc.here());
        } else if (head == "orientation") {
            int sign = +1;
            if (sc.accept('-'))
                sign = -1;
            else
                sc.accept('+');
            if (sc.number() != 1.0) throw ParseError("orientation must be +1 or -1", sc.here());
            orientation = sign;
            if (!sc.done()) throw ParseError("trailing input after orientation", sc.here());
        } else if (head == "name") {
            sc.skip_ws();
            name = line.substr(sc.pos());
        } else if (head == "param") {
            const std::string pname = sc.identifier();
            sc.expect('=');
            ExprParser ep(sc, env);
            const double v = ep.expr();
            if (!sc.done()) throw ParseError("trailing input after param", sc.here());
            env.try_emplace(pname, v);  // caller-supplied bindings win
        } else if (head == "d") {
            sc.expect('e');
            const int i = (int)sc.number();
            sc.expect('=');
            sc.skip_ws();
            dlines.emplace_back(i, line.substr(sc.pos()), base + sc.pos());
        } else {
            throw ParseError("unknown directive '" + head + "'", base);
        }
    }
    if (dim == 0) throw ParseError("missing 'dim' line", 0);
    alg.dim = dim;
    alg.orientation.sign = orientation;
    alg.name = name;
    alg.differentials.assign(dim, Form(dim, 2));
    for (const auto& [i, rhs, base] : dlines) {
        if (i < 1 || i > dim) throw ParseError("differential index out of range", base);
        alg.differentials[i - 1] = parse_file_form(rhs, base, dim, env);
    }
    alg.validate();
    return alg;
}

MetricLieAlgebra parse_algebra_input(const std::string& text, const Bindings& bindings) {
    for (char c : text) {
        if (std::isspace((unsigned char)c)) continue;
        if (c == '(') return parse_salamon(text, bindings);
        break;
    }
    return parse_algebra_file(text, bindings);
}

namespace {
std::string coeff_str(double c) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", c);
    return buf;
}
}  // namespace

std::string render_salamon(const MetricLieAlgebra& alg) {
    if (alg.dim > 9) throw std::invalid_argument("render_salamon: dimension exceeds 9");
    std::string s = "(";
    for (int i = 1; i <= alg.dim; ++i) {
        if (i > 1) s += ",";
        const auto& terms = alg.d(i).terms();
        if (terms.empty()) {
            s += "0";
            continue;
        }
        bool first = true;
        for (const auto& [mask, c] : terms) {
            if (c >= 0 && !first) s += "+";
            if (c == -1.0)
                s += "-";
            else if (c != 1.0)
                s += coeff_str(c) + "*";
            s += mask_indices(mask);
            first = false;
        }
    }
    return s + ")";
}

std::string render_algebra_file(const MetricLieAlgebra& alg) {
    std::ostringstream os;
    if (!alg.name.empty()) os << "name " << alg.name << "\n";
    os << "dim " << alg.dim << "\n";
    os << "orientation " << (alg.orientation.sign > 0 ? "+1" : "-1") << "\n";
    for (int i = 1; i <= alg.dim; ++i) {
        if (alg.d(i).terms().empty()) continue;
        os << "d e" << i << " =";
        bool first = true;
        for (const auto& [mask, c] : alg.d(i).terms()) {
            os << (c < 0 ? " - " : (first ? " " : " + "));
            os << coeff_str(std::abs(c)) << "*e" << mask_indices(mask);
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace spinlab
