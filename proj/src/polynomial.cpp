#include "irrev/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace irrev {

std::optional<Rational> rational_from_string(std::string_view text) {
    if (text.empty()) return std::nullopt;
    auto parse_int = [](std::string_view s) -> std::optional<Int> {
        if (s.empty()) return std::nullopt;
        std::size_t i = 0;
        bool neg = false;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) return std::nullopt;
        Int v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return std::nullopt;
            v = v * 10 + (s[i] - '0');
        }
        return neg ? -v : v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(*n, *d);
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // same length is assumed within one chart
    for (std::size_t i = 0; i < a.exps.size() && i < b.exps.size(); ++i) {
        if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
    }
    return a.exps.size() < b.exps.size();
}

Polynomial Polynomial::constant(std::size_t dim, Rational c) {
    Polynomial p(dim);
    if (c != 0) p.terms_.emplace(Monomial(dim), std::move(c));
    return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t i) {
    if (i >= dim) throw std::out_of_range("coordinate index " + std::to_string(i) +
                                          " out of range for dimension " + std::to_string(dim));
    Monomial m(dim);
    m.exps[i] = 1;
    return term(dim, std::move(m), Rational(1));
}

Polynomial Polynomial::term(std::size_t dim, Monomial m, Rational c) {
    if (m.exps.size() != dim) throw std::invalid_argument("monomial length does not match dimension");
    Polynomial p(dim);
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("constant_value() on non-constant polynomial");
    return terms_.begin()->second;
}

long Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(terms_.rbegin()->first.degree());
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Polynomial::require_same_dim(const Polynomial& a, const Polynomial& b) {
    if (a.dim_ != b.dim_)
        throw std::invalid_argument("polynomial dimension mismatch: " + std::to_string(a.dim_) +
                                    " vs " + std::to_string(b.dim_));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_dim(a, b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_dim(a, b);
    Polynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(dim_);
    if (c == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial::require_same_dim(a, b);
    Polynomial r(a.dim_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(a.dim_);
            for (std::size_t i = 0; i < a.dim_; ++i) m.exps[i] = ma.exps[i] + mb.exps[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = Polynomial::constant(dim_, Rational(1));
    Polynomial base = *this;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::diff(std::size_t i) const {
    if (i >= dim_) throw std::out_of_range("derivative index " + std::to_string(i) +
                                           " out of range for dimension " + std::to_string(dim_));
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) {
        if (m.exps[i] == 0) continue;
        Monomial d = m;
        d.exps[i] -= 1;
        r.add_term(d, c * Rational(m.exps[i]));
    }
    return r;
}

Polynomial Polynomial::substitute_zero(std::size_t i) const {
    if (i >= dim_) throw std::out_of_range("substitution index out of range");
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_)
        if (m.exps[i] == 0) r.terms_.emplace(m, c);
    return r;
}

Rational Polynomial::eval(std::span<const Rational> point) const {
    if (point.size() != dim_)
        throw std::invalid_argument("evaluation point length " + std::to_string(point.size()) +
                                    " does not match dimension " + std::to_string(dim_));
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::uint32_t e = 0; e < m.exps[i]; ++e) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

double Polynomial::eval(std::span<const double> point) const {
    if (point.size() != dim_)
        throw std::invalid_argument("evaluation point length " + std::to_string(point.size()) +
                                    " does not match dimension " + std::to_string(dim_));
    // Fixed ascending graded-lex term order keeps float results reproducible.
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = to_double(c);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::uint32_t e = 0; e < m.exps[i]; ++e) t *= point[i];
        }
        acc += t;
    }
    return acc;
}

std::string render(const Polynomial& p, std::span<const std::string> names) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // Leading (largest) term first.
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = m.degree() > 0;
        bool coeff_shown = !has_vars || a != 1;
        if (coeff_shown) out << to_string(a);
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0) continue;
            if (need_star) out << "*";
            need_star = true;
            if (i < names.size())
                out << names[i];
            else
                out << "x" << i;
            if (m.exps[i] > 1) out << "^" << m.exps[i];
        }
    }
    return out.str();
}

} // namespace irrev
