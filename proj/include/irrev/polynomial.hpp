#ifndef IRREV_POLYNOMIAL_HPP
#define IRREV_POLYNOMIAL_HPP

#include "irrev/rational.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace irrev {

// Exponent vector of fixed length (the chart dimension).
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t dim) : exps(dim, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    bool operator==(const Monomial& o) const { return exps == o.exps; }
};

// Graded lexicographic order, fixed once for the whole project: compare by
// total degree, ties broken by the exponent of the first coordinate, then the
// second, and so on. Canonical printing walks terms in descending order;
// evaluation walks the ascending (map) order.
struct GradedLexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact multivariate polynomial over Rational. Immutable value type: every
// operation returns a new polynomial in canonical form (no zero coefficients
// stored, unique term map).
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GradedLexLess>;

    explicit Polynomial(std::size_t dim = 0) : dim_(dim) {}

    static Polynomial zero(std::size_t dim) { return Polynomial(dim); }
    static Polynomial constant(std::size_t dim, Rational c);
    static Polynomial variable(std::size_t dim, std::size_t i);
    static Polynomial term(std::size_t dim, Monomial m, Rational c);

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // -1 for the zero polynomial.
    long total_degree() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational constant_value() const; // requires is_constant()

    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned n) const;
    Polynomial diff(std::size_t i) const;
    // Drops every term that involves coordinate i (substitutes x_i = 0).
    Polynomial substitute_zero(std::size_t i) const;

    Rational eval(std::span<const Rational> point) const;
    double eval(std::span<const double> point) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    bool operator==(const Polynomial& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }

  private:
    void add_term(const Monomial& m, const Rational& c);
    static void require_same_dim(const Polynomial& a, const Polynomial& b);

    std::size_t dim_;
    TermMap terms_;
};

// Canonical text rendering: descending graded-lex, explicit '^' powers and '*'
// products, e.g. "p1^2 + p2^2" or "-1/2*zeta*p1 + 3". With no name list,
// coordinates print as x0, x1, ...
std::string render(const Polynomial& p, std::span<const std::string> names = {});

} // namespace irrev

#endif
