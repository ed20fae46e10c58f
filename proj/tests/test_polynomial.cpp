#include "irrev/polynomial.hpp"
#include "irrev/random.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>

using namespace irrev;

namespace {

Polynomial x(std::size_t dim, std::size_t i) { return Polynomial::variable(dim, i); }

// independent substitution oracle used to freeze expected evaluation values
Rational substitute(const Polynomial& p, const std::vector<Rational>& pt) {
    Rational acc(0);
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < pt.size(); ++i)
            for (std::uint32_t e = 0; e < m.exps[i]; ++e) t *= pt[i];
        acc += t;
    }
    return acc;
}

} // namespace

TEST_CASE("additive inverse cancels") {
    Polynomial p = x(3, 0);
    CHECK((p + (-p)).is_zero());
    CHECK((p - p).is_zero());
}

TEST_CASE("difference of squares") {
    Polynomial lhs = (x(2, 0) + x(2, 1)) * (x(2, 0) - x(2, 1));
    Polynomial rhs = x(2, 0) * x(2, 0) - x(2, 1) * x(2, 1);
    CHECK(lhs == rhs);
}

TEST_CASE("scaling by one half") {
    // entropy-shaped polynomial on a 3-coordinate chart (zeta, p1, p2)
    Polynomial s = x(3, 1) * x(3, 1) + x(3, 2) * x(3, 2);
    Polynomial half = s.scaled(Rational(1, 2));
    CHECK(half.terms().size() == 2);
    for (const auto& [m, c] : half.terms()) CHECK(c == Rational(1, 2));
    CHECK(half + half == s);
}

TEST_CASE("partial derivatives") {
    Polynomial s = x(3, 1) * x(3, 1) + x(3, 2) * x(3, 2);
    CHECK(s.diff(1) == x(3, 1).scaled(Rational(2)));
    CHECK(s.diff(0).is_zero()); // absent variable
    Polynomial q = x(2, 0) * x(2, 1) * x(2, 1);
    CHECK(q.diff(0) == x(2, 1) * x(2, 1));
    CHECK_THROWS_AS(s.diff(7), std::out_of_range);
}

TEST_CASE("evaluation, exact and float") {
    Polynomial s = x(3, 1) * x(3, 1) + x(3, 2) * x(3, 2);
    std::vector<Rational> pt{Rational(5), Rational(3), Rational(4)};
    CHECK(s.eval(pt) == Rational(25));
    CHECK(Polynomial(3).eval(pt) == Rational(0));

    Polynomial half = s.scaled(Rational(1, 2));
    std::vector<Rational> pt2{Rational(0), Rational(1), Rational(2)};
    CHECK(substitute(half, pt2) == Rational(5, 2)); // oracle
    CHECK(half.eval(pt2) == Rational(5, 2));

    std::vector<double> fpt{0.0, 1.0, 2.0};
    CHECK(half.eval(std::span<const double>(fpt)) == doctest::Approx(2.5));

    std::vector<Rational> wrong{Rational(1)};
    CHECK_THROWS_WITH_AS(static_cast<void>(s.eval(wrong)),
                         doctest::Contains("does not match dimension"), std::invalid_argument);
}

TEST_CASE("dimension mismatch names both dimensions") {
    CHECK_THROWS_WITH_AS(static_cast<void>(x(3, 0) + x(4, 0)), doctest::Contains("3 vs 4"),
                         std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
    SplitMix64 rng(1234);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t dim = 1 + rng.below(5);
        Polynomial a = random_polynomial(rng, dim, 4, 4);
        Polynomial b = random_polynomial(rng, dim, 4, 4);
        Polynomial c = random_polynomial(rng, dim, 4, 4);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("canonical form invariants survive arithmetic") {
    SplitMix64 rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        std::size_t dim = 1 + rng.below(4);
        Polynomial p = random_polynomial(rng, dim, 3, 5) * random_polynomial(rng, dim, 3, 5) -
                       random_polynomial(rng, dim, 4, 5);
        for (const auto& [m, c] : p.terms()) {
            CHECK(c != 0);                       // no stored zero coefficient
            CHECK(denominator(c) > 0);           // canonical rational
            CHECK(gcd(numerator(c) < 0 ? Int(-numerator(c)) : numerator(c), denominator(c)) == 1);
            CHECK(m.exps.size() == dim);
        }
    }
}

TEST_CASE("mixed partials commute") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 30; ++iter) {
        std::size_t dim = 2 + rng.below(4);
        Polynomial p = random_polynomial(rng, dim, 4, 6);
        std::size_t i = rng.below(dim), j = rng.below(dim);
        CHECK(p.diff(i).diff(j) == p.diff(j).diff(i));
    }
}

TEST_CASE("symbolic derivative matches central differences") {
    SplitMix64 rng(17);
    const double h = 1e-5;
    int checked = 0;
    while (checked < 25) {
        std::size_t dim = 1 + rng.below(4);
        Polynomial p = random_polynomial(rng, dim, 4, 5);
        std::vector<double> pt(dim);
        for (auto& v : pt) v = rng.uniform(-1.0, 1.0);
        // keep the gradient away from zero so relative error is meaningful
        double gnorm = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            double gi = p.diff(i).eval(std::span<const double>(pt));
            gnorm += gi * gi;
        }
        if (std::sqrt(gnorm) < 0.5) continue;
        ++checked;
        for (std::size_t i = 0; i < dim; ++i) {
            double exact = p.diff(i).eval(std::span<const double>(pt));
            std::vector<double> up = pt, dn = pt;
            up[i] += h;
            dn[i] -= h;
            double fd = (p.eval(std::span<const double>(up)) -
                         p.eval(std::span<const double>(dn))) /
                        (2 * h);
            CHECK(std::abs(fd - exact) / std::max(1.0, std::abs(exact)) < 1e-6);
        }
    }
}

TEST_CASE("pow matches repeated multiplication") {
    SplitMix64 rng(31);
    for (int iter = 0; iter < 20; ++iter) {
        std::size_t dim = 1 + rng.below(3);
        Polynomial p = random_polynomial(rng, dim, 2, 3);
        unsigned n = static_cast<unsigned>(rng.below(6));
        Polynomial naive = Polynomial::constant(dim, Rational(1));
        for (unsigned k = 0; k < n; ++k) naive = naive * p;
        CHECK(p.pow(n) == naive);
    }
}

TEST_CASE("rendering") {
    Polynomial p = x(3, 1) * x(3, 1) + x(3, 2) * x(3, 2);
    std::vector<std::string> names{"zeta", "p1", "p2"};
    CHECK(render(p, names) == "p1^2 + p2^2");
    CHECK(render(Polynomial(3), names) == "0");
    Polynomial q = Polynomial::constant(2, Rational(-1, 2)) * x(2, 0) * x(2, 1) -
                   Polynomial::constant(2, Rational(3));
    CHECK(render(q) == "-1/2*x0*x1 - 3");
    // leading term first under graded lex
    Polynomial r = x(2, 1) + x(2, 0) * x(2, 0);
    CHECK(render(r) == "x0^2 + x1");
}

TEST_CASE("float evaluation order is deterministic") {
    SplitMix64 rng(55);
    Polynomial p = random_polynomial(rng, 4, 5, 24);
    std::vector<double> pt{0.137, -1.25, 3.5, 0.75};
    double a = p.eval(std::span<const double>(pt));
    double b = p.eval(std::span<const double>(pt));
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}
