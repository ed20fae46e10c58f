#include "irrev/multivector.hpp"

#include <stdexcept>

namespace irrev {

namespace {

void require_same_chart(const CoordinateChart& a, const CoordinateChart& b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": chart mismatch");
}

} // namespace

TrivectorField schouten_bb(const BivectorField& P, const BivectorField& Q) {
    require_same_chart(P.chart(), Q.chart(), "schouten_bb");
    std::size_t n = P.dim();
    TrivectorField out(P.chart());
    if (n < 3) return out; // trivially zero by type
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                Polynomial acc(n);
                for (std::size_t l = 0; l < n; ++l) {
                    acc = acc + P.component(l, i) * Q.component(j, k).diff(l);
                    acc = acc + Q.component(l, i) * P.component(j, k).diff(l);
                    acc = acc + P.component(l, j) * Q.component(k, i).diff(l);
                    acc = acc + Q.component(l, j) * P.component(k, i).diff(l);
                    acc = acc + P.component(l, k) * Q.component(i, j).diff(l);
                    acc = acc + Q.component(l, k) * P.component(i, j).diff(l);
                }
                out.set(i, j, k, std::move(acc));
            }
        }
    }
    return out;
}

BivectorField lie_derivative_bivector(const VectorField& X, const BivectorField& P) {
    require_same_chart(X.chart(), P.chart(), "lie_derivative_bivector");
    std::size_t n = P.dim();
    BivectorField out(P.chart());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Polynomial acc(n);
            for (std::size_t l = 0; l < n; ++l) {
                acc = acc + X.component(l) * P.component(i, j).diff(l);
                acc = acc - P.component(l, j) * X.component(i).diff(l);
                acc = acc - P.component(i, l) * X.component(j).diff(l);
            }
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

VectorField sharp(const BivectorField& P, const Polynomial& f) {
    std::size_t n = P.dim();
    if (f.dim() != n)
        throw std::invalid_argument("sharp: function dimension " + std::to_string(f.dim()) +
                                    " does not match chart dimension " + std::to_string(n));
    std::vector<Polynomial> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial acc(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            acc = acc + P.component(i, j) * f.diff(j);
        }
        comps.push_back(std::move(acc));
    }
    return VectorField(P.chart(), std::move(comps));
}

Polynomial poisson_bracket(const BivectorField& P, const Polynomial& f, const Polynomial& g) {
    std::size_t n = P.dim();
    if (f.dim() != n || g.dim() != n)
        throw std::invalid_argument("poisson_bracket: dimension mismatch with chart of dimension " +
                                    std::to_string(n));
    Polynomial acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const Polynomial& pij = P.upper(i, j);
            if (pij.is_zero()) continue;
            // P^{ij}(d_i f d_j g - d_j f d_i g)
            acc = acc + pij * (f.diff(i) * g.diff(j) - f.diff(j) * g.diff(i));
        }
    }
    return acc;
}

Polynomial pairing(const SymmetricTensorField& t, const Polynomial& f, const Polynomial& g) {
    std::size_t n = t.dim();
    if (f.dim() != n || g.dim() != n)
        throw std::invalid_argument("pairing: dimension mismatch with chart of dimension " +
                                    std::to_string(n));
    Polynomial acc(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial& tij = t.component(i, j);
            if (tij.is_zero()) continue;
            acc = acc + tij * f.diff(i) * g.diff(j);
        }
    }
    return acc;
}

} // namespace irrev
