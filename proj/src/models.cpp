#include "irrev/models.hpp"

#include <sstream>
#include <stdexcept>

namespace irrev {

namespace {

Polynomial var(const CoordinateChart& c, std::size_t i) {
    return Polynomial::variable(c.dim(), i);
}

void verify_jacobi_or_throw(const BivectorField& base, const std::string& who) {
    TrivectorField t = schouten_bb(base, base);
    if (t.is_zero()) return;
    // name one offending triple with its residual
    std::size_t n = base.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const Polynomial& r = t.upper(i, j, k);
                if (r.is_zero()) continue;
                std::ostringstream msg;
                msg << who << ": Jacobi identity fails at triple (" << i << "," << j << "," << k
                    << "), residual " << render(r, base.chart().names);
                throw std::invalid_argument(msg.str());
            }
}

void verify_cocycle_or_throw(const BivectorField& base, const BivectorField& a,
                             const std::string& who) {
    if (!schouten_bb(base, a).is_zero())
        throw std::invalid_argument(who + ": cocycle condition [pi,a] = 0 fails: " +
                                    schouten_bb(base, a).describe());
    if (!schouten_bb(a, a).is_zero())
        throw std::invalid_argument(who + ": cocycle condition [a,a] = 0 fails: " +
                                    schouten_bb(a, a).describe());
}

} // namespace

BivectorField ModelDescriptor::deformed() const {
    return cocycle ? base + *cocycle : base;
}

MetriplecticSystem ModelDescriptor::system(Polynomial hamiltonian, Rational tau) const {
    return system(std::move(hamiltonian), default_entropy, std::move(tau));
}

MetriplecticSystem ModelDescriptor::system(Polynomial hamiltonian, Polynomial entropy,
                                           Rational tau) const {
    BivectorField a = cocycle ? *cocycle : BivectorField(chart);
    return MetriplecticSystem(name, chart, DeformedPoissonStructure(base, a),
                              std::move(hamiltonian), std::move(entropy), std::move(tau), casimirs,
                              extended_casimirs);
}

ModelDescriptor make_descriptor(std::string name, CoordinateChart chart, BivectorField base,
                                std::optional<BivectorField> cocycle,
                                std::vector<NamedPolynomial> casimirs,
                                std::vector<NamedPolynomial> extended_casimirs,
                                Polynomial default_entropy, std::string notes) {
    verify_jacobi_or_throw(base, name);
    if (cocycle) verify_cocycle_or_throw(base, *cocycle, name);
    for (const auto& [cname, cpoly] : casimirs) {
        VectorField r = sharp(base, cpoly);
        if (!r.is_zero())
            throw std::invalid_argument(name + ": declared Casimir " + cname +
                                        " fails, sharp residual " + describe(r));
    }
    if (!extended_casimirs.empty()) {
        BivectorField def = cocycle ? base + *cocycle : base;
        for (const auto& [cname, cpoly] : extended_casimirs) {
            VectorField r = sharp(def, cpoly);
            if (!r.is_zero())
                throw std::invalid_argument(name + ": declared extended Casimir " + cname +
                                            " fails, sharp residual " + describe(r));
        }
    }
    ModelDescriptor d{std::move(name), std::move(chart),  std::move(base),
                      std::move(cocycle), std::move(casimirs), std::move(extended_casimirs),
                      std::move(default_entropy), std::move(notes)};
    return d;
}

ModelDescriptor build_canonical(unsigned n) {
    if (n == 0) throw std::invalid_argument("canonical chart needs n >= 1");
    std::vector<std::string> names;
    for (unsigned i = 1; i <= n; ++i) names.push_back("q" + std::to_string(i));
    for (unsigned i = 1; i <= n; ++i) names.push_back("p" + std::to_string(i));
    CoordinateChart chart(names);
    BivectorField pi(chart);
    for (unsigned i = 0; i < n; ++i)
        pi.set(i, n + i, Polynomial::constant(chart.dim(), Rational(1)));
    return make_descriptor("canonical:" + std::to_string(n), chart, pi, std::nullopt, {}, {},
                           Polynomial(chart.dim()),
                           "Darboux chart; nondegenerate, no Casimirs, default entropy 0");
}

ModelDescriptor build_lie_poisson(std::vector<std::string> names,
                                  const std::vector<StructureTerm>& constants) {
    CoordinateChart chart(std::move(names));
    std::size_t n = chart.dim();
    BivectorField pi(chart);
    for (const auto& t : constants) {
        if (!(t.i < t.j && t.j < n) || t.k >= n)
            throw std::invalid_argument("structure constant indices need i < j < dim, k < dim");
        pi.set(t.i, t.j,
               pi.upper(t.i, t.j) + Polynomial::variable(n, t.k).scaled(t.coefficient));
    }
    return make_descriptor("lie_poisson", chart, pi, std::nullopt, {}, {}, Polynomial(n),
                           "linear Poisson structure from structure constants");
}

ModelDescriptor build_lotka_volterra(const std::vector<std::vector<Rational>>& A) {
    std::size_t n = A.size();
    if (n == 0) throw std::invalid_argument("Lotka-Volterra matrix is empty");
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("Lotka-Volterra matrix is not square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (A[i][j] != -A[j][i])
                throw std::invalid_argument("Lotka-Volterra matrix is not skew-symmetric at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    CoordinateChart chart(names);
    BivectorField pi(chart);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            pi.set(i, j, (var(chart, i) * var(chart, j)).scaled(A[i][j]));
    return make_descriptor("lotka_volterra", chart, pi, std::nullopt, {}, {}, Polynomial(n),
                           "quadratic Lotka-Volterra Poisson structure");
}

ModelDescriptor build_se2() {
    CoordinateChart chart({"zeta", "p1", "p2"});
    Polynomial p1 = var(chart, 1), p2 = var(chart, 2);
    BivectorField pi(chart);
    pi.set(0, 1, -p2);
    pi.set(0, 2, p1);
    Polynomial C = p1 * p1 + p2 * p2;
    return make_descriptor("se2", chart, pi, std::nullopt, {{"C", C}}, {},
                           C.scaled(Rational(1, 2)),
                           "dual of se(2); angular momentum zeta, linear momentum (p1,p2)");
}

ModelDescriptor build_se2_extended() {
    CoordinateChart chart({"zeta", "p1", "p2", "c"});
    Polynomial p1 = var(chart, 1), p2 = var(chart, 2), c = var(chart, 3);
    BivectorField pi(chart);
    pi.set(0, 1, -p2);
    pi.set(0, 2, p1);
    BivectorField a(chart);
    a.set(1, 2, c);
    Polynomial C = p1 * p1 + p2 * p2;
    return make_descriptor("se2ext", chart, pi, a, {{"C", C}}, {{"c", c}},
                           C.scaled(Rational(1, 2)),
                           "central extension of se(2)*; affine bracket {p1,p2} = c");
}

namespace {

// {b_i, c_j} entries of one eps_ijk block: upper(b+i, c+j) = eps_ijk v[k]
void fill_eps_block(BivectorField& pi, const CoordinateChart& chart, std::size_t row,
                    std::size_t col, std::size_t vbase) {
    std::size_t n = chart.dim();
    auto v = [&](std::size_t k) { return Polynomial::variable(n, vbase + k); };
    // eps_ijk over i,j in the 3x3 block
    const int eps[3][3][3] = {{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}},
                              {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}},
                              {{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            if (row + i >= col + j) continue; // stay in the strict upper triangle
            Polynomial entry(n);
            for (std::size_t k = 0; k < 3; ++k)
                if (eps[i][j][k] != 0) entry = entry + v(k).scaled(Rational(eps[i][j][k]));
            if (!entry.is_zero()) pi.set(row + i, col + j, entry);
        }
}

BivectorField galilei_bivector(const CoordinateChart& chart) {
    std::size_t n = chart.dim();
    BivectorField pi(chart);
    // indices: zeta 0..2, g 3..5, p 6..8, E 9
    fill_eps_block(pi, chart, 0, 0, 0); // {zeta_i, zeta_j} = eps_ijk zeta_k
    fill_eps_block(pi, chart, 0, 3, 3); // {zeta_i, g_j}   = eps_ijk g_k
    fill_eps_block(pi, chart, 0, 6, 6); // {zeta_i, p_j}   = eps_ijk p_k
    for (std::size_t i = 0; i < 3; ++i) // {g_i, E} = p_i
        pi.set(3 + i, 9, Polynomial::variable(n, 6 + i));
    return pi;
}

Polynomial norm2(const CoordinateChart& chart, std::size_t base) {
    std::size_t n = chart.dim();
    Polynomial acc(n);
    for (std::size_t i = 0; i < 3; ++i) {
        Polynomial v = Polynomial::variable(n, base + i);
        acc = acc + v * v;
    }
    return acc;
}

// |a x b|^2 = |a|^2 |b|^2 - (a.b)^2 for coordinate blocks
Polynomial cross_norm2(const CoordinateChart& chart, std::size_t a, std::size_t b) {
    std::size_t n = chart.dim();
    Polynomial dot(n);
    for (std::size_t i = 0; i < 3; ++i)
        dot = dot + Polynomial::variable(n, a + i) * Polynomial::variable(n, b + i);
    return norm2(chart, a) * norm2(chart, b) - dot * dot;
}

} // namespace

ModelDescriptor build_galilei() {
    CoordinateChart chart({"zeta1", "zeta2", "zeta3", "g1", "g2", "g3", "p1", "p2", "p3", "E"});
    BivectorField pi = galilei_bivector(chart);
    Polynomial C1 = norm2(chart, 6);           // |p|^2
    Polynomial C2 = cross_norm2(chart, 6, 3);  // |p x g|^2
    return make_descriptor("galilei", chart, pi, std::nullopt, {{"C1", C1}, {"C2", C2}}, {},
                           (C1 + C2).scaled(Rational(1, 2)),
                           "dual of the Galilei algebra sgal(3); skewness C2 and |p|^2 Casimirs");
}

ModelDescriptor build_bargmann() {
    CoordinateChart chart(
        {"zeta1", "zeta2", "zeta3", "g1", "g2", "g3", "p1", "p2", "p3", "E", "M"});
    std::size_t n = chart.dim();
    BivectorField pi = galilei_bivector(chart);
    BivectorField a(chart);
    for (std::size_t i = 0; i < 3; ++i)
        a.set(3 + i, 6 + i, Polynomial::variable(n, 10)); // a^{g_i, p_i} = M
    Polynomial C1 = norm2(chart, 6);
    Polynomial C2 = cross_norm2(chart, 6, 3);
    Polynomial M = Polynomial::variable(n, 10);
    Polynomial E = Polynomial::variable(n, 9);
    Polynomial mass_shell = M * E.scaled(Rational(2)) - C1; // 2ME - |p|^2
    // |M zeta - g x p|^2, componentwise
    auto vx = [&](std::size_t i) { return Polynomial::variable(n, i); };
    auto cross = [&](std::size_t a0, std::size_t b0, std::size_t i) {
        std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
        return vx(a0 + j) * vx(b0 + k) - vx(a0 + k) * vx(b0 + j);
    };
    Polynomial spin(n);
    for (std::size_t i = 0; i < 3; ++i) {
        Polynomial w = M * vx(i) - cross(3, 6, i); // M zeta_i - (g x p)_i
        spin = spin + w * w;
    }
    return make_descriptor("bargmann", chart, pi, a, {{"C1", C1}, {"C2", C2}},
                           {{"M", M}, {"massshell", mass_shell}, {"spinnorm", spin}},
                           (C1 + C2).scaled(Rational(1, 2)),
                           "Bargmann extension of the Galilei dual; mass M deforms the bracket");
}

std::vector<std::string> builtin_model_names() {
    return {"se2", "se2ext", "galilei", "bargmann", "canonical:N", "lv:<skew matrix>"};
}

std::optional<ModelDescriptor> find_model(std::string_view name) {
    if (name == "se2") return build_se2();
    if (name == "se2ext") return build_se2_extended();
    if (name == "galilei") return build_galilei();
    if (name == "bargmann") return build_bargmann();
    if (name.rfind("canonical:", 0) == 0) {
        auto num = name.substr(10);
        unsigned n = 0;
        for (char ch : num) {
            if (ch < '0' || ch > '9') return std::nullopt;
            n = n * 10 + unsigned(ch - '0');
            if (n > 64) return std::nullopt;
        }
        if (n == 0) return std::nullopt;
        return build_canonical(n);
    }
    if (name.rfind("lv:", 0) == 0) {
        std::vector<std::vector<Rational>> A;
        std::string body(name.substr(3));
        std::stringstream rows(body);
        std::string row;
        while (std::getline(rows, row, ';')) {
            std::vector<Rational> r;
            std::stringstream cells(row);
            std::string cell;
            while (std::getline(cells, cell, ',')) {
                auto v = rational_from_string(cell);
                if (!v) return std::nullopt;
                r.push_back(*v);
            }
            A.push_back(std::move(r));
        }
        if (A.empty()) return std::nullopt;
        try {
            return build_lotka_volterra(A);
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

} // namespace irrev
