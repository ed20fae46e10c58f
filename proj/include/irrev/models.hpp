#ifndef IRREV_MODELS_HPP
#define IRREV_MODELS_HPP

#include "irrev/brackets.hpp"

#include <array>
#include <optional>
#include <string>

namespace irrev {

// A named Poisson structure with its known invariants. Construction verifies
// every claim exactly: Jacobi for the base, both cocycle conditions when a
// cocycle is present, and all listed Casimirs; violations throw.
struct ModelDescriptor {
    std::string name;
    CoordinateChart chart;
    BivectorField base;
    std::optional<BivectorField> cocycle;
    std::vector<NamedPolynomial> casimirs;          // of the base structure
    std::vector<NamedPolynomial> extended_casimirs; // of base + cocycle
    Polynomial default_entropy;
    std::string notes;

    BivectorField deformed() const; // base + cocycle (identity when no cocycle)
    // System with the model's default entropy and tracked invariants.
    MetriplecticSystem system(Polynomial hamiltonian, Rational tau = Rational(1)) const;
    MetriplecticSystem system(Polynomial hamiltonian, Polynomial entropy,
                              Rational tau = Rational(1)) const;
};

ModelDescriptor make_descriptor(std::string name, CoordinateChart chart, BivectorField base,
                                std::optional<BivectorField> cocycle,
                                std::vector<NamedPolynomial> casimirs,
                                std::vector<NamedPolynomial> extended_casimirs,
                                Polynomial default_entropy, std::string notes);

// Darboux chart (q1..qn, p1..pn) with the constant bivector q_i ^ p_i.
// Nondegenerate, hence no Casimirs.
ModelDescriptor build_canonical(unsigned n);

// One structure-constant term [e_i, e_j] = coefficient * e_k (given for i < j;
// the antisymmetric counterpart is implied).
struct StructureTerm {
    std::size_t i, j, k;
    Rational coefficient;
};

// Lie-Poisson bivector pi^{ij} = sum_k c^k_{ij} x_k on the dual of the algebra
// spanned by the named coordinates. Rejects constants whose bivector fails
// Jacobi, naming an offending triple and its residual.
ModelDescriptor build_lie_poisson(std::vector<std::string> names,
                                  const std::vector<StructureTerm>& constants);

// Quadratic bivector pi^{ij} = A[i][j] x_i x_j from a skew rational matrix.
ModelDescriptor build_lotka_volterra(const std::vector<std::vector<Rational>>& A);

// se(2)*: chart (zeta, p1, p2) with {zeta,p1} = -p2, {zeta,p2} = p1,
// {p1,p2} = 0; Casimir C = p1^2 + p2^2.
ModelDescriptor build_se2();

// Central extension of se(2)*: chart (zeta, p1, p2, c), base embedded, cocycle
// a^{p1,p2} = c. The coordinate c is a Casimir of the deformed bracket.
ModelDescriptor build_se2_extended();

// Dual of the Galilei algebra: chart (zeta1..3, g1..3, p1..3, E) with
// {zeta_i, zeta_j} = eps_ijk zeta_k (same pattern for the g and p columns)
// and {g_i, E} = p_i. Casimirs |p|^2 and |p x g|^2.
ModelDescriptor build_galilei();

// Bargmann extension: chart + M, cocycle a^{g_i, p_i} = M. Extended Casimirs
// M, 2ME - |p|^2 and |M zeta - g x p|^2.
ModelDescriptor build_bargmann();

// Registry: "se2", "se2ext", "galilei", "bargmann", "canonical:N",
// "lv:r11,r12,..;r21,..;..". Unknown names yield nullopt.
std::optional<ModelDescriptor> find_model(std::string_view name);
std::vector<std::string> builtin_model_names();

// ---- float-valued group-level maps (cross-check utilities) ----

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

struct GroupElementSE2 {
    double angle = 0.0;
    Vec2 translation{0.0, 0.0};
};

// Closed-form exponential of (omega, u) in se(2):
// [[exp(omega J), V(omega) u], [0, 1]] with
// V(omega) = (sin omega / omega) I + ((1 - cos omega)/ omega) J and V(0) = I.
Mat3 se2_exp(double omega, const Vec2& u);

struct SE2Momentum {
    double zeta = 0.0;
    Vec2 p{0.0, 0.0};
};

// Coadjoint action of g = (R(phi), v): (zeta, p) -> (zeta, R p + zeta J v).
SE2Momentum se2_coadjoint(const GroupElementSE2& g, const SE2Momentum& mu);

struct GalileiAlgebraElement {
    Vec3 xi{};    // rotation
    Vec3 beta{};  // boost
    Vec3 gamma{}; // space translation
    double eps = 0.0; // time translation
};

struct GalileiMomentum {
    Vec3 zeta{}; // angular momentum
    Vec3 g{};    // center of mass
    Vec3 p{};    // linear momentum
    double E = 0.0;
};

// Coadjoint action of the Galilei algebra on momenta, obtained from the
// matrix commutator and the component-wise trace pairing:
//   ( -xi x zeta - beta x g - gamma x p,  -xi x g - eps p,  -xi x p,  beta.p )
// The Lie-Poisson field of build_galilei equals minus this map evaluated at
// the Hamiltonian gradient; that overall sign is fixed once and tested.
GalileiMomentum galilei_coadjoint_algebra(const GalileiAlgebraElement& xi,
                                          const GalileiMomentum& mu);

} // namespace irrev

#endif
