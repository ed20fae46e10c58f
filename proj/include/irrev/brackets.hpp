#ifndef IRREV_BRACKETS_HPP
#define IRREV_BRACKETS_HPP

#include "irrev/multivector.hpp"

#include <optional>

namespace irrev {

// pi_eps = pi + eps * a. Valid deformations need a to be a Poisson 2-cocycle
// of pi ([pi,a] = 0 and [a,a] = 0); this container does not enforce that, the
// verify checks do.
class DeformedPoissonStructure {
  public:
    DeformedPoissonStructure(BivectorField base, BivectorField cocycle,
                             Rational epsilon = Rational(1));

    const BivectorField& base() const { return base_; }
    const BivectorField& cocycle() const { return cocycle_; }
    const Rational& epsilon() const { return epsilon_; }
    // eps * a, the bivector that actually enters the dissipative bracket
    const BivectorField& scaled_cocycle() const { return scaled_; }
    BivectorField deformed() const;

  private:
    BivectorField base_;
    BivectorField cocycle_;
    Rational epsilon_;
    BivectorField scaled_;
};

// Complete specification of one irreversible flow: chart, deformed Poisson
// structure, Hamiltonian H, entropy S, temperature tau, and the tracked
// invariants of both structures.
class MetriplecticSystem {
  public:
    // Throws std::invalid_argument when S is not a Casimir of the base
    // structure. When S is (also) a Casimir of the deformed structure the
    // system is constructed but flagged isentropic.
    MetriplecticSystem(std::string name, CoordinateChart chart, DeformedPoissonStructure structure,
                       Polynomial hamiltonian, Polynomial entropy, Rational tau = Rational(1),
                       std::vector<NamedPolynomial> casimirs = {},
                       std::vector<NamedPolynomial> extended_casimirs = {});

    const std::string& name() const { return name_; }
    const CoordinateChart& chart() const { return chart_; }
    const DeformedPoissonStructure& structure() const { return structure_; }
    const Polynomial& hamiltonian() const { return hamiltonian_; }
    const Polynomial& entropy() const { return entropy_; }
    const Rational& tau() const { return tau_; }
    const std::vector<NamedPolynomial>& casimirs() const { return casimirs_; }
    const std::vector<NamedPolynomial>& extended_casimirs() const { return extended_casimirs_; }
    bool isentropic() const { return isentropic_; }

    MetriplecticSystem with_hamiltonian(Polynomial h) const;

  private:
    std::string name_;
    CoordinateChart chart_;
    DeformedPoissonStructure structure_;
    Polynomial hamiltonian_;
    Polynomial entropy_;
    Rational tau_;
    std::vector<NamedPolynomial> casimirs_;
    std::vector<NamedPolynomial> extended_casimirs_;
    bool isentropic_ = false;
};

// 4-bracket source: either T = a (x) a for a skew bivector a (admits entropy
// production), or the Kulkarni-Nomizu pairing of two symmetric tensors
// (always isentropic).
class FourBracketSpec {
  public:
    enum class Kind { tensor_product, kulkarni_nomizu };

    static FourBracketSpec tensor_product(BivectorField a);
    static FourBracketSpec kulkarni_nomizu(SymmetricTensorField sigma, SymmetricTensorField mu);

    Kind kind() const { return kind_; }
    const BivectorField& a() const { return *a_; }
    const SymmetricTensorField& sigma() const { return *sigma_; }
    const SymmetricTensorField& mu() const { return *mu_; }
    const CoordinateChart& chart() const;

  private:
    FourBracketSpec() = default;
    Kind kind_ = Kind::tensor_product;
    std::optional<BivectorField> a_;
    std::optional<SymmetricTensorField> sigma_, mu_;
};

// (f,g;h,k). tensor_product: a(df,dg) * a(dh,dk).
// kulkarni_nomizu: sigma(df,dg)mu(dh,dk) - sigma(df,dk)mu(dg,dh)
//                + mu(df,dg)sigma(dh,dk) - mu(df,dk)sigma(dg,dh).
Polynomial four_bracket(const FourBracketSpec& spec, const Polynomial& f, const Polynomial& g,
                        const Polynomial& h, const Polynomial& k);

// ((f,g)) = a(df,dH) a(dg,dH) with a the eps-scaled cocycle of the system.
// Symmetric, and ((H,f)) == 0 identically.
Polynomial symmetric_bracket(const MetriplecticSystem& sys, const Polynomial& f,
                             const Polynomial& g);

// Conservative flow on the base structure: component i is {x_i, H}_base.
VectorField reversible_field(const MetriplecticSystem& sys);

// tau * a(dS,dH) * (a# dH); zero field exactly when the system is isentropic
// for its Hamiltonian.
VectorField dissipative_field(const MetriplecticSystem& sys);

// Full irreversible flow: x_i' = {x_i,H}_base + tau * a(dS,dH) * (a# dH)^i.
// Along this field dH/dt == 0 and dS/dt == tau * a(dS,dH)^2 as exact
// polynomial identities.
VectorField metriplectic_field(const MetriplecticSystem& sys);

// tau * (a(dS,dH))^2, the exact entropy production rate polynomial.
Polynomial production_polynomial(const MetriplecticSystem& sys);

} // namespace irrev

#endif
