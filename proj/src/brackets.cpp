#include "irrev/brackets.hpp"

#include <stdexcept>

namespace irrev {

DeformedPoissonStructure::DeformedPoissonStructure(BivectorField base, BivectorField cocycle,
                                                   Rational epsilon)
    : base_(std::move(base)), cocycle_(std::move(cocycle)), epsilon_(std::move(epsilon)),
      scaled_(cocycle_.scaled(epsilon_)) {
    if (base_.chart() != cocycle_.chart())
        throw std::invalid_argument("deformed structure: base and cocycle charts differ");
}

BivectorField DeformedPoissonStructure::deformed() const { return base_ + scaled_; }

MetriplecticSystem::MetriplecticSystem(std::string name, CoordinateChart chart,
                                       DeformedPoissonStructure structure, Polynomial hamiltonian,
                                       Polynomial entropy, Rational tau,
                                       std::vector<NamedPolynomial> casimirs,
                                       std::vector<NamedPolynomial> extended_casimirs)
    : name_(std::move(name)), chart_(std::move(chart)), structure_(std::move(structure)),
      hamiltonian_(std::move(hamiltonian)), entropy_(std::move(entropy)), tau_(std::move(tau)),
      casimirs_(std::move(casimirs)), extended_casimirs_(std::move(extended_casimirs)) {
    if (structure_.base().chart() != chart_)
        throw std::invalid_argument("system chart does not match structure chart");
    std::size_t n = chart_.dim();
    if (hamiltonian_.dim() != n || entropy_.dim() != n)
        throw std::invalid_argument("hamiltonian/entropy dimension does not match chart");
    if (!sharp(structure_.base(), entropy_).is_zero())
        throw std::invalid_argument(
            "entropy is not a Casimir of the base Poisson structure; residual " +
            describe(sharp(structure_.base(), entropy_)));
    isentropic_ = sharp(structure_.deformed(), entropy_).is_zero();
}

MetriplecticSystem MetriplecticSystem::with_hamiltonian(Polynomial h) const {
    MetriplecticSystem copy = *this;
    if (h.dim() != chart_.dim())
        throw std::invalid_argument("hamiltonian dimension does not match chart");
    copy.hamiltonian_ = std::move(h);
    return copy;
}

FourBracketSpec FourBracketSpec::tensor_product(BivectorField a) {
    FourBracketSpec s;
    s.kind_ = Kind::tensor_product;
    s.a_ = std::move(a);
    return s;
}

FourBracketSpec FourBracketSpec::kulkarni_nomizu(SymmetricTensorField sigma,
                                                 SymmetricTensorField mu) {
    if (sigma.chart() != mu.chart())
        throw std::invalid_argument("kulkarni_nomizu: sigma and mu charts differ");
    FourBracketSpec s;
    s.kind_ = Kind::kulkarni_nomizu;
    s.sigma_ = std::move(sigma);
    s.mu_ = std::move(mu);
    return s;
}

const CoordinateChart& FourBracketSpec::chart() const {
    return kind_ == Kind::tensor_product ? a_->chart() : sigma_->chart();
}

Polynomial four_bracket(const FourBracketSpec& spec, const Polynomial& f, const Polynomial& g,
                        const Polynomial& h, const Polynomial& k) {
    std::size_t n = spec.chart().dim();
    for (const Polynomial* p : {&f, &g, &h, &k})
        if (p->dim() != n) throw std::invalid_argument("four_bracket: chart mismatch");
    if (spec.kind() == FourBracketSpec::Kind::tensor_product) {
        const BivectorField& a = spec.a();
        return poisson_bracket(a, f, g) * poisson_bracket(a, h, k);
    }
    const SymmetricTensorField& s = spec.sigma();
    const SymmetricTensorField& m = spec.mu();
    return pairing(s, f, g) * pairing(m, h, k) - pairing(s, f, k) * pairing(m, g, h) +
           pairing(m, f, g) * pairing(s, h, k) - pairing(m, f, k) * pairing(s, g, h);
}

Polynomial symmetric_bracket(const MetriplecticSystem& sys, const Polynomial& f,
                             const Polynomial& g) {
    std::size_t n = sys.chart().dim();
    if (f.dim() != n || g.dim() != n)
        throw std::invalid_argument("symmetric_bracket: chart mismatch");
    const BivectorField& a = sys.structure().scaled_cocycle();
    const Polynomial& H = sys.hamiltonian();
    return poisson_bracket(a, f, H) * poisson_bracket(a, g, H);
}

VectorField reversible_field(const MetriplecticSystem& sys) {
    return sharp(sys.structure().base(), sys.hamiltonian());
}

VectorField dissipative_field(const MetriplecticSystem& sys) {
    const BivectorField& a = sys.structure().scaled_cocycle();
    const Polynomial& H = sys.hamiltonian();
    Polynomial rate = poisson_bracket(a, sys.entropy(), H).scaled(sys.tau());
    VectorField aH = sharp(a, H);
    std::vector<Polynomial> comps;
    comps.reserve(sys.chart().dim());
    for (std::size_t i = 0; i < sys.chart().dim(); ++i) comps.push_back(rate * aH.component(i));
    return VectorField(sys.chart(), std::move(comps));
}

VectorField metriplectic_field(const MetriplecticSystem& sys) {
    VectorField rev = reversible_field(sys);
    VectorField dis = dissipative_field(sys);
    std::vector<Polynomial> comps;
    comps.reserve(sys.chart().dim());
    for (std::size_t i = 0; i < sys.chart().dim(); ++i)
        comps.push_back(rev.component(i) + dis.component(i));
    return VectorField(sys.chart(), std::move(comps));
}

Polynomial production_polynomial(const MetriplecticSystem& sys) {
    const BivectorField& a = sys.structure().scaled_cocycle();
    Polynomial r = poisson_bracket(a, sys.entropy(), sys.hamiltonian());
    return (r * r).scaled(sys.tau());
}

} // namespace irrev
