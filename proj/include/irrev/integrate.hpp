#ifndef IRREV_INTEGRATE_HPP
#define IRREV_INTEGRATE_HPP

#include "irrev/brackets.hpp"

#include <iosfwd>
#include <stdexcept>

namespace irrev {

enum class Scheme { rk4, midpoint };

Scheme scheme_from_string(std::string_view name); // "rk4" | "midpoint"
std::string_view scheme_name(Scheme s);

// Polynomial fixed to an evaluation plan: terms in ascending graded-lex order
// with double coefficients. Per-evaluation cost is linear in the term count,
// and the summation order never changes, so results are bit-reproducible.
class CompiledPolynomial {
  public:
    CompiledPolynomial() = default;
    explicit CompiledPolynomial(const Polynomial& p);
    double eval(std::span<const double> x) const;

  private:
    struct Term {
        double coeff;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> powers; // (var, exp)
    };
    std::vector<Term> terms_;
};

class CompiledField {
  public:
    explicit CompiledField(const VectorField& f);
    std::size_t dim() const { return comps_.size(); }
    void eval(std::span<const double> x, std::span<double> out) const;

  private:
    std::vector<CompiledPolynomial> comps_;
};

struct DiagnosticRecord {
    double t = 0.0;
    std::vector<double> state;
    double H = 0.0;
    double S = 0.0;
    std::vector<double> casimir_values; // aligned with Trajectory::casimir_names
    double production_rate = 0.0;       // tau * a(dS,dH)^2 at the state
};

struct Trajectory {
    std::vector<DiagnosticRecord> records;
    double dt = 0.0;
    Scheme scheme = Scheme::rk4;
    std::vector<std::string> coordinate_names;
    std::vector<std::string> casimir_names;
};

class IntegrationError : public std::runtime_error {
  public:
    IntegrationError(const std::string& what, double t) : std::runtime_error(what), t_(t) {}
    double t() const { return t_; }

  private:
    double t_;
};

// Step error that keeps the records accumulated before the failure.
class SimulationError : public IntegrationError {
  public:
    SimulationError(const std::string& what, double t, Trajectory partial)
        : IntegrationError(what, t), partial_(std::move(partial)) {}
    const Trajectory& partial() const { return partial_; }

  private:
    Trajectory partial_;
};

// One step of the named scheme. rk4 is the classical 4-stage method; midpoint
// is the implicit midpoint rule solved by fixed-point iteration (at most 50
// iterations, tolerance 1e-13) which throws IntegrationError on divergence.
// A non-finite result names the time and the offending component.
std::vector<double> step(const CompiledField& f, std::span<const double> x, double t, double dt,
                         Scheme scheme);
std::vector<double> step(const VectorField& f, std::span<const double> x, double dt,
                         Scheme scheme);

// Integrates the full metriplectic field of the system for n_steps steps and
// records exact-formula diagnostics (H, S, every tracked Casimir, production
// rate) evaluated at each float state. Diagnostics never use finite
// differences of the trajectory.
Trajectory simulate(const MetriplecticSystem& sys, std::span<const double> x0, double dt,
                    long n_steps, Scheme scheme);

struct OrderEstimate {
    double order = 0.0;
    bool defined = false;
    std::string note;
};

// Empirical convergence order from errors at dt, dt/2, dt/4 against a dt/16
// reference over a fixed horizon of 32 coarse steps. A zero-error run (e.g.
// the zero field) yields an undefined estimate with a note.
OrderEstimate estimate_order(const MetriplecticSystem& sys, std::span<const double> x0, double dt,
                             Scheme scheme);

// Header "t,<coords...>,H,S,<casimirs...>,production"; one row per record,
// every value with 17 significant digits.
void write_csv(std::ostream& out, const Trajectory& tr);

} // namespace irrev

#endif
