#ifndef IRREV_VERIFY_HPP
#define IRREV_VERIFY_HPP

#include "irrev/brackets.hpp"
#include "irrev/models.hpp"

namespace irrev {

enum class CheckStatus { pass, fail, trivial };

struct CheckResult {
    std::string name;
    CheckStatus status;
    std::string residual; // canonical text of the offending object; empty iff pass
};

// Structured outcome of one verification run. pass carries no residual; fail
// always does; trivial marks checks that hold for structural reasons (e.g. a
// trivector on a chart of dimension < 3) and may carry a note.
class VerificationReport {
  public:
    VerificationReport(std::string subject, std::uint64_t seed = 0)
        : subject_(std::move(subject)), seed_(seed) {}

    void add_pass(std::string name);
    void add_fail(std::string name, std::string residual);
    void add_trivial(std::string name, std::string note = "");
    void merge(const VerificationReport& other); // prefixes sub-check names

    const std::string& subject() const { return subject_; }
    std::uint64_t seed() const { return seed_; }
    const std::vector<CheckResult>& checks() const { return checks_; }
    bool all_passed() const; // no check has status fail

    std::string text() const;    // human-readable, seed in the header
    std::string machine() const; // one tab-separated record per sub-check

  private:
    std::string subject_;
    std::uint64_t seed_;
    std::vector<CheckResult> checks_;
};

// [P,P] == 0, exact. Charts of dimension < 3 report "trivial".
VerificationReport check_jacobi(const BivectorField& P);

// [P,a] == 0 and [a,a] == 0, exact.
VerificationReport check_cocycle(const BivectorField& P, const BivectorField& a);

// sharp(P, C) == 0, exact.
VerificationReport check_casimir(const BivectorField& P, const Polynomial& C,
                                 const std::string& casimir_name = "C");

// The four axioms checks:
//   (i)   S is a Casimir of the base structure (exact),
//   (ii)  ((H, x_i)) == 0 for every coordinate (exact),
//   (iii) <dS, X> == tau * a(dS,dH)^2 as polynomials (exact); identically
//         zero production is reported "trivial/isentropic",
//   (iv)  ((f,f)) >= 0 at 1000 random small-rational points for 10 random f,
//         evaluated in exact rational arithmetic.
VerificationReport check_metriplectic_axioms(const MetriplecticSystem& sys,
                                             std::uint64_t seed = 0x5eed);

// Symbolic gradient vs central differences at random float points in
// [-1,1]^n: pass iff max relative error < 1e-6 at h = 1e-5.
VerificationReport gradient_fd_check(const Polynomial& f, std::size_t points,
                                     std::uint64_t seed = 0x5eed);

// Full battery for one model: Jacobi, cocycle conditions, every declared
// Casimir and extended Casimir, and the metriplectic axioms for the supplied
// Hamiltonian (a seeded random one when absent).
VerificationReport check_model(const ModelDescriptor& model, std::uint64_t seed = 0x5eed,
                               const std::optional<Polynomial>& hamiltonian = std::nullopt);

} // namespace irrev

#endif
