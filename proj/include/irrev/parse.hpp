#ifndef IRREV_PARSE_HPP
#define IRREV_PARSE_HPP

#include "irrev/verify.hpp"

#include <filesystem>
#include <stdexcept>

namespace irrev {

// Syntax or semantic error in user-supplied text, with 1-based position.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, int line, int col)
        : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col)),
          message_(message), line_(line), col_(col) {}

    const std::string& message() const { return message_; }
    int line() const { return line_; }
    int col() const { return col_; }

  private:
    std::string message_;
    int line_, col_;
};

// Model was syntactically fine but a structural check failed (Jacobi,
// cocycle condition, or the entropy axiom). Carries the full report.
class VerificationFailure : public std::runtime_error {
  public:
    VerificationFailure(const std::string& what, VerificationReport report)
        : std::runtime_error(what), report_(std::move(report)) {}
    const VerificationReport& report() const { return report_; }

  private:
    VerificationReport report_;
};

// Grammar (whitespace insignificant, no implicit multiplication):
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | identifier | '(' expr ')' | '-' factor
// Identifiers must name chart coordinates. Division requires a nonzero
// constant divisor. Exponents are capped at 64 and nesting at 256 so that
// arbitrary input cannot exhaust memory or stack.
Polynomial parse_expression(std::string_view text, const CoordinateChart& chart);

// Same, with the text located inside a larger file for error reporting.
Polynomial parse_expression_at(std::string_view text, const CoordinateChart& chart,
                               int line, int col_offset);

// Raw parse of the declarative model-file format (see docs/model-format.md):
//   coordinates = zeta, p1, p2, c
//   tau = 1
//   hamiltonian = p1
//   entropy = (p1^2 + p2^2)/2
//   bivector { zeta, p1 = -p2 ... }       (one entry per line)
//   cocycle { p1, p2 = c }                 (optional)
//   casimirs { C = p1^2 + p2^2 }           (optional)
struct ModelFile {
    std::vector<std::string> coordinates;
    struct Entry {
        std::string i, j;
        std::string expression;
        int line = 0, expr_col = 0;
    };
    std::vector<Entry> bivector;
    std::vector<Entry> cocycle;
    bool has_cocycle = false;
    struct Named {
        std::string name;
        std::string expression;
        int line = 0, expr_col = 0;
    };
    std::vector<Named> casimirs;
    std::string hamiltonian;
    int hamiltonian_line = 0, hamiltonian_col = 0;
    std::string entropy;
    int entropy_line = 0, entropy_col = 0;
    std::string tau = "1";
};

ModelFile parse_model_file(std::string_view text);

struct LoadedModel {
    MetriplecticSystem system;
    VerificationReport report;
};

// Parses, builds and verifies a model file. Throws ParseError for syntax or
// semantic problems and VerificationFailure when Jacobi, a cocycle condition
// or the entropy axiom fails; declared-Casimir failures are only recorded in
// the report.
LoadedModel load_model(const std::filesystem::path& path, std::uint64_t seed = 0x5eed);
LoadedModel load_model_text(std::string_view text, const std::string& name,
                            std::uint64_t seed = 0x5eed);

} // namespace irrev

#endif
