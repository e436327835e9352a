#pragma once

#include <stdexcept>
#include <string>

namespace morita {

// Error taxonomy used across the library. The CLI maps Usage to exit code 2
// and everything else to exit code 1, so the kinds must stay disjoint.
enum class ErrorKind {
    InvalidInput,         // malformed or out-of-contract arguments
    NumericalDegeneracy,  // ambiguous spectrum / rounding guard tripped
    AxiomViolation,       // bimodule axiom failed validation
    NoEquivalence,        // K0 class obstruction
    Precondition,         // operation-level precondition not met
    Parse,                // document-level parse/validation failure
    Usage,                // command-line usage error
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidInput: return "invalid-input";
        case ErrorKind::NumericalDegeneracy: return "numerical-degeneracy";
        case ErrorKind::AxiomViolation: return "axiom-violation";
        case ErrorKind::NoEquivalence: return "no-equivalence";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Usage: return "usage";
    }
    return "unknown";
}

}  // namespace morita
