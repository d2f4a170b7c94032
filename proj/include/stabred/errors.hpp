#ifndef STABRED_ERRORS_HPP
#define STABRED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stabred {

enum class Err {
    // fibergraph
    NonIntegralSelfIntersection,
    UndefinedSelfIntersection,
    NonIntegralGenus,
    NegativeGenus,
    InvariantError,
    UnknownComponent,
    // localmodel
    TameAssumptionViolated,
    WildDegree,
    InvalidParams,
    NonIntegralMultiplicity,
    NonPositiveMultiplicity,
    // basechange
    InconsistentChain,
    InconsistentSplitting,
    DisconnectedResult,
    EmptyResult,
    // saito
    SaitoViolated,
    NoPrincipalComponents,
    // contract
    NotContractible,
    PreconditionViolated,
    GenusTooSmall,
    // pipeline
    AmbiguousSplitting,
    // cli
    ParseError,
    SchemaError,
};

const char* to_string(Err code);

/// Exception for every domain-level failure. Carries a stable code so the
/// CLI can report machine-readable errors and tests can pin exact causes.
class DomainError : public std::runtime_error {
public:
    DomainError(Err code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    Err code() const { return code_; }

private:
    Err code_;
};

}  // namespace stabred

#endif
