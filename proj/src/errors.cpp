#include "stabred/errors.hpp"

namespace stabred {

const char* to_string(Err code) {
    switch (code) {
        case Err::NonIntegralSelfIntersection: return "NonIntegralSelfIntersection";
        case Err::UndefinedSelfIntersection: return "UndefinedSelfIntersection";
        case Err::NonIntegralGenus: return "NonIntegralGenus";
        case Err::NegativeGenus: return "NegativeGenus";
        case Err::InvariantError: return "InvariantError";
        case Err::UnknownComponent: return "UnknownComponent";
        case Err::TameAssumptionViolated: return "TameAssumptionViolated";
        case Err::WildDegree: return "WildDegree";
        case Err::InvalidParams: return "InvalidParams";
        case Err::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
        case Err::NonPositiveMultiplicity: return "NonPositiveMultiplicity";
        case Err::InconsistentChain: return "InconsistentChain";
        case Err::InconsistentSplitting: return "InconsistentSplitting";
        case Err::DisconnectedResult: return "DisconnectedResult";
        case Err::EmptyResult: return "EmptyResult";
        case Err::SaitoViolated: return "SaitoViolated";
        case Err::NoPrincipalComponents: return "NoPrincipalComponents";
        case Err::NotContractible: return "NotContractible";
        case Err::PreconditionViolated: return "PreconditionViolated";
        case Err::GenusTooSmall: return "GenusTooSmall";
        case Err::AmbiguousSplitting: return "AmbiguousSplitting";
        case Err::ParseError: return "ParseError";
        case Err::SchemaError: return "SchemaError";
    }
    return "UnknownError";
}

}  // namespace stabred
