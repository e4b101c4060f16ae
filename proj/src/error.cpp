#include "ascheme/error.hpp"

namespace ascheme {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::NotAPartitionOfDiagonal: return "NotAPartitionOfDiagonal";
    case ErrorKind::NoInvolution: return "NoInvolution";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotBased: return "NotBased";
    case ErrorKind::NotIso: return "NotIso";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::MismatchedTauScheme: return "MismatchedTauScheme";
    case ErrorKind::ConditionFailed: return "ConditionFailed";
    case ErrorKind::NoBasedIso: return "NoBasedIso";
    case ErrorKind::SplitNotIso: return "SplitNotIso";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::EtaNotIso: return "EtaNotIso";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "UnknownError";
}

} // namespace ascheme
