#pragma once

#include <stdexcept>
#include <string>

namespace ascheme {

enum class ErrorKind {
    // scheme construction
    NotAPartitionOfDiagonal,
    NoInvolution,
    NotRegular,
    BadIndex,
    NotAGroup,
    // morphisms
    NotAMorphism,
    NotNormal,
    NotBased,
    NotIso,
    DomainMismatch,
    MismatchedTauScheme,
    // actions
    ConditionFailed,
    // recovery / splittings
    NoBasedIso,
    SplitNotIso,
    ConditionViolated,
    EtaNotIso,
    // file handling
    ParseError,
};

const char* error_kind_name(ErrorKind k);

// Every validation failure carries a kind plus a human-readable witness
// message; `aux` holds a small structured detail (e.g. which action
// condition failed) so tests can assert on it.
class SchemeError : public std::runtime_error {
public:
    SchemeError(ErrorKind kind, const std::string& msg, int aux = -1)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
          kind_(kind), aux_(aux) {}

    ErrorKind kind() const { return kind_; }
    int aux() const { return aux_; }

private:
    ErrorKind kind_;
    int aux_;
};

} // namespace ascheme
