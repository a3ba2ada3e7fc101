#pragma once

#include <stdexcept>
#include <string>

namespace mvhac {

enum class ErrorKind {
    InvalidCsv,              // malformed input text (header, cells, row shape)
    InvalidPanel,            // a parsed panel violates a panel invariant
    SchemaMismatch,          // two panels disagree on sectors/regions/reference
    UndefinedGrowth,         // growth rate with nonpositive base value
    UndefinedContribution,   // contribution with nonpositive total
    UndefinedQuotient,       // LQ against a zero reference sector
    Domain                   // any other precondition violation
};

const char* error_kind_name(ErrorKind kind);

// Single exception type for the whole library. The message always names the
// offending file/row/column or stage so the CLI can print it verbatim.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace mvhac
