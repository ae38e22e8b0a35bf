#pragma once

#include <stdexcept>
#include <string>

namespace gcoring {

enum class ErrorKind {
    FieldMismatch,
    DimensionMismatch,
    BaseMismatch,
    MissingDualBasis,
    MissingCofreeWitness,
    ImageNotInCoinvariants,
    HypothesisFailed,
    UnknownSuite,
    ParseError,
    SemanticError,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Syntax error in a structure file, positioned at 1-based line/column.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string& msg)
        : Error(ErrorKind::ParseError,
                std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line), col_(col), msg_(msg) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }
    const std::string& message() const { return msg_; }

private:
    std::size_t line_, col_;
    std::string msg_;
};

}  // namespace gcoring
