#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mhom {

// All failures carry a stable machine-readable code so reports never have to
// pattern-match on message text.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct FuelExhausted : Error {
    explicit FuelExhausted(const std::string& message) : Error("FuelExhausted", message) {}
};

struct OrderViolation : Error {
    explicit OrderViolation(const std::string& message) : Error("OrderViolation", message) {}
};

struct GuardViolation : Error {
    explicit GuardViolation(const std::string& message) : Error("GuardViolation", message) {}
};

struct NotFinite : Error {
    explicit NotFinite(const std::string& message) : Error("NotFinite", message) {}
};

struct BoundaryMismatch : Error {
    explicit BoundaryMismatch(const std::string& message) : Error("BoundaryMismatch", message) {}
};

struct DSquaredNonzero : Error {
    explicit DSquaredNonzero(const std::string& message) : Error("DSquaredNonzero", message) {}
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error("ParseError", "line " + std::to_string(line) + ", column " +
                                  std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

protected:
    ParseError(std::string code, int line, int column, const std::string& message)
        : Error(std::move(code), "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

private:
    int line_;
    int column_;
};

class UndeclaredSymbol : public ParseError {
public:
    UndeclaredSymbol(int line, int column, const std::string& symbol)
        : ParseError("UndeclaredSymbol", line, column, "undeclared symbol '" + symbol + "'") {}
};

}  // namespace mhom
