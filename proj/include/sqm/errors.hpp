#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sqm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Syntax error while parsing an expression string.
struct ParseError : Error {
    ParseError(std::size_t byte_offset, const std::string& what)
        : Error("parse error at byte " + std::to_string(byte_offset) + ": " + what),
          offset(byte_offset) {}
    std::size_t offset;
};

/// Evaluation hit a function outside its domain (log/sqrt of a negative,
/// division by zero, ...). `subexpr` names the offending subexpression.
struct EvalError : Error {
    EvalError(const std::string& what, std::string offending = {})
        : Error(offending.empty() ? what : what + " in '" + offending + "'"),
          subexpr(std::move(offending)) {}
    std::string subexpr;
};

/// One or more variable references do not resolve to s1, s2 or a declared
/// parameter. All offenders are collected before reporting.
struct SymbolError : Error {
    explicit SymbolError(std::vector<std::string> names)
        : Error(format(names)), symbols(std::move(names)) {}
    std::vector<std::string> symbols;

private:
    static std::string format(const std::vector<std::string>& names) {
        std::string s = "undeclared symbol(s):";
        for (const auto& n : names) s += " " + n;
        return s;
    }
};

struct GeometryError : Error {
    using Error::Error;
};

struct AssembleError : Error {
    using Error::Error;
};

struct SolverError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace sqm
