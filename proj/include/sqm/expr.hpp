#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "sqm/jet.hpp"

namespace sqm {

enum class ExprKind { Number, Variable, Unary, Binary, Call };

enum class FnId { Sin, Cos, Tan, Sinh, Cosh, Tanh, Exp, Log, Sqrt, Abs, Atan2 };

struct ExprNode {
    ExprKind kind;
    double number = 0.0;     // Number
    std::string name;        // Variable / Call
    char op = 0;             // Unary '-' or Binary + - * / ^
    FnId fn = FnId::Sin;     // Call
    std::vector<std::shared_ptr<const ExprNode>> args;
    std::size_t offset = 0;  // byte offset into the source text
};

/// An immutable parsed coordinate expression in the variables s1, s2 and
/// named parameters. Evaluation is pure; sharing across threads is safe.
class Expression {
public:
    Expression() = default;
    explicit Expression(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}

    bool empty() const { return root_ == nullptr; }
    const ExprNode& root() const { return *root_; }

    /// Exact value and first/second partials at (s1, s2) via jet arithmetic.
    Jet2 eval_jet2(double s1, double s2, const std::map<std::string, double>& params) const;

    /// Re-serialization; parses back to a structurally identical AST.
    std::string serialize() const;

    /// Succeeds iff every variable is s1, s2 or in `declared`; collects all
    /// offenders into a single SymbolError.
    void validate_symbols(const std::set<std::string>& declared) const;

    bool equals(const Expression& other) const;

private:
    std::shared_ptr<const ExprNode> root_;
};

/// Parse the conventional infix grammar: ^ right-associative, precedence
/// (^, unary -, * /, + -), radians-only functions sin cos tan sinh cosh
/// tanh exp log sqrt abs atan2, constant pi.
Expression parse(const std::string& text);

} // namespace sqm
