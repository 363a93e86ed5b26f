#include "sqm/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <optional>

namespace sqm {

namespace {

struct FnInfo {
    const char* name;
    FnId id;
    int arity;
};

constexpr FnInfo kFunctions[] = {
    {"sin", FnId::Sin, 1},   {"cos", FnId::Cos, 1},   {"tan", FnId::Tan, 1},
    {"sinh", FnId::Sinh, 1}, {"cosh", FnId::Cosh, 1}, {"tanh", FnId::Tanh, 1},
    {"exp", FnId::Exp, 1},   {"log", FnId::Log, 1},   {"sqrt", FnId::Sqrt, 1},
    {"abs", FnId::Abs, 1},   {"atan2", FnId::Atan2, 2},
};

const FnInfo* find_function(const std::string& name) {
    for (const auto& f : kFunctions)
        if (name == f.name) return &f;
    return nullptr;
}

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    Tok kind;
    std::size_t offset;
    double number = 0.0;
    std::string ident;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        tok_.offset = pos_;
        if (pos_ >= text_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        const char c = text_[pos_];
        switch (c) {
            case '+': tok_.kind = Tok::Plus; ++pos_; return;
            case '-': tok_.kind = Tok::Minus; ++pos_; return;
            case '*': tok_.kind = Tok::Star; ++pos_; return;
            case '/': tok_.kind = Tok::Slash; ++pos_; return;
            case '^': tok_.kind = Tok::Caret; ++pos_; return;
            case '(': tok_.kind = Tok::LParen; ++pos_; return;
            case ')': tok_.kind = Tok::RParen; ++pos_; return;
            case ',': tok_.kind = Tok::Comma; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok_.kind = Tok::Ident;
            tok_.ident = text_.substr(start, pos_ - start);
            return;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    void lex_number() {
        std::size_t end = pos_;
        bool seen_digit = false, seen_dot = false;
        while (end < text_.size()) {
            const char c = text_[end];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                seen_digit = true;
                ++end;
            } else if (c == '.' && !seen_dot) {
                seen_dot = true;
                ++end;
            } else if ((c == 'e' || c == 'E') && seen_digit) {
                std::size_t e = end + 1;
                if (e < text_.size() && (text_[e] == '+' || text_[e] == '-')) ++e;
                if (e < text_.size() && std::isdigit(static_cast<unsigned char>(text_[e]))) {
                    end = e;
                    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
                        ++end;
                }
                break;
            } else {
                break;
            }
        }
        if (!seen_digit) throw ParseError(pos_, "malformed number");
        double value = 0.0;
        const auto res = std::from_chars(text_.data() + pos_, text_.data() + end, value);
        if (res.ec != std::errc{}) throw ParseError(pos_, "malformed number");
        tok_.kind = Tok::Number;
        tok_.number = value;
        pos_ = end;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token tok_;
};

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_number(double v, std::size_t off) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Number;
    n->number = v;
    n->offset = off;
    return n;
}

NodePtr make_variable(std::string name, std::size_t off) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Variable;
    n->name = std::move(name);
    n->offset = off;
    return n;
}

NodePtr make_unary(NodePtr arg, std::size_t off) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Unary;
    n->op = '-';
    n->args.push_back(std::move(arg));
    n->offset = off;
    return n;
}

NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs, std::size_t off) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Binary;
    n->op = op;
    n->args.push_back(std::move(lhs));
    n->args.push_back(std::move(rhs));
    n->offset = off;
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) {}

    NodePtr parse_full() {
        NodePtr e = parse_sum();
        const Token& t = lexer_.peek();
        if (t.kind != Tok::End)
            throw ParseError(t.offset, "expected operator or end of input");
        return e;
    }

private:
    NodePtr parse_sum() {
        NodePtr lhs = parse_product();
        for (;;) {
            const Token& t = lexer_.peek();
            if (t.kind == Tok::Plus || t.kind == Tok::Minus) {
                Token op = lexer_.take();
                NodePtr rhs = parse_product();
                lhs = make_binary(op.kind == Tok::Plus ? '+' : '-', std::move(lhs),
                                  std::move(rhs), op.offset);
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_product() {
        NodePtr lhs = parse_unary();
        for (;;) {
            const Token& t = lexer_.peek();
            if (t.kind == Tok::Star || t.kind == Tok::Slash) {
                Token op = lexer_.take();
                NodePtr rhs = parse_unary();
                lhs = make_binary(op.kind == Tok::Star ? '*' : '/', std::move(lhs),
                                  std::move(rhs), op.offset);
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_unary() {
        const Token& t = lexer_.peek();
        if (t.kind == Tok::Minus) {
            Token op = lexer_.take();
            return make_unary(parse_unary(), op.offset);
        }
        return parse_power();
    }

    // ^ binds tighter than unary minus and is right-associative:
    // -a^b = -(a^b), a^b^c = a^(b^c), a^-b allowed.
    NodePtr parse_power() {
        NodePtr base = parse_primary();
        const Token& t = lexer_.peek();
        if (t.kind == Tok::Caret) {
            Token op = lexer_.take();
            NodePtr expo = parse_unary();
            return make_binary('^', std::move(base), std::move(expo), op.offset);
        }
        return base;
    }

    NodePtr parse_primary() {
        Token t = lexer_.take();
        switch (t.kind) {
            case Tok::Number:
                return make_number(t.number, t.offset);
            case Tok::LParen: {
                NodePtr e = parse_sum();
                expect(Tok::RParen, "')'");
                return e;
            }
            case Tok::Ident: {
                if (lexer_.peek().kind == Tok::LParen) return parse_call(t);
                if (t.ident == "pi") return make_number(std::numbers::pi, t.offset);
                return make_variable(t.ident, t.offset);
            }
            default:
                throw ParseError(t.offset, "expected number, variable, function call or '('");
        }
    }

    NodePtr parse_call(const Token& name) {
        const FnInfo* fn = find_function(name.ident);
        if (!fn) throw ParseError(name.offset, "unknown function '" + name.ident + "'");
        expect(Tok::LParen, "'('");
        std::vector<NodePtr> args;
        args.push_back(parse_sum());
        while (lexer_.peek().kind == Tok::Comma) {
            lexer_.take();
            args.push_back(parse_sum());
        }
        expect(Tok::RParen, "')'");
        if (static_cast<int>(args.size()) != fn->arity)
            throw ParseError(name.offset, "function '" + name.ident + "' takes " +
                                              std::to_string(fn->arity) + " argument(s), got " +
                                              std::to_string(args.size()));
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprKind::Call;
        n->name = name.ident;
        n->fn = fn->id;
        n->args = std::move(args);
        n->offset = name.offset;
        return n;
    }

    void expect(Tok kind, const char* what) {
        const Token& t = lexer_.peek();
        if (t.kind != kind) throw ParseError(t.offset, std::string("expected ") + what);
        lexer_.take();
    }

    Lexer lexer_;
};

void serialize_node(const ExprNode& n, std::string& out) {
    switch (n.kind) {
        case ExprKind::Number: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", n.number);
            out += buf;
            break;
        }
        case ExprKind::Variable:
            out += n.name;
            break;
        case ExprKind::Unary:
            out += "(-";
            serialize_node(*n.args[0], out);
            out += ")";
            break;
        case ExprKind::Binary:
            out += "(";
            serialize_node(*n.args[0], out);
            out += n.op;
            serialize_node(*n.args[1], out);
            out += ")";
            break;
        case ExprKind::Call:
            out += n.name;
            out += "(";
            for (std::size_t i = 0; i < n.args.size(); ++i) {
                if (i) out += ",";
                serialize_node(*n.args[i], out);
            }
            out += ")";
            break;
    }
}

struct EvalContext {
    Jet2 s1, s2;
    const std::map<std::string, double>* params;
};

Jet2 eval_node(const ExprNode& n, const EvalContext& ctx);

Jet2 eval_call(const ExprNode& n, const EvalContext& ctx) {
    const Jet2 a = eval_node(*n.args[0], ctx);
    switch (n.fn) {
        case FnId::Sin: return sin(a);
        case FnId::Cos: return cos(a);
        case FnId::Tan: return tan(a);
        case FnId::Sinh: return sinh(a);
        case FnId::Cosh: return cosh(a);
        case FnId::Tanh: return tanh(a);
        case FnId::Exp: return exp(a);
        case FnId::Log: return log(a);
        case FnId::Sqrt: return sqrt(a);
        case FnId::Abs: return abs(a);
        case FnId::Atan2: return atan2(a, eval_node(*n.args[1], ctx));
    }
    throw Error("unreachable function id");
}

Jet2 eval_node(const ExprNode& n, const EvalContext& ctx) {
    try {
        switch (n.kind) {
            case ExprKind::Number:
                return Jet2::constant(n.number);
            case ExprKind::Variable: {
                if (n.name == "s1") return ctx.s1;
                if (n.name == "s2") return ctx.s2;
                const auto it = ctx.params->find(n.name);
                if (it == ctx.params->end())
                    throw EvalError("unbound parameter '" + n.name + "'");
                return Jet2::constant(it->second);
            }
            case ExprKind::Unary:
                return -eval_node(*n.args[0], ctx);
            case ExprKind::Binary: {
                const Jet2 a = eval_node(*n.args[0], ctx);
                const Jet2 b = eval_node(*n.args[1], ctx);
                switch (n.op) {
                    case '+': return a + b;
                    case '-': return a - b;
                    case '*': return a * b;
                    case '/': return a / b;
                    case '^': return pow(a, b);
                }
                throw Error("unreachable binary op");
            }
            case ExprKind::Call:
                return eval_call(n, ctx);
        }
    } catch (const EvalError& e) {
        if (!e.subexpr.empty()) throw;  // already annotated at the innermost frame
        std::string where;
        serialize_node(n, where);
        throw EvalError(e.what(), where);
    }
    throw Error("unreachable expr kind");
}

void collect_symbols(const ExprNode& n, const std::set<std::string>& declared,
                     std::vector<std::string>& missing) {
    if (n.kind == ExprKind::Variable) {
        if (n.name != "s1" && n.name != "s2" && declared.count(n.name) == 0) {
            for (const auto& m : missing)
                if (m == n.name) return;
            missing.push_back(n.name);
        }
        return;
    }
    for (const auto& a : n.args) collect_symbols(*a, declared, missing);
}

bool nodes_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprKind::Number: return a.number == b.number;
        case ExprKind::Variable: return a.name == b.name;
        case ExprKind::Unary: break;
        case ExprKind::Binary:
            if (a.op != b.op) return false;
            break;
        case ExprKind::Call:
            if (a.fn != b.fn) return false;
            break;
    }
    if (a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!nodes_equal(*a.args[i], *b.args[i])) return false;
    return true;
}

} // namespace

Expression parse(const std::string& text) {
    Parser p(text);
    return Expression(p.parse_full());
}

Jet2 Expression::eval_jet2(double s1, double s2,
                           const std::map<std::string, double>& params) const {
    EvalContext ctx{Jet2::var1(s1), Jet2::var2(s2), &params};
    return eval_node(*root_, ctx);
}

std::string Expression::serialize() const {
    std::string out;
    serialize_node(*root_, out);
    return out;
}

void Expression::validate_symbols(const std::set<std::string>& declared) const {
    std::vector<std::string> missing;
    collect_symbols(*root_, declared, missing);
    if (!missing.empty()) throw SymbolError(std::move(missing));
}

bool Expression::equals(const Expression& other) const {
    if (empty() || other.empty()) return empty() == other.empty();
    return nodes_equal(*root_, *other.root_);
}

} // namespace sqm
