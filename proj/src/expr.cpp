// Recursive-descent parser, minimal-parenthesis printer and jet evaluator
// for the height-function expression grammar (see expr.hpp).

#include "slope_nav/expr.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>

namespace slope_nav::expr {

namespace detail {

struct Node {
    enum class Kind {
        Number, VarX1, VarX2,
        Neg, Add, Sub, Mul, Div, Pow,
        Exp, Sin, Cos, Sqrt, Ln
    };
    Kind kind;
    double value = 0.0;                 // Number only
    std::shared_ptr<const Node> a, b;   // operands (b only for binaries)
};

using NodePtr = std::shared_ptr<const Node>;

namespace {

NodePtr make_number(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Number;
    n->value = v;
    return n;
}

NodePtr make_node(Node::Kind k, NodePtr a, NodePtr b = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

// ---------------------------------------------------------------- lexer --

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret,
                      LParen, RParen, Comma, End };
    Kind kind = Kind::End;
    std::size_t offset = 0;
    std::string_view text;
    double value = 0.0;  // Number only
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < src_.size() &&
               std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        tok_ = Token{};
        tok_.offset = pos_;
        if (pos_ >= src_.size()) {
            tok_.kind = Token::Kind::End;
            return;
        }
        const char c = src_[pos_];
        switch (c) {
            case '+': single(Token::Kind::Plus); return;
            case '-': single(Token::Kind::Minus); return;
            case '*': single(Token::Kind::Star); return;
            case '/': single(Token::Kind::Slash); return;
            case '^': single(Token::Kind::Caret); return;
            case '(': single(Token::Kind::LParen); return;
            case ')': single(Token::Kind::RParen); return;
            case ',': single(Token::Kind::Comma); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t end = pos_;
            while (end < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[end])) ||
                    src_[end] == '_')) {
                ++end;
            }
            tok_.kind = Token::Kind::Ident;
            tok_.text = src_.substr(pos_, end - pos_);
            pos_ = end;
            return;
        }
        throw ParseError("syntax error: unexpected character '" +
                             std::string(1, c) + "' at offset " +
                             std::to_string(pos_),
                         pos_);
    }

    void single(Token::Kind k) {
        tok_.kind = k;
        tok_.text = src_.substr(pos_, 1);
        ++pos_;
    }

    void lex_number() {
        const std::size_t start = pos_;
        std::size_t end = pos_;
        bool any_digit = false;
        while (end < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[end]))) {
            ++end;
            any_digit = true;
        }
        if (end < src_.size() && src_[end] == '.') {
            ++end;
            while (end < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[end]))) {
                ++end;
                any_digit = true;
            }
        }
        if (!any_digit) {
            throw ParseError("syntax error: malformed number at offset " +
                                 std::to_string(start),
                             start);
        }
        if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
            std::size_t exp_end = end + 1;
            if (exp_end < src_.size() &&
                (src_[exp_end] == '+' || src_[exp_end] == '-')) {
                ++exp_end;
            }
            std::size_t digits = exp_end;
            while (digits < src_.size() &&
                   std::isdigit(static_cast<unsigned char>(src_[digits]))) {
                ++digits;
            }
            if (digits > exp_end) end = digits;  // else: 'e' is not ours
        }
        double v = 0.0;
        const char* first = src_.data() + start;
        const char* last = src_.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last) {
            throw ParseError("syntax error: malformed number at offset " +
                                 std::to_string(start),
                             start);
        }
        tok_.kind = Token::Kind::Number;
        tok_.text = src_.substr(start, end - start);
        tok_.value = v;
        pos_ = end;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token tok_;
};

// --------------------------------------------------------------- parser --
//
//   expr    := term  (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          (right-associative)
//   primary := Number | x1 | x2 | func '(' expr ')' | '(' expr ')'

class Parser {
  public:
    explicit Parser(std::string_view src) : lex_(src) {}

    NodePtr parse_all() {
        NodePtr e = parse_expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::Kind::End) {
            throw ParseError("syntax error: unexpected '" +
                                 std::string(t.text) + "' at offset " +
                                 std::to_string(t.offset),
                             t.offset);
        }
        return e;
    }

  private:
    [[noreturn]] static void unexpected(const Token& t) {
        const std::string what =
            t.kind == Token::Kind::End
                ? "syntax error: unexpected end of input at offset " +
                      std::to_string(t.offset)
                : "syntax error: unexpected '" + std::string(t.text) +
                      "' at offset " + std::to_string(t.offset);
        throw ParseError(what, t.offset);
    }

    NodePtr parse_expr() {
        NodePtr e = parse_term();
        while (true) {
            const Token::Kind k = lex_.peek().kind;
            if (k == Token::Kind::Plus) {
                lex_.take();
                e = make_node(Node::Kind::Add, e, parse_term());
            } else if (k == Token::Kind::Minus) {
                lex_.take();
                e = make_node(Node::Kind::Sub, e, parse_term());
            } else {
                return e;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr e = parse_unary();
        while (true) {
            const Token::Kind k = lex_.peek().kind;
            if (k == Token::Kind::Star) {
                lex_.take();
                e = make_node(Node::Kind::Mul, e, parse_unary());
            } else if (k == Token::Kind::Slash) {
                lex_.take();
                e = make_node(Node::Kind::Div, e, parse_unary());
            } else {
                return e;
            }
        }
    }

    NodePtr parse_unary() {
        if (lex_.peek().kind == Token::Kind::Minus) {
            lex_.take();
            return make_node(Node::Kind::Neg, parse_unary());
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (lex_.peek().kind == Token::Kind::Caret) {
            lex_.take();
            // Right operand at unary level: right associativity, and forms
            // like x^-2 parse without parentheses.
            return make_node(Node::Kind::Pow, base, parse_unary());
        }
        return base;
    }

    NodePtr parse_primary() {
        const Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::Number:
                return make_number(t.value);
            case Token::Kind::LParen: {
                NodePtr e = parse_expr();
                expect_rparen(t.offset);
                return e;
            }
            case Token::Kind::Ident:
                return parse_ident(t);
            default:
                unexpected(t);
        }
    }

    NodePtr parse_ident(const Token& t) {
        if (t.text == "x1") return make_node(Node::Kind::VarX1, nullptr);
        if (t.text == "x2") return make_node(Node::Kind::VarX2, nullptr);

        Node::Kind func;
        if (t.text == "exp") func = Node::Kind::Exp;
        else if (t.text == "sin") func = Node::Kind::Sin;
        else if (t.text == "cos") func = Node::Kind::Cos;
        else if (t.text == "sqrt") func = Node::Kind::Sqrt;
        else if (t.text == "ln") func = Node::Kind::Ln;
        else {
            throw ParseError("unknown identifier '" + std::string(t.text) +
                                 "' at offset " + std::to_string(t.offset),
                             t.offset);
        }

        const Token open = lex_.take();
        if (open.kind != Token::Kind::LParen) {
            throw ParseError("syntax error: '" + std::string(t.text) +
                                 "' requires parenthesized argument at offset " +
                                 std::to_string(open.offset),
                             open.offset);
        }
        NodePtr arg = parse_expr();
        if (lex_.peek().kind == Token::Kind::Comma) {
            const Token comma = lex_.peek();
            throw ParseError("arity mismatch: '" + std::string(t.text) +
                                 "' takes exactly one argument (extra argument "
                                 "at offset " +
                                 std::to_string(comma.offset) + ")",
                             comma.offset);
        }
        expect_rparen(open.offset);
        return make_node(func, std::move(arg));
    }

    void expect_rparen(std::size_t open_offset) {
        const Token t = lex_.take();
        if (t.kind != Token::Kind::RParen) {
            if (t.kind == Token::Kind::End) {
                throw ParseError(
                    "syntax error: missing ')' for '(' at offset " +
                        std::to_string(open_offset),
                    t.offset);
            }
            unexpected(t);
        }
    }

    Lexer lex_;
};

// -------------------------------------------------------------- printer --

int precedence(Node::Kind k) {
    switch (k) {
        case Node::Kind::Add:
        case Node::Kind::Sub: return 1;
        case Node::Kind::Mul:
        case Node::Kind::Div: return 2;
        case Node::Kind::Neg: return 3;
        case Node::Kind::Pow: return 4;
        default: return 5;  // atoms and function calls
    }
}

void print_node(const Node& n, std::string& out);

void print_child(const Node& child, bool parens, std::string& out) {
    if (parens) out += '(';
    print_node(child, out);
    if (parens) out += ')';
}

void print_node(const Node& n, std::string& out) {
    const int p = precedence(n.kind);
    switch (n.kind) {
        case Node::Kind::Number: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", n.value);
            out += buf;
            return;
        }
        case Node::Kind::VarX1: out += "x1"; return;
        case Node::Kind::VarX2: out += "x2"; return;
        case Node::Kind::Neg:
            out += '-';
            print_child(*n.a, precedence(n.a->kind) < p, out);
            return;
        case Node::Kind::Add:
        case Node::Kind::Sub:
        case Node::Kind::Mul:
        case Node::Kind::Div:
            // Left-associative: the right child needs parentheses already at
            // equal precedence, the left one only below it.
            print_child(*n.a, precedence(n.a->kind) < p, out);
            out += (n.kind == Node::Kind::Add   ? '+'
                    : n.kind == Node::Kind::Sub ? '-'
                    : n.kind == Node::Kind::Mul ? '*'
                                                : '/');
            print_child(*n.b, precedence(n.b->kind) <= p, out);
            return;
        case Node::Kind::Pow:
            // Right-associative: mirrored parenthesization.
            print_child(*n.a, precedence(n.a->kind) <= p, out);
            out += '^';
            print_child(*n.b, precedence(n.b->kind) < p, out);
            return;
        case Node::Kind::Exp: out += "exp"; break;
        case Node::Kind::Sin: out += "sin"; break;
        case Node::Kind::Cos: out += "cos"; break;
        case Node::Kind::Sqrt: out += "sqrt"; break;
        case Node::Kind::Ln: out += "ln"; break;
    }
    out += '(';
    print_node(*n.a, out);
    out += ')';
}

std::string print_tree(const Node& n) {
    std::string out;
    print_node(n, out);
    return out;
}

// ------------------------------------------------------------ evaluator --

bool is_integral(double v) {
    return v == static_cast<long long>(v) && v >= -1e9 && v <= 1e9;
}

Jet2 eval_node(const Node& n, const Jet2& jx1, const Jet2& jx2) {
    // Wrap numeric domain failures with the innermost offending
    // sub-expression; already-wrapped errors pass through untouched.
    auto guarded = [&n](auto&& fn) -> Jet2 {
        try {
            return fn();
        } catch (const std::domain_error& e) {
            throw EvalDomainError(std::string("domain error: ") + e.what() +
                                      " in '" + print_tree(n) + "'",
                                  print_tree(n));
        }
    };

    switch (n.kind) {
        case Node::Kind::Number: return Jet2::constant(n.value);
        case Node::Kind::VarX1: return jx1;
        case Node::Kind::VarX2: return jx2;
        case Node::Kind::Neg: return -eval_node(*n.a, jx1, jx2);
        case Node::Kind::Add:
            return eval_node(*n.a, jx1, jx2) + eval_node(*n.b, jx1, jx2);
        case Node::Kind::Sub:
            return eval_node(*n.a, jx1, jx2) - eval_node(*n.b, jx1, jx2);
        case Node::Kind::Mul:
            return eval_node(*n.a, jx1, jx2) * eval_node(*n.b, jx1, jx2);
        case Node::Kind::Div: {
            const Jet2 u = eval_node(*n.a, jx1, jx2);
            const Jet2 w = eval_node(*n.b, jx1, jx2);
            return guarded([&] { return u / w; });
        }
        case Node::Kind::Pow: {
            const Jet2 base = eval_node(*n.a, jx1, jx2);
            if (n.b->kind == Node::Kind::Number) {
                const double e = n.b->value;
                if (is_integral(e)) {
                    return guarded([&] {
                        return pow_int(base, static_cast<long long>(e));
                    });
                }
                return guarded([&] { return pow_real(base, e); });
            }
            const Jet2 e = eval_node(*n.b, jx1, jx2);
            return guarded([&] { return pow(base, e); });
        }
        case Node::Kind::Exp: return exp(eval_node(*n.a, jx1, jx2));
        case Node::Kind::Sin: return sin(eval_node(*n.a, jx1, jx2));
        case Node::Kind::Cos: return cos(eval_node(*n.a, jx1, jx2));
        case Node::Kind::Sqrt: {
            const Jet2 u = eval_node(*n.a, jx1, jx2);
            return guarded([&] { return sqrt(u); });
        }
        case Node::Kind::Ln: {
            const Jet2 u = eval_node(*n.a, jx1, jx2);
            return guarded([&] { return log(u); });
        }
    }
    throw std::logic_error("unreachable expression node kind");
}

bool same_tree(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Node::Kind::Number) return a.value == b.value;
    if (a.a && (!b.a || !same_tree(*a.a, *b.a))) return false;
    if (!a.a && b.a) return false;
    if (a.b && (!b.b || !same_tree(*a.b, *b.b))) return false;
    if (!a.b && b.b) return false;
    return true;
}

}  // namespace
}  // namespace detail

Expression::Expression(std::shared_ptr<const detail::Node> root)
    : root_(std::move(root)) {}

Expression Expression::parse(std::string_view source) {
    detail::Parser parser(source);
    return Expression(parser.parse_all());
}

Jet2 Expression::eval_jet2(double x1, double x2) const {
    return detail::eval_node(*root_, Jet2::var_x1(x1), Jet2::var_x2(x2));
}

std::string Expression::to_string() const {
    return detail::print_tree(*root_);
}

bool operator==(const Expression& a, const Expression& b) {
    return detail::same_tree(*a.root_, *b.root_);
}

}  // namespace slope_nav::expr
