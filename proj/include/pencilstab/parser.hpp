#pragma once

#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pencilstab/homform.hpp"

namespace pencilstab {

/// Syntax or evaluation error, carrying the byte offset for syntax errors.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, size_t offset)
        : std::runtime_error(std::move(msg)), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Expression tree for polynomial input.
//
// Grammar (whitespace ignored, '*' mandatory, exponents are unsigned ints):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' uint)?
//   base   := rational | var | param | '(' expr ')' | '-' base
struct ExprNode;
using ExprAST = std::unique_ptr<ExprNode>;

struct ExprNode {
    struct Literal { Rational value; };
    struct Variable { int index; };  // 0=x, 1=y, 2=z
    struct Parameter { char name; };
    struct Negate { ExprAST arg; };
    struct Sum { ExprAST lhs, rhs; };
    struct Difference { ExprAST lhs, rhs; };
    struct Product { ExprAST lhs, rhs; };
    struct Power { ExprAST base; unsigned exponent; };

    std::variant<Literal, Variable, Parameter, Negate, Sum, Difference, Product, Power> node;
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprAST run() {
        ExprAST e = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("syntax error at offset " + std::to_string(pos_), pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at offset " + std::to_string(pos_), pos_);
    }

    ExprAST make(ExprNode&& n) { return std::make_unique<ExprNode>(std::move(n)); }

    ExprAST expr() {
        ExprAST lhs = term();
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                ExprAST rhs = term();
                if (c == '+')
                    lhs = make({ExprNode::Sum{std::move(lhs), std::move(rhs)}});
                else
                    lhs = make({ExprNode::Difference{std::move(lhs), std::move(rhs)}});
            } else {
                return lhs;
            }
        }
    }

    ExprAST term() {
        ExprAST lhs = factor();
        while (peek() == '*') {
            ++pos_;
            ExprAST rhs = factor();
            lhs = make({ExprNode::Product{std::move(lhs), std::move(rhs)}});
        }
        return lhs;
    }

    ExprAST factor() {
        ExprAST b = base();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("syntax error: expected unsigned exponent");
            unsigned e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                e = e * 10 + static_cast<unsigned>(text_[pos_++] - '0');
            return make({ExprNode::Power{std::move(b), e}});
        }
        return b;
    }

    ExprAST base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            ExprAST inner = expr();
            if (peek() != ')') fail("syntax error: expected ')'");
            ++pos_;
            return inner;
        }
        if (c == '-') {
            ++pos_;
            return make({ExprNode::Negate{base()}});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos_;
            if (c == 'x') return make({ExprNode::Variable{0}});
            if (c == 'y') return make({ExprNode::Variable{1}});
            if (c == 'z') return make({ExprNode::Variable{2}});
            return make({ExprNode::Parameter{c}});
        }
        if (c == '\0') fail("syntax error: unexpected end of input");
        fail(std::string("unknown character '") + c + "'");
    }

    ExprAST rational_literal() {
        skip_ws();
        Int n = read_uint();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            size_t slash = pos_;
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                pos_ = slash;
                fail("syntax error: expected denominator");
            }
            Int d = read_uint();
            if (d == 0) fail("zero denominator");
            return make({ExprNode::Literal{Rational(n, d)}});
        }
        return make({ExprNode::Literal{Rational(n)}});
    }

    Int read_uint() {
        Int v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    std::string_view text_;
    size_t pos_ = 0;
};

/// Sparse trivariate polynomial, the intermediate representation during
/// evaluation (sums of mixed degree are legal until the final check).
using TriPoly = std::map<std::array<int, 3>, Rational>;

inline TriPoly tri_add(const TriPoly& a, const TriPoly& b, int sign) {
    TriPoly out = a;
    for (const auto& [m, v] : b) {
        out[m] += sign * v;
        if (out[m] == 0) out.erase(m);
    }
    return out;
}

inline TriPoly tri_mul(const TriPoly& a, const TriPoly& b) {
    TriPoly out;
    for (const auto& [ma, va] : a)
        for (const auto& [mb, vb] : b) {
            std::array<int, 3> m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
            out[m] += va * vb;
            if (out[m] == 0) out.erase(m);
        }
    return out;
}

inline TriPoly tri_eval(const ExprNode& node, const std::map<char, Rational>& bindings) {
    using N = ExprNode;
    return std::visit(
        [&](const auto& n) -> TriPoly {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, N::Literal>) {
                TriPoly p;
                if (n.value != 0) p[{0, 0, 0}] = n.value;
                return p;
            } else if constexpr (std::is_same_v<T, N::Variable>) {
                TriPoly p;
                std::array<int, 3> m{0, 0, 0};
                m[n.index] = 1;
                p[m] = 1;
                return p;
            } else if constexpr (std::is_same_v<T, N::Parameter>) {
                auto it = bindings.find(n.name);
                if (it == bindings.end())
                    throw EvalError(std::string("unbound parameter ") + n.name);
                TriPoly p;
                if (it->second != 0) p[{0, 0, 0}] = it->second;
                return p;
            } else if constexpr (std::is_same_v<T, N::Negate>) {
                TriPoly p = tri_eval(*n.arg, bindings);
                for (auto& [m, v] : p) v = -v;
                return p;
            } else if constexpr (std::is_same_v<T, N::Sum>) {
                return tri_add(tri_eval(*n.lhs, bindings), tri_eval(*n.rhs, bindings), 1);
            } else if constexpr (std::is_same_v<T, N::Difference>) {
                return tri_add(tri_eval(*n.lhs, bindings), tri_eval(*n.rhs, bindings), -1);
            } else if constexpr (std::is_same_v<T, N::Product>) {
                return tri_mul(tri_eval(*n.lhs, bindings), tri_eval(*n.rhs, bindings));
            } else {
                static_assert(std::is_same_v<T, N::Power>);
                TriPoly acc;
                acc[{0, 0, 0}] = 1;
                TriPoly b = tri_eval(*n.base, bindings);
                for (unsigned k = 0; k < n.exponent; ++k) acc = tri_mul(acc, b);
                return acc;
            }
        },
        node.node);
}

}  // namespace detail

inline ExprAST parse(std::string_view text) { return detail::Parser(text).run(); }

/// Expand the tree to a homogeneous form of the expected degree. The zero
/// polynomial is accepted at any expected degree; mixed-degree survivors and
/// wrong total degree are rejected.
inline HomForm evaluate(const ExprNode& ast, const std::map<char, Rational>& bindings,
                        int expected_degree) {
    detail::TriPoly p = detail::tri_eval(ast, bindings);
    if (p.empty()) return HomForm(expected_degree);
    std::set<int> degrees;
    for (const auto& [m, v] : p) degrees.insert(m[0] + m[1] + m[2]);
    if (degrees.size() > 1) {
        std::ostringstream os;
        os << "inhomogeneous: degree mix {";
        bool first = true;
        for (int d : degrees) {
            if (!first) os << ", ";
            os << d;
            first = false;
        }
        os << "}";
        throw EvalError(os.str());
    }
    int d = *degrees.begin();
    if (d != expected_degree)
        throw EvalError("degree mismatch: got " + std::to_string(d) + ", expected " +
                        std::to_string(expected_degree));
    HomForm out(expected_degree);
    for (const auto& [m, v] : p) out.set(m[0], m[1], v);
    return out;
}

inline HomForm parse_form(std::string_view text, const std::map<char, Rational>& bindings,
                          int expected_degree) {
    ExprAST ast = parse(text);
    return evaluate(*ast, bindings, expected_degree);
}

/// Canonical monomial-sum printout; re-parses to an equal form. A leading
/// negative term keeps its explicit coefficient ("-1*x^6"): under the grammar
/// the exponent binds to the base, so a bare "-x^6" would read as (-x)^6.
inline std::string print_form(const HomForm& f) {
    std::ostringstream os;
    bool first = true;
    for (auto m : f.support()) {
        const Rational& c = f.at(m);
        Rational a = c < 0 ? Rational(-c) : c;
        bool lead_negative = first && c < 0;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        int k = f.degree() - m.i - m.j;
        std::vector<std::string> parts;
        if (a != 1 || lead_negative || (m.i == 0 && m.j == 0 && k == 0))
            parts.push_back(to_string(a));
        auto var = [&](const char* v, int e) {
            if (e == 1) parts.push_back(v);
            else if (e > 1) parts.push_back(std::string(v) + "^" + std::to_string(e));
        };
        var("x", m.i);
        var("y", m.j);
        var("z", k);
        for (size_t t = 0; t < parts.size(); ++t) {
            if (t) os << "*";
            os << parts[t];
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace pencilstab
