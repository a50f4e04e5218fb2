#include "forge/text.hpp"

#include <cctype>
#include <memory>

namespace forge {
namespace {

struct Node {
    enum Kind { kNum, kImag, kVar, kAdd, kSub, kNeg, kMul, kDiv, kPow } kind;
    mpq_class num;
    std::string name;
    std::unique_ptr<Node> a, b;
    int exp = 0;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr make(Node::Kind k) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    return n;
}

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    char get() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_++] : '\0';
    }
    void expect(char c) {
        char g = get();
        if (g != c)
            throw ParseError(std::string("expected '") + c + "', got '" + g + "' at offset " +
                             std::to_string(pos_));
    }
    bool at_end() { return peek() == '\0'; }

    std::string read_name() {
        skip_ws();
        std::string out;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            out += s_[pos_++];
        if (out.empty()) throw ParseError("expected identifier at offset " + std::to_string(pos_));
        return out;
    }

    mpz_class read_integer() {
        skip_ws();
        std::string out;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) out += s_[pos_++];
        if (out.empty()) throw ParseError("expected integer at offset " + std::to_string(pos_));
        return mpz_class(out);
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    const std::string& s_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& s) : lex_(s) {}

    NodePtr parse() {
        NodePtr n = sum();
        if (!lex_.at_end()) throw ParseError("trailing input after expression");
        return n;
    }

private:
    NodePtr sum() {
        NodePtr n;
        if (lex_.peek() == '-') {
            lex_.get();
            n = make(Node::kNeg);
            n->a = product();
        } else {
            n = product();
        }
        while (lex_.peek() == '+' || lex_.peek() == '-') {
            char op = lex_.get();
            auto parent = make(op == '+' ? Node::kAdd : Node::kSub);
            parent->a = std::move(n);
            parent->b = product();
            n = std::move(parent);
        }
        return n;
    }

    NodePtr product() {
        NodePtr n = power();
        while (lex_.peek() == '*' || lex_.peek() == '/') {
            char op = lex_.get();
            auto parent = make(op == '*' ? Node::kMul : Node::kDiv);
            parent->a = std::move(n);
            parent->b = power();
            n = std::move(parent);
        }
        return n;
    }

    NodePtr power() {
        NodePtr base = primary();
        if (lex_.peek() == '^') {
            lex_.get();
            auto parent = make(Node::kPow);
            parent->a = std::move(base);
            parent->exp = static_cast<int>(lex_.read_integer().get_si());
            return parent;
        }
        return base;
    }

    NodePtr primary() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.get();
            NodePtr inner = sum();
            lex_.expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto n = make(Node::kNum);
            n->num = mpq_class(lex_.read_integer());
            return n;
        }
        std::string name = lex_.read_name();
        if (name == "i") return make(Node::kImag);
        auto n = make(Node::kVar);
        n->name = name;
        return n;
    }

    Lexer lex_;
};

// Collects b as a flat list of (base, exp) when it is syntactically a product
// of powers; used to keep denominators factored on re-parse.
void collect_factors(const Node* n, int outer_exp, std::vector<std::pair<const Node*, int>>& out) {
    switch (n->kind) {
        case Node::kMul:
            collect_factors(n->a.get(), outer_exp, out);
            collect_factors(n->b.get(), outer_exp, out);
            return;
        case Node::kPow:
            collect_factors(n->a.get(), outer_exp * n->exp, out);
            return;
        default:
            out.push_back({n, outer_exp});
            return;
    }
}

RationalFn eval(const Node* n, const ChartPtr& chart) {
    switch (n->kind) {
        case Node::kNum:
            return RationalFn::constant(chart, Scalar(n->num, mpq_class(0)));
        case Node::kImag:
            return RationalFn::constant(chart, Scalar::i());
        case Node::kVar:
            return RationalFn::var(chart, n->name);
        case Node::kAdd:
            return eval(n->a.get(), chart) + eval(n->b.get(), chart);
        case Node::kSub:
            return eval(n->a.get(), chart) - eval(n->b.get(), chart);
        case Node::kNeg:
            return -eval(n->a.get(), chart);
        case Node::kMul:
            return eval(n->a.get(), chart) * eval(n->b.get(), chart);
        case Node::kPow:
            return eval(n->a.get(), chart).pow(n->exp);
        case Node::kDiv: {
            RationalFn lhs = eval(n->a.get(), chart);
            std::vector<std::pair<const Node*, int>> factors;
            collect_factors(n->b.get(), 1, factors);
            bool structured = true;
            std::vector<std::pair<Poly, int>> polys;
            for (auto& [fn, e] : factors) {
                RationalFn f = eval(fn, chart);
                if (!f.is_polynomial() || e < 0) {
                    structured = false;
                    break;
                }
                polys.push_back({f.num(), e});
            }
            if (structured) {
                for (auto& [p, e] : polys) lhs = lhs.div_factor(p, e);
                return lhs;
            }
            return lhs / eval(n->b.get(), chart);
        }
    }
    throw ParseError("corrupt expression tree");
}

}  // namespace

RationalFn parse_rational_fn(const std::string& text, const ChartPtr& chart) {
    Parser p(text);
    NodePtr root = p.parse();
    return eval(root.get(), chart);
}

Poly parse_poly(const std::string& text, const ChartPtr& chart) {
    RationalFn f = parse_rational_fn(text, chart);
    if (!f.is_polynomial()) throw ParseError("expected polynomial, got rational function");
    return f.num();
}

}  // namespace forge
