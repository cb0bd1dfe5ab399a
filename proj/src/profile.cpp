#include "qi3d/profile.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <vector>

#include "qi3d/errors.hpp"

namespace qi3d {

double Profile::derivative(double s) const {
    if (df_)
        return df_(s);
    if (!f_)
        throw GradientError("Profile: undefined function");
    const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * (1 + std::abs(s));
    return (f_(s + h) - f_(s - h)) / (2 * h);
}

Profile Profile::polynomial(std::vector<double> coeffs) {
    auto val = [coeffs](double s) {
        double acc = 0;
        for (size_t i = coeffs.size(); i-- > 0;) acc = acc * s + coeffs[i];
        return acc;
    };
    auto der = [coeffs](double s) {
        double acc = 0;
        for (size_t i = coeffs.size(); i-- > 1;) acc = acc * s + i * coeffs[i];
        return acc;
    };
    return Profile(val, der);
}

namespace {

/// value/derivative pair propagated through arithmetic (forward-mode)
struct Dual {
    double v = 0, d = 0;
};

inline Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator-(Dual a) { return {-a.v, -a.d}; }
inline Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
inline Dual operator/(Dual a, Dual b) {
    return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}
inline Dual ipow(Dual a, long n) {
    if (n == 0) return {1, 0};
    bool inv = n < 0;
    unsigned long k = inv ? -static_cast<unsigned long>(n) : n;
    Dual r{1, 0}, base = a;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    if (inv) r = Dual{1, 0} / r;
    return r;
}

// Recursive-descent parser for the restricted grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-')? base ('^' int)?
//   base   := number | 's' | '(' expr ')'
struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum Kind { CONST, VAR, ADD, SUB, MUL, DIV, NEG, POW } kind;
    double value = 0;  // CONST
    long exponent = 0;  // POW
    NodePtr a, b;
};

Dual eval(const NodePtr& n, Dual s) {
    switch (n->kind) {
        case Node::CONST: return {n->value, 0};
        case Node::VAR:   return s;
        case Node::ADD:   return eval(n->a, s) + eval(n->b, s);
        case Node::SUB:   return eval(n->a, s) - eval(n->b, s);
        case Node::MUL:   return eval(n->a, s) * eval(n->b, s);
        case Node::DIV:   return eval(n->a, s) / eval(n->b, s);
        case Node::NEG:   return -eval(n->a, s);
        case Node::POW:   return ipow(eval(n->a, s), n->exponent);
    }
    throw ParameterError("Profile: corrupt expression tree");
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing characters");
        return e;
    }

private:
    const std::string& text_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw ParameterError("profile expression '" + text_ + "': " + why);
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            pos_++;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    NodePtr expr() {
        NodePtr left = term();
        for (;;) {
            if (eat('+'))
                left = make(Node::ADD, left, term());
            else if (eat('-'))
                left = make(Node::SUB, left, term());
            else
                return left;
        }
    }
    NodePtr term() {
        NodePtr left = factor();
        for (;;) {
            if (eat('*'))
                left = make(Node::MUL, left, factor());
            else if (eat('/'))
                left = make(Node::DIV, left, factor());
            else
                return left;
        }
    }
    NodePtr factor() {
        if (eat('-')) {
            auto n = std::make_shared<Node>();
            n->kind = Node::NEG;
            n->a = factor();
            return n;
        }
        NodePtr b = base();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                pos_++;
            if (pos_ == start)
                fail("exponent must be an integer");
            long e = std::stol(text_.substr(start, pos_ - start));
            auto n = std::make_shared<Node>();
            n->kind = Node::POW;
            n->exponent = neg ? -e : e;
            n->a = b;
            return n;
        }
        return b;
    }
    NodePtr base() {
        skip_ws();
        if (eat('(')) {
            NodePtr e = expr();
            if (!eat(')'))
                fail("missing ')'");
            return e;
        }
        char c = peek();
        if (c == 's') {
            pos_++;
            auto n = std::make_shared<Node>();
            n->kind = Node::VAR;
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
                    ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
                     (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E'))))
                pos_++;
            auto n = std::make_shared<Node>();
            n->kind = Node::CONST;
            try {
                n->value = std::stod(text_.substr(start, pos_ - start));
            } catch (const std::exception&) {
                fail("bad number");
            }
            return n;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    static NodePtr make(Node::Kind k, NodePtr a, NodePtr b) {
        auto n = std::make_shared<Node>();
        n->kind = k;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }
};

}  // namespace

Profile Profile::parse(const std::string& text) {
    NodePtr root = Parser(text).run();
    return Profile([root](double s) { return eval(root, Dual{s, 1}).v; },
                   [root](double s) { return eval(root, Dual{s, 1}).d; });
}

}  // namespace qi3d
