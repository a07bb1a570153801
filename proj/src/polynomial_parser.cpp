#include "decklab/polynomial_parser.hpp"

#include "decklab/errors.hpp"

#include <cctype>
#include <memory>
#include <string>
#include <vector>

namespace decklab {

namespace {

struct Node
{
    enum Kind { Constant, Variable, Add, Sub, Mul, Neg, Pow } kind;
    Element value = 0; // constant, variable index (0-based), or exponent
    std::unique_ptr<Node> lhs;
    std::unique_ptr<Node> rhs;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr leaf(Node::Kind k, Element v)
{
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->value = v;
    return n;
}

NodePtr branch(Node::Kind k, NodePtr l, NodePtr r)
{
    auto n = std::make_unique<Node>();
    n->kind = k;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

class Parser
{
public:
    Parser(std::string_view text, const FiniteField& field) : text_(text), field_(field) {}

    NodePtr parse()
    {
        NodePtr e = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected character");
        return e;
    }

    int max_variable() const { return max_var_; }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(what, 1, pos_ + 1);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    long long number()
    {
        skip();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > 1'000'000'000)
                fail("number too large");
            ++pos_;
        }
        return v;
    }

    NodePtr expr()
    {
        NodePtr e = term();
        for (;;) {
            if (eat('+'))
                e = branch(Node::Add, std::move(e), term());
            else if (eat('-'))
                e = branch(Node::Sub, std::move(e), term());
            else
                return e;
        }
    }

    NodePtr term()
    {
        NodePtr e = unary();
        while (eat('*'))
            e = branch(Node::Mul, std::move(e), unary());
        return e;
    }

    NodePtr unary()
    {
        if (eat('-'))
            return branch(Node::Neg, unary(), nullptr);
        return power();
    }

    NodePtr power()
    {
        NodePtr base = atom();
        if (eat('^')) {
            auto n = branch(Node::Pow, std::move(base), nullptr);
            n->value = static_cast<Element>(number());
            return n;
        }
        return base;
    }

    NodePtr atom()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!eat(')'))
                fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return leaf(Node::Constant, field_.from_integer(number()));
        if (c == 'x') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected a variable index");
            const long long i = number();
            if (i < 1)
                fail("variables are numbered from 1");
            max_var_ = std::max(max_var_, static_cast<int>(i));
            return leaf(Node::Variable, static_cast<Element>(i - 1));
        }
        if (c == 'w') {
            ++pos_;
            return leaf(Node::Constant, field_.generator());
        }
        fail("unexpected character");
    }

    std::string_view text_;
    const FiniteField& field_;
    std::size_t pos_ = 0;
    int max_var_ = 0;
};

Element evaluate(const Node& n, const FiniteField& f, std::span<const int> x)
{
    switch (n.kind) {
    case Node::Constant:
        return n.value;
    case Node::Variable:
        return x[n.value];
    case Node::Add:
        return f.add(evaluate(*n.lhs, f, x), evaluate(*n.rhs, f, x));
    case Node::Sub:
        return f.sub(evaluate(*n.lhs, f, x), evaluate(*n.rhs, f, x));
    case Node::Mul:
        return f.mul(evaluate(*n.lhs, f, x), evaluate(*n.rhs, f, x));
    case Node::Neg:
        return f.neg(evaluate(*n.lhs, f, x));
    case Node::Pow:
        return f.pow(evaluate(*n.lhs, f, x), n.value);
    }
    return 0;
}

} // namespace

FiniteFunction compile_polynomial(std::string_view text, const FiniteField& field, int arity)
{
    Parser p(text, field);
    const NodePtr root = p.parse();
    if (arity <= 0)
        arity = p.max_variable();
    if (p.max_variable() > arity)
        throw ParseError("variable x" + std::to_string(p.max_variable()) + " exceeds arity " +
                             std::to_string(arity),
                         1, 1);
    if (arity > kDefaultArityCap + 1)
        throw ArityCapExceeded("polynomial arity " + std::to_string(arity) + " is too large");
    const int q = field.q();
    return FiniteFunction::tabulate(q, q, arity,
                                    [&](std::span<const int> x) { return evaluate(*root, field, x); });
}

} // namespace decklab
