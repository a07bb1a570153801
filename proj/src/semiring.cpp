#include "decklab/semiring.hpp"

#include "decklab/errors.hpp"

#include <algorithm>
#include <string>

namespace decklab {

namespace {

std::string tuple_str(std::initializer_list<int> xs)
{
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
        if (!first)
            s += ", ";
        s += std::to_string(x);
        first = false;
    }
    return s + ")";
}

} // namespace

Table RightSemiring::mul_table() const
{
    const int n = order();
    Table t(n, std::vector<Element>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = mul(a, b);
    return t;
}

RightSemiring make_semiring(const Table& add_table, const Table& mul_table,
                            Element zero, Element one, int ternary_cap)
{
    Groupoid add(add_table);
    const int n = add.order();
    if (n > ternary_cap)
        throw CapExceeded("semiring order " + std::to_string(n) +
                          " exceeds the axiom-check cap " +
                          std::to_string(ternary_cap));
    if (mul_table.size() != static_cast<std::size_t>(n))
        throw NotSquare("multiplication table order differs from addition");
    std::vector<Element> mul;
    mul.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : mul_table) {
        if (row.size() != static_cast<std::size_t>(n))
            throw NotSquare("multiplication table is not square");
        for (Element v : row) {
            if (v < 0 || v >= n)
                throw OutOfRange("multiplication entry " + std::to_string(v) +
                                 " is not an element");
            mul.push_back(v);
        }
    }
    if (zero < 0 || zero >= n || one < 0 || one >= n)
        throw OutOfRange("zero or one is not an element");

    if (!add.profile().associative) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (add.add(add.add(a, b), c) != add.add(a, add.add(b, c)))
                        throw NotAMonoid("associativity of +",
                                         tuple_str({a, b, c}));
    }
    for (int a = 0; a < n; ++a)
        if (add.add(zero, a) != a)
            throw NotAMonoid("0 + a = a", tuple_str({a}));

    auto m = [&](int a, int b) { return mul[a * n + b]; };
    for (int a = 0; a < n; ++a)
        if (m(a, one) != a)
            throw RightIdentityViolation("a * 1 = a", tuple_str({a}));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (m(add.add(a, b), c) != add.add(m(a, c), m(b, c)))
                    throw RightDistributivityViolation(
                        "(a + b) * c = a * c + b * c", tuple_str({a, b, c}));
    for (int a = 0; a < n; ++a)
        if (m(a, zero) != zero)
            throw RightAnnihilationViolation("a * 0 = 0", tuple_str({a}));

    return RightSemiring(std::move(add), std::move(mul), zero, one);
}

RightSemiring chain_lattice(int order)
{
    Table join(order, std::vector<Element>(order));
    Table meet(order, std::vector<Element>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            join[a][b] = std::max(a, b);
            meet[a][b] = std::min(a, b);
        }
    return make_semiring(join, meet, 0, order - 1);
}

} // namespace decklab
