#include "decklab/groupoid.hpp"

#include "decklab/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace decklab {

namespace {

std::vector<Element> flatten(const Table& table)
{
    const auto n = table.size();
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (const auto& row : table) {
        if (row.size() != n)
            throw NotSquare("table row has " + std::to_string(row.size()) +
                            " entries, expected " + std::to_string(n));
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

} // namespace

Groupoid::Groupoid(const Table& table)
  : Groupoid(static_cast<int>(table.size()), flatten(table))
{
}

Groupoid::Groupoid(int order, std::vector<Element> flat)
  : order_(order), flat_(std::move(flat))
{
    if (order_ < 1)
        throw NotSquare("groupoid must have at least one element");
    if (flat_.size() != static_cast<std::size_t>(order_) * order_)
        throw NotSquare("table size does not match order");
    for (int i = 0; i < order_; ++i)
        for (int j = 0; j < order_; ++j) {
            const Element v = add(i, j);
            if (v < 0 || v >= order_)
                throw OutOfRange("entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") = " +
                                 std::to_string(v) + " is not an element");
        }
    for (int i = 0; i < order_; ++i)
        for (int j = i + 1; j < order_; ++j)
            if (add(i, j) != add(j, i))
                throw NotCommutative(i, j);
    profile_ = compute_profile(*this);
}

Table Groupoid::table() const
{
    Table t(order_);
    for (int i = 0; i < order_; ++i)
        t[i].assign(flat_.begin() + i * order_, flat_.begin() + (i + 1) * order_);
    return t;
}

Groupoid make_groupoid(const Table& table) { return Groupoid(table); }

bool pairwise_sum_injective(const Groupoid& g)
{
    const int n = g.order();
    // sum -> the unordered pair that produced it first
    std::vector<std::pair<Element, Element>> seen(n, {-1, -1});
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            const Element s = g.add(a, b);
            if (seen[s].first >= 0)
                return false;
            seen[s] = {a, b};
        }
    return true;
}

GroupoidProfile compute_profile(const Groupoid& g)
{
    const int n = g.order();
    GroupoidProfile p;

    p.associative = true;
    for (int a = 0; a < n && p.associative; ++a)
        for (int b = 0; b < n && p.associative; ++b)
            for (int c = 0; c < n; ++c)
                if (g.add(g.add(a, b), c) != g.add(a, g.add(b, c))) {
                    p.associative = false;
                    break;
                }

    p.left_alternative = true;
    p.right_alternative = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (g.add(x, g.add(x, y)) != g.add(g.add(x, x), y))
                p.left_alternative = false;
            if (g.add(y, g.add(x, x)) != g.add(g.add(y, x), x))
                p.right_alternative = false;
        }

    for (int e = 0; e < n && !p.neutral_element; ++e) {
        bool neutral = true;
        for (int x = 0; x < n && neutral; ++x)
            neutral = g.add(e, x) == x;
        if (neutral)
            p.neutral_element = e;
    }

    // a + b = a + c implies b = c: every row is a permutation.
    p.cancellative = true;
    std::vector<char> hit(n);
    for (int a = 0; a < n && p.cancellative; ++a) {
        std::fill(hit.begin(), hit.end(), 0);
        for (int b = 0; b < n; ++b) {
            if (hit[g.add(a, b)]) {
                p.cancellative = false;
                break;
            }
            hit[g.add(a, b)] = 1;
        }
    }

    p.boolean_group = p.associative && p.neutral_element.has_value();
    for (int x = 0; x < n && p.boolean_group; ++x)
        p.boolean_group = g.add(x, x) == *p.neutral_element;

    p.pairwise_sum_injective = pairwise_sum_injective(g);
    return p;
}

Groupoid cyclic_group(int order)
{
    std::vector<Element> flat(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            flat[a * order + b] = (a + b) % order;
    return Groupoid(order, std::move(flat));
}

Groupoid max_semilattice(int order)
{
    std::vector<Element> flat(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            flat[a * order + b] = std::max(a, b);
    return Groupoid(order, std::move(flat));
}

std::uint64_t commutative_table_count(int order)
{
    std::uint64_t count = 1;
    const int cells = order * (order + 1) / 2;
    for (int i = 0; i < cells; ++i)
        count *= static_cast<std::uint64_t>(order);
    return count;
}

Groupoid commutative_table_at(int order, std::uint64_t index)
{
    const int cells = order * (order + 1) / 2;
    std::vector<Element> upper(cells);
    for (int c = cells - 1; c >= 0; --c) {
        upper[c] = static_cast<Element>(index % order);
        index /= order;
    }
    std::vector<Element> flat(static_cast<std::size_t>(order) * order);
    int c = 0;
    for (int i = 0; i < order; ++i)
        for (int j = i; j < order; ++j, ++c) {
            flat[i * order + j] = upper[c];
            flat[j * order + i] = upper[c];
        }
    return Groupoid(order, std::move(flat));
}

std::vector<Element> canonical_relabeling(const Groupoid& g)
{
    const int n = g.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Element> best(g.flat().begin(), g.flat().end());
    std::vector<Element> cand(best.size());
    std::vector<int> inv(n);
    do {
        // relabel element x as perm[x]
        for (int x = 0; x < n; ++x)
            inv[perm[x]] = x;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                cand[i * n + j] = perm[g.add(inv[i], inv[j])];
        if (cand < best)
            best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

} // namespace decklab
