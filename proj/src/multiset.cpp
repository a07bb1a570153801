#include "decklab/multiset.hpp"

#include "decklab/errors.hpp"

#include <cctype>
#include <numeric>

namespace decklab {

Multiset Multiset::from_elements(int order, std::span<const Element> elems)
{
    Multiset m(order);
    for (Element x : elems) {
        if (x < 0 || x >= order)
            throw OutOfRange("element " + std::to_string(x) +
                             " outside carrier of order " + std::to_string(order));
        ++m.counts_[x];
    }
    return m;
}

Multiset Multiset::from_counts(std::vector<int> counts)
{
    for (int c : counts)
        if (c < 0)
            throw OutOfRange("negative multiplicity");
    Multiset m;
    m.counts_ = std::move(counts);
    return m;
}

int Multiset::cardinality() const noexcept
{
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

std::vector<Element> Multiset::elements() const
{
    std::vector<Element> out;
    for (int x = 0; x < order(); ++x)
        out.insert(out.end(), counts_[x], x);
    return out;
}

bool Multiset::is_subset_of(const Multiset& other) const
{
    if (order() != other.order())
        throw OrderMismatch("multisets over carriers of different order");
    for (int x = 0; x < order(); ++x)
        if (counts_[x] > other.counts_[x])
            return false;
    return true;
}

std::strong_ordering Multiset::operator<=>(const Multiset& other) const
{
    if (auto c = order() <=> other.order(); c != 0)
        return c;
    for (int x = order() - 1; x >= 0; --x)
        if (auto c = counts_[x] <=> other.counts_[x]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

namespace {

template <typename Op>
Multiset pointwise(const Multiset& a, const Multiset& b, Op op)
{
    if (a.order() != b.order())
        throw OrderMismatch("multisets over carriers of different order");
    std::vector<int> c(a.order());
    for (int x = 0; x < a.order(); ++x)
        c[x] = op(a.count(x), b.count(x));
    return Multiset::from_counts(std::move(c));
}

} // namespace

Multiset multiset_sum(const Multiset& a, const Multiset& b)
{
    return pointwise(a, b, [](int x, int y) { return x + y; });
}

Multiset multiset_difference(const Multiset& a, const Multiset& b)
{
    return pointwise(a, b, [](int x, int y) { return std::max(x - y, 0); });
}

Multiset multiset_intersection(const Multiset& a, const Multiset& b)
{
    return pointwise(a, b, [](int x, int y) { return std::min(x, y); });
}

std::string to_string(const Multiset& m)
{
    std::string s = "<";
    bool first = true;
    for (Element x : m.elements()) {
        if (!first)
            s += ",";
        s += std::to_string(x);
        first = false;
    }
    return s + ">";
}

Multiset parse_multiset(std::string_view text, int order)
{
    std::size_t i = 0;
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError("bad multiset: " + msg, 1, i + 1);
    };
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '<')
        throw fail("expected '<'");
    ++i;
    std::vector<Element> elems;
    skip();
    if (i < text.size() && text[i] == '>') {
        ++i;
    } else {
        for (;;) {
            skip();
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw fail("expected element index");
            long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                if (v > 1'000'000)
                    throw fail("element index too large");
                ++i;
            }
            elems.push_back(static_cast<Element>(v));
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == '>') {
                ++i;
                break;
            }
            throw fail("expected ',' or '>'");
        }
    }
    skip();
    if (i != text.size())
        throw fail("trailing characters");
    return Multiset::from_elements(order, elems);
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t multiset_count(int order, int n)
{
    return binomial(order + n - 1, n);
}

namespace {

// Assigns counts from the last element downward; each level iterates its
// count ascending, so the last coordinate varies slowest (colex order).
void colex_fill(std::vector<int>& counts, int index, int remaining,
                const std::function<void(const Multiset&)>& visit)
{
    if (index == 0) {
        counts[0] = remaining;
        visit(Multiset::from_counts(counts));
        return;
    }
    for (int c = 0; c <= remaining; ++c) {
        counts[index] = c;
        colex_fill(counts, index - 1, remaining - c, visit);
    }
    counts[index] = 0;
}

} // namespace

void for_each_multiset(int order, int n,
                       const std::function<void(const Multiset&)>& visit)
{
    if (order < 1 || n < 0)
        return;
    std::vector<int> counts(order, 0);
    colex_fill(counts, order - 1, n, visit);
}

std::vector<Multiset> all_multisets(int order, int n, std::uint64_t cap)
{
    const auto count = multiset_count(order, n);
    if (count > cap)
        throw EnumerationCapExceeded(std::to_string(count) + " multisets of cardinality " +
                                     std::to_string(n) + " exceed cap " +
                                     std::to_string(cap));
    std::vector<Multiset> out;
    out.reserve(count);
    for_each_multiset(order, n, [&](const Multiset& m) { out.push_back(m); });
    return out;
}

} // namespace decklab
