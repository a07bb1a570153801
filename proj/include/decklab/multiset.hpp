#pragma once

#include "decklab/groupoid.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace decklab {

/// A finite multiset over {0..order-1}, stored as its multiplicity function.
class Multiset
{
public:
    Multiset() = default;

    /// Empty multiset over a carrier of the given order.
    explicit Multiset(int order) : counts_(order, 0) {}

    /// Throws `OutOfRange` on an element outside the carrier.
    static Multiset from_elements(int order, std::span<const Element> elems);
    static Multiset from_elements(int order, std::initializer_list<Element> elems)
    {
        return from_elements(order, std::span<const Element>(elems.begin(), elems.size()));
    }
    static Multiset from_counts(std::vector<int> counts);

    int order() const noexcept { return static_cast<int>(counts_.size()); }
    int count(Element x) const noexcept { return counts_[x]; }
    const std::vector<int>& counts() const noexcept { return counts_; }

    /// |M|, the sum of multiplicities.
    int cardinality() const noexcept;

    /// Nondecreasing listing; the canonical realizing tuple.
    std::vector<Element> elements() const;

    void insert(Element x, int times = 1) { counts_[x] += times; }

    /// Sub-multiset relation.
    bool is_subset_of(const Multiset& other) const;

    bool operator==(const Multiset&) const = default;
    /// Colexicographic order on count vectors.
    std::strong_ordering operator<=>(const Multiset& other) const;

private:
    std::vector<int> counts_;
};

/// Pointwise +, max(a - b, 0), and min. Throw `OrderMismatch`.
Multiset multiset_sum(const Multiset& a, const Multiset& b);
Multiset multiset_difference(const Multiset& a, const Multiset& b);
Multiset multiset_intersection(const Multiset& a, const Multiset& b);

/// "<0,0,1,1>".
std::string to_string(const Multiset& m);

/// Parses "<e1,e2,...>" (any order, whitespace allowed). Throws `ParseError`
/// or `OutOfRange`.
Multiset parse_multiset(std::string_view text, int order);

/// C(n, k) in 64 bits.
std::uint64_t binomial(int n, int k);

/// Number of n-multisets over a carrier of the given order.
std::uint64_t multiset_count(int order, int n);

/// Visits every n-multiset in colexicographic order of count vectors.
void for_each_multiset(int order, int n,
                       const std::function<void(const Multiset&)>& visit);

/// All n-multisets in colexicographic order. Throws
/// `EnumerationCapExceeded` if there are more than `cap`.
std::vector<Multiset> all_multisets(int order, int n, std::uint64_t cap);

} // namespace decklab
