#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace decklab {

/// Groupoid elements are dense indices 0..order-1.
using Element = int;

/// Row-major square table of element indices.
using Table = std::vector<std::vector<Element>>;

/// Properties of a commutative groupoid, each decided by exhaustive loops.
struct GroupoidProfile
{
    bool associative = false;
    bool left_alternative = false;
    bool right_alternative = false;
    std::optional<Element> neutral_element;
    bool cancellative = false;
    bool boolean_group = false;
    bool pairwise_sum_injective = false;

    bool operator==(const GroupoidProfile&) const = default;
};

/// A finite commutative groupoid (G; +) given by its Cayley table.
///
/// Immutable after construction. Commutativity is enforced: an asymmetric
/// table is rejected with `NotCommutative` rather than repaired.
class Groupoid
{
public:
    /// Validates and wraps a square table. Throws `NotSquare`,
    /// `OutOfRange`, or `NotCommutative`.
    explicit Groupoid(const Table& table);

    /// Flat row-major form; same checks as above.
    Groupoid(int order, std::vector<Element> flat);

    int order() const noexcept { return order_; }

    Element add(Element a, Element b) const noexcept
    {
        return flat_[static_cast<std::size_t>(a) * order_ + b];
    }

    std::span<const Element> flat() const noexcept { return flat_; }
    Table table() const;

    const GroupoidProfile& profile() const noexcept { return profile_; }

    bool operator==(const Groupoid& other) const
    {
        return order_ == other.order_ && flat_ == other.flat_;
    }

private:
    int order_;
    std::vector<Element> flat_;
    GroupoidProfile profile_;
};

Groupoid make_groupoid(const Table& table);

/// Recomputes every profile flag from scratch.
GroupoidProfile compute_profile(const Groupoid& g);

inline const GroupoidProfile& profile(const Groupoid& g) { return g.profile(); }

/// a + b = c + d implies {a, b} = {c, d}.
bool pairwise_sum_injective(const Groupoid& g);

/// Addition modulo `order`.
Groupoid cyclic_group(int order);

/// ({0..order-1}, max), a join semilattice with neutral 0.
Groupoid max_semilattice(int order);

/// Number of commutative tables of the given order: order^(order(order+1)/2).
std::uint64_t commutative_table_count(int order);

/// Decodes the `index`-th commutative table. The upper triangle (i <= j) is
/// read row by row as a mixed-radix number, most significant cell first.
Groupoid commutative_table_at(int order, std::uint64_t index);

/// Smallest table among all relabelings of the elements (isomorphism
/// canonical form).
std::vector<Element> canonical_relabeling(const Groupoid& g);

} // namespace decklab
