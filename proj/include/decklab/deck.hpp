#pragma once

#include "decklab/groupoid.hpp"
#include "decklab/multiset.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace decklab {

/// A card in canonical form: its elements listed in nondecreasing order.
using Card = std::vector<Element>;

/// Length-prefixed integer encoding of a canonical card.
std::vector<std::uint32_t> encode_card(const Card& card);

/// The deck of an n-multiset: each card M_I with its multiplicity.
/// Cards are keyed by canonical form, so iteration is lexicographic.
struct Deck
{
    int n = 0;
    std::map<Card, std::size_t> cards;

    /// Sum of multiplicities; C(n, 2) for a deck built by `cards`.
    std::size_t size() const;
    std::size_t multiplicity(const Card& c) const;

    bool operator==(const Deck&) const = default;
};

/// Card obtained from `m` by replacing one occurrence each of `a` and `b`
/// (which must lie in m) by a + b.
Card replace_pair(const Groupoid& g, const Multiset& m, Element a, Element b);

/// All C(n, 2) cards of m. The realizing tuple is the nondecreasing listing
/// of m. Throws `CardinalityTooSmall` if |m| < 2, `OrderMismatch` if m is
/// not over g.
Deck cards(const Groupoid& g, const Multiset& m);

/// Same deck computed from an arbitrary realizing tuple.
Deck cards_from_tuple(const Groupoid& g, std::span<const Element> tuple);

bool deck_equal(const Deck& a, const Deck& b);

/// Multiset intersection of two decks: the largest sub-deck they share.
Deck shared_cards(const Deck& a, const Deck& b);

/// Occurrence statistics over all cards.
///
/// occurrences[x] counts x across every card (with multiplicity);
/// delta[x] = occurrences[x] - counts[x] * C(n-1, 2), the number of
/// couples whose sum is x.
struct DeckStats
{
    std::vector<long long> occurrences;
    std::vector<long long> delta;
};

DeckStats deck_stats(const Groupoid& g, const Multiset& m);

} // namespace decklab
