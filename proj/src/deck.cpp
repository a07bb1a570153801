#include "decklab/deck.hpp"

#include "decklab/errors.hpp"

#include <algorithm>

namespace decklab {

std::vector<std::uint32_t> encode_card(const Card& card)
{
    std::vector<std::uint32_t> out;
    out.reserve(card.size() + 1);
    out.push_back(static_cast<std::uint32_t>(card.size()));
    for (Element x : card)
        out.push_back(static_cast<std::uint32_t>(x));
    return out;
}

std::size_t Deck::size() const
{
    std::size_t s = 0;
    for (const auto& [card, mult] : cards)
        s += mult;
    return s;
}

std::size_t Deck::multiplicity(const Card& c) const
{
    auto it = cards.find(c);
    return it == cards.end() ? 0 : it->second;
}

Card replace_pair(const Groupoid& g, const Multiset& m, Element a, Element b)
{
    Multiset rest = multiset_difference(m, Multiset::from_elements(m.order(), {a, b}));
    rest.insert(g.add(a, b));
    return rest.elements();
}

Deck cards_from_tuple(const Groupoid& g, std::span<const Element> tuple)
{
    const int n = static_cast<int>(tuple.size());
    if (n < 2)
        throw CardinalityTooSmall("a deck needs a multiset of cardinality >= 2");
    for (Element x : tuple)
        if (x < 0 || x >= g.order())
            throw OrderMismatch("multiset element outside the groupoid");
    Deck d;
    d.n = n;
    Card card;
    card.reserve(n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            card.clear();
            for (int k = 0; k < n; ++k)
                if (k != i && k != j)
                    card.push_back(tuple[k]);
            card.push_back(g.add(tuple[i], tuple[j]));
            std::sort(card.begin(), card.end());
            ++d.cards[card];
        }
    return d;
}

Deck cards(const Groupoid& g, const Multiset& m)
{
    if (m.order() != g.order())
        throw OrderMismatch("multiset carrier differs from groupoid order");
    const auto tuple = m.elements();
    return cards_from_tuple(g, tuple);
}

bool deck_equal(const Deck& a, const Deck& b)
{
    return a.n == b.n && a.cards == b.cards;
}

Deck shared_cards(const Deck& a, const Deck& b)
{
    Deck out;
    out.n = a.n;
    for (const auto& [card, mult] : a.cards)
        if (auto m = std::min(mult, b.multiplicity(card)); m > 0)
            out.cards.emplace(card, m);
    return out;
}

DeckStats deck_stats(const Groupoid& g, const Multiset& m)
{
    const Deck d = cards(g, m);
    const int n = m.cardinality();
    DeckStats s;
    s.occurrences.assign(g.order(), 0);
    for (const auto& [card, mult] : d.cards)
        for (Element x : card)
            s.occurrences[x] += static_cast<long long>(mult);
    const auto base = static_cast<long long>(binomial(n - 1, 2));
    s.delta.resize(g.order());
    for (int x = 0; x < g.order(); ++x)
        s.delta[x] = s.occurrences[x] - m.count(x) * base;
    return s;
}

} // namespace decklab
