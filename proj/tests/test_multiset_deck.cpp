#include "decklab/deck.hpp"
#include "decklab/errors.hpp"
#include "decklab/multiset.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace decklab;

namespace {

oracle::Cards as_cards(const Deck& d)
{
    oracle::Cards out;
    for (const auto& [card, mult] : d.cards)
        out[card] = static_cast<int>(mult);
    return out;
}

} // namespace

TEST_CASE("multiset algebra")
{
    const auto a = Multiset::from_elements(2, {0, 0, 1});
    CHECK(to_string(multiset_sum(a, Multiset::from_elements(2, {1}))) == "<0,0,1,1>");
    CHECK(to_string(multiset_difference(a, Multiset::from_elements(2, {0, 1, 1}))) == "<0>");
    CHECK(to_string(multiset_intersection(a, Multiset::from_elements(2, {0, 1, 1}))) == "<0,1>");
    CHECK_THROWS_AS(multiset_sum(a, Multiset(3)), OrderMismatch);
    CHECK(a.cardinality() == 3);
    CHECK(a.elements() == std::vector<Element>{0, 0, 1});
    CHECK(Multiset::from_elements(2, {1}).is_subset_of(a));
    CHECK_FALSE(Multiset::from_elements(2, {1, 1}).is_subset_of(a));
    CHECK_THROWS_AS(Multiset::from_elements(2, {2}), OutOfRange);
}

TEST_CASE("multiset text form")
{
    CHECK(parse_multiset("<1,0,0>", 2) == Multiset::from_elements(2, {0, 0, 1}));
    CHECK(parse_multiset(" < 2 , 1 > ", 3) == Multiset::from_elements(3, {1, 2}));
    CHECK(to_string(parse_multiset("<>", 2)) == "<>");
    CHECK_THROWS_AS(parse_multiset("<0,3>", 3), OutOfRange);
    try {
        parse_multiset("<0,x>", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 4);
    }
    CHECK_THROWS_AS(parse_multiset("0,1", 2), ParseError);
}

TEST_CASE("multiset enumeration is colexicographic and complete")
{
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(3, 5) == 0);
    CHECK(multiset_count(3, 4) == 15);
    const auto all = all_multisets(3, 4, 100);
    REQUIRE(all.size() == 15);
    for (std::size_t i = 1; i < all.size(); ++i)
        CHECK(all[i - 1] < all[i]);
    // colex: the count of the last element is the most significant
    CHECK(to_string(all.front()) == "<0,0,0,0>");
    CHECK(to_string(all[1]) == "<0,0,0,1>");
    CHECK(to_string(all.back()) == "<2,2,2,2>");
    CHECK(std::set<Multiset>(all.begin(), all.end()).size() == 15);
    CHECK_THROWS_AS(all_multisets(3, 4, 14), EnumerationCapExceeded);
}

TEST_CASE("Z2 decks of four-element multisets")
{
    const Groupoid z2 = cyclic_group(2);
    const Deck d = cards(z2, Multiset::from_elements(2, {1, 1, 1, 1}));
    CHECK(d.size() == 6);
    CHECK(d.multiplicity({0, 1, 1}) == 6);
    CHECK(d.cards.size() == 1);

    const Deck e = cards(z2, Multiset::from_elements(2, {0, 0, 1, 1}));
    CHECK(e.multiplicity({0, 1, 1}) == 5);
    CHECK(e.multiplicity({0, 0, 0}) == 1);
    CHECK(e.size() == 6);

    const Deck shared = shared_cards(d, e);
    CHECK(shared.multiplicity({0, 1, 1}) == 5);
    CHECK(shared.size() == 5);
}

TEST_CASE("two-element multisets have a single card")
{
    for (int k = 1; k <= 4; ++k) {
        const Groupoid g = cyclic_group(k);
        for (int a = 0; a < k; ++a) {
            const Deck d = cards(g, Multiset::from_elements(k, {a, a}));
            CHECK(d.size() == 1);
            CHECK(d.multiplicity({g.add(a, a)}) == 1);
        }
    }
}

TEST_CASE("deck statistics")
{
    const Groupoid z2 = cyclic_group(2);
    auto s = deck_stats(z2, Multiset::from_elements(2, {1, 1, 1, 1}));
    CHECK(s.occurrences == std::vector<long long>{6, 12});
    CHECK(s.delta == std::vector<long long>{6, 0});
    s = deck_stats(z2, Multiset::from_elements(2, {0, 0, 1, 1}));
    CHECK(s.occurrences == std::vector<long long>{8, 10});
    CHECK(s.delta == std::vector<long long>{2, 4});

    const Groupoid z4 = cyclic_group(4);
    s = deck_stats(z4, Multiset::from_elements(4, {1, 2}));
    CHECK(s.delta == std::vector<long long>{0, 0, 0, 1});
}

TEST_CASE("deck equality")
{
    const Groupoid z4 = cyclic_group(4);
    const Deck a = cards(z4, Multiset::from_elements(4, {1, 1, 2}));
    const Deck b = cards(z4, Multiset::from_elements(4, {2, 3, 3}));
    CHECK(deck_equal(a, b));
    CHECK(a.multiplicity({2, 2}) == 1);
    CHECK(a.multiplicity({1, 3}) == 2);
    CHECK(deck_equal(a, a));
    const Groupoid z2 = cyclic_group(2);
    CHECK_FALSE(deck_equal(cards(z2, Multiset::from_elements(2, {0, 0})),
                           cards(z2, Multiset::from_elements(2, {0, 1}))));
}

TEST_CASE("deck errors")
{
    const Groupoid z2 = cyclic_group(2);
    CHECK_THROWS_AS(cards(z2, Multiset::from_elements(2, {1})), CardinalityTooSmall);
    CHECK_THROWS_AS(cards(z2, Multiset::from_elements(3, {1, 2})), OrderMismatch);
}

TEST_CASE("card encoding is length prefixed")
{
    CHECK(encode_card({0, 1, 1}) == std::vector<std::uint32_t>{3, 0, 1, 1});
    CHECK(encode_card({}) == std::vector<std::uint32_t>{0});
}

TEST_CASE("decks match the brute-force oracle and ignore tuple order")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = 1 + trial % 5;
        const int n = 2 + trial % 6;
        const Groupoid g = oracle::random_groupoid(k, rng);
        std::uniform_int_distribution<int> pick(0, k - 1);
        std::vector<int> tuple(n);
        for (auto& x : tuple)
            x = pick(rng);
        const Multiset m = Multiset::from_elements(k, tuple);
        const Deck d = cards(g, m);
        CHECK(as_cards(d) == oracle::deck(g, tuple));
        CHECK(d.size() == binomial(n, 2));
        for (const auto& [card, mult] : d.cards)
            CHECK(static_cast<int>(card.size()) == n - 1);
        if (trial % 30 == 0) {
            // at least 100 random realizing tuples
            for (int p = 0; p < 100; ++p) {
                std::shuffle(tuple.begin(), tuple.end(), rng);
                CHECK(cards_from_tuple(g, tuple) == d);
            }
        }
    }
}

TEST_CASE("deck statistics identity on random inputs")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const int k = 1 + trial % 5;
        const int n = 2 + trial % 6;
        const Groupoid g = oracle::random_groupoid(k, rng);
        std::uniform_int_distribution<int> pick(0, k - 1);
        std::vector<int> tuple(n);
        for (auto& x : tuple)
            x = pick(rng);
        const Multiset m = Multiset::from_elements(k, tuple);
        const auto s = deck_stats(g, m);
        long long total = 0;
        for (int x = 0; x < k; ++x) {
            // recount occurrences from the oracle deck
            long long occ = 0;
            for (const auto& [card, mult] : oracle::deck(g, tuple))
                occ += mult * std::count(card.begin(), card.end(), x);
            CHECK(s.occurrences[x] == occ);
            CHECK(s.occurrences[x] ==
                  m.count(x) * static_cast<long long>(binomial(n - 1, 2)) + s.delta[x]);
            CHECK(s.delta[x] >= 0);
            total += s.delta[x];
        }
        CHECK(total == static_cast<long long>(binomial(n, 2)));
    }
}
