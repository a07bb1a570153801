#pragma once

#include "decklab/deck.hpp"
#include "decklab/groupoid.hpp"
#include "decklab/multiset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace decklab {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Non-reconstructibility patterns. The EX* kinds are the four example
/// families; THM* kinds are the conditions of the n = 4 and n = 3
/// characterizations. EX1 and THM4_II, EX2 and THM3_II, EX3 and THM3_III
/// share their defining identities and are reported together.
enum class Pattern
{
    Ex1FourRstuv,
    Ex2Booleanish,
    Ex3SumZero,
    Ex4PairSum,
    Thm4Ii,
    Thm3Ii,
    Thm3Iii,
    Unclassified,
};

std::string_view pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(std::string_view name);

using Binding = std::vector<std::pair<char, Element>>;

struct PatternTag
{
    Pattern pattern = Pattern::Unclassified;
    Binding binding;

    bool operator==(const PatternTag&) const = default;
};

/// x + u = v and x + v = u for x in {r, s, t}; r + s = s, s + t = t,
/// t + r = r.
bool four_card_identities(const Groupoid& g, Element r, Element s, Element t,
                          Element u, Element v);
/// r + (r + s) = s, r + (r + t) = t, (r + s) + (r + t) = s + t.
bool translate_identities(const Groupoid& g, Element r, Element s, Element t);
/// (r + s) + (r + t) = r, (r + s) + (s + t) = s, (r + t) + (s + t) = t.
bool pair_sum_identities(const Groupoid& g, Element r, Element s, Element t);

/// Re-evaluates every defining identity of the tag under its binding.
bool pattern_holds(const Groupoid& g, const PatternTag& tag);

/// Classifies a distinct deck-equal pair. For n = 2 returns EX4; for n = 3
/// every matching THM3_II / THM3_III binding (with EX2 / EX3); for n = 4 the
/// THM4_II binding (with EX1). For n >= 5 returns an empty list. Returns
/// {UNCLASSIFIED} when n <= 4 and no binding exists. Bindings are the first
/// in lexicographic order of the variable tuple. Throws
/// `PreconditionViolated` if the decks differ or the multisets are equal.
std::vector<PatternTag> classify_pair(const Groupoid& g, const Multiset& m,
                                      const Multiset& m2);

struct ReconVerdict
{
    bool reconstructible = true;
    std::vector<Multiset> witnesses;
    std::vector<std::vector<PatternTag>> matched_patterns;
};

/// Exhaustive: compares deck m against the deck of every multiset of the
/// same cardinality. Throws `EnumerationCapExceeded`.
ReconVerdict is_reconstructible(const Groupoid& g, const Multiset& m,
                                std::uint64_t cap = kDefaultEnumerationCap);

/// "n>=5", "n=4", "n=3", or "n=2".
std::string theorem_label(int n);

struct Violation
{
    std::string kind;
    std::vector<Element> table; // flat, row-major
    int order = 0;
    Multiset first;
    Multiset second;
    std::string detail;
};

struct ExceptionalPair
{
    Multiset first;
    Multiset second;
    std::vector<PatternTag> tags;
};

/// Theorem conformance on a single groupoid.
struct TheoremReport
{
    std::string theorem;
    int order = 0;
    int n = 0;
    std::uint64_t multisets = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t deck_equal_pairs = 0;
    std::vector<ExceptionalPair> exceptional;
    std::vector<Violation> violations;
    /// n = 2 only: whether every 2-multiset is reconstructible.
    std::optional<bool> all_reconstructible;
    bool falsified = false;
};

/// Checks both directions: every distinct deck-equal pair must satisfy the
/// allowed condition for its cardinality, and every binding satisfying a
/// condition must produce equal decks.
TheoremReport verify_theorem(const Groupoid& g, int n,
                             std::uint64_t cap = kDefaultEnumerationCap);

struct OrderSummary
{
    int order = 0;
    std::uint64_t groupoids = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t deck_equal_pairs = 0;
    std::uint64_t groupoids_with_exceptions = 0;
};

struct SweepReport
{
    std::string theorem;
    int n = 0;
    int max_order = 0;
    std::uint64_t groupoids_checked = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t deck_equal_pairs = 0;
    std::map<std::string, std::uint64_t> tag_counts;
    std::vector<OrderSummary> per_order;
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations; // first kMaxListedViolations
    bool falsified = false;
};

inline constexpr std::size_t kMaxListedViolations = 100;

struct SweepOptions
{
    int workers = 1;
    /// Upper bound on commutative tables per order.
    std::uint64_t table_cap = 2'000'000;
    std::uint64_t multiset_cap = kDefaultEnumerationCap;
};

/// `verify_theorem` over every commutative groupoid of order 1..max_order.
SweepReport verify_theorem_sweep(int max_order, int n, const SweepOptions& opts = {});

struct Counterexample
{
    Groupoid groupoid;
    Multiset first;
    Multiset second;
    std::vector<PatternTag> tags;
};

struct SearchOptions
{
    std::optional<Pattern> filter;
    /// Keep only tables that are minimal among their relabelings.
    bool isomorphism_filter = false;
    /// Sample random tables instead of enumerating.
    bool randomized = false;
    std::uint64_t samples = 10'000;
    std::uint64_t seed = 1;
    std::uint64_t limit = UINT64_MAX;
    int workers = 1;
    /// Largest order enumerated exhaustively.
    int exhaustive_order_cap = 4;
    std::uint64_t multiset_cap = kDefaultEnumerationCap;
};

/// Deck-equal distinct pairs of n-multisets over commutative groupoids of
/// the given order, in table-index order then colex pair order. Throws
/// `CapExceeded` if the order is above the exhaustive cap and sampling is
/// off.
std::vector<Counterexample> search_counterexamples(int order, int n,
                                                   const SearchOptions& opts = {});

struct Example1Witness
{
    Groupoid groupoid;
    Element r, s, t, u, v;
    Deck deck_first;  // deck of <r,s,t,u>
    Deck deck_second; // deck of <r,s,t,v>
};

/// Smallest-order commutative groupoid with elements r, s, t, u != v meeting
/// the four-card identities; unconstrained cells are 0. With
/// `distinct_rst`, r, s, t must be pairwise distinct. Throws `CapExceeded`
/// for max_order > 6.
std::optional<Example1Witness> search_example1_witness(int max_order,
                                                       bool distinct_rst = false);

struct MinCardsResult
{
    int n = 0;
    std::size_t deck_size = 0;
    /// Largest sub-deck shared by two distinct n-multisets.
    std::size_t max_shared = 0;
    /// Smallest m such that every n-multiset is determined by any m of its
    /// cards, clamped to the deck size.
    std::size_t min_cards = 0;
    /// False if some multiset is not determined even by its full deck.
    bool determined = true;
    /// First pair (colex order) sharing `max_shared` cards.
    std::optional<std::pair<Multiset, Multiset>> certificate;
    Deck shared;
    /// Smallest m such that every n-multiset has SOME determining m-card
    /// sub-deck; only computed on request, empty if not determined.
    std::optional<std::size_t> min_cards_some;
};

MinCardsResult min_determining_cards(const Groupoid& g, int n,
                                     std::uint64_t cap = kDefaultEnumerationCap,
                                     bool compute_some = false);

struct SetDeckPair
{
    Multiset first;
    Multiset second;
    bool multiset_deck_equal = false;
};

struct SetDeckReport
{
    int n = 0;
    std::uint64_t multisets = 0;
    std::vector<SetDeckPair> pairs;
};

/// Distinct pairs whose sets of cards (multiplicities ignored) coincide.
SetDeckReport set_deck_probe(const Groupoid& g, int n,
                             std::uint64_t cap = kDefaultEnumerationCap);

/// Distinct cards of a deck.
std::vector<Card> card_set(const Deck& d);

struct TwoCardInstance
{
    Multiset first;  // <m1, ..., mn>
    Multiset second; // <m1+m2, m2+m3, -m2, m4, ..., mn>
    Card card_a;     // <m1+m2, m3, m4, ..., mn>
    Card card_b;     // <m1, m2+m3, m4, ..., mn>
    /// Both cards (with multiplicity) are a sub-deck of each deck.
    bool shared = false;
};

/// Builds the two-card ambiguity over a commutative group. Throws
/// `PreconditionViolated` if g is not a group or the tuple is shorter than 3.
TwoCardInstance group_two_card_ambiguity(const Groupoid& g,
                                         std::span<const Element> tuple);

} // namespace decklab
