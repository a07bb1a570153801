#include "decklab/reconstruction.hpp"

#include "decklab/errors.hpp"
#include "decklab/parallel.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

namespace decklab {

std::string_view pattern_name(Pattern p)
{
    switch (p) {
    case Pattern::Ex1FourRstuv: return "EX1_4RSTUV";
    case Pattern::Ex2Booleanish: return "EX2_BOOLEANISH";
    case Pattern::Ex3SumZero: return "EX3_SUMZERO";
    case Pattern::Ex4PairSum: return "EX4_PAIRSUM";
    case Pattern::Thm4Ii: return "THM4_II";
    case Pattern::Thm3Ii: return "THM3_II";
    case Pattern::Thm3Iii: return "THM3_III";
    case Pattern::Unclassified: return "UNCLASSIFIED";
    }
    return "UNCLASSIFIED";
}

std::optional<Pattern> pattern_from_name(std::string_view name)
{
    for (auto p : {Pattern::Ex1FourRstuv, Pattern::Ex2Booleanish, Pattern::Ex3SumZero,
                   Pattern::Ex4PairSum, Pattern::Thm4Ii, Pattern::Thm3Ii,
                   Pattern::Thm3Iii, Pattern::Unclassified})
        if (pattern_name(p) == name)
            return p;
    return std::nullopt;
}

bool four_card_identities(const Groupoid& g, Element r, Element s, Element t,
                          Element u, Element v)
{
    if (g.add(r, s) != s || g.add(s, t) != t || g.add(t, r) != r)
        return false;
    for (Element x : {r, s, t})
        if (g.add(x, u) != v || g.add(x, v) != u)
            return false;
    return true;
}

bool translate_identities(const Groupoid& g, Element r, Element s, Element t)
{
    const Element rs = g.add(r, s), rt = g.add(r, t);
    return g.add(r, rs) == s && g.add(r, rt) == t && g.add(rs, rt) == g.add(s, t);
}

bool pair_sum_identities(const Groupoid& g, Element r, Element s, Element t)
{
    const Element rs = g.add(r, s), rt = g.add(r, t), st = g.add(s, t);
    return g.add(rs, rt) == r && g.add(rs, st) == s && g.add(rt, st) == t;
}

namespace {

Element bound(const Binding& b, char name)
{
    for (const auto& [k, v] : b)
        if (k == name)
            return v;
    return -1;
}

bool in_range(const Groupoid& g, const Binding& b)
{
    return std::all_of(b.begin(), b.end(),
                       [&](const auto& kv) { return kv.second >= 0 && kv.second < g.order(); });
}

} // namespace

bool pattern_holds(const Groupoid& g, const PatternTag& tag)
{
    const auto& b = tag.binding;
    if (!in_range(g, b))
        return false;
    const Element r = bound(b, 'r'), s = bound(b, 's'), t = bound(b, 't');
    const Element u = bound(b, 'u'), v = bound(b, 'v');
    switch (tag.pattern) {
    case Pattern::Ex1FourRstuv:
    case Pattern::Thm4Ii:
        return r >= 0 && s >= 0 && t >= 0 && u >= 0 && v >= 0 && u != v &&
               four_card_identities(g, r, s, t, u, v);
    case Pattern::Ex2Booleanish:
    case Pattern::Thm3Ii:
        return r >= 0 && s >= 0 && t >= 0 && translate_identities(g, r, s, t);
    case Pattern::Ex3SumZero:
    case Pattern::Thm3Iii:
        return r >= 0 && s >= 0 && t >= 0 && pair_sum_identities(g, r, s, t);
    case Pattern::Ex4PairSum: {
        if (r < 0 || s < 0 || t < 0 || u < 0)
            return false;
        const bool same_pair = (r == t && s == u) || (r == u && s == t);
        return g.add(r, s) == g.add(t, u) && !same_pair;
    }
    case Pattern::Unclassified:
        return false;
    }
    return false;
}

namespace {

template <std::size_t N>
bool same_multiset(std::array<Element, N> xs, const std::vector<Element>& sorted)
{
    std::sort(xs.begin(), xs.end());
    return std::equal(xs.begin(), xs.end(), sorted.begin(), sorted.end());
}

// Classification without re-checking deck equality.
std::vector<PatternTag> classify_unchecked(const Groupoid& g, const Multiset& m,
                                           const Multiset& m2)
{
    const int n = m.cardinality();
    const int k = g.order();
    const auto a = m.elements();
    const auto b = m2.elements();
    std::vector<PatternTag> tags;

    if (n == 2) {
        if (g.add(a[0], a[1]) == g.add(b[0], b[1]))
            tags.push_back({Pattern::Ex4PairSum,
                            {{'r', a[0]}, {'s', a[1]}, {'t', b[0]}, {'u', b[1]}}});
    } else if (n == 3) {
        std::optional<Binding> ii, iii;
        for (Element r = 0; r < k; ++r)
            for (Element s = 0; s < k; ++s)
                for (Element t = 0; t < k; ++t) {
                    if (ii && iii)
                        break;
                    if (!same_multiset<3>({r, s, t}, a))
                        continue;
                    const Element rs = g.add(r, s), rt = g.add(r, t), st = g.add(s, t);
                    if (!ii && translate_identities(g, r, s, t) &&
                        same_multiset<3>({r, rs, rt}, b))
                        ii = Binding{{'r', r}, {'s', s}, {'t', t}};
                    if (!iii && pair_sum_identities(g, r, s, t) &&
                        same_multiset<3>({rs, rt, st}, b))
                        iii = Binding{{'r', r}, {'s', s}, {'t', t}};
                }
        if (ii) {
            tags.push_back({Pattern::Thm3Ii, *ii});
            tags.push_back({Pattern::Ex2Booleanish, *ii});
        }
        if (iii) {
            tags.push_back({Pattern::Thm3Iii, *iii});
            tags.push_back({Pattern::Ex3SumZero, *iii});
        }
    } else if (n == 4) {
        for (Element r = 0; r < k && tags.empty(); ++r)
            for (Element s = 0; s < k && tags.empty(); ++s) {
                if (g.add(r, s) != s)
                    continue;
                for (Element t = 0; t < k && tags.empty(); ++t) {
                    if (g.add(s, t) != t || g.add(t, r) != r)
                        continue;
                    for (Element u = 0; u < k && tags.empty(); ++u)
                        for (Element v = 0; v < k; ++v) {
                            if (u == v || !four_card_identities(g, r, s, t, u, v))
                                continue;
                            if (same_multiset<4>({r, s, t, u}, a) &&
                                same_multiset<4>({r, s, t, v}, b)) {
                                Binding bind{{'r', r}, {'s', s}, {'t', t}, {'u', u}, {'v', v}};
                                tags.push_back({Pattern::Thm4Ii, bind});
                                tags.push_back({Pattern::Ex1FourRstuv, bind});
                                break;
                            }
                        }
                }
            }
    } else {
        return tags;
    }
    if (tags.empty())
        tags.push_back({Pattern::Unclassified, {}});
    return tags;
}

bool is_unclassified(const std::vector<PatternTag>& tags)
{
    return tags.size() == 1 && tags[0].pattern == Pattern::Unclassified;
}

} // namespace

std::vector<PatternTag> classify_pair(const Groupoid& g, const Multiset& m,
                                      const Multiset& m2)
{
    if (m.cardinality() != m2.cardinality())
        throw PreconditionViolated("multisets have different cardinalities");
    if (m == m2)
        throw PreconditionViolated("multisets are equal");
    if (!deck_equal(cards(g, m), cards(g, m2)))
        throw PreconditionViolated("decks differ");
    return classify_unchecked(g, m, m2);
}

ReconVerdict is_reconstructible(const Groupoid& g, const Multiset& m, std::uint64_t cap)
{
    const int n = m.cardinality();
    const Deck target = cards(g, m);
    const auto count = multiset_count(g.order(), n);
    if (count > cap)
        throw EnumerationCapExceeded(std::to_string(count) +
                                     " candidate multisets exceed cap " +
                                     std::to_string(cap));
    ReconVerdict verdict;
    for_each_multiset(g.order(), n, [&](const Multiset& other) {
        if (other == m || !deck_equal(cards(g, other), target))
            return;
        verdict.witnesses.push_back(other);
        verdict.matched_patterns.push_back(classify_unchecked(g, m, other));
    });
    verdict.reconstructible = verdict.witnesses.empty();
    return verdict;
}

std::string theorem_label(int n)
{
    if (n >= 5)
        return "n>=5";
    return "n=" + std::to_string(n);
}

namespace {

// All n-multisets over an order-k carrier with an additive code
// sum_x count[x] * (n+1)^x. Codes increase in colex order, and the code of a
// card follows from the multiset's code in O(1).
struct MultisetSpace
{
    int order;
    int n;
    std::vector<Multiset> list;
    std::vector<std::vector<Element>> tuples;
    std::vector<std::uint64_t> weight;
    std::vector<std::uint64_t> code;
    std::vector<std::pair<int, int>> couples;
    bool packed = true;

    MultisetSpace(int order, int n, std::uint64_t cap)
      : order(order), n(n), list(all_multisets(order, n, cap))
    {
        weight.resize(order);
        std::uint64_t w = 1;
        const std::uint64_t base = static_cast<std::uint64_t>(n) + 1;
        for (int x = 0; x < order; ++x) {
            weight[x] = w;
            if (x + 1 < order) {
                if (w > UINT64_MAX / base / base) {
                    packed = false;
                    break;
                }
                w *= base;
            }
        }
        tuples.reserve(list.size());
        for (const auto& m : list) {
            tuples.push_back(m.elements());
            if (packed) {
                std::uint64_t c = 0;
                for (Element x : tuples.back())
                    c += weight[x];
                code.push_back(c);
            }
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                couples.emplace_back(i, j);
    }

    template <std::size_t N>
    int index_of(const std::array<Element, N>& xs) const
    {
        std::uint64_t c = 0;
        for (Element x : xs)
            c += weight[x];
        auto it = std::lower_bound(code.begin(), code.end(), c);
        return static_cast<int>(it - code.begin());
    }
};

// Deck signatures for one table.
class DeckIndex
{
public:
    DeckIndex(const Groupoid& g, const MultisetSpace& space) : space_(space)
    {
        const std::size_t N = space.list.size();
        P_ = space.couples.size();
        if (space.packed) {
            sig_.resize(N * P_);
            for (std::size_t idx = 0; idx < N; ++idx) {
                const auto& t = space.tuples[idx];
                const std::uint64_t base = space.code[idx];
                std::uint64_t* out = &sig_[idx * P_];
                for (std::size_t k = 0; k < P_; ++k) {
                    const auto [i, j] = space.couples[k];
                    out[k] = base - space.weight[t[i]] - space.weight[t[j]] +
                             space.weight[g.add(t[i], t[j])];
                }
                std::sort(out, out + P_);
            }
        } else {
            decks_.reserve(N);
            for (const auto& m : space.list)
                decks_.push_back(cards(g, m));
        }
        order_.resize(N);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return less(a, b); });
        for (std::size_t i = 0; i < N;) {
            std::size_t j = i + 1;
            while (j < N && equal(order_[i], order_[j]))
                ++j;
            if (j - i > 1) {
                std::vector<int> grp(order_.begin() + i, order_.begin() + j);
                std::sort(grp.begin(), grp.end());
                groups_.push_back(std::move(grp));
            }
            i = j;
        }
        std::sort(groups_.begin(), groups_.end());
    }

    bool equal(int a, int b) const
    {
        if (space_.packed)
            return std::equal(&sig_[a * P_], &sig_[a * P_] + P_, &sig_[b * P_]);
        return decks_[a] == decks_[b];
    }

    /// Classes of size >= 2, each sorted, ordered by first member.
    const std::vector<std::vector<int>>& groups() const { return groups_; }

private:
    bool less(int a, int b) const
    {
        if (space_.packed)
            return std::lexicographical_compare(&sig_[a * P_], &sig_[a * P_] + P_,
                                                &sig_[b * P_], &sig_[b * P_] + P_);
        return decks_[a].cards < decks_[b].cards;
    }

    const MultisetSpace& space_;
    std::size_t P_ = 0;
    std::vector<std::uint64_t> sig_;
    std::vector<Deck> decks_;
    std::vector<int> order_;
    std::vector<std::vector<int>> groups_;
};

struct TableOutcome
{
    std::uint64_t pairs_checked = 0;
    std::uint64_t deck_equal_pairs = 0;
    std::vector<ExceptionalPair> exceptional;
    std::map<std::string, std::uint64_t> tag_counts;
    std::vector<Violation> violations;
    std::uint64_t violation_count = 0;
    std::optional<bool> all_reconstructible;
};

void add_violation(TableOutcome& out, const Groupoid& g, std::string kind,
                   const Multiset& a, const Multiset& b, std::string detail)
{
    ++out.violation_count;
    if (out.violations.size() < kMaxListedViolations)
        out.violations.push_back({std::move(kind),
                                  std::vector<Element>(g.flat().begin(), g.flat().end()),
                                  g.order(), a, b, std::move(detail)});
}

TableOutcome check_table(const Groupoid& g, const MultisetSpace& space, bool collect_pairs)
{
    TableOutcome out;
    const int n = space.n;
    const int k = g.order();
    const auto N = static_cast<std::uint64_t>(space.list.size());
    out.pairs_checked = N * (N - (N > 0 ? 1 : 0)) / 2;
    DeckIndex index(g, space);

    // Completeness: every distinct deck-equal pair satisfies an allowed
    // condition.
    for (const auto& grp : index.groups())
        for (std::size_t i = 0; i < grp.size(); ++i)
            for (std::size_t j = i + 1; j < grp.size(); ++j) {
                ++out.deck_equal_pairs;
                const auto& a = space.list[grp[i]];
                const auto& b = space.list[grp[j]];
                auto tags = classify_unchecked(g, a, b);
                for (const auto& t : tags)
                    ++out.tag_counts[std::string(pattern_name(t.pattern))];
                if (n >= 5)
                    add_violation(out, g, "deck-equal distinct pair", a, b,
                                  "cardinality >= 5 admits no exceptions");
                else if (is_unclassified(tags))
                    add_violation(out, g, "unclassified deck-equal pair", a, b,
                                  "no binding for the allowed condition");
                if (collect_pairs)
                    out.exceptional.push_back({a, b, std::move(tags)});
            }

    // Soundness: every binding satisfying a condition yields equal decks.
    if (!space.packed || n < 2 || n > 4)
        return out;
    if (n == 4) {
        for (Element r = 0; r < k; ++r)
            for (Element s = 0; s < k; ++s) {
                if (g.add(r, s) != s)
                    continue;
                for (Element t = 0; t < k; ++t) {
                    if (g.add(s, t) != t || g.add(t, r) != r)
                        continue;
                    for (Element u = 0; u < k; ++u)
                        for (Element v = 0; v < k; ++v) {
                            if (u == v || !four_card_identities(g, r, s, t, u, v))
                                continue;
                            const int ia = space.index_of<4>({r, s, t, u});
                            const int ib = space.index_of<4>({r, s, t, v});
                            if (!index.equal(ia, ib))
                                add_violation(out, g, "condition without equal decks",
                                              space.list[ia], space.list[ib],
                                              "four-card identities hold");
                        }
                }
            }
    } else if (n == 3) {
        for (Element r = 0; r < k; ++r)
            for (Element s = 0; s < k; ++s)
                for (Element t = 0; t < k; ++t) {
                    const Element rs = g.add(r, s), rt = g.add(r, t), st = g.add(s, t);
                    const int ia = space.index_of<3>({r, s, t});
                    if (translate_identities(g, r, s, t)) {
                        const int ib = space.index_of<3>({r, rs, rt});
                        if (!index.equal(ia, ib))
                            add_violation(out, g, "condition without equal decks",
                                          space.list[ia], space.list[ib],
                                          "translate identities hold");
                    }
                    if (pair_sum_identities(g, r, s, t)) {
                        const int ib = space.index_of<3>({rs, rt, st});
                        if (!index.equal(ia, ib))
                            add_violation(out, g, "condition without equal decks",
                                          space.list[ia], space.list[ib],
                                          "pair-sum identities hold");
                    }
                }
    } else {
        // n = 2: deck-equal iff equal sums, and all 2-multisets are
        // reconstructible iff the sum is pairwise injective.
        for (std::uint64_t a = 0; a < N; ++a)
            for (std::uint64_t b = a + 1; b < N; ++b) {
                const auto& ta = space.tuples[a];
                const auto& tb = space.tuples[b];
                const bool sums = g.add(ta[0], ta[1]) == g.add(tb[0], tb[1]);
                if (sums != index.equal(static_cast<int>(a), static_cast<int>(b)))
                    add_violation(out, g, "deck equality differs from sum equality",
                                  space.list[a], space.list[b], "");
            }
        out.all_reconstructible = index.groups().empty();
        if (*out.all_reconstructible != g.profile().pairwise_sum_injective)
            add_violation(out, g, "reconstructibility differs from pairwise injectivity",
                          Multiset(k), Multiset(k), "");
    }
    return out;
}

} // namespace

TheoremReport verify_theorem(const Groupoid& g, int n, std::uint64_t cap)
{
    if (n < 2)
        throw CardinalityTooSmall("theorems concern cardinality >= 2");
    MultisetSpace space(g.order(), n, cap);
    auto out = check_table(g, space, true);
    TheoremReport rep;
    rep.theorem = theorem_label(n);
    rep.order = g.order();
    rep.n = n;
    rep.multisets = space.list.size();
    rep.pairs_checked = out.pairs_checked;
    rep.deck_equal_pairs = out.deck_equal_pairs;
    rep.exceptional = std::move(out.exceptional);
    rep.violations = std::move(out.violations);
    rep.all_reconstructible = out.all_reconstructible;
    rep.falsified = out.violation_count > 0;
    return rep;
}

namespace {

struct SweepChunk
{
    std::uint64_t groupoids = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t deck_equal_pairs = 0;
    std::uint64_t with_exceptions = 0;
    std::map<std::string, std::uint64_t> tag_counts;
    std::vector<Violation> violations;
    std::uint64_t violation_count = 0;
};

constexpr std::uint64_t kTableChunk = 4096;

} // namespace

SweepReport verify_theorem_sweep(int max_order, int n, const SweepOptions& opts)
{
    if (n < 2)
        throw CardinalityTooSmall("theorems concern cardinality >= 2");
    SweepReport rep;
    rep.theorem = theorem_label(n);
    rep.n = n;
    rep.max_order = max_order;
    for (int order = 1; order <= max_order; ++order) {
        const auto tables = commutative_table_count(order);
        if (order > 6 || tables > opts.table_cap)
            throw CapExceeded(std::to_string(tables) + " tables of order " +
                              std::to_string(order) + " exceed cap " +
                              std::to_string(opts.table_cap));
        const MultisetSpace space(order, n, opts.multiset_cap);
        auto chunks = parallel_chunks(tables, kTableChunk, opts.workers,
                                      [&](std::uint64_t begin, std::uint64_t end) {
            SweepChunk c;
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                const Groupoid g = commutative_table_at(order, idx);
                auto out = check_table(g, space, false);
                ++c.groupoids;
                c.pairs_checked += out.pairs_checked;
                c.deck_equal_pairs += out.deck_equal_pairs;
                c.with_exceptions += out.deck_equal_pairs > 0;
                for (const auto& [tag, cnt] : out.tag_counts)
                    c.tag_counts[tag] += cnt;
                c.violation_count += out.violation_count;
                for (auto& v : out.violations)
                    if (c.violations.size() < kMaxListedViolations)
                        c.violations.push_back(std::move(v));
            }
            return c;
        });
        OrderSummary summary;
        summary.order = order;
        for (auto& c : chunks) {
            summary.groupoids += c.groupoids;
            summary.pairs_checked += c.pairs_checked;
            summary.deck_equal_pairs += c.deck_equal_pairs;
            summary.groupoids_with_exceptions += c.with_exceptions;
            for (const auto& [tag, cnt] : c.tag_counts)
                rep.tag_counts[tag] += cnt;
            rep.violation_count += c.violation_count;
            for (auto& v : c.violations)
                if (rep.violations.size() < kMaxListedViolations)
                    rep.violations.push_back(std::move(v));
        }
        rep.groupoids_checked += summary.groupoids;
        rep.pairs_checked += summary.pairs_checked;
        rep.deck_equal_pairs += summary.deck_equal_pairs;
        rep.per_order.push_back(summary);
    }
    rep.falsified = rep.violation_count > 0;
    return rep;
}

namespace {

Groupoid random_commutative_table(int order, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(0, order - 1);
    std::vector<Element> flat(static_cast<std::size_t>(order) * order);
    for (int i = 0; i < order; ++i)
        for (int j = i; j < order; ++j) {
            const Element v = pick(rng);
            flat[i * order + j] = v;
            flat[j * order + i] = v;
        }
    return Groupoid(order, std::move(flat));
}

void collect_counterexamples(const Groupoid& g, const MultisetSpace& space,
                             const SearchOptions& opts, std::vector<Counterexample>& out)
{
    if (opts.isomorphism_filter) {
        const auto canon = canonical_relabeling(g);
        if (!std::equal(canon.begin(), canon.end(), g.flat().begin(), g.flat().end()))
            return;
    }
    DeckIndex index(g, space);
    for (const auto& grp : index.groups())
        for (std::size_t i = 0; i < grp.size(); ++i)
            for (std::size_t j = i + 1; j < grp.size(); ++j) {
                const auto& a = space.list[grp[i]];
                const auto& b = space.list[grp[j]];
                auto tags = classify_unchecked(g, a, b);
                if (opts.filter &&
                    std::none_of(tags.begin(), tags.end(), [&](const PatternTag& t) {
                        return t.pattern == *opts.filter;
                    }))
                    continue;
                out.push_back({g, a, b, std::move(tags)});
            }
}

} // namespace

std::vector<Counterexample> search_counterexamples(int order, int n, const SearchOptions& opts)
{
    if (n < 2)
        throw CardinalityTooSmall("cards need cardinality >= 2");
    if (order < 1)
        throw OutOfRange("order must be positive");
    if (!opts.randomized && order > opts.exhaustive_order_cap)
        throw CapExceeded("order " + std::to_string(order) +
                          " exceeds the exhaustive search cap " +
                          std::to_string(opts.exhaustive_order_cap) +
                          "; use randomized sampling");
    const MultisetSpace space(order, n, opts.multiset_cap);
    const std::uint64_t total =
        opts.randomized ? opts.samples : commutative_table_count(order);
    const std::uint64_t chunk = opts.randomized ? 256 : kTableChunk;
    const std::uint64_t wave = chunk * static_cast<std::uint64_t>(std::max(opts.workers, 1)) * 4;

    std::vector<Counterexample> result;
    for (std::uint64_t wbegin = 0; wbegin < total && result.size() < opts.limit;
         wbegin += wave) {
        const std::uint64_t wend = std::min(total, wbegin + wave);
        auto parts = parallel_chunks(wend - wbegin, chunk, opts.workers,
                                     [&](std::uint64_t b, std::uint64_t e) {
            std::vector<Counterexample> found;
            std::mt19937_64 rng;
            if (opts.randomized) {
                std::seed_seq seq{opts.seed, (wbegin + b) / chunk};
                rng.seed(seq);
            }
            for (std::uint64_t i = b; i < e; ++i) {
                const Groupoid g = opts.randomized
                                       ? random_commutative_table(order, rng)
                                       : commutative_table_at(order, wbegin + i);
                collect_counterexamples(g, space, opts, found);
            }
            return found;
        });
        for (auto& p : parts)
            for (auto& c : p) {
                if (result.size() >= opts.limit)
                    break;
                result.push_back(std::move(c));
            }
    }
    return result;
}

std::optional<Example1Witness> search_example1_witness(int max_order, bool distinct_rst)
{
    if (max_order > 6)
        throw CapExceeded("witness search is limited to order 6");
    for (int k = 1; k <= max_order; ++k) {
        const int cells = k * k;
        std::vector<Element> flat(cells);
        std::vector<char> set(cells);
        for (Element r = 0; r < k; ++r)
            for (Element s = 0; s < k; ++s)
                for (Element t = 0; t < k; ++t) {
                    if (distinct_rst && (r == s || s == t || r == t))
                        continue;
                    for (Element u = 0; u < k; ++u)
                        for (Element v = 0; v < k; ++v) {
                            if (u == v)
                                continue;
                            std::fill(flat.begin(), flat.end(), 0);
                            std::fill(set.begin(), set.end(), 0);
                            bool ok = true;
                            auto assign = [&](Element a, Element b, Element val) {
                                for (int c : {a * k + b, b * k + a}) {
                                    if (set[c] && flat[c] != val)
                                        ok = false;
                                    set[c] = 1;
                                    flat[c] = val;
                                }
                            };
                            for (Element x : {r, s, t}) {
                                assign(x, u, v);
                                assign(x, v, u);
                            }
                            assign(r, s, s);
                            assign(s, t, t);
                            assign(t, r, r);
                            if (!ok)
                                continue;
                            Groupoid g(k, flat);
                            if (!four_card_identities(g, r, s, t, u, v))
                                throw Falsification("witness table does not satisfy identities");
                            auto d1 = cards(g, Multiset::from_elements(k, {r, s, t, u}));
                            auto d2 = cards(g, Multiset::from_elements(k, {r, s, t, v}));
                            if (!deck_equal(d1, d2))
                                throw Falsification("four-card witness decks differ");
                            return Example1Witness{std::move(g), r, s, t, u, v,
                                                   std::move(d1), std::move(d2)};
                        }
                }
    }
    return std::nullopt;
}

namespace {

// Smallest sub-deck size of `deck` that is not contained in any of `others`.
std::size_t smallest_distinguishing_subdeck(const Deck& deck, const std::vector<const Deck*>& others)
{
    std::vector<std::pair<const Card*, std::size_t>> items;
    for (const auto& [c, m] : deck.cards)
        items.emplace_back(&c, m);
    std::vector<std::size_t> pick(items.size(), 0);

    auto distinguishes = [&] {
        for (const Deck* o : others) {
            bool contained = true;
            for (std::size_t i = 0; i < items.size() && contained; ++i)
                contained = pick[i] <= o->multiplicity(*items[i].first);
            if (contained)
                return false;
        }
        return true;
    };

    // Enumerate sub-multisets of exactly `size` cards.
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t left) {
        if (i == items.size())
            return left == 0 && distinguishes();
        for (std::size_t c = 0; c <= std::min(left, items[i].second); ++c) {
            pick[i] = c;
            if (rec(i + 1, left - c))
                return true;
        }
        pick[i] = 0;
        return false;
    };
    for (std::size_t size = 0; size <= deck.size(); ++size)
        if (rec(0, size))
            return size;
    return deck.size() + 1;
}

} // namespace

MinCardsResult min_determining_cards(const Groupoid& g, int n, std::uint64_t cap,
                                     bool compute_some)
{
    if (n < 2)
        throw CardinalityTooSmall("cards need cardinality >= 2");
    const auto list = all_multisets(g.order(), n, cap);
    std::vector<Deck> decks;
    decks.reserve(list.size());
    for (const auto& m : list)
        decks.push_back(cards(g, m));

    MinCardsResult res;
    res.n = n;
    res.deck_size = binomial(n, 2);
    bool have = false;
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j) {
            auto shared = shared_cards(decks[i], decks[j]);
            const auto sz = shared.size();
            if (!have || sz > res.max_shared) {
                have = true;
                res.max_shared = sz;
                res.certificate = std::make_pair(list[i], list[j]);
                res.shared = std::move(shared);
            }
        }
    res.determined = res.max_shared < res.deck_size;
    res.min_cards = std::min(res.max_shared + 1, res.deck_size);

    if (compute_some && res.determined) {
        std::size_t worst = 0;
        for (std::size_t i = 0; i < list.size(); ++i) {
            std::vector<const Deck*> others;
            for (std::size_t j = 0; j < list.size(); ++j)
                if (j != i)
                    others.push_back(&decks[j]);
            worst = std::max(worst, smallest_distinguishing_subdeck(decks[i], others));
        }
        res.min_cards_some = worst;
    }
    return res;
}

std::vector<Card> card_set(const Deck& d)
{
    std::vector<Card> out;
    out.reserve(d.cards.size());
    for (const auto& [c, m] : d.cards)
        out.push_back(c);
    return out;
}

SetDeckReport set_deck_probe(const Groupoid& g, int n, std::uint64_t cap)
{
    if (n < 2)
        throw CardinalityTooSmall("cards need cardinality >= 2");
    const auto list = all_multisets(g.order(), n, cap);
    std::vector<Deck> decks;
    std::vector<std::vector<Card>> sets;
    for (const auto& m : list) {
        decks.push_back(cards(g, m));
        sets.push_back(card_set(decks.back()));
    }
    SetDeckReport rep;
    rep.n = n;
    rep.multisets = list.size();
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
            if (sets[i] == sets[j])
                rep.pairs.push_back({list[i], list[j], deck_equal(decks[i], decks[j])});
    return rep;
}

TwoCardInstance group_two_card_ambiguity(const Groupoid& g, std::span<const Element> m)
{
    const auto& prof = g.profile();
    if (!prof.associative || !prof.neutral_element || !prof.cancellative)
        throw PreconditionViolated("two-card construction needs a commutative group");
    if (m.size() < 3)
        throw PreconditionViolated("two-card construction needs n >= 3");
    const int k = g.order();
    const Element zero = *prof.neutral_element;
    Element neg_m2 = -1;
    for (Element y = 0; y < k; ++y)
        if (g.add(m[1], y) == zero)
            neg_m2 = y;

    std::vector<Element> tail(m.begin() + 3, m.end());
    std::vector<Element> first(m.begin(), m.end());
    std::vector<Element> second{g.add(m[0], m[1]), g.add(m[1], m[2]), neg_m2};
    second.insert(second.end(), tail.begin(), tail.end());
    Card a{g.add(m[0], m[1]), m[2]};
    Card b{m[0], g.add(m[1], m[2])};
    a.insert(a.end(), tail.begin(), tail.end());
    b.insert(b.end(), tail.begin(), tail.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    TwoCardInstance inst{Multiset::from_elements(k, first), Multiset::from_elements(k, second),
                         a, b, false};
    Deck wanted;
    wanted.n = static_cast<int>(m.size());
    ++wanted.cards[a];
    ++wanted.cards[b];
    auto contains = [&](const Deck& d) {
        for (const auto& [c, mult] : wanted.cards)
            if (d.multiplicity(c) < mult)
                return false;
        return true;
    };
    inst.shared = contains(cards(g, inst.first)) && contains(cards(g, inst.second));
    return inst;
}

} // namespace decklab
