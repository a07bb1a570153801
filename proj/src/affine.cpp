#include "decklab/affine.hpp"

#include "decklab/errors.hpp"
#include "decklab/parallel.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace decklab {

namespace {

void check_element(const RightSemiring& ring, Element e)
{
    if (e < 0 || e >= ring.order())
        throw CarrierMismatch("element " + std::to_string(e) + " is not in a carrier of order " +
                              std::to_string(ring.order()));
}

bool same_semiring(const RightSemiring& a, const RightSemiring& b)
{
    if (&a == &b)
        return true;
    return a.add_groupoid() == b.add_groupoid() && a.mul_table() == b.mul_table() &&
           a.zero() == b.zero() && a.one() == b.one();
}

// q^e, or 0 if it exceeds `limit`.
std::uint64_t bounded_power(std::uint64_t q, std::uint64_t e, std::uint64_t limit)
{
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (r > limit / q)
            return 0;
        r *= q;
    }
    return r;
}

constexpr std::size_t kMaxListed = 100;

} // namespace

AffineFunction::AffineFunction(std::shared_ptr<const RightSemiring> ring,
                               std::vector<Element> coefficients, Element constant)
  : ring_(std::move(ring)), coeffs_(std::move(coefficients)), constant_(constant)
{
    if (!ring_)
        throw PreconditionViolated("affine function needs a semiring");
    for (Element a : coeffs_)
        check_element(*ring_, a);
    check_element(*ring_, constant_);
}

Multiset AffineFunction::coefficient_multiset() const
{
    return Multiset::from_elements(ring_->order(), coeffs_);
}

Element AffineFunction::operator()(std::span<const int> x) const
{
    Element acc = ring_->zero();
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        acc = ring_->add(acc, ring_->mul(coeffs_[i], x[i]));
    return ring_->add(acc, constant_);
}

FiniteFunction AffineFunction::tabulate() const
{
    const int q = ring_->order();
    return FiniteFunction::tabulate(q, q, arity(), [this](std::span<const int> x) { return (*this)(x); });
}

std::pair<AffineFunction, FiniteFunction>
compile_affine(std::shared_ptr<const RightSemiring> ring, std::vector<Element> coefficients,
               Element constant)
{
    AffineFunction f(std::move(ring), std::move(coefficients), constant);
    FiniteFunction t = f.tabulate();
    return {std::move(f), std::move(t)};
}

AffineClassKey class_key(const AffineFunction& f)
{
    return {f.coefficient_multiset(), f.constant()};
}

bool affine_equivalent(const AffineFunction& f, const AffineFunction& g)
{
    if (!same_semiring(f.semiring(), g.semiring()))
        throw PreconditionViolated("affine functions over different semirings");
    if (f.arity() != g.arity())
        throw PreconditionViolated("affine functions of different arity");
    if (!(f.semiring().cancellative() || (f.is_linear() && g.is_linear())))
        throw HypothesisUnmet("needs linear functions or a cancellative semiring");
    return f.constant() == g.constant() && f.coefficient_multiset() == g.coefficient_multiset();
}

CanonicalClass class_of(const std::shared_ptr<const RightSemiring>& ring, const AffineClassKey& key,
                        int arity_cap)
{
    AffineFunction f(ring, key.coefficients.elements(), key.constant);
    return canonicalize(f.tabulate(), arity_cap);
}

AffineDeck affine_deck(const AffineFunction& f, int arity_cap)
{
    AffineDeck d;
    d.function_deck = function_deck(f.tabulate(), arity_cap);
    d.coefficient_deck = cards(f.semiring().add_groupoid(), f.coefficient_multiset());
    // f(0, ..., 0) = c because a·0 = 0.
    std::vector<int> origin(f.arity(), f.semiring().zero());
    d.constant = f(origin);

    const int order = f.semiring().order();
    for (const auto& [card, mult] : d.coefficient_deck.cards)
        d.key_deck[{Multiset::from_elements(order, card), d.constant}] += mult;

    std::map<CanonicalClass, std::size_t> image;
    for (const auto& [key, mult] : d.key_deck)
        image[class_of(f.semiring_ptr(), key, arity_cap)] += mult;
    d.coherent = image == d.function_deck.cards;
    return d;
}

std::optional<AffineFunction> is_affine(const FiniteField& field, const FiniteFunction& f)
{
    if (f.domain_size() != field.q() || f.codomain_size() != field.q())
        throw DomainMismatch("function is not a map GF(" + std::to_string(field.q()) + ")^n -> GF(" +
                             std::to_string(field.q()) + ")");
    const int n = f.arity();
    std::vector<int> x(n, 0);
    const Element c = f(x);
    std::vector<Element> coeffs(n);
    for (int i = 0; i < n; ++i) {
        x[i] = 1;
        coeffs[i] = field.sub(f(x), c);
        x[i] = 0;
    }
    AffineFunction g(field.semiring_ptr(), std::move(coeffs), c);
    if (g.tabulate().table() != f.table())
        return std::nullopt;
    return g;
}

int CanonicalPolynomial::degree() const
{
    int d = -1;
    for (const auto& [exps, coeff] : terms) {
        int s = 0;
        for (int e : exps)
            s += e;
        d = std::max(d, s);
    }
    return d;
}

namespace {

// Inverse of V[x][e] = x^e over the field, by Gauss-Jordan elimination.
std::vector<std::vector<Element>> vandermonde_inverse(const FiniteField& field)
{
    const int q = field.q();
    std::vector<std::vector<Element>> m(q, std::vector<Element>(2 * q, 0));
    for (int x = 0; x < q; ++x) {
        for (int e = 0; e < q; ++e)
            m[x][e] = field.pow(x, e);
        m[x][q + x] = 1;
    }
    for (int col = 0; col < q; ++col) {
        int pivot = col;
        while (m[pivot][col] == 0)
            ++pivot;
        std::swap(m[pivot], m[col]);
        const Element s = field.inv(m[col][col]);
        for (auto& v : m[col])
            v = field.mul(s, v);
        for (int r = 0; r < q; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            const Element factor = m[r][col];
            for (int j = 0; j < 2 * q; ++j)
                m[r][j] = field.sub(m[r][j], field.mul(factor, m[col][j]));
        }
    }
    std::vector<std::vector<Element>> inv(q, std::vector<Element>(q));
    for (int e = 0; e < q; ++e)
        for (int x = 0; x < q; ++x)
            inv[e][x] = m[e][q + x];
    return inv;
}

} // namespace

CanonicalPolynomial canonical_polynomial(const FiniteField& field, const FiniteFunction& f,
                                         std::size_t cap)
{
    if (f.domain_size() != field.q() || f.codomain_size() != field.q())
        throw DomainMismatch("function is not a map over GF(" + std::to_string(field.q()) + ")");
    const int q = field.q();
    const int n = f.arity();
    const std::size_t len = f.table().size();
    if (len > cap)
        throw CapExceeded("q^n = " + std::to_string(len) + " exceeds polynomial cap " +
                          std::to_string(cap));

    const auto vinv = vandermonde_inverse(field);
    // Transform one axis at a time; coefficient and value tensors share the
    // table's index layout.
    std::vector<Element> c = f.table();
    std::vector<Element> fibre(q);
    std::size_t stride = 1;
    for (int axis = n - 1; axis >= 0; --axis) {
        const std::size_t block = stride * q;
        for (std::size_t base = 0; base < len; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                for (int x = 0; x < q; ++x)
                    fibre[x] = c[base + off + x * stride];
                for (int e = 0; e < q; ++e) {
                    Element acc = 0;
                    for (int x = 0; x < q; ++x)
                        acc = field.add(acc, field.mul(vinv[e][x], fibre[x]));
                    c[base + off + e * stride] = acc;
                }
            }
        }
        stride = block;
    }

    CanonicalPolynomial p;
    p.arity = n;
    std::vector<int> exps(n, 0);
    for (std::size_t idx = 0; idx < len; ++idx) {
        if (c[idx] != 0)
            p.terms.emplace(exps, c[idx]);
        for (int i = n - 1; i >= 0; --i) {
            if (++exps[i] < q)
                break;
            exps[i] = 0;
        }
    }
    return p;
}

FiniteFunction evaluate_polynomial(const FiniteField& field, const CanonicalPolynomial& p)
{
    const int q = field.q();
    return FiniteFunction::tabulate(q, q, p.arity, [&](std::span<const int> x) {
        Element acc = 0;
        for (const auto& [exps, coeff] : p.terms) {
            Element t = coeff;
            for (int i = 0; i < p.arity; ++i)
                t = field.mul(t, field.pow(x[i], exps[i]));
            acc = field.add(acc, t);
        }
        return acc;
    });
}

std::string to_string(const CanonicalPolynomial& p)
{
    if (p.terms.empty())
        return "0";
    std::string out;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [exps, coeff] = *it;
        std::string mono;
        for (int i = 0; i < p.arity; ++i) {
            if (exps[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (exps[i] > 1)
                mono += "^" + std::to_string(exps[i]);
        }
        std::string term;
        if (mono.empty())
            term = std::to_string(coeff);
        else if (coeff == 1)
            term = mono;
        else
            term = std::to_string(coeff) + "*" + mono;
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

std::string to_string(const AffineFunction& f)
{
    const auto& ring = f.semiring();
    std::string out;
    for (int i = 0; i < f.arity(); ++i) {
        const Element a = f.coefficients()[i];
        bool vanishes = true;
        for (Element x = 0; x < ring.order() && vanishes; ++x)
            vanishes = ring.mul(a, x) == ring.zero();
        if (vanishes)
            continue;
        std::string term = "x" + std::to_string(i + 1);
        if (a != ring.one())
            term = std::to_string(a) + "*" + term;
        out += (out.empty() ? "" : " + ") + term;
    }
    if (out.empty() || f.constant() != ring.zero())
        out += (out.empty() ? "" : " + ") + std::to_string(f.constant());
    return out;
}

namespace {

struct RecognizabilityChunk
{
    std::uint64_t checked = 0;
    std::uint64_t non_affine = 0;
    std::uint64_t all_minors_affine = 0;
    std::vector<std::string> listed;
};

} // namespace

RecognizabilityReport verify_recognizability(const FiniteField& field, int n, const SweepConfig& cfg)
{
    if (n < 2)
        throw PreconditionViolated("recognizability needs arity >= 2");
    const int q = field.q();
    const std::size_t len = FiniteFunction::table_length(q, n);
    const std::uint64_t total = bounded_power(q, len, cfg.exhaustive_cap);

    RecognizabilityReport rep;
    rep.field = field.name();
    rep.n = n;
    rep.exhaustive = total != 0;
    rep.seed = cfg.seed;
    rep.lemma_applies = n > std::max(q, 3);

    const std::uint64_t count = rep.exhaustive ? total : cfg.samples;
    const std::uint64_t chunk = 1024;
    auto parts = parallel_chunks(count, chunk, cfg.workers, [&](std::uint64_t b, std::uint64_t e) {
        RecognizabilityChunk c;
        std::mt19937_64 rng;
        if (!rep.exhaustive) {
            std::seed_seq seq{cfg.seed, b / chunk};
            rng.seed(seq);
        }
        std::uniform_int_distribution<int> pick(0, q - 1);
        std::vector<int> table(len);
        for (std::uint64_t idx = b; idx < e; ++idx) {
            if (rep.exhaustive) {
                std::uint64_t rest = idx;
                for (std::size_t i = len; i-- > 0;) {
                    table[i] = static_cast<int>(rest % q);
                    rest /= q;
                }
            } else {
                for (auto& v : table)
                    v = pick(rng);
            }
            FiniteFunction f(q, q, n, table);
            ++c.checked;
            if (is_affine(field, f))
                continue;
            ++c.non_affine;
            bool all_affine = true;
            for (const Couple cp : couples(n))
                if (!is_affine(field, identification_minor(f, cp))) {
                    all_affine = false;
                    break;
                }
            if (!all_affine)
                continue;
            ++c.all_minors_affine;
            if (c.listed.size() < kMaxListed)
                c.listed.push_back(to_string(canonical_polynomial(field, f, len)));
        }
        return c;
    });

    std::vector<std::string> listed;
    for (auto& c : parts) {
        rep.functions_checked += c.checked;
        rep.non_affine += c.non_affine;
        rep.all_minors_affine += c.all_minors_affine;
        for (auto& s : c.listed)
            if (listed.size() < kMaxListed)
                listed.push_back(std::move(s));
    }
    if (rep.lemma_applies)
        rep.violations = std::move(listed);
    else
        rep.boundary_examples = std::move(listed);
    rep.falsified = rep.lemma_applies && rep.all_minors_affine > 0;
    return rep;
}

namespace {

struct FamilyMember
{
    FunctionDeck deck;
    CanonicalClass cls;
    AffineClassKey key;
    Deck coefficient_deck;
};

} // namespace

WeakReconstructionReport verify_weak_reconstructibility(std::shared_ptr<const RightSemiring> ring,
                                                        int n, const SweepConfig& cfg)
{
    if (!ring)
        throw PreconditionViolated("weak reconstruction needs a semiring");
    if (n < 2)
        throw PreconditionViolated("weak reconstruction needs arity >= 2");
    const int q = ring->order();

    WeakReconstructionReport rep;
    rep.order = q;
    rep.n = n;
    rep.cancellative = ring->cancellative();
    rep.family = rep.cancellative ? "affine" : "linear";
    rep.theorem_applies = n >= 4;
    rep.additive_associative = ring->add_groupoid().profile().associative;

    const int digits = rep.cancellative ? n + 1 : n;
    const std::uint64_t total = bounded_power(q, digits, cfg.exhaustive_cap);
    if (total == 0)
        throw CapExceeded("affine family of arity " + std::to_string(n) + " over order " +
                          std::to_string(q) + " exceeds cap " + std::to_string(cfg.exhaustive_cap));

    auto make = [&](std::uint64_t idx) {
        std::vector<Element> coeffs(n);
        Element c = ring->zero();
        std::uint64_t rest = idx;
        if (rep.cancellative) {
            c = static_cast<Element>(rest % q);
            rest /= q;
        }
        for (int i = n - 1; i >= 0; --i) {
            coeffs[i] = static_cast<Element>(rest % q);
            rest /= q;
        }
        return AffineFunction(ring, std::move(coeffs), c);
    };

    auto parts = parallel_chunks(total, 64, cfg.workers, [&](std::uint64_t b, std::uint64_t e) {
        std::vector<FamilyMember> out;
        for (std::uint64_t idx = b; idx < e; ++idx) {
            const AffineFunction f = make(idx);
            const FiniteFunction t = f.tabulate();
            out.push_back({function_deck(t), canonicalize(t), class_key(f),
                           cards(ring->add_groupoid(), f.coefficient_multiset())});
        }
        return out;
    });
    std::vector<FamilyMember> family;
    for (auto& p : parts)
        for (auto& m : p)
            family.push_back(std::move(m));
    rep.functions = family.size();

    auto note = [](std::vector<std::string>& list, std::string s) {
        if (list.size() < kMaxListed)
            list.push_back(std::move(s));
    };
    auto label = [&](std::size_t i) { return to_string(make(i)); };

    std::map<FunctionDeck, std::vector<std::size_t>> by_deck;
    std::map<CanonicalClass, std::vector<std::size_t>> by_class;
    std::map<AffineClassKey, std::set<CanonicalClass>> key_to_class;
    std::map<CanonicalClass, std::set<AffineClassKey>> class_to_key;
    for (std::size_t i = 0; i < family.size(); ++i) {
        by_deck[family[i].deck].push_back(i);
        by_class[family[i].cls].push_back(i);
        key_to_class[family[i].key].insert(family[i].cls);
        class_to_key[family[i].cls].insert(family[i].key);
    }
    rep.deck_classes = by_deck.size();
    rep.equivalence_classes = by_class.size();

    // Equivalent functions have equal decks.
    for (const auto& [cls, members] : by_class)
        for (std::size_t j = 1; j < members.size(); ++j)
            if (!(family[members[j]].deck == family[members[0]].deck))
                note(rep.violations, "equivalent but different decks: " + label(members[0]) +
                                         " | " + label(members[j]));

    // F_{M,c} classes and table classes correspond one to one.
    for (const auto& [key, classes] : key_to_class)
        if (classes.size() != 1)
            note(rep.violations, "key " + to_string(key.coefficients) + "/" +
                                     std::to_string(key.constant) + " spans several classes");
    for (const auto& [cls, keys] : class_to_key)
        if (keys.size() != 1)
            note(rep.violations, "class with several coefficient keys");

    for (const auto& [deck, members] : by_deck) {
        for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                const FamilyMember& f = family[members[x]];
                const FamilyMember& g = family[members[y]];
                ++rep.deck_equal_pairs;
                const bool equiv = f.cls == g.cls;
                if (!equiv) {
                    ++rep.inequivalent_deck_equal_pairs;
                    if (rep.theorem_applies)
                        note(rep.violations,
                             "deck-equal but inequivalent: " + label(members[x]) + " | " + label(members[y]));
                    else if (rep.boundary_pairs.size() < kMaxListed)
                        rep.boundary_pairs.emplace_back(label(members[x]), label(members[y]));
                }
                if (!rep.theorem_applies)
                    continue;
                if (f.key.constant != g.key.constant)
                    note(rep.violations, "deck-equal with different constants: " + label(members[x]) +
                                             " | " + label(members[y]));
                if (!(f.coefficient_deck == g.coefficient_deck))
                    note(rep.violations, "deck-equal with different coefficient decks: " +
                                             label(members[x]) + " | " + label(members[y]));
                // For n = 4 the multiset step needs + associative.
                if ((n >= 5 || rep.additive_associative) && !(f.key.coefficients == g.key.coefficients))
                    note(rep.violations, "deck-equal with different coefficient multisets: " +
                                             label(members[x]) + " | " + label(members[y]));
            }
        }
    }
    rep.falsified = !rep.violations.empty();
    return rep;
}

BridgeReport verify_bridge(const std::vector<FiniteField>& fields, int min_arity, int max_arity,
                           std::uint64_t count, const SweepConfig& cfg)
{
    if (fields.empty() || min_arity < 2 || max_arity < min_arity)
        throw PreconditionViolated("bridge sweep needs fields and 2 <= min_arity <= max_arity");
    BridgeReport rep;
    rep.seed = cfg.seed;
    const std::uint64_t chunk = 64;
    struct Part
    {
        std::uint64_t functions = 0;
        std::uint64_t coherent = 0;
        std::vector<std::string> violations;
    };
    auto parts = parallel_chunks(count, chunk, cfg.workers, [&](std::uint64_t b, std::uint64_t e) {
        Part part;
        std::seed_seq seq{cfg.seed, b / chunk};
        std::mt19937_64 rng(seq);
        std::uniform_int_distribution<std::size_t> pick_field(0, fields.size() - 1);
        std::uniform_int_distribution<int> pick_arity(min_arity, max_arity);
        for (std::uint64_t i = b; i < e; ++i) {
            const FiniteField& field = fields[pick_field(rng)];
            const int n = pick_arity(rng);
            std::uniform_int_distribution<int> pick(0, field.q() - 1);
            std::vector<Element> coeffs(n);
            for (auto& a : coeffs)
                a = pick(rng);
            const Element c = pick(rng);
            AffineFunction f(field.semiring_ptr(), std::move(coeffs), c);
            ++part.functions;
            if (affine_deck(f).coherent)
                ++part.coherent;
            else if (part.violations.size() < kMaxListed)
                part.violations.push_back(field.name() + ": " + to_string(f));
        }
        return part;
    });
    for (auto& p : parts) {
        rep.functions += p.functions;
        rep.coherent += p.coherent;
        for (auto& v : p.violations)
            if (rep.violations.size() < kMaxListed)
                rep.violations.push_back(std::move(v));
    }
    rep.falsified = rep.coherent != rep.functions;
    return rep;
}

} // namespace decklab
