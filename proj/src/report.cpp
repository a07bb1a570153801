#include "decklab/report.hpp"

namespace decklab {

Json to_json(const Multiset& m)
{
    return to_string(m);
}

Json to_json(const Binding& b)
{
    Json j = Json::object();
    for (const auto& [var, e] : b)
        j[std::string(1, var)] = e;
    return j;
}

Json to_json(const PatternTag& t)
{
    return Json{{"pattern", pattern_name(t.pattern)}, {"binding", to_json(t.binding)}};
}

Json to_json(const std::vector<PatternTag>& tags)
{
    Json j = Json::array();
    for (const auto& t : tags)
        j.push_back(to_json(t));
    return j;
}

Json to_json(const ReconVerdict& v)
{
    Json witnesses = Json::array();
    for (std::size_t i = 0; i < v.witnesses.size(); ++i)
        witnesses.push_back(Json{{"multiset", to_json(v.witnesses[i])},
                                 {"patterns", to_json(v.matched_patterns[i])}});
    return Json{{"reconstructible", v.reconstructible}, {"witnesses", std::move(witnesses)}};
}

Json to_json(const Violation& v)
{
    return Json{{"kind", v.kind},     {"order", v.order},   {"table", v.table},
                {"first", to_json(v.first)}, {"second", to_json(v.second)}, {"detail", v.detail}};
}

namespace {

template <typename T>
Json array_of(const std::vector<T>& xs)
{
    Json j = Json::array();
    for (const auto& x : xs)
        j.push_back(to_json(x));
    return j;
}

} // namespace

Json to_json(const TheoremReport& r)
{
    Json exceptional = Json::array();
    for (const auto& e : r.exceptional)
        exceptional.push_back(
            Json{{"first", to_json(e.first)}, {"second", to_json(e.second)}, {"tags", to_json(e.tags)}});
    Json j{{"theorem", r.theorem},
           {"order", r.order},
           {"n", r.n},
           {"multisets", r.multisets},
           {"pairs_checked", r.pairs_checked},
           {"deck_equal_pairs", r.deck_equal_pairs},
           {"exceptional", std::move(exceptional)},
           {"violations", array_of(r.violations)}};
    if (r.all_reconstructible)
        j["all_reconstructible"] = *r.all_reconstructible;
    j["falsified"] = r.falsified;
    return j;
}

Json to_json(const SweepReport& r)
{
    Json per_order = Json::array();
    for (const auto& o : r.per_order)
        per_order.push_back(Json{{"order", o.order},
                                 {"groupoids", o.groupoids},
                                 {"pairs_checked", o.pairs_checked},
                                 {"deck_equal_pairs", o.deck_equal_pairs},
                                 {"groupoids_with_exceptions", o.groupoids_with_exceptions}});
    Json tags = Json::object();
    for (const auto& [name, count] : r.tag_counts)
        tags[name] = count;
    return Json{{"theorem", r.theorem},
                {"n", r.n},
                {"max_order", r.max_order},
                {"groupoids_checked", r.groupoids_checked},
                {"pairs_checked", r.pairs_checked},
                {"deck_equal_pairs", r.deck_equal_pairs},
                {"tag_counts", std::move(tags)},
                {"per_order", std::move(per_order)},
                {"violation_count", r.violation_count},
                {"violations", array_of(r.violations)},
                {"falsified", r.falsified}};
}

Json to_json(const Groupoid& g)
{
    return Json{{"order", g.order()}, {"add", g.table()}};
}

Json to_json(const Counterexample& c)
{
    return Json{{"order", c.groupoid.order()},
                {"table", std::vector<Element>(c.groupoid.flat().begin(), c.groupoid.flat().end())},
                {"first", to_json(c.first)},
                {"second", to_json(c.second)},
                {"tags", to_json(c.tags)}};
}

Json to_json(const Example1Witness& w)
{
    return Json{{"groupoid", to_json(w.groupoid)},
                {"r", w.r},
                {"s", w.s},
                {"t", w.t},
                {"u", w.u},
                {"v", w.v},
                {"deck_first", to_json(w.deck_first)},
                {"deck_second", to_json(w.deck_second)}};
}

Json to_json(const MinCardsResult& r)
{
    Json j{{"n", r.n},
           {"deck_size", r.deck_size},
           {"max_shared", r.max_shared},
           {"min_cards", r.min_cards},
           {"determined", r.determined}};
    if (r.certificate)
        j["certificate"] = Json::array({to_json(r.certificate->first), to_json(r.certificate->second)});
    else
        j["certificate"] = nullptr;
    j["shared"] = to_json(r.shared);
    if (r.min_cards_some)
        j["min_cards_some"] = *r.min_cards_some;
    return j;
}

Json to_json(const SetDeckReport& r)
{
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
        pairs.push_back(Json{{"first", to_json(p.first)},
                             {"second", to_json(p.second)},
                             {"multiset_deck_equal", p.multiset_deck_equal}});
    return Json{{"n", r.n}, {"multisets", r.multisets}, {"pairs", std::move(pairs)}};
}

Json to_json(const TwoCardInstance& t)
{
    return Json{{"first", to_json(t.first)},
                {"second", to_json(t.second)},
                {"card_a", t.card_a},
                {"card_b", t.card_b},
                {"shared", t.shared}};
}

Json to_json(const DeckStats& s)
{
    return Json{{"occurrences", s.occurrences}, {"delta", s.delta}};
}

Json to_json(const CanonicalClass& c)
{
    return Json{{"a", c.domain_size}, {"b", c.codomain_size}, {"n", c.arity}, {"table", c.table}};
}

Json to_json(const FunctionDeck& d)
{
    Json cards = Json::array();
    for (const auto& [cls, mult] : d.cards)
        cards.push_back(Json{{"class", cls.table}, {"mult", mult}});
    return Json{{"n", d.arity}, {"cards", std::move(cards)}};
}

Json to_json(const AffineFunction& f)
{
    return Json{{"expression", to_string(f)},
                {"coefficients", f.coefficients()},
                {"constant", f.constant()},
                {"coefficient_multiset", to_json(f.coefficient_multiset())}};
}

Json to_json(const AffineDeck& d)
{
    Json keys = Json::array();
    for (const auto& [key, mult] : d.key_deck)
        keys.push_back(Json{{"coefficients", to_json(key.coefficients)}, {"constant", key.constant}, {"mult", mult}});
    return Json{{"function_deck", to_json(d.function_deck)},
                {"coefficient_deck", to_json(d.coefficient_deck)},
                {"constant", d.constant},
                {"key_deck", std::move(keys)},
                {"coherent", d.coherent}};
}

Json to_json(const CanonicalPolynomial& p)
{
    Json terms = Json::array();
    for (const auto& [exps, coeff] : p.terms)
        terms.push_back(Json{{"exponents", exps}, {"coefficient", coeff}});
    return Json{{"arity", p.arity}, {"degree", p.degree()}, {"expression", to_string(p)}, {"terms", std::move(terms)}};
}

Json to_json(const WillardReport& r)
{
    return Json{{"domain_size", r.domain_size},
                {"n", r.n},
                {"exhaustive", r.exhaustive},
                {"seed", r.seed},
                {"functions_checked", r.functions_checked},
                {"depending_on_all", r.depending_on_all},
                {"confirmed", r.confirmed},
                {"violations", r.violations},
                {"falsified", r.falsified}};
}

Json to_json(const RecognizabilityReport& r)
{
    return Json{{"field", r.field},
                {"n", r.n},
                {"exhaustive", r.exhaustive},
                {"seed", r.seed},
                {"lemma_applies", r.lemma_applies},
                {"functions_checked", r.functions_checked},
                {"non_affine", r.non_affine},
                {"all_minors_affine", r.all_minors_affine},
                {"violations", r.violations},
                {"boundary_examples", r.boundary_examples},
                {"falsified", r.falsified}};
}

Json to_json(const WeakReconstructionReport& r)
{
    Json boundary = Json::array();
    for (const auto& [f, g] : r.boundary_pairs)
        boundary.push_back(Json::array({f, g}));
    return Json{{"order", r.order},
                {"n", r.n},
                {"cancellative", r.cancellative},
                {"family", r.family},
                {"theorem_applies", r.theorem_applies},
                {"additive_associative", r.additive_associative},
                {"functions", r.functions},
                {"deck_classes", r.deck_classes},
                {"equivalence_classes", r.equivalence_classes},
                {"deck_equal_pairs", r.deck_equal_pairs},
                {"inequivalent_deck_equal_pairs", r.inequivalent_deck_equal_pairs},
                {"boundary_pairs", std::move(boundary)},
                {"violations", r.violations},
                {"falsified", r.falsified}};
}

Json to_json(const BridgeReport& r)
{
    return Json{{"seed", r.seed},
                {"functions", r.functions},
                {"coherent", r.coherent},
                {"violations", r.violations},
                {"falsified", r.falsified}};
}

Json to_json(const FiniteField& f)
{
    Json add = Json::array();
    Json mul = Json::array();
    for (int a = 0; a < f.q(); ++a) {
        Json ra = Json::array();
        Json rm = Json::array();
        for (int b = 0; b < f.q(); ++b) {
            ra.push_back(f.add(a, b));
            rm.push_back(f.mul(a, b));
        }
        add.push_back(std::move(ra));
        mul.push_back(std::move(rm));
    }
    return Json{{"field", f.name()},
                {"p", f.p()},
                {"k", f.k()},
                {"q", f.q()},
                {"reduction_polynomial", f.reduction_polynomial()},
                {"generator", f.generator()},
                {"order", f.q()},
                {"add", std::move(add)},
                {"mul", std::move(mul)},
                {"zero", 0},
                {"one", 1}};
}

namespace {

void render(const Json& j, const std::string& indent, std::string& out)
{
    for (const auto& [key, value] : j.items()) {
        if (value.is_object() && !value.empty()) {
            out += indent + key + ":\n";
            render(value, indent + "  ", out);
        } else if (value.is_array() && !value.empty() && value.front().is_object()) {
            out += indent + key + ": " + std::to_string(value.size()) + " item(s)\n";
            for (const auto& item : value) {
                out += indent + "  -\n";
                render(item, indent + "    ", out);
            }
        } else if (value.is_string()) {
            out += indent + key + ": " + value.get<std::string>() + "\n";
        } else {
            out += indent + key + ": " + value.dump() + "\n";
        }
    }
}

} // namespace

std::string to_text(const Json& j)
{
    std::string out;
    if (j.is_object())
        render(j, "", out);
    else
        out = j.dump() + "\n";
    return out;
}

} // namespace decklab
