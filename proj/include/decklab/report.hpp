#pragma once

#include "decklab/affine.hpp"
#include "decklab/io.hpp"
#include "decklab/reconstruction.hpp"

namespace decklab {

/// JSON renderings of library results. Keys keep insertion order and every
/// container is emitted in its deterministic iteration order, so equal
/// results serialize to equal bytes.
Json to_json(const Multiset& m);
Json to_json(const Binding& b);
Json to_json(const PatternTag& t);
Json to_json(const std::vector<PatternTag>& tags);
Json to_json(const ReconVerdict& v);
Json to_json(const Violation& v);
Json to_json(const TheoremReport& r);
Json to_json(const SweepReport& r);
Json to_json(const Counterexample& c);
Json to_json(const Example1Witness& w);
Json to_json(const MinCardsResult& r);
Json to_json(const SetDeckReport& r);
Json to_json(const TwoCardInstance& t);
Json to_json(const DeckStats& s);
Json to_json(const FunctionDeck& d);
Json to_json(const CanonicalClass& c);
Json to_json(const AffineDeck& d);
Json to_json(const AffineFunction& f);
Json to_json(const CanonicalPolynomial& p);
Json to_json(const WillardReport& r);
Json to_json(const RecognizabilityReport& r);
Json to_json(const WeakReconstructionReport& r);
Json to_json(const BridgeReport& r);
Json to_json(const FiniteField& f);
Json to_json(const Groupoid& g);

/// Renders a report as indented "key: value" lines.
std::string to_text(const Json& j);

} // namespace decklab
