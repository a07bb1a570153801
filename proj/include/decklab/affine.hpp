#pragma once

#include "decklab/deck.hpp"
#include "decklab/finite_field.hpp"
#include "decklab/finite_function.hpp"
#include "decklab/multiset.hpp"
#include "decklab/semiring.hpp"
#include "decklab/sweep_config.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace decklab {

/// f(x_1, ..., x_n) = a_1·x_1 + ... + a_n·x_n + c over a nonassociative
/// right semiring, with coefficients multiplied on the left of each variable.
class AffineFunction
{
public:
    /// Throws `CarrierMismatch` if a coefficient or the constant is not an
    /// element of the semiring.
    AffineFunction(std::shared_ptr<const RightSemiring> ring, std::vector<Element> coefficients,
                   Element constant);

    const RightSemiring& semiring() const noexcept { return *ring_; }
    const std::shared_ptr<const RightSemiring>& semiring_ptr() const noexcept { return ring_; }
    const std::vector<Element>& coefficients() const noexcept { return coeffs_; }
    Element constant() const noexcept { return constant_; }
    int arity() const noexcept { return static_cast<int>(coeffs_.size()); }
    bool is_linear() const noexcept { return constant_ == ring_->zero(); }

    /// C_f, the multiset of coefficients of the non-constant terms.
    Multiset coefficient_multiset() const;

    Element operator()(std::span<const int> x) const;
    FiniteFunction tabulate() const;

private:
    std::shared_ptr<const RightSemiring> ring_;
    std::vector<Element> coeffs_;
    Element constant_;
};

std::pair<AffineFunction, FiniteFunction>
compile_affine(std::shared_ptr<const RightSemiring> ring, std::vector<Element> coefficients,
               Element constant);

/// Names the class F_{M,c} of affine functions with coefficient multiset M
/// and constant c.
struct AffineClassKey
{
    Multiset coefficients;
    Element constant = 0;

    auto operator<=>(const AffineClassKey&) const = default;
};

AffineClassKey class_key(const AffineFunction& f);

/// f ≡ g decided through C_f = C_g and equal constants. Throws
/// `HypothesisUnmet` unless both are linear or the semiring is cancellative,
/// and `PreconditionViolated` on differing semirings or arities.
bool affine_equivalent(const AffineFunction& f, const AffineFunction& g);

/// Canonical class of the functions in F_{M,c}.
CanonicalClass class_of(const std::shared_ptr<const RightSemiring>& ring, const AffineClassKey& key,
                        int arity_cap = kDefaultArityCap);

struct AffineDeck
{
    FunctionDeck function_deck;
    /// Deck of C_f over the additive groupoid.
    Deck coefficient_deck;
    Element constant = 0;
    /// Images of the coefficient-deck cards, keyed by F_{M_I, c}.
    std::map<AffineClassKey, std::size_t> key_deck;
    /// The function deck equals the image of the coefficient deck.
    bool coherent = false;
};

AffineDeck affine_deck(const AffineFunction& f, int arity_cap = kDefaultArityCap);

/// Recovers c = f(0, ..., 0) and a_i = f(e_i) - c and returns the affine
/// function iff it reproduces f's table. Throws `DomainMismatch` unless f
/// maps GF(q)^n to GF(q).
std::optional<AffineFunction> is_affine(const FiniteField& field, const FiniteFunction& f);

/// Coefficients indexed by exponent vectors in {0..q-1}^n; only nonzero
/// terms are stored.
struct CanonicalPolynomial
{
    int arity = 0;
    std::map<std::vector<int>, Element> terms;

    /// Largest total degree of a term; -1 for the zero polynomial.
    int degree() const;
    bool operator==(const CanonicalPolynomial&) const = default;
};

inline constexpr std::size_t kDefaultPolynomialCap = 4096;

/// Solves the evaluation system of the monomial basis one variable at a
/// time (the system is the n-fold Kronecker power of the q x q
/// Vandermonde matrix). Throws `CapExceeded` if q^n > cap.
CanonicalPolynomial canonical_polynomial(const FiniteField& field, const FiniteFunction& f,
                                         std::size_t cap = kDefaultPolynomialCap);

FiniteFunction evaluate_polynomial(const FiniteField& field, const CanonicalPolynomial& p);

/// "x1*x2 + 2*x3^2 + 1"; field elements print as their integer codes.
std::string to_string(const CanonicalPolynomial& p);

struct RecognizabilityReport
{
    std::string field;
    int n = 0;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    /// n > max(q, 3).
    bool lemma_applies = false;
    std::uint64_t functions_checked = 0;
    std::uint64_t non_affine = 0;
    /// Non-affine functions all of whose minors are affine.
    std::uint64_t all_minors_affine = 0;
    /// Listed as violations when the lemma applies, otherwise as boundary
    /// examples (canonical polynomials).
    std::vector<std::string> violations;
    std::vector<std::string> boundary_examples;
    bool falsified = false;
};

RecognizabilityReport verify_recognizability(const FiniteField& field, int n,
                                             const SweepConfig& cfg = {});

struct WeakReconstructionReport
{
    int order = 0;
    int n = 0;
    bool cancellative = false;
    /// Affine (cancellative) or linear functions only.
    std::string family;
    bool theorem_applies = false;
    bool additive_associative = false;
    std::uint64_t functions = 0;
    std::uint64_t deck_classes = 0;
    std::uint64_t equivalence_classes = 0;
    std::uint64_t deck_equal_pairs = 0;
    /// Deck-equal pairs that are not equivalent.
    std::uint64_t inequivalent_deck_equal_pairs = 0;
    std::vector<std::pair<std::string, std::string>> boundary_pairs;
    std::vector<std::string> violations;
    bool falsified = false;
};

/// For every pair of functions in the family: deck f = deck g iff f ≡ g,
/// and along the reduction path deck f = deck g implies equal constants,
/// deck C_f = deck C_g, and (n >= 4) C_f = C_g. Throws `CapExceeded` if the
/// family is larger than `cfg.exhaustive_cap`.
WeakReconstructionReport verify_weak_reconstructibility(std::shared_ptr<const RightSemiring> ring,
                                                        int n, const SweepConfig& cfg = {});

/// "x1 + 2*x2 + 1" style rendering; terms whose coefficient sends every
/// element to zero are left out.
std::string to_string(const AffineFunction& f);

struct BridgeReport
{
    std::uint64_t seed = 0;
    std::uint64_t functions = 0;
    std::uint64_t coherent = 0;
    std::vector<std::string> violations;
    bool falsified = false;
};

/// Random affine functions over each field with arity in [min_arity,
/// max_arity]; checks `affine_deck(f).coherent`.
BridgeReport verify_bridge(const std::vector<FiniteField>& fields, int min_arity, int max_arity,
                           std::uint64_t count, const SweepConfig& cfg = {});

} // namespace decklab
