#pragma once

#include "decklab/groupoid.hpp"

#include <vector>

namespace decklab {

/// Largest order for which axioms quantified over three variables are
/// checked by default. Larger carriers need an explicit cap.
inline constexpr int kTernaryAxiomCap = 8;

class RightSemiring;

/// Validates every axiom exhaustively and reports the first failure with a
/// witness (`NotAMonoid`, `RightIdentityViolation`,
/// `RightDistributivityViolation`, `RightAnnihilationViolation`). Throws
/// `CapExceeded` when the order is above `ternary_cap`.
RightSemiring make_semiring(const Table& add_table, const Table& mul_table,
                            Element zero, Element one,
                            int ternary_cap = kTernaryAxiomCap);

/// Nonassociative right semiring (G; +, ·): (G; +) a commutative monoid with
/// neutral `zero`, `one` a right identity for ·, · right-distributive over +,
/// and right multiplication by `zero` annihilating G.
class RightSemiring
{
public:
    const Groupoid& add_groupoid() const noexcept { return add_; }
    int order() const noexcept { return add_.order(); }

    Element add(Element a, Element b) const noexcept { return add_.add(a, b); }
    Element mul(Element a, Element b) const noexcept
    {
        return mul_[static_cast<std::size_t>(a) * add_.order() + b];
    }

    Element zero() const noexcept { return zero_; }
    Element one() const noexcept { return one_; }

    /// a + b = a + c implies b = c, checked exhaustively.
    bool cancellative() const noexcept { return add_.profile().cancellative; }

    Table mul_table() const;

private:
    friend RightSemiring make_semiring(const Table&, const Table&, Element,
                                       Element, int);
    RightSemiring(Groupoid add, std::vector<Element> mul, Element zero,
                  Element one)
      : add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one)
    {
    }

    Groupoid add_;
    std::vector<Element> mul_;
    Element zero_;
    Element one_;
};

/// ({0,1,...}, max, min), a bounded distributive chain.
RightSemiring chain_lattice(int order);

} // namespace decklab
