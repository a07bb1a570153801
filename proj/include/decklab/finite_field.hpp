#pragma once

#include "decklab/semiring.hpp"

#include <memory>
#include <string>
#include <vector>

namespace decklab {

inline constexpr int kDefaultFieldCap = 64;

class FiniteField;

/// Builds GF(p^k). Throws `NotPrime` or `CapExceeded` (q > cap). All field
/// axioms are re-verified exhaustively on the realized tables.
FiniteField make_gf(int p, int k, int cap = kDefaultFieldCap);

/// GF(p^k) with explicit addition and multiplication tables.
///
/// Element e encodes the residue polynomial sum_i c_i X^i with
/// e = sum_i c_i p^i, so 0 and 1 are the field's zero and one and, for k > 1,
/// the element p is the class of X.
class FiniteField
{
public:
    int p() const noexcept { return p_; }
    int k() const noexcept { return k_; }
    int q() const noexcept { return q_; }

    /// Monic reduction polynomial, lowest degree first (length k + 1).
    const std::vector<int>& reduction_polynomial() const noexcept
    {
        return modulus_;
    }

    Element add(Element a, Element b) const noexcept { return ring_->add(a, b); }
    Element mul(Element a, Element b) const noexcept { return ring_->mul(a, b); }
    Element neg(Element a) const noexcept { return neg_[a]; }
    Element sub(Element a, Element b) const noexcept { return add(a, neg_[b]); }
    /// Multiplicative inverse; `a` must be nonzero.
    Element inv(Element a) const noexcept { return inv_[a]; }
    Element pow(Element a, int e) const noexcept;

    /// Image of an integer under Z -> GF(p).
    Element from_integer(long long v) const noexcept;

    /// The class of X (k > 1) or 1 (k == 1).
    Element generator() const noexcept { return k_ > 1 ? p_ : 1; }

    const RightSemiring& semiring() const noexcept { return *ring_; }
    std::shared_ptr<const RightSemiring> semiring_ptr() const noexcept
    {
        return ring_;
    }

    /// "GF(4)" style label.
    std::string name() const;

private:
    friend FiniteField make_gf(int, int, int);
    FiniteField() = default;

    int p_ = 0;
    int k_ = 0;
    int q_ = 0;
    std::vector<int> modulus_;
    std::vector<Element> neg_;
    std::vector<Element> inv_;
    std::shared_ptr<const RightSemiring> ring_;
};

bool is_prime(int n);

/// Polynomial over Z_p, lowest degree first, no trailing zeros except for the
/// zero polynomial {}.
using ZpPolynomial = std::vector<int>;

/// Irreducibility over Z_p by trial division by every monic polynomial of
/// degree 1..deg/2.
bool is_irreducible(const ZpPolynomial& f, int p);

/// The monic irreducible polynomial of degree k over Z_p whose lower
/// coefficients, read as a base-p number with the X^(k-1) coefficient most
/// significant, are smallest.
ZpPolynomial smallest_irreducible(int p, int k);


} // namespace decklab
