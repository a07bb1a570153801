#pragma once

#include "decklab/sweep_config.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace decklab {

inline constexpr int kDefaultArityCap = 7;

/// f : A^n -> B as a dense value table.
///
/// Argument tuples are indexed in mixed radix |A| with the first argument as
/// the most significant digit: (a_1, ..., a_n) -> sum_i a_i |A|^(n-i).
class FiniteFunction
{
public:
    FiniteFunction() = default;

    /// Throws `OutOfRange` on a bad table length or value.
    FiniteFunction(int domain_size, int codomain_size, int arity, std::vector<int> table);

    /// Tabulates `fn(args)` over all tuples in index order.
    template <typename Fn>
    static FiniteFunction tabulate(int domain_size, int codomain_size, int arity, Fn&& fn)
    {
        std::vector<int> table(table_length(domain_size, arity));
        std::vector<int> args(arity, 0);
        for (std::size_t idx = 0; idx < table.size(); ++idx) {
            table[idx] = fn(std::span<const int>(args));
            for (int i = arity - 1; i >= 0; --i) {
                if (++args[i] < domain_size)
                    break;
                args[i] = 0;
            }
        }
        return FiniteFunction(domain_size, codomain_size, arity, std::move(table));
    }

    /// i-th projection (0-based) of the given arity.
    static FiniteFunction projection(int domain_size, int arity, int i);

    static std::size_t table_length(int domain_size, int arity);

    int domain_size() const noexcept { return a_; }
    int codomain_size() const noexcept { return b_; }
    int arity() const noexcept { return n_; }
    const std::vector<int>& table() const noexcept { return table_; }

    int operator()(std::span<const int> args) const;
    std::size_t index_of(std::span<const int> args) const;

    auto operator<=>(const FiniteFunction&) const = default;

private:
    int a_ = 0;
    int b_ = 0;
    int n_ = 0;
    std::vector<int> table_;
};

/// A 2-subset {lo, hi} of argument positions, 0-based, lo < hi.
struct Couple
{
    int lo;
    int hi;
    auto operator<=>(const Couple&) const = default;
};

/// All couples of [n] in lexicographic order.
std::vector<Couple> couples(int n);

/// f_I(a_1, ..., a_{n-1}) = f(a_1, ..., a_{hi-1}, a_lo, a_hi, ..., a_{n-1})
/// (1-based on the right): position hi receives a copy of argument lo and
/// later arguments shift up by one. Throws `BadCouple`.
FiniteFunction identification_minor(const FiniteFunction& f, Couple c);

/// 0-based positions of the essential arguments.
std::vector<int> essential_args(const FiniteFunction& f);

/// g(a_1, ..., a_n) = f(a_{perm[0]+1}, ..., a_{perm[n-1]+1}).
FiniteFunction permute_arguments(const FiniteFunction& f, std::span<const int> perm);

/// Equivalence class of f under argument permutation, represented by the
/// lexicographically least table over all n! permutations.
struct CanonicalClass
{
    int domain_size = 0;
    int codomain_size = 0;
    int arity = 0;
    std::vector<int> table;

    auto operator<=>(const CanonicalClass&) const = default;
};

/// Throws `ArityCapExceeded` above `arity_cap`.
CanonicalClass canonicalize(const FiniteFunction& f, int arity_cap = kDefaultArityCap);

bool equivalent(const FiniteFunction& f, const FiniteFunction& g,
                int arity_cap = kDefaultArityCap);

/// Multiset of canonical classes of all identification minors.
struct FunctionDeck
{
    int arity = 0;
    std::map<CanonicalClass, std::size_t> cards;

    std::size_t size() const;
    auto operator<=>(const FunctionDeck&) const = default;
};

/// Throws `PreconditionViolated` if arity < 2.
FunctionDeck function_deck(const FiniteFunction& f, int arity_cap = kDefaultArityCap);

/// For f depending on all n > |A| arguments, a couple whose minor keeps at
/// least n - 2 essential arguments. Throws `PreconditionViolated` when the
/// hypotheses fail; an empty result would contradict the lemma.
std::optional<Couple> verify_willard(const FiniteFunction& f);

struct WillardReport
{
    int domain_size = 0;
    int n = 0;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::uint64_t functions_checked = 0;
    std::uint64_t depending_on_all = 0;
    std::uint64_t confirmed = 0;
    std::vector<std::string> violations;
    bool falsified = false;
};

/// Runs `verify_willard` on every (or `cfg.samples` random) f : A^n -> A
/// depending on all arguments.
WillardReport willard_sweep(int domain_size, int n, const SweepConfig& cfg = {});

} // namespace decklab
