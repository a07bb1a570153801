#include "decklab/finite_function.hpp"

#include "decklab/errors.hpp"
#include "decklab/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace decklab {

std::size_t FiniteFunction::table_length(int domain_size, int arity)
{
    std::size_t len = 1;
    for (int i = 0; i < arity; ++i)
        len *= static_cast<std::size_t>(domain_size);
    return len;
}

FiniteFunction::FiniteFunction(int domain_size, int codomain_size, int arity,
                               std::vector<int> table)
  : a_(domain_size), b_(codomain_size), n_(arity), table_(std::move(table))
{
    if (a_ < 1 || b_ < 1 || n_ < 0)
        throw OutOfRange("function needs positive domain and codomain sizes");
    if (table_.size() != table_length(a_, n_))
        throw OutOfRange("table length " + std::to_string(table_.size()) +
                         " differs from |A|^n = " +
                         std::to_string(table_length(a_, n_)));
    for (int v : table_)
        if (v < 0 || v >= b_)
            throw OutOfRange("table value " + std::to_string(v) + " outside codomain");
}

FiniteFunction FiniteFunction::projection(int domain_size, int arity, int i)
{
    return tabulate(domain_size, domain_size, arity,
                    [i](std::span<const int> x) { return x[i]; });
}

std::size_t FiniteFunction::index_of(std::span<const int> args) const
{
    std::size_t idx = 0;
    for (int x : args)
        idx = idx * a_ + static_cast<std::size_t>(x);
    return idx;
}

int FiniteFunction::operator()(std::span<const int> args) const
{
    return table_[index_of(args)];
}

std::vector<Couple> couples(int n)
{
    std::vector<Couple> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out.push_back({i, j});
    return out;
}

FiniteFunction identification_minor(const FiniteFunction& f, Couple c)
{
    const int n = f.arity();
    if (n < 2 || c.lo < 0 || c.hi >= n || c.lo >= c.hi)
        throw BadCouple("couple {" + std::to_string(c.lo) + ", " + std::to_string(c.hi) +
                        "} is not a 2-subset of the " + std::to_string(n) + " arguments");
    std::vector<int> full(n);
    return FiniteFunction::tabulate(
        f.domain_size(), f.codomain_size(), n - 1, [&](std::span<const int> x) {
            for (int j = 0; j < n; ++j)
                full[j] = j < c.hi ? x[j] : (j == c.hi ? x[c.lo] : x[j - 1]);
            return f(full);
        });
}

std::vector<int> essential_args(const FiniteFunction& f)
{
    const int n = f.arity();
    const auto& t = f.table();
    std::vector<int> out;
    std::size_t stride = 1; // weight of argument i in the index
    std::vector<std::size_t> strides(n);
    for (int i = n - 1; i >= 0; --i) {
        strides[i] = stride;
        stride *= static_cast<std::size_t>(f.domain_size());
    }
    for (int i = 0; i < n; ++i) {
        bool essential = false;
        const std::size_t s = strides[i];
        const std::size_t block = s * f.domain_size();
        for (std::size_t idx = 0; idx < t.size() && !essential; ++idx) {
            if ((idx % block) >= s)
                continue; // only tuples with argument i = 0
            for (int v = 1; v < f.domain_size(); ++v)
                if (t[idx + v * s] != t[idx]) {
                    essential = true;
                    break;
                }
        }
        if (essential)
            out.push_back(i);
    }
    return out;
}

namespace {

// For each permutation, the source index of every target index.
void permuted_index_map(int a, int n, std::span<const int> perm, std::vector<std::size_t>& map)
{
    const std::size_t len = FiniteFunction::table_length(a, n);
    map.resize(len);
    std::vector<std::size_t> stride(n);
    std::size_t s = 1;
    for (int i = n - 1; i >= 0; --i) {
        stride[i] = s;
        s *= static_cast<std::size_t>(a);
    }
    std::vector<int> args(n, 0);
    for (std::size_t idx = 0; idx < len; ++idx) {
        std::size_t src = 0;
        for (int i = 0; i < n; ++i)
            src += static_cast<std::size_t>(args[perm[i]]) * stride[i];
        map[idx] = src;
        for (int i = n - 1; i >= 0; --i) {
            if (++args[i] < a)
                break;
            args[i] = 0;
        }
    }
}

} // namespace

FiniteFunction permute_arguments(const FiniteFunction& f, std::span<const int> perm)
{
    std::vector<std::size_t> map;
    permuted_index_map(f.domain_size(), f.arity(), perm, map);
    std::vector<int> t(map.size());
    for (std::size_t idx = 0; idx < map.size(); ++idx)
        t[idx] = f.table()[map[idx]];
    return FiniteFunction(f.domain_size(), f.codomain_size(), f.arity(), std::move(t));
}

namespace {

// Index maps of every non-identity permutation, cached per thread by
// (domain size, arity).
const std::vector<std::vector<std::size_t>>& permutation_maps(int a, int n)
{
    thread_local std::map<std::pair<int, int>, std::vector<std::vector<std::size_t>>> cache;
    auto [it, fresh] = cache.try_emplace({a, n});
    if (fresh) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            it->second.emplace_back();
            permuted_index_map(a, n, perm, it->second.back());
        }
    }
    return it->second;
}

} // namespace

CanonicalClass canonicalize(const FiniteFunction& f, int arity_cap)
{
    const int n = f.arity();
    if (n > arity_cap)
        throw ArityCapExceeded("arity " + std::to_string(n) + " exceeds canonicalization cap " +
                               std::to_string(arity_cap));
    CanonicalClass cls{f.domain_size(), f.codomain_size(), n, f.table()};
    const auto& src = f.table();
    for (const auto& map : permutation_maps(f.domain_size(), n)) {
        int cmp = 0;
        for (std::size_t idx = 0; idx < map.size() && cmp == 0; ++idx)
            cmp = (src[map[idx]] > cls.table[idx]) - (src[map[idx]] < cls.table[idx]);
        if (cmp < 0)
            for (std::size_t idx = 0; idx < map.size(); ++idx)
                cls.table[idx] = src[map[idx]];
    }
    return cls;
}

bool equivalent(const FiniteFunction& f, const FiniteFunction& g, int arity_cap)
{
    return canonicalize(f, arity_cap) == canonicalize(g, arity_cap);
}

std::size_t FunctionDeck::size() const
{
    std::size_t s = 0;
    for (const auto& [cls, mult] : cards)
        s += mult;
    return s;
}

FunctionDeck function_deck(const FiniteFunction& f, int arity_cap)
{
    if (f.arity() < 2)
        throw PreconditionViolated("a function deck needs arity >= 2");
    if (f.arity() - 1 > arity_cap)
        throw ArityCapExceeded("minor arity exceeds canonicalization cap");
    FunctionDeck d;
    d.arity = f.arity();
    for (const Couple c : couples(f.arity()))
        ++d.cards[canonicalize(identification_minor(f, c), arity_cap)];
    return d;
}

std::optional<Couple> verify_willard(const FiniteFunction& f)
{
    const int n = f.arity();
    if (n <= f.domain_size())
        throw PreconditionViolated("lemma needs arity greater than |A|");
    if (static_cast<int>(essential_args(f).size()) != n)
        throw PreconditionViolated("function has inessential arguments");
    for (const Couple c : couples(n))
        if (static_cast<int>(essential_args(identification_minor(f, c)).size()) >= n - 2)
            return c;
    return std::nullopt;
}

namespace {

std::string table_string(const std::vector<int>& t)
{
    std::string s = "[";
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + std::to_string(t[i]);
    return s + "]";
}

struct WillardChunk
{
    std::uint64_t checked = 0;
    std::uint64_t depending = 0;
    std::uint64_t confirmed = 0;
    std::vector<std::string> violations;
};

} // namespace

WillardReport willard_sweep(int domain_size, int n, const SweepConfig& cfg)
{
    if (n <= domain_size)
        throw PreconditionViolated("lemma needs arity greater than |A|");
    const std::size_t len = FiniteFunction::table_length(domain_size, n);
    // domain_size^len functions, if that fits
    std::uint64_t total = 1;
    bool fits = true;
    for (std::size_t i = 0; i < len && fits; ++i) {
        if (total > cfg.exhaustive_cap / static_cast<std::uint64_t>(domain_size))
            fits = false;
        else
            total *= static_cast<std::uint64_t>(domain_size);
    }
    WillardReport rep;
    rep.domain_size = domain_size;
    rep.n = n;
    rep.exhaustive = fits;
    rep.seed = cfg.seed;
    const std::uint64_t count = fits ? total : cfg.samples;
    const std::uint64_t chunk = 1024;

    auto parts = parallel_chunks(count, chunk, cfg.workers, [&](std::uint64_t b, std::uint64_t e) {
        WillardChunk c;
        std::mt19937_64 rng;
        if (!fits) {
            std::seed_seq seq{cfg.seed, b / chunk};
            rng.seed(seq);
        }
        std::uniform_int_distribution<int> pick(0, domain_size - 1);
        std::vector<int> table(len);
        for (std::uint64_t idx = b; idx < e; ++idx) {
            if (fits) {
                std::uint64_t rest = idx;
                for (std::size_t i = len; i-- > 0;) {
                    table[i] = static_cast<int>(rest % domain_size);
                    rest /= domain_size;
                }
            } else {
                for (auto& v : table)
                    v = pick(rng);
            }
            FiniteFunction f(domain_size, domain_size, n, table);
            ++c.checked;
            if (static_cast<int>(essential_args(f).size()) != n)
                continue;
            ++c.depending;
            if (verify_willard(f))
                ++c.confirmed;
            else if (c.violations.size() < 100)
                c.violations.push_back(table_string(table));
        }
        return c;
    });
    for (auto& c : parts) {
        rep.functions_checked += c.checked;
        rep.depending_on_all += c.depending;
        rep.confirmed += c.confirmed;
        for (auto& v : c.violations)
            if (rep.violations.size() < 100)
                rep.violations.push_back(std::move(v));
    }
    rep.falsified = rep.confirmed != rep.depending_on_all;
    return rep;
}

} // namespace decklab
