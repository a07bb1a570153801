#include "decklab/errors.hpp"
#include "decklab/finite_field.hpp"
#include "decklab/finite_function.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace decklab;

namespace {

FiniteFunction random_function(int a, int b, int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> pick(0, b - 1);
    std::vector<int> t(FiniteFunction::table_length(a, n));
    for (auto& v : t)
        v = pick(rng);
    return FiniteFunction(a, b, n, std::move(t));
}

std::vector<int> random_perm(int n, std::mt19937_64& rng)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

FiniteFunction majority_gf2()
{
    const FiniteField f = make_gf(2, 1);
    return FiniteFunction::tabulate(2, 2, 3, [&](std::span<const int> x) {
        return f.add(f.add(f.mul(x[0], x[1]), f.mul(x[0], x[2])), f.mul(x[1], x[2]));
    });
}

FiniteFunction parity_gf2(int n)
{
    return FiniteFunction::tabulate(2, 2, n, [](std::span<const int> x) {
        int s = 0;
        for (int v : x)
            s ^= v;
        return s;
    });
}

} // namespace

TEST_CASE("tables use mixed radix with the first argument most significant")
{
    const auto f = FiniteFunction::tabulate(3, 9, 2, [](std::span<const int> x) { return 3 * x[0] + x[1]; });
    for (int i = 0; i < 9; ++i)
        CHECK(f.table()[i] == i);
    CHECK(f.index_of(std::vector<int>{2, 1}) == 7);
    CHECK_THROWS_AS(FiniteFunction(2, 2, 2, {0, 1, 1}), OutOfRange);
    CHECK_THROWS_AS(FiniteFunction(2, 2, 1, {0, 2}), OutOfRange);
}

TEST_CASE("identification minor puts the smaller argument at the larger position")
{
    // injective, so every value records the argument tuple
    const auto f = FiniteFunction::tabulate(3, 27, 3, [](std::span<const int> x) {
        return 9 * x[0] + 3 * x[1] + x[2];
    });
    const auto m01 = identification_minor(f, {0, 1});
    const auto m02 = identification_minor(f, {0, 2});
    const auto m12 = identification_minor(f, {1, 2});
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const std::vector<int> x{a, b};
            CHECK(m01(x) == 9 * a + 3 * a + b);
            CHECK(m02(x) == 9 * a + 3 * b + a);
            CHECK(m12(x) == 9 * a + 3 * b + b);
        }
    CHECK(m01.arity() == 2);
    CHECK_THROWS_AS(identification_minor(f, {1, 1}), BadCouple);
    CHECK_THROWS_AS(identification_minor(f, {2, 1}), BadCouple);
    CHECK_THROWS_AS(identification_minor(f, {0, 3}), BadCouple);

    // the tail after the identified pair shifts by one
    const auto g = FiniteFunction::tabulate(2, 16, 4, [](std::span<const int> x) {
        return 8 * x[0] + 4 * x[1] + 2 * x[2] + x[3];
    });
    const auto m13 = identification_minor(g, {1, 3});
    CHECK(m13(std::vector<int>{1, 0, 1}) == 8 + 0 + 2 + 0);
    CHECK(m13(std::vector<int>{0, 1, 0}) == 0 + 4 + 0 + 1);
}

TEST_CASE("minors agree with the oracle")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int a = 2 + trial % 3;
        const int n = 2 + trial % 4;
        const auto f = random_function(a, a, n, rng);
        for (const Couple c : couples(n))
            CHECK(identification_minor(f, c) == oracle::minor(f, c.lo, c.hi));
    }
    CHECK(couples(4).size() == 6);
    CHECK(couples(3) == std::vector<Couple>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("minor examples")
{
    for (const Couple c : couples(3)) {
        const auto m = identification_minor(majority_gf2(), c);
        CHECK(essential_args(m).size() == 1);
        CHECK((m == FiniteFunction::projection(2, 2, 0) || m == FiniteFunction::projection(2, 2, 1)));
    }
    CHECK(identification_minor(parity_gf2(2), {0, 1}).table() == std::vector<int>{0, 0});
    CHECK(identification_minor(FiniteFunction::projection(2, 3, 2), {0, 1}) == FiniteFunction::projection(2, 2, 1));
}

TEST_CASE("essential arguments")
{
    CHECK(essential_args(majority_gf2()) == std::vector<int>{0, 1, 2});
    CHECK(essential_args(FiniteFunction(3, 3, 2, std::vector<int>(9, 1))).empty());
    CHECK(essential_args(FiniteFunction::projection(2, 3, 1)) == std::vector<int>{1});
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        const int a = 2 + trial % 2;
        const int n = 1 + trial % 4;
        // values depend only on a random subset of arguments
        std::vector<bool> used(n);
        for (int i = 0; i < n; ++i)
            used[i] = rng() % 2;
        const auto base = random_function(a, 5, n, rng);
        const auto f = FiniteFunction::tabulate(a, 5, n, [&](std::span<const int> x) {
            std::vector<int> y(x.begin(), x.end());
            for (int i = 0; i < n; ++i)
                if (!used[i])
                    y[i] = 0;
            return base(y);
        });
        // brute force by definition
        std::vector<int> expected;
        for (int i = 0; i < n; ++i) {
            bool ess = false;
            for (std::size_t idx = 0; idx < f.table().size(); ++idx) {
                std::vector<int> x(n);
                std::size_t r = idx;
                for (int j = n - 1; j >= 0; --j) {
                    x[j] = static_cast<int>(r % a);
                    r /= a;
                }
                auto y = x;
                for (int v = 0; v < a; ++v) {
                    y[i] = v;
                    ess = ess || f(y) != f(x);
                }
            }
            if (ess)
                expected.push_back(i);
        }
        CHECK(essential_args(f) == expected);
        for (int i : expected)
            CHECK(used[i]);
    }
}

TEST_CASE("canonical classes")
{
    const auto p1 = FiniteFunction::projection(2, 2, 0);
    const auto p2 = FiniteFunction::projection(2, 2, 1);
    CHECK(canonicalize(p1) == canonicalize(p2));
    CHECK(equivalent(p1, p2));

    const FiniteField gf3 = make_gf(3, 1);
    const auto f = FiniteFunction::tabulate(3, 3, 2, [&](std::span<const int> x) {
        return gf3.add(x[0], gf3.mul(2, x[1]));
    });
    const auto g = FiniteFunction::tabulate(3, 3, 2, [&](std::span<const int> x) {
        return gf3.add(gf3.mul(2, x[0]), x[1]);
    });
    CHECK(canonicalize(f) == canonicalize(g));

    const auto c = canonicalize(f);
    const FiniteFunction minimal(c.domain_size, c.codomain_size, c.arity, c.table);
    CHECK(canonicalize(minimal).table == minimal.table());

    CHECK_THROWS_AS(canonicalize(FiniteFunction::projection(2, 8, 0)), ArityCapExceeded);
    CHECK_NOTHROW(canonicalize(FiniteFunction::projection(2, 8, 0), 8));
}

TEST_CASE("canonicalization matches the oracle and is constant on orbits")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const int a = 2 + trial % 3;
        const int n = 1 + trial % 4;
        const auto f = random_function(a, a, n, rng);
        const auto c = canonicalize(f);
        CHECK(c.table == oracle::canonical_table(f));
        CHECK(c.arity == n);
        const FiniteFunction cf(a, a, n, c.table);
        CHECK(canonicalize(cf) == c);
        for (int r = 0; r < 5; ++r) {
            const auto perm = random_perm(n, rng);
            CHECK(canonicalize(permute_arguments(f, perm)) == c);
        }
    }
}

TEST_CASE("permuting arguments follows the stated formula")
{
    const auto f = FiniteFunction::tabulate(3, 27, 3, [](std::span<const int> x) {
        return 9 * x[0] + 3 * x[1] + x[2];
    });
    const std::vector<int> perm{2, 0, 1};
    const auto g = permute_arguments(f, perm);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                const std::vector<int> x{a, b, c};
                CHECK(g(x) == f(std::vector<int>{x[2], x[0], x[1]}));
            }
}

TEST_CASE("function decks")
{
    const auto proj3 = function_deck(FiniteFunction::projection(2, 3, 0));
    REQUIRE(proj3.cards.size() == 1);
    CHECK(proj3.size() == 3);
    CHECK(proj3.cards.begin()->first == canonicalize(FiniteFunction::projection(2, 2, 0)));
    CHECK(function_deck(parity_gf2(3)) == proj3);
    CHECK(function_deck(majority_gf2()) == proj3);

    const FiniteField gf3 = make_gf(3, 1);
    auto lin = [&](int a, int b, int c) {
        return FiniteFunction::tabulate(3, 3, 3, [&, a, b, c](std::span<const int> x) {
            return gf3.add(gf3.add(gf3.mul(a, x[0]), gf3.mul(b, x[1])), gf3.mul(c, x[2]));
        });
    };
    // a x1 + b x2 - (a+b) x3 against its negation, a = b = 1
    const auto f = lin(1, 1, gf3.neg(2));
    const auto g = lin(gf3.neg(1), gf3.neg(1), 2);
    CHECK_FALSE(equivalent(f, g));
    CHECK(function_deck(f) == function_deck(g));

    CHECK_THROWS_AS(function_deck(FiniteFunction::projection(2, 1, 0)), PreconditionViolated);
}

TEST_CASE("equivalent functions have equal decks")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
        const int a = 2 + trial % 3;
        const int n = 2 + trial % 4;
        const auto f = random_function(a, a, n, rng);
        const auto d = function_deck(f);
        CHECK(d.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        for (const auto& [cls, mult] : d.cards)
            CHECK(cls.arity == n - 1);
        const auto g = permute_arguments(f, random_perm(n, rng));
        CHECK(function_deck(g) == d);
        // independent deck from oracle minors and oracle canonical tables
        std::map<std::vector<int>, std::size_t> ref;
        for (const Couple c : couples(n))
            ++ref[oracle::canonical_table(oracle::minor(f, c.lo, c.hi))];
        std::map<std::vector<int>, std::size_t> got;
        for (const auto& [cls, mult] : d.cards)
            got[cls.table] = mult;
        CHECK(got == ref);
    }
}

TEST_CASE("minors of a function depending on all arguments")
{
    const auto c = verify_willard(parity_gf2(3));
    REQUIRE(c.has_value());
    CHECK(essential_args(identification_minor(parity_gf2(3), *c)).size() >= 1);
    CHECK_THROWS_AS(verify_willard(parity_gf2(2)), PreconditionViolated);
    CHECK_THROWS_AS(verify_willard(FiniteFunction::projection(2, 3, 0)), PreconditionViolated);

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_function(2, 2, 3 + trial % 3, rng);
        if (essential_args(f).size() != static_cast<std::size_t>(f.arity()))
            continue;
        const auto w = verify_willard(f);
        REQUIRE(w.has_value());
        CHECK(static_cast<int>(oracle::minor(f, w->lo, w->hi).arity()) == f.arity() - 1);
        CHECK(static_cast<int>(essential_args(oracle::minor(f, w->lo, w->hi)).size()) >= f.arity() - 2);
    }
}

TEST_CASE("exhaustive sweep over binary functions of arity 4")
{
    SweepConfig cfg;
    cfg.workers = 2;
    const auto r = willard_sweep(2, 4, cfg);
    CHECK(r.exhaustive);
    CHECK(r.functions_checked == 65536);
    // inclusion-exclusion count of functions depending on all four arguments
    std::int64_t expected = 0;
    const int binom[] = {1, 4, 6, 4, 1};
    for (int j = 0; j <= 4; ++j)
        expected += (j % 2 ? -1 : 1) * binom[j] * (std::int64_t{1} << (1 << (4 - j)));
    CHECK(r.depending_on_all == static_cast<std::uint64_t>(expected));
    CHECK(r.confirmed == r.depending_on_all);
    CHECK(r.violations.empty());
    CHECK_FALSE(r.falsified);
    CHECK_THROWS_AS(willard_sweep(3, 3), PreconditionViolated);
}

TEST_CASE("sampled sweep over ternary functions of arity 4")
{
    SweepConfig cfg;
    cfg.samples = 10'000;
    cfg.seed = 7;
    const auto r = willard_sweep(3, 4, cfg);
    CHECK_FALSE(r.exhaustive);
    CHECK(r.functions_checked == 10'000);
    CHECK(r.depending_on_all > 9'000);
    CHECK(r.confirmed == r.depending_on_all);
    CHECK_FALSE(r.falsified);
    cfg.workers = 4;
    const auto again = willard_sweep(3, 4, cfg);
    CHECK(again.depending_on_all == r.depending_on_all);
    CHECK(again.functions_checked == r.functions_checked);
}
