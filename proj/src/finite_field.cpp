#include "decklab/finite_field.hpp"

#include "decklab/errors.hpp"

#include <string>

namespace decklab {

namespace {

void trim(ZpPolynomial& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

ZpPolynomial poly_mod(ZpPolynomial a, const ZpPolynomial& m, int p)
{
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    // m is monic
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int shift = static_cast<int>(a.size()) - 1 - dm;
        const int lead = a.back();
        for (int i = 0; i <= dm; ++i)
            a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

ZpPolynomial monic_from_index(int p, int degree, long long index)
{
    ZpPolynomial f(degree + 1, 0);
    for (int i = 0; i < degree; ++i) {
        f[i] = static_cast<int>(index % p);
        index /= p;
    }
    f[degree] = 1;
    return f;
}

long long ipow(long long b, int e)
{
    long long r = 1;
    while (e-- > 0)
        r *= b;
    return r;
}

} // namespace

bool is_prime(int n)
{
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_irreducible(const ZpPolynomial& f, int p)
{
    ZpPolynomial g = f;
    trim(g);
    const int deg = static_cast<int>(g.size()) - 1;
    if (deg < 1)
        return false;
    for (int d = 1; d <= deg / 2; ++d) {
        const long long count = ipow(p, d);
        for (long long idx = 0; idx < count; ++idx)
            if (poly_mod(g, monic_from_index(p, d, idx), p).empty())
                return false;
    }
    return true;
}

ZpPolynomial smallest_irreducible(int p, int k)
{
    const long long count = ipow(p, k);
    for (long long idx = 0; idx < count; ++idx) {
        auto f = monic_from_index(p, k, idx);
        if (is_irreducible(f, p))
            return f;
    }
    throw Error("no irreducible polynomial found"); // unreachable for prime p
}

Element FiniteField::pow(Element a, int e) const noexcept
{
    Element r = 1;
    while (e-- > 0)
        r = mul(r, a);
    return r;
}

Element FiniteField::from_integer(long long v) const noexcept
{
    return static_cast<Element>(((v % p_) + p_) % p_);
}

std::string FiniteField::name() const { return "GF(" + std::to_string(q_) + ")"; }

FiniteField make_gf(int p, int k, int cap)
{
    if (!is_prime(p))
        throw NotPrime(std::to_string(p) + " is not prime");
    if (k < 1)
        throw Error("field exponent must be positive");
    const long long q = ipow(p, k);
    if (q > cap)
        throw CapExceeded("field order " + std::to_string(q) +
                          " exceeds cap " + std::to_string(cap));

    FiniteField F;
    F.p_ = p;
    F.k_ = k;
    F.q_ = static_cast<int>(q);
    F.modulus_ = k == 1 ? ZpPolynomial{0, 1} : smallest_irreducible(p, k);

    const int n = F.q_;
    auto digits = [&](Element e) {
        ZpPolynomial c(k);
        for (int i = 0; i < k; ++i) {
            c[i] = e % p;
            e /= p;
        }
        return c;
    };
    auto encode = [&](const ZpPolynomial& c) {
        Element e = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            e = e * p + c[i];
        return e;
    };

    Table add(n, std::vector<Element>(n));
    Table mul(n, std::vector<Element>(n));
    for (Element a = 0; a < n; ++a) {
        const auto ca = digits(a);
        for (Element b = 0; b < n; ++b) {
            const auto cb = digits(b);
            ZpPolynomial s(k);
            for (int i = 0; i < k; ++i)
                s[i] = (ca[i] + cb[i]) % p;
            add[a][b] = encode(s);

            ZpPolynomial prod(2 * k - 1, 0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            mul[a][b] = encode(k == 1 ? prod : poly_mod(prod, F.modulus_, p));
        }
    }

    F.ring_ = std::make_shared<const RightSemiring>(
        make_semiring(add, mul, 0, 1, n));
    const auto& R = *F.ring_;
    const auto& prof = R.add_groupoid().profile();
    if (!prof.associative || prof.neutral_element != 0 || !prof.cancellative)
        throw Falsification(F.name() + ": addition is not a group");

    F.neg_.assign(n, -1);
    F.inv_.assign(n, -1);
    for (Element a = 0; a < n; ++a) {
        Element acc = 0;
        for (int i = 0; i < p; ++i)
            acc = R.add(acc, a);
        if (acc != 0)
            throw Falsification(F.name() + ": additive exponent is not p");
        for (Element b = 0; b < n; ++b) {
            if (R.add(a, b) == 0)
                F.neg_[a] = b;
            if (a != 0 && b != 0 && R.mul(a, b) == 1)
                F.inv_[a] = b;
            if (R.mul(a, b) != R.mul(b, a))
                throw Falsification(F.name() + ": multiplication not commutative");
        }
        if (a != 0 && F.inv_[a] < 0)
            throw Falsification(F.name() + ": element without inverse");
    }
    for (Element a = 1; a < n; ++a)
        for (Element b = 1; b < n; ++b) {
            if (R.mul(a, b) == 0)
                throw Falsification(F.name() + ": zero divisor");
            for (Element c = 1; c < n; ++c)
                if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c)))
                    throw Falsification(F.name() +
                                        ": multiplication not associative");
        }
    return F;
}

} // namespace decklab
