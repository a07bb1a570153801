#include "decklab/io.hpp"

#include "decklab/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace decklab {

namespace {

std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t byte)
{
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is one past the offending character
        const auto [line, column] = position(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("malformed JSON", line, column);
    }
}

template <typename T>
T field_as(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key \"") + key + "\"", 1, 1);
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError(std::string("key \"") + key + "\" has the wrong type", 1, 1);
    }
}

std::optional<int> suffix_number(std::string_view alias, std::string_view prefix)
{
    if (alias.substr(0, prefix.size()) != prefix || alias.size() == prefix.size())
        return std::nullopt;
    int v = 0;
    const auto rest = alias.substr(prefix.size());
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc{} || ptr != rest.data() + rest.size())
        return std::nullopt;
    return v;
}

// q = p^k with p prime, or nothing.
std::optional<std::pair<int, int>> prime_power(int q)
{
    if (q < 2)
        return std::nullopt;
    int p = 2;
    while (q % p != 0)
        ++p;
    int k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1)
        return std::nullopt;
    return std::pair{p, k};
}

Structure from_field(FiniteField f, std::string_view alias)
{
    Structure s{std::string(alias), f.semiring().add_groupoid(), f.semiring_ptr(), std::nullopt};
    s.field = std::move(f);
    return s;
}

} // namespace

std::optional<Structure> builtin_structure(std::string_view alias)
{
    if (auto n = suffix_number(alias, "z")) {
        if (*n < 1 || *n > 64)
            throw OutOfRange("cyclic alias order must lie in 1..64");
        if (is_prime(*n))
            return from_field(make_gf(*n, 1), alias);
        Table add(*n, std::vector<Element>(*n));
        Table mul(*n, std::vector<Element>(*n));
        for (int a = 0; a < *n; ++a)
            for (int b = 0; b < *n; ++b) {
                add[a][b] = (a + b) % *n;
                mul[a][b] = (a * b) % *n;
            }
        auto ring = std::make_shared<const RightSemiring>(make_semiring(add, mul, 0, *n > 1 ? 1 : 0, *n));
        return Structure{std::string(alias), ring->add_groupoid(), ring, std::nullopt};
    }
    if (auto q = suffix_number(alias, "gf")) {
        const auto pk = prime_power(*q);
        if (!pk)
            throw NotPrime("gf alias needs a prime power order");
        return from_field(make_gf(pk->first, pk->second), alias);
    }
    if (auto n = suffix_number(alias, "lattice")) {
        if (*n < 1 || *n > 64)
            throw OutOfRange("lattice alias order must lie in 1..64");
        auto ring = std::make_shared<const RightSemiring>(chain_lattice(*n));
        return Structure{std::string(alias), ring->add_groupoid(), ring, std::nullopt};
    }
    return std::nullopt;
}

Structure parse_structure(std::string_view text, std::string name)
{
    const Json j = parse_json(text);
    const int order = field_as<int>(j, "order");
    const auto add = field_as<Table>(j, "add");
    if (static_cast<int>(add.size()) != order)
        throw NotSquare("\"add\" has " + std::to_string(add.size()) + " rows, expected " +
                        std::to_string(order));
    if (!j.contains("mul")) {
        Groupoid g(add);
        return Structure{std::move(name), std::move(g), nullptr, std::nullopt};
    }
    const auto mul = field_as<Table>(j, "mul");
    const int zero = field_as<int>(j, "zero");
    const int one = field_as<int>(j, "one");
    auto ring = std::make_shared<const RightSemiring>(make_semiring(add, mul, zero, one));
    return Structure{std::move(name), ring->add_groupoid(), ring, std::nullopt};
}

Structure load_structure(const std::string& alias_or_path)
{
    if (auto s = builtin_structure(alias_or_path))
        return *s;
    return parse_structure(read_file(alias_or_path), alias_or_path);
}

FiniteField parse_field(std::string_view text)
{
    const auto bad = [&] { return ParseError("bad field \"" + std::string(text) + "\"", 1, 1); };
    const auto us = text.find('_');
    if (us != std::string_view::npos) {
        int p = 0;
        int k = 0;
        const auto a = text.substr(0, us);
        const auto b = text.substr(us + 1);
        if (std::from_chars(a.data(), a.data() + a.size(), p).ptr != a.data() + a.size() ||
            std::from_chars(b.data(), b.data() + b.size(), k).ptr != b.data() + b.size() || a.empty() ||
            b.empty())
            throw bad();
        return make_gf(p, k);
    }
    if (text.substr(0, 2) == "gf")
        text.remove_prefix(2);
    int q = 0;
    if (text.empty() || std::from_chars(text.data(), text.data() + text.size(), q).ptr != text.data() + text.size())
        throw bad();
    const auto pk = prime_power(q);
    if (!pk)
        throw NotPrime(std::to_string(q) + " is not a prime power");
    return make_gf(pk->first, pk->second);
}

FiniteFunction parse_function(std::string_view text)
{
    const Json j = parse_json(text);
    return FiniteFunction(field_as<int>(j, "a"), field_as<int>(j, "b"), field_as<int>(j, "n"),
                          field_as<std::vector<int>>(j, "table"));
}

FiniteFunction load_function(const std::string& path)
{
    return parse_function(read_file(path));
}

Json to_json(const Deck& d)
{
    Json cards = Json::array();
    for (const auto& [card, mult] : d.cards)
        cards.push_back(Json{{"card", card}, {"mult", mult}});
    return Json{{"n", d.n}, {"cards", std::move(cards)}};
}

Json to_json(const FiniteFunction& f)
{
    return Json{{"a", f.domain_size()}, {"b", f.codomain_size()}, {"n", f.arity()}, {"table", f.table()}};
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace decklab
