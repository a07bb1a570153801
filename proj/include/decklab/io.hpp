#pragma once

#include "decklab/deck.hpp"
#include "decklab/finite_field.hpp"
#include "decklab/finite_function.hpp"
#include "decklab/groupoid.hpp"
#include "decklab/semiring.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace decklab {

using Json = nlohmann::ordered_json;

/// A loaded carrier: its additive groupoid, plus the semiring or field when
/// the source declares a multiplication.
struct Structure
{
    std::string name;
    Groupoid groupoid;
    std::shared_ptr<const RightSemiring> semiring;
    std::optional<FiniteField> field;
};

/// Built-in carriers: zN (integers mod N as a ring), gfQ (Q a prime power),
/// latticeN (chain with max and min). Returns nothing for unknown names.
std::optional<Structure> builtin_structure(std::string_view alias);

/// {"order": n, "add": [[...]], "mul": [[...]], "zero": i, "one": j}; "mul",
/// "zero" and "one" are optional together. Throws `ParseError` with the
/// position of malformed JSON, or the library's validation errors.
Structure parse_structure(std::string_view text, std::string name = "inline");

/// An alias or a path to a structure file.
Structure load_structure(const std::string& alias_or_path);

/// "p_k" (e.g. "2_2"), "gfQ", or "Q".
FiniteField parse_field(std::string_view text);

/// {"a": |A|, "b": |B|, "n": n, "table": [...]}.
FiniteFunction parse_function(std::string_view text);
FiniteFunction load_function(const std::string& path);

Json to_json(const Deck& d);
Json to_json(const FiniteFunction& f);

std::string read_file(const std::string& path);

} // namespace decklab
