#pragma once

#include "decklab/finite_field.hpp"
#include "decklab/finite_function.hpp"

#include <string_view>

namespace decklab {

/// Compiles a polynomial expression over a field into its value table.
///
/// Grammar: integers (mapped through Z -> GF(p)), variables x1..xn, the
/// generator `w` of GF(p^k), binary + - *, ^ with a nonnegative integer
/// exponent, unary -, and parentheses. The arity is `arity` if positive,
/// otherwise the largest variable index. Throws `ParseError`.
FiniteFunction compile_polynomial(std::string_view text, const FiniteField& field, int arity = 0);

} // namespace decklab
