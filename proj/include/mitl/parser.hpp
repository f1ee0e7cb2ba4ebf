#pragma once

#include <string_view>

#include "mitl/error.hpp"
#include "mitl/formula.hpp"

namespace mitl {

/// Parses the textual formula grammar:
///
///   formula  := disj ("->" formula)?          right-associative
///   disj     := conj ("||" conj)*
///   conj     := unary ("&&" unary)*
///   unary    := "!" unary | ("G"|"F") interval unary | primary
///   primary  := "true" | "false" | "(" formula ")" | ident (cmp number)?
///   interval := ("["|"(") number "," number ("]"|")")
///
/// Numbers are decimals or fractions "a/b". `cmp` is one of < <= > >=.
/// Unicode spellings (¬ ∧ ∨ ⇒ → ◇ □ ⊤ ⊥) are accepted as aliases and `#`
/// starts a comment running to the end of the line.
///
/// Throws ParseError carrying the 1-based line and column of the problem.
/// Temporal operators reject singular, reversed and negative intervals.
Formula parse_formula(std::string_view text);

}  // namespace mitl
