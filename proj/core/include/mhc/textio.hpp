#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mhc/algebra.hpp"
#include "mhc/automaton.hpp"

namespace mhc {

struct ParseDiagnostic {
    std::size_t line = 1;    // 1-based
    std::size_t column = 1;  // 1-based
    std::string code;
    std::string message;

    friend bool operator==(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

/// "line:column: error[code]: message"
std::string to_string(const ParseDiagnostic& d);

/// Either a value or at least one diagnostic.
template <typename T>
struct ParseResult {
    std::optional<T> value;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const noexcept { return value.has_value(); }
    explicit operator bool() const noexcept { return ok(); }
};

/// Parses the line-based automaton format:
///
///     name <ident>                 first content line, exactly once
///     alphabet <letter>...         at most once
///     states <state>...            exactly once
///     initial <state>              exactly once
///     final <state>...             at most once, may list nothing
///     trans <from> <letter|eps> <to>
///
/// `#` starts a comment. Namespaced states are dot-joined paths (L.p0).
ParseResult<Automaton> parse_automaton(std::string_view text);

/// Canonical form of the format above: fixed section order, states and
/// transitions sorted. Parsing the result gives back a structurally equal
/// automaton.
std::string render_automaton(const Automaton& a);

/// Grammar, `;` binding tighter than `|`, both left-associative:
///
///     expr := cat ("|" cat)*
///     cat  := atom (";" atom)*
///     atom := IDENT | "(" expr ")"
ParseResult<CompositionExpr> parse_expression(std::string_view text);

/// Spaced rendering with the fewest parentheses that parse back to `e`.
std::string render_expression(const CompositionExpr& e);

/// DOT graph: finals as double circles, an entry arrow into the initial
/// state, epsilon edges labelled "ε". With `group_by_namespace`, states
/// sharing a first namespace segment are boxed into one labelled cluster.
std::string render_dot(const Automaton& a, bool group_by_namespace);

/// Reads an input word over `alphabet`. Comma-separated tokens are always
/// accepted; without commas a word over single-character letters is read
/// one character at a time, otherwise as a single token. "eps" and the
/// empty text denote the empty word. Letters outside `alphabet` yield an
/// "unknown-symbol" diagnostic.
ParseResult<Word> parse_word(std::string_view text, const std::set<Symbol>& alphabet);

/// Inverse of parse_word: bare characters for single-character alphabets,
/// comma-separated tokens otherwise, "eps" for the empty word.
std::string render_word(const Word& w, const std::set<Symbol>& alphabet);

}  // namespace mhc
