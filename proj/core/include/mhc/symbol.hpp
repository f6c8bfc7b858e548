#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mhc {

/// Spelling reserved for the empty-string symbol in every text format.
inline constexpr std::string_view kEpsilonToken = "eps";

/// An alphabet letter or the empty-string symbol.
///
/// Letters are nonempty, whitespace-free tokens other than "eps". All epsilon
/// values compare equal and order before every letter.
class Symbol {
public:
    static Symbol epsilon() noexcept { return Symbol(); }
    /// Throws mhc::Error("invalid-symbol") on an ill-formed token.
    static Symbol letter(std::string token);

    bool is_epsilon() const noexcept { return !token_.has_value(); }
    bool is_letter() const noexcept { return token_.has_value(); }

    /// Letter token, or "eps" for epsilon.
    std::string_view text() const noexcept { return token_ ? std::string_view(*token_) : kEpsilonToken; }

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) noexcept {
        if (a.is_epsilon() || b.is_epsilon()) return b.is_epsilon() <=> a.is_epsilon();
        return *a.token_ <=> *b.token_;
    }

    /// True if `token` may name a letter.
    static bool valid_token(std::string_view token) noexcept;

private:
    Symbol() = default;
    explicit Symbol(std::string token) : token_(std::move(token)) {}

    std::optional<std::string> token_;
};

/// An input string: a sequence of letters.
using Word = std::vector<Symbol>;

/// Builds a word from single-character letters, e.g. word("aab").
Word word(std::string_view chars);

/// Concatenated letter tokens; only unambiguous for single-character alphabets.
std::string to_string(const Word& w);

}  // namespace mhc
