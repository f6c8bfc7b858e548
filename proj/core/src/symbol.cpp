#include "mhc/symbol.hpp"

#include <algorithm>
#include <cctype>

#include "mhc/error.hpp"

namespace mhc {

bool Symbol::valid_token(std::string_view token) noexcept {
    if (token.empty() || token == kEpsilonToken) return false;
    return std::none_of(token.begin(), token.end(), [](unsigned char c) {
        return std::isspace(c) || c == ',' || c == '#';
    });
}

Symbol Symbol::letter(std::string token) {
    if (!valid_token(token)) throw Error("invalid-symbol", "invalid letter token '" + token + "'");
    return Symbol(std::move(token));
}

Word word(std::string_view chars) {
    Word w;
    w.reserve(chars.size());
    for (char c : chars) w.push_back(Symbol::letter(std::string(1, c)));
    return w;
}

std::string to_string(const Word& w) {
    std::string out;
    for (const auto& x : w) out += x.text();
    return out;
}

}  // namespace mhc
