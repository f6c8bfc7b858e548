#include "mhc/state_id.hpp"

#include <algorithm>
#include <cctype>

#include "mhc/error.hpp"

namespace mhc {

StateId StateId::prefixed(const std::string& segment) const {
    StateId out;
    out.ns.reserve(ns.size() + 1);
    out.ns.push_back(segment);
    out.ns.insert(out.ns.end(), ns.begin(), ns.end());
    out.local = local;
    return out;
}

bool valid_name_segment(std::string_view s) noexcept {
    if (s.empty()) return false;
    return std::none_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isspace(c) || c == '.' || c == '#';
    });
}

std::string join_path(const std::vector<std::string>& path) {
    std::string out;
    for (const auto& seg : path) {
        if (!out.empty()) out += '.';
        out += seg;
    }
    return out;
}

std::string to_string(const StateId& id) {
    std::string out = join_path(id.ns);
    if (!out.empty()) out += '.';
    out += id.local;
    return out;
}

StateId parse_state_id(std::string_view text) {
    StateId id;
    std::size_t start = 0;
    while (true) {
        const auto dot = text.find('.', start);
        const auto piece = text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        if (!valid_name_segment(piece)) throw Error("invalid-state", "invalid state name '" + std::string(text) + "'");
        if (dot == std::string_view::npos) {
            id.local = std::string(piece);
            return id;
        }
        id.ns.emplace_back(piece);
        start = dot + 1;
    }
}

}  // namespace mhc
