#pragma once

// Test-only reference implementations. Nothing here calls the library's
// simulation, determinization or composition code, so agreement with them is
// an independent check.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "mhc/automaton.hpp"
#include "mhc/symbol.hpp"
#include "mhc/textio.hpp"

#ifndef MHC_FIXTURE_DIR
#error "MHC_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace mhc::testing {

inline Symbol sym(const char* s) { return Symbol::letter(s); }

/// N1 built edge by edge: b in the third position from the right.
inline Automaton reference_n1() {
    const Symbol a = sym("a"), b = sym("b");
    return Automaton("N1", {a, b}, {"p0", "p1", "p2", "p3"}, "p0",
                     {{"p0", a, "p0"}, {"p0", b, "p0"}, {"p0", b, "p1"}, {"p1", a, "p2"},
                      {"p1", b, "p2"}, {"p2", a, "p3"}, {"p2", b, "p3"}},
                     {"p3"});
}

/// N2 built edge by edge: a^m b^n, m > 0.
inline Automaton reference_n2() {
    const Symbol a = sym("a"), b = sym("b");
    return Automaton("N2", {a, b}, {"q0", "q1"}, "q0", {{"q0", a, "q0"}, {"q0", a, "q1"}, {"q1", b, "q1"}}, {"q1"});
}

inline std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string fixture_path(const std::string& file) { return std::string(MHC_FIXTURE_DIR) + "/" + file; }

inline Automaton load_fixture(const std::string& file) {
    auto parsed = parse_automaton(read_text(fixture_path(file)));
    if (!parsed) throw std::runtime_error("fixture " + file + " does not parse: " + to_string(parsed.diagnostics.front()));
    return *parsed.value;
}

/// b at the third position from the right.
inline bool in_l1(const std::string& w) { return w.size() >= 3 && w[w.size() - 3] == 'b'; }

/// a^m b^n with m > 0, n >= 0.
inline bool in_l2(const std::string& w) {
    std::size_t i = 0;
    while (i < w.size() && w[i] == 'a') ++i;
    if (i == 0) return false;
    while (i < w.size() && w[i] == 'b') ++i;
    return i == w.size();
}

/// Every string over `letters` of length <= max_len, shortest first then
/// lexicographic.
inline std::vector<std::string> all_strings(const std::string& letters, std::size_t max_len) {
    std::vector<std::string> out{""};
    std::vector<std::string> layer{""};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::string> nextl;
        for (const auto& prefix : layer)
            for (char c : letters) nextl.push_back(prefix + c);
        out.insert(out.end(), nextl.begin(), nextl.end());
        layer = std::move(nextl);
    }
    return out;
}

/// Run search straight from the acceptance definition: from the initial
/// state, either consume the next letter along an edge or take an epsilon
/// edge, with at most |S| - 1 consecutive epsilon steps (a longer epsilon
/// path repeats a state). Memoised on (position, state, epsilon budget),
/// which is acyclic, so the result is exact.
inline bool run_search_accepts(const Automaton& a, const Word& w) {
    for (const auto& x : w)
        if (!a.has_letter(x)) return false;
    const std::size_t budget = a.states().empty() ? 0 : a.states().size() - 1;
    const auto edges = a.transitions();
    std::map<std::tuple<std::size_t, StateId, std::size_t>, bool> memo;

    const auto search = [&](const auto& self, std::size_t pos, const StateId& q, std::size_t eps_left) -> bool {
        const auto key = std::tuple{pos, q, eps_left};
        if (const auto it = memo.find(key); it != memo.end()) return it->second;
        bool found = pos == w.size() && a.is_final(q);
        if (!found && eps_left > 0)
            for (const auto& t : edges)
                if (t.from == q && t.symbol.is_epsilon() && self(self, pos, t.to, eps_left - 1)) {
                    found = true;
                    break;
                }
        if (!found && pos < w.size())
            for (const auto& t : edges)
                if (t.from == q && t.symbol == w[pos] && self(self, pos + 1, t.to, budget)) {
                    found = true;
                    break;
                }
        memo[key] = found;
        return found;
    };
    return a.has_state(a.initial()) && search(search, 0, a.initial(), budget);
}

/// States some run on `w` can end in, found by walking runs letter by letter
/// (epsilon edges followed to a fixed point by repeated edge scans).
inline StateSet reached_set(const Automaton& a, const Word& w) {
    const auto transitions = a.transitions();
    const auto saturate = [&](StateSet s) {
        for (bool grew = true; grew;) {
            grew = false;
            for (const auto& t : transitions)
                if (t.symbol.is_epsilon() && s.contains(t.from) && !s.contains(t.to)) {
                    s.insert(t.to);
                    grew = true;
                }
        }
        return s;
    };
    StateSet cur = saturate({a.initial()});
    for (const auto& x : w) {
        StateSet next;
        for (const auto& t : transitions)
            if (t.symbol == x && cur.contains(t.from)) next.insert(t.to);
        cur = saturate(std::move(next));
    }
    return cur;
}

/// Concatenation oracle: some split has prefix in L(x) and suffix in L(y).
inline bool split_oracle(const Automaton& x, const Automaton& y, const Word& w) {
    for (std::size_t i = 0; i <= w.size(); ++i) {
        const Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        const Word tail(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        if (run_search_accepts(x, head) && run_search_accepts(y, tail)) return true;
    }
    return false;
}

}  // namespace mhc::testing
