#include "mhc/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "mhc/error.hpp"

namespace mhc {

std::optional<std::size_t> Dfa::letter_index(const Symbol& x) const {
    const auto it = std::lower_bound(alphabet.begin(), alphabet.end(), x);
    if (it == alphabet.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - alphabet.begin());
}

std::optional<std::size_t> Dfa::find(const SubsetState& label) const {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
}

bool Dfa::accepts(std::span<const Symbol> input) const {
    std::size_t q = initial;
    for (const auto& x : input) {
        const auto j = letter_index(x);
        if (!j) throw Error("unknown-symbol", "symbol '" + std::string(x.text()) + "' is not in the DFA alphabet");
        q = next[q][*j];
    }
    return final[q];
}

Dfa determinize(const Automaton& a) {
    require_valid(a);
    Dfa d;
    d.alphabet.assign(a.alphabet().begin(), a.alphabet().end());

    std::map<SubsetState, std::size_t> index;
    std::deque<std::size_t> pending;
    const auto intern = [&](const StateSet& set) {
        SubsetState label(set.begin(), set.end());
        const auto [it, fresh] = index.emplace(label, d.labels.size());
        if (fresh) {
            d.final.push_back(std::any_of(label.begin(), label.end(), [&](const auto& q) { return a.is_final(q); }));
            d.labels.push_back(std::move(label));
            d.next.emplace_back(d.alphabet.size(), 0);
            pending.push_back(it->second);
        }
        return it->second;
    };

    d.initial = intern(epsilon_closure(a, {a.initial()}));
    while (!pending.empty()) {
        const std::size_t i = pending.front();
        pending.pop_front();
        const StateSet current(d.labels[i].begin(), d.labels[i].end());
        for (std::size_t j = 0; j < d.alphabet.size(); ++j) {
            const std::size_t target = intern(step(a, current, d.alphabet[j]));
            d.next[i][j] = target;
        }
    }
    return d;
}

Automaton to_automaton(const Dfa& d, std::string name) {
    const auto id = [](std::size_t i) { return StateId("d" + std::to_string(i)); };
    StateSet states;
    StateSet finals;
    std::vector<Transition> edges;
    for (std::size_t i = 0; i < d.size(); ++i) {
        states.insert(id(i));
        if (d.final[i]) finals.insert(id(i));
        for (std::size_t j = 0; j < d.alphabet.size(); ++j) edges.push_back({id(i), d.alphabet[j], id(d.next[i][j])});
    }
    return Automaton(std::move(name), std::set<Symbol>(d.alphabet.begin(), d.alphabet.end()), std::move(states),
                     id(d.initial), edges, std::move(finals));
}

Dfa pad(const Dfa& d, const std::set<Symbol>& letters) {
    std::set<Symbol> joint(d.alphabet.begin(), d.alphabet.end());
    joint.insert(letters.begin(), letters.end());
    joint.erase(Symbol::epsilon());
    if (joint.size() == d.alphabet.size()) return d;

    Dfa out;
    out.alphabet.assign(joint.begin(), joint.end());
    out.labels = d.labels;
    out.initial = d.initial;
    out.final = d.final;

    auto sink = d.find(SubsetState{});
    if (!sink) {
        sink = out.labels.size();
        out.labels.emplace_back();
        out.final.push_back(false);
    }
    out.next.assign(out.labels.size(), std::vector<std::size_t>(out.alphabet.size(), *sink));
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.alphabet.size(); ++j) out.next[i][*out.letter_index(d.alphabet[j])] = d.next[i][j];
    return out;
}

Dfa product(const Dfa& x, const Dfa& y, const std::function<bool(bool, bool)>& combine) {
    if (x.alphabet != y.alphabet) throw Error("alphabet-mismatch", "product requires equal alphabets");
    Dfa out;
    out.alphabet = x.alphabet;

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::deque<std::pair<std::size_t, std::size_t>> pending;
    const auto intern = [&](std::size_t i, std::size_t j) {
        const auto [it, fresh] = index.emplace(std::pair{i, j}, out.labels.size());
        if (fresh) {
            SubsetState label;
            for (const auto& q : x.labels[i]) label.push_back(q.prefixed("x"));
            for (const auto& q : y.labels[j]) label.push_back(q.prefixed("y"));
            std::sort(label.begin(), label.end());
            out.labels.push_back(std::move(label));
            out.final.push_back(combine(x.final[i], y.final[j]));
            out.next.emplace_back(out.alphabet.size(), 0);
            pending.emplace_back(i, j);
        }
        return it->second;
    };

    out.initial = intern(x.initial, y.initial);
    while (!pending.empty()) {
        const auto [i, j] = pending.front();
        pending.pop_front();
        const std::size_t k = index.at({i, j});
        for (std::size_t c = 0; c < out.alphabet.size(); ++c) {
            const std::size_t target = intern(x.next[i][c], y.next[j][c]);
            out.next[k][c] = target;
        }
    }
    return out;
}

std::optional<Word> is_empty(const Dfa& d) {
    if (d.size() == 0) return std::nullopt;
    // Letters are expanded in sorted order, so the first final state dequeued
    // carries the shortlex-least accepted word.
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> parent(d.size());
    std::vector<bool> seen(d.size(), false);
    std::deque<std::size_t> queue{d.initial};
    seen[d.initial] = true;
    while (!queue.empty()) {
        const std::size_t q = queue.front();
        queue.pop_front();
        if (d.final[q]) {
            Word w;
            for (std::size_t s = q; parent[s]; s = parent[s]->first) w.push_back(d.alphabet[parent[s]->second]);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (std::size_t c = 0; c < d.alphabet.size(); ++c) {
            const std::size_t r = d.next[q][c];
            if (!seen[r]) {
                seen[r] = true;
                parent[r] = std::pair{q, c};
                queue.push_back(r);
            }
        }
    }
    return std::nullopt;
}

EquivalenceVerdict equivalent(const Automaton& a, const Automaton& b) {
    std::set<Symbol> letters = a.alphabet();
    letters.insert(b.alphabet().begin(), b.alphabet().end());
    const Dfa da = pad(determinize(a), letters);
    const Dfa db = pad(determinize(b), letters);
    const auto diff = is_empty(product(da, db, [](bool p, bool q) { return p != q; }));
    if (!diff) return {};
    return {false, diff};
}

bool shortlex_less(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() < v.size();
    return u < v;
}

std::vector<Word> enumerate_language(const Automaton& a, std::size_t max_len, std::size_t bound) {
    if (max_len > bound)
        throw Error("bound-exceeded",
                    "enumeration length " + std::to_string(max_len) + " exceeds bound " + std::to_string(bound));
    const std::vector<Symbol> letters(a.alphabet().begin(), a.alphabet().end());
    std::vector<Word> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (len > 0 && letters.empty()) break;
        // Odometer over letter indices, least significant digit last.
        std::vector<std::size_t> digits(len, 0);
        while (true) {
            Word w;
            w.reserve(len);
            for (auto d : digits) w.push_back(letters[d]);
            if (accepts(a, w)) out.push_back(std::move(w));
            std::size_t pos = len;
            while (pos > 0 && ++digits[pos - 1] == letters.size()) digits[--pos] = 0;
            if (pos == 0) break;
        }
    }
    return out;
}

}  // namespace mhc
