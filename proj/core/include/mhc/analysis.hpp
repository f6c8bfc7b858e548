#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "mhc/automaton.hpp"

namespace mhc {

/// A subset-state: the sorted set of source states it stands for.
using SubsetState = std::vector<StateId>;

/// Complete deterministic automaton with indexed states.
///
/// State `i` is labelled by `labels[i]`; `next[i][j]` is the successor of
/// state `i` on `alphabet[j]`. Labels are pairwise distinct.
struct Dfa {
    std::vector<Symbol> alphabet;  // sorted letters
    std::vector<SubsetState> labels;
    std::size_t initial = 0;
    std::vector<std::vector<std::size_t>> next;
    std::vector<bool> final;

    std::size_t size() const noexcept { return labels.size(); }
    /// Index of `x` in the alphabet, if present.
    std::optional<std::size_t> letter_index(const Symbol& x) const;
    /// Index of the state labelled `label`, if present.
    std::optional<std::size_t> find(const SubsetState& label) const;
    /// Throws mhc::Error("unknown-symbol").
    bool accepts(std::span<const Symbol> input) const;
};

/// Subset construction over the reachable part of `a`, completed by the
/// empty subset-state when it is reachable. Throws mhc::Error("invalid-automaton").
Dfa determinize(const Automaton& a);

/// `d` as an epsilon-free automaton with states d0, d1, ... in index order.
Automaton to_automaton(const Dfa& d, std::string name);

/// Copy of `d` over the sorted union of its letters and `letters`; new letters
/// (and, if needed, a fresh empty sink) lead to the sink.
Dfa pad(const Dfa& d, const std::set<Symbol>& letters);

/// Synchronous product. A pair is final iff `combine(x_final, y_final)`.
/// Pair labels are the disjoint union of both labels, the left one under
/// namespace "x", the right one under "y".
/// Throws mhc::Error("alphabet-mismatch").
Dfa product(const Dfa& x, const Dfa& y, const std::function<bool(bool, bool)>& combine);

/// Shortest, then lexicographically least, accepted word; absent when the
/// language is empty.
std::optional<Word> is_empty(const Dfa& d);

struct EquivalenceVerdict {
    bool equivalent = true;
    std::optional<Word> counterexample;
};

/// Decides L(a) = L(b) through emptiness of the symmetric-difference product
/// over the union alphabet. Throws mhc::Error("invalid-automaton").
EquivalenceVerdict equivalent(const Automaton& a, const Automaton& b);

inline constexpr std::size_t kDefaultEnumerationBound = 10;

/// All accepted words of length <= max_len, shortest first then
/// lexicographically, by direct simulation of every word.
/// Throws mhc::Error("bound-exceeded") when max_len > bound.
std::vector<Word> enumerate_language(const Automaton& a, std::size_t max_len,
                                     std::size_t bound = kDefaultEnumerationBound);

/// Shortest-then-lexicographic comparison of words.
bool shortlex_less(const Word& u, const Word& v);

}  // namespace mhc
