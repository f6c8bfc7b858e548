#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mhc/state_id.hpp"
#include "mhc/symbol.hpp"

namespace mhc {

using StateSet = std::set<StateId>;

struct Transition {
    StateId from;
    Symbol symbol;
    StateId to;

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// An epsilon-NFA (alphabet, states, initial, transitions, finals).
///
/// Epsilon is implicitly part of every alphabet and is never stored in it.
/// The transition relation is sparse: a missing (state, symbol) entry denotes
/// the empty set. Values are immutable once constructed; an Automaton may
/// still violate its invariants, which `validate` reports.
class Automaton {
public:
    using TransitionMap = std::map<std::pair<StateId, Symbol>, StateSet>;

    Automaton() = default;
    Automaton(std::string name, std::set<Symbol> alphabet, StateSet states, StateId initial,
              const std::vector<Transition>& transitions, StateSet finals);

    const std::string& name() const noexcept { return name_; }
    const std::set<Symbol>& alphabet() const noexcept { return alphabet_; }
    const StateSet& states() const noexcept { return states_; }
    const StateId& initial() const noexcept { return initial_; }
    const StateSet& finals() const noexcept { return finals_; }
    const TransitionMap& transition_map() const noexcept { return delta_; }

    /// Successors of `from` on `x`; empty when no entry exists.
    const StateSet& targets(const StateId& from, const Symbol& x) const;

    /// All edges in (from, symbol, to) order.
    std::vector<Transition> transitions() const;
    std::size_t transition_count() const noexcept;

    bool has_state(const StateId& q) const { return states_.contains(q); }
    bool has_letter(const Symbol& x) const { return x.is_letter() && alphabet_.contains(x); }
    bool is_final(const StateId& q) const { return finals_.contains(q); }

    /// Same automaton under another name.
    Automaton renamed(std::string name) const;

    /// Equality of the five-tuple; the name is ignored.
    friend bool structurally_equal(const Automaton& a, const Automaton& b);
    friend bool operator==(const Automaton&, const Automaton&) = default;

private:
    std::string name_;
    std::set<Symbol> alphabet_;
    StateSet states_;
    StateId initial_;
    TransitionMap delta_;
    StateSet finals_;
};

struct Violation {
    std::string code;
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every invariant violation of `a`; empty iff `a` is well formed.
/// Codes: initial-not-in-states, final-not-in-states, unknown-source,
/// unknown-target, unknown-symbol, invalid-state-name.
std::vector<Violation> validate(const Automaton& a);

/// Throws mhc::Error("invalid-automaton") listing the first violation.
void require_valid(const Automaton& a);

/// A run p0 -x1-> p1 ... -xn-> pn, epsilon entries allowed among the symbols.
struct RunWitness {
    std::vector<StateId> states;
    std::vector<Symbol> symbols;

    /// The symbols with epsilon entries erased.
    Word consumed() const;

    friend bool operator==(const RunWitness&, const RunWitness&) = default;
};

/// True if `w` is a run of `a` from the initial state to a final state.
bool is_valid_witness(const Automaton& a, const RunWitness& w);

/// Smallest superset of `from` closed under epsilon edges.
/// Throws mhc::Error("unknown-state").
StateSet epsilon_closure(const Automaton& a, const StateSet& from);

/// Epsilon closure of the `x`-successors of `current`.
/// Throws mhc::Error("unknown-symbol") for epsilon or letters outside the alphabet,
/// mhc::Error("unknown-state") for states outside `a`.
StateSet step(const Automaton& a, const StateSet& current, const Symbol& x);

/// Throws mhc::Error("unknown-symbol") if some letter of `input` is not in the alphabet.
void require_word(const Automaton& a, std::span<const Symbol> input);

/// Membership of `input` in the language of `a`, with epsilon moves allowed
/// anywhere in the run.
bool accepts(const Automaton& a, std::span<const Symbol> input);

/// Canonical accepting run for `input`, if any.
///
/// Breadth-first over (consumed-prefix length, state) configurations; the
/// result has the fewest total steps and, among those, the lexicographically
/// least sequence of configurations ordered by (state, position).
std::optional<RunWitness> witness(const Automaton& a, std::span<const Symbol> input);

}  // namespace mhc
