#include "mhc/automaton.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "mhc/error.hpp"

namespace mhc {

Automaton::Automaton(std::string name, std::set<Symbol> alphabet, StateSet states, StateId initial,
                     const std::vector<Transition>& transitions, StateSet finals)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      states_(std::move(states)),
      initial_(std::move(initial)),
      finals_(std::move(finals)) {
    alphabet_.erase(Symbol::epsilon());
    for (const auto& t : transitions) delta_[{t.from, t.symbol}].insert(t.to);
}

const StateSet& Automaton::targets(const StateId& from, const Symbol& x) const {
    static const StateSet kEmpty;
    const auto it = delta_.find({from, x});
    return it == delta_.end() ? kEmpty : it->second;
}

std::vector<Transition> Automaton::transitions() const {
    std::vector<Transition> out;
    out.reserve(transition_count());
    for (const auto& [key, tos] : delta_)
        for (const auto& to : tos) out.push_back({key.first, key.second, to});
    return out;
}

std::size_t Automaton::transition_count() const noexcept {
    std::size_t n = 0;
    for (const auto& [key, tos] : delta_) n += tos.size();
    return n;
}

Automaton Automaton::renamed(std::string name) const {
    Automaton copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

bool structurally_equal(const Automaton& a, const Automaton& b) {
    return a.alphabet_ == b.alphabet_ && a.states_ == b.states_ && a.initial_ == b.initial_ &&
           a.finals_ == b.finals_ && a.delta_ == b.delta_;
}

namespace {

bool valid_state_id(const StateId& q) {
    return valid_name_segment(q.local) &&
           std::all_of(q.ns.begin(), q.ns.end(), [](const auto& s) { return valid_name_segment(s); });
}

}  // namespace

std::vector<Violation> validate(const Automaton& a) {
    std::vector<Violation> out;
    for (const auto& q : a.states())
        if (!valid_state_id(q))
            out.push_back({"invalid-state-name", "state name '" + to_string(q) + "' is not a valid identifier"});
    if (!a.has_state(a.initial()))
        out.push_back({"initial-not-in-states", "initial state '" + to_string(a.initial()) + "' is not declared"});
    for (const auto& q : a.finals())
        if (!a.has_state(q))
            out.push_back({"final-not-in-states", "final state '" + to_string(q) + "' is not declared"});
    for (const auto& t : a.transitions()) {
        const std::string edge =
            to_string(t.from) + " " + std::string(t.symbol.text()) + " " + to_string(t.to);
        if (!a.has_state(t.from)) out.push_back({"unknown-source", "transition '" + edge + "' leaves an undeclared state"});
        if (!a.has_state(t.to)) out.push_back({"unknown-target", "transition '" + edge + "' enters an undeclared state"});
        if (t.symbol.is_letter() && !a.has_letter(t.symbol))
            out.push_back({"unknown-symbol", "transition '" + edge + "' uses a letter outside the alphabet"});
    }
    return out;
}

void require_valid(const Automaton& a) {
    const auto violations = validate(a);
    if (!violations.empty())
        throw Error("invalid-automaton", "automaton '" + a.name() + "' is invalid: " + violations.front().message);
}

Word RunWitness::consumed() const {
    Word w;
    for (const auto& x : symbols)
        if (x.is_letter()) w.push_back(x);
    return w;
}

bool is_valid_witness(const Automaton& a, const RunWitness& w) {
    if (w.states.empty() || w.states.size() != w.symbols.size() + 1) return false;
    if (w.states.front() != a.initial() || !a.is_final(w.states.back())) return false;
    for (std::size_t i = 0; i < w.symbols.size(); ++i)
        if (!a.targets(w.states[i], w.symbols[i]).contains(w.states[i + 1])) return false;
    return true;
}

StateSet epsilon_closure(const Automaton& a, const StateSet& from) {
    StateSet closed;
    std::vector<StateId> pending;
    for (const auto& q : from) {
        if (!a.has_state(q)) throw Error("unknown-state", "state '" + to_string(q) + "' is not in automaton '" + a.name() + "'");
        if (closed.insert(q).second) pending.push_back(q);
    }
    while (!pending.empty()) {
        const StateId q = std::move(pending.back());
        pending.pop_back();
        for (const auto& r : a.targets(q, Symbol::epsilon()))
            if (closed.insert(r).second) pending.push_back(r);
    }
    return closed;
}

namespace {

// Configuration of the witness search: state and number of letters consumed.
struct Config {
    StateId state;
    std::size_t pos;
    friend auto operator<=>(const Config&, const Config&) = default;
};

void require_letter(const Automaton& a, const Symbol& x) {
    if (!a.has_letter(x))
        throw Error("unknown-symbol",
                    "symbol '" + std::string(x.text()) + "' is not a letter of automaton '" + a.name() + "'");
}

}  // namespace

StateSet step(const Automaton& a, const StateSet& current, const Symbol& x) {
    require_letter(a, x);
    StateSet next;
    for (const auto& q : current) {
        if (!a.has_state(q)) throw Error("unknown-state", "state '" + to_string(q) + "' is not in automaton '" + a.name() + "'");
        const auto& tos = a.targets(q, x);
        next.insert(tos.begin(), tos.end());
    }
    return epsilon_closure(a, next);
}

void require_word(const Automaton& a, std::span<const Symbol> input) {
    for (const auto& x : input) require_letter(a, x);
}

bool accepts(const Automaton& a, std::span<const Symbol> input) {
    require_word(a, input);
    if (!a.has_state(a.initial())) return false;
    StateSet current = epsilon_closure(a, {a.initial()});
    for (const auto& x : input) {
        if (current.empty()) return false;
        current = step(a, current, x);
    }
    return std::any_of(current.begin(), current.end(), [&](const auto& q) { return a.is_final(q); });
}

std::optional<RunWitness> witness(const Automaton& a, std::span<const Symbol> input) {
    require_word(a, input);
    if (!a.has_state(a.initial())) return std::nullopt;

    // Each configuration remembers the configuration it was first reached from.
    std::map<Config, std::optional<Config>> parent;
    std::deque<Config> queue;

    const Config start{a.initial(), 0};
    parent.emplace(start, std::nullopt);
    queue.push_back(start);

    while (!queue.empty()) {
        const Config cur = queue.front();
        queue.pop_front();
        if (cur.pos == input.size() && a.is_final(cur.state)) {
            RunWitness w;
            for (std::optional<Config> c = cur; c; c = parent.at(*c)) w.states.push_back(c->state);
            std::reverse(w.states.begin(), w.states.end());
            std::vector<std::size_t> positions;
            for (std::optional<Config> c = cur; c; c = parent.at(*c)) positions.push_back(c->pos);
            std::reverse(positions.begin(), positions.end());
            for (std::size_t i = 1; i < positions.size(); ++i)
                w.symbols.push_back(positions[i] == positions[i - 1] ? Symbol::epsilon() : input[positions[i - 1]]);
            return w;
        }

        std::vector<Config> next;
        for (const auto& r : a.targets(cur.state, Symbol::epsilon())) next.push_back({r, cur.pos});
        if (cur.pos < input.size())
            for (const auto& r : a.targets(cur.state, input[cur.pos])) next.push_back({r, cur.pos + 1});
        std::sort(next.begin(), next.end());
        for (auto& c : next)
            if (parent.emplace(c, cur).second) queue.push_back(std::move(c));
    }
    return std::nullopt;
}

}  // namespace mhc
