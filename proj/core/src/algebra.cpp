#include "mhc/algebra.hpp"

#include <algorithm>
#include <cctype>

#include "mhc/error.hpp"

namespace mhc {

// ---- CompositionExpr -------------------------------------------------------

bool CompositionExpr::valid_device_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    return std::none_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isspace(c) || c == ';' || c == '|' || c == '(' || c == ')' || c == '#';
    });
}

CompositionExpr CompositionExpr::device(std::string name) {
    if (!valid_device_name(name)) throw Error("invalid-device-name", "invalid device name '" + name + "'");
    return CompositionExpr(std::make_shared<const Node>(Node{Kind::device, std::move(name), nullptr, nullptr}));
}

CompositionExpr CompositionExpr::concat(CompositionExpr left, CompositionExpr right) {
    return CompositionExpr(std::make_shared<const Node>(
        Node{Kind::concat, {}, std::move(left.node_), std::move(right.node_)}));
}

CompositionExpr CompositionExpr::parallel(CompositionExpr left, CompositionExpr right) {
    return CompositionExpr(std::make_shared<const Node>(
        Node{Kind::parallel, {}, std::move(left.node_), std::move(right.node_)}));
}

CompositionExpr CompositionExpr::left() const {
    if (is_device()) throw Error("not-composite", "device '" + name() + "' has no operands");
    return CompositionExpr(node_->left);
}

CompositionExpr CompositionExpr::right() const {
    if (is_device()) throw Error("not-composite", "device '" + name() + "' has no operands");
    return CompositionExpr(node_->right);
}

std::vector<std::string> CompositionExpr::leaves() const {
    if (is_device()) return {name()};
    auto out = left().leaves();
    auto rest = right().leaves();
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

bool operator==(const CompositionExpr& a, const CompositionExpr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.is_device()) return a.name() == b.name();
    return a.left() == b.left() && a.right() == b.right();
}

// ---- DeviceEnvironment -----------------------------------------------------

void DeviceEnvironment::bind(const Automaton& a) { bind(a.name(), a); }

void DeviceEnvironment::bind(const std::string& name, const Automaton& a) {
    if (!CompositionExpr::valid_device_name(name))
        throw Error("invalid-device-name", "invalid device name '" + name + "'");
    require_valid(a);
    if (!bindings_.emplace(name, a).second)
        throw Error("duplicate-device", "device '" + name + "' is already bound");
}

const Automaton& DeviceEnvironment::at(const std::string& name) const {
    const auto it = bindings_.find(name);
    if (it == bindings_.end()) throw Error("unbound-device", "device '" + name + "' is not bound");
    return it->second;
}

// ---- operators -------------------------------------------------------------

Automaton instantiate(const Automaton& a, const std::string& segment) {
    if (!valid_name_segment(segment)) throw Error("invalid-segment", "invalid path segment '" + segment + "'");
    StateSet states;
    for (const auto& q : a.states()) states.insert(q.prefixed(segment));
    StateSet finals;
    for (const auto& q : a.finals()) finals.insert(q.prefixed(segment));
    std::vector<Transition> edges;
    for (const auto& t : a.transitions()) edges.push_back({t.from.prefixed(segment), t.symbol, t.to.prefixed(segment)});
    return Automaton(a.name(), a.alphabet(), std::move(states), a.initial().prefixed(segment), edges, std::move(finals));
}

namespace {

void require_disjoint(const Automaton& a, const Automaton& b) {
    for (const auto& q : a.states())
        if (b.has_state(q))
            throw Error("non-disjoint", "automata '" + a.name() + "' and '" + b.name() + "' share state '" +
                                            to_string(q) + "'");
}

std::set<Symbol> joint_alphabet(const Automaton& a, const Automaton& b) {
    auto sigma = a.alphabet();
    sigma.insert(b.alphabet().begin(), b.alphabet().end());
    return sigma;
}

}  // namespace

Automaton concat(const Automaton& a, const Automaton& b) {
    require_disjoint(a, b);
    StateSet states = a.states();
    states.insert(b.states().begin(), b.states().end());

    // delta_1 everywhere on S1 (existing epsilon edges out of F1 included),
    // plus the bridge F1 -eps-> s2, plus delta_2 on S2.
    auto edges = a.transitions();
    for (const auto& f : a.finals()) edges.push_back({f, Symbol::epsilon(), b.initial()});
    const auto right = b.transitions();
    edges.insert(edges.end(), right.begin(), right.end());

    return Automaton("(" + a.name() + ";" + b.name() + ")", joint_alphabet(a, b), std::move(states), a.initial(),
                     edges, b.finals());
}

Automaton parallel(const Automaton& a, const Automaton& b) {
    require_disjoint(a, b);
    StateId root{kParallelRoot};
    for (unsigned k = 1; a.has_state(root) || b.has_state(root); ++k)
        root = StateId(std::string(kParallelRoot) + "_" + std::to_string(k));

    StateSet states = a.states();
    states.insert(b.states().begin(), b.states().end());
    states.insert(root);

    auto edges = a.transitions();
    const auto right = b.transitions();
    edges.insert(edges.end(), right.begin(), right.end());
    edges.push_back({root, Symbol::epsilon(), a.initial()});
    edges.push_back({root, Symbol::epsilon(), b.initial()});

    StateSet finals = a.finals();
    finals.insert(b.finals().begin(), b.finals().end());

    return Automaton("(" + a.name() + "|" + b.name() + ")", joint_alphabet(a, b), std::move(states), root, edges,
                     std::move(finals));
}

Automaton elaborate(const CompositionExpr& e, const DeviceEnvironment& env) {
    if (e.is_device()) return env.at(e.name());
    const auto left = instantiate(elaborate(e.left(), env), kLeftSegment);
    const auto right = instantiate(elaborate(e.right(), env), kRightSegment);
    return e.kind() == CompositionExpr::Kind::concat ? concat(left, right) : parallel(left, right);
}

namespace {

CompositionExpr fold(const std::vector<CompositionExpr>& operands, CompositionExpr (*op)(CompositionExpr, CompositionExpr)) {
    if (operands.empty()) throw Error("empty-fold", "composition needs at least one operand");
    CompositionExpr acc = operands.front();
    for (std::size_t i = 1; i < operands.size(); ++i) acc = op(acc, operands[i]);
    return acc;
}

}  // namespace

CompositionExpr concat_all(const std::vector<CompositionExpr>& operands) {
    return fold(operands, &CompositionExpr::concat);
}

CompositionExpr parallel_all(const std::vector<CompositionExpr>& operands) {
    return fold(operands, &CompositionExpr::parallel);
}

}  // namespace mhc
