#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mhc/algebra.hpp"
#include "mhc/automaton.hpp"

namespace mhc {

/// Position of a node in a composition expression: the sequence of "L"/"R"
/// segments from the root. It equals the namespace `elaborate` gives that
/// node's states.
using DevicePath = std::vector<std::string>;

/// A node of the expression as seen by a trace: its path and its label
/// (the device name for leaves, "concat"/"parallel" for composite nodes).
struct DeviceRef {
    DevicePath path;
    std::string label;

    friend bool operator==(const DeviceRef&, const DeviceRef&) = default;
};

struct TraceEvent {
    enum class Kind { activate, step, handoff, verdict };

    Kind kind;
    DeviceRef device;         // the active device; the source of a handoff
    DeviceRef target;         // handoff destination only
    StateId from;             // step / handoff
    Symbol symbol = Symbol::epsilon();
    StateId to;               // step / handoff
    bool accepted = false;    // verdict only

    static TraceEvent activate(DeviceRef d);
    static TraceEvent step(DeviceRef d, StateId from, Symbol x, StateId to);
    static TraceEvent handoff(DeviceRef from_device, DeviceRef to_device, StateId from, StateId to);
    static TraceEvent verdict(DeviceRef d, bool accepted);

    friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

std::string_view to_string(TraceEvent::Kind kind) noexcept;

struct ControlTrace {
    Word input;
    bool overall = false;
    std::vector<TraceEvent> events;

    /// Events of one kind, in order.
    std::vector<TraceEvent> of_kind(TraceEvent::Kind kind) const;
};

/// The node of `e` that owns state `q` of `elaborate(e, env)`: the deepest
/// node reached by following `q`'s namespace segments through composite nodes.
DeviceRef owner(const CompositionExpr& e, const StateId& q);

/// Replays the canonical accepting run of the elaborated composite, marking
/// device activations, in-device steps and cross-device epsilon handoffs, and
/// closing with one verdict per activated leaf device. A rejected input yields
/// only verdict events, one per leaf device, all false.
/// Throws mhc::Error("unbound-device") or mhc::Error("unknown-symbol").
ControlTrace control_trace(const CompositionExpr& e, const DeviceEnvironment& env, std::span<const Symbol> input);

/// Every split point i with input[0, i) in L(a) and input[i, n) in L(b),
/// decided by separate membership tests on `a` and `b`.
/// Throws mhc::Error("unknown-symbol") for letters in neither alphabet.
std::set<std::size_t> splits(const Automaton& a, const Automaton& b, std::span<const Symbol> input);

/// (input in L(a), input in L(b)): each device receives its own copy.
/// Throws mhc::Error("unknown-symbol") for letters in neither alphabet.
std::pair<bool, bool> parallel_verdicts(const Automaton& a, const Automaton& b, std::span<const Symbol> input);

}  // namespace mhc
