#include "mhc/trace.hpp"

#include <algorithm>

#include "mhc/error.hpp"

namespace mhc {

TraceEvent TraceEvent::activate(DeviceRef d) {
    TraceEvent ev{Kind::activate, std::move(d), {}, {}, Symbol::epsilon(), {}, false};
    return ev;
}

TraceEvent TraceEvent::step(DeviceRef d, StateId from, Symbol x, StateId to) {
    return TraceEvent{Kind::step, std::move(d), {}, std::move(from), std::move(x), std::move(to), false};
}

TraceEvent TraceEvent::handoff(DeviceRef from_device, DeviceRef to_device, StateId from, StateId to) {
    return TraceEvent{Kind::handoff, std::move(from_device), std::move(to_device), std::move(from),
                      Symbol::epsilon(), std::move(to), false};
}

TraceEvent TraceEvent::verdict(DeviceRef d, bool accepted) {
    return TraceEvent{Kind::verdict, std::move(d), {}, {}, Symbol::epsilon(), {}, accepted};
}

std::string_view to_string(TraceEvent::Kind kind) noexcept {
    switch (kind) {
        case TraceEvent::Kind::activate: return "activate";
        case TraceEvent::Kind::step: return "step";
        case TraceEvent::Kind::handoff: return "handoff";
        case TraceEvent::Kind::verdict: return "verdict";
    }
    return "?";
}

std::vector<TraceEvent> ControlTrace::of_kind(TraceEvent::Kind kind) const {
    std::vector<TraceEvent> out;
    std::copy_if(events.begin(), events.end(), std::back_inserter(out), [&](const auto& ev) { return ev.kind == kind; });
    return out;
}

namespace {

std::string label_of(const CompositionExpr& node) {
    switch (node.kind()) {
        case CompositionExpr::Kind::device: return node.name();
        case CompositionExpr::Kind::concat: return "concat";
        case CompositionExpr::Kind::parallel: return "parallel";
    }
    return {};
}

void collect_leaves(const CompositionExpr& node, DevicePath& path, std::vector<DeviceRef>& out) {
    if (node.is_device()) {
        out.push_back({path, node.name()});
        return;
    }
    path.push_back(kLeftSegment);
    collect_leaves(node.left(), path, out);
    path.back() = kRightSegment;
    collect_leaves(node.right(), path, out);
    path.pop_back();
}

bool member(const Automaton& a, std::span<const Symbol> w) {
    if (!std::all_of(w.begin(), w.end(), [&](const Symbol& x) { return a.has_letter(x); })) return false;
    return accepts(a, w);
}

void require_union_word(const Automaton& a, const Automaton& b, std::span<const Symbol> input) {
    for (const auto& x : input)
        if (!a.has_letter(x) && !b.has_letter(x))
            throw Error("unknown-symbol", "symbol '" + std::string(x.text()) + "' is in neither alphabet");
}

}  // namespace

DeviceRef owner(const CompositionExpr& e, const StateId& q) {
    CompositionExpr node = e;
    DevicePath path;
    for (const auto& seg : q.ns) {
        if (node.is_device()) break;
        if (seg == kLeftSegment) {
            node = node.left();
        } else if (seg == kRightSegment) {
            node = node.right();
        } else {
            break;
        }
        path.push_back(seg);
    }
    return {std::move(path), label_of(node)};
}

ControlTrace control_trace(const CompositionExpr& e, const DeviceEnvironment& env, std::span<const Symbol> input) {
    const Automaton composite = elaborate(e, env);
    ControlTrace trace;
    trace.input.assign(input.begin(), input.end());

    const auto run = witness(composite, input);
    trace.overall = run.has_value();
    if (!run) {
        std::vector<DeviceRef> leaves;
        DevicePath path;
        collect_leaves(e, path, leaves);
        for (auto& leaf : leaves) trace.events.push_back(TraceEvent::verdict(std::move(leaf), false));
        return trace;
    }

    std::vector<DeviceRef> activated;
    const auto activate = [&](const DeviceRef& d) {
        if (std::find(activated.begin(), activated.end(), d) != activated.end()) return;
        activated.push_back(d);
        trace.events.push_back(TraceEvent::activate(d));
    };

    activate(owner(e, run->states.front()));
    for (std::size_t i = 0; i < run->symbols.size(); ++i) {
        const StateId& from = run->states[i];
        const StateId& to = run->states[i + 1];
        const Symbol& x = run->symbols[i];
        DeviceRef src = owner(e, from);
        DeviceRef dst = owner(e, to);
        if (x.is_epsilon() && src != dst) {
            trace.events.push_back(TraceEvent::handoff(src, dst, from, to));
            activate(dst);
        } else {
            trace.events.push_back(TraceEvent::step(std::move(src), from, x, to));
        }
    }

    std::vector<DeviceRef> leaves;
    DevicePath path;
    collect_leaves(e, path, leaves);
    for (const auto& d : activated)
        if (std::find(leaves.begin(), leaves.end(), d) != leaves.end())
            trace.events.push_back(TraceEvent::verdict(d, true));
    return trace;
}

std::set<std::size_t> splits(const Automaton& a, const Automaton& b, std::span<const Symbol> input) {
    require_union_word(a, b, input);
    std::set<std::size_t> out;
    for (std::size_t i = 0; i <= input.size(); ++i)
        if (member(a, input.first(i)) && member(b, input.subspan(i))) out.insert(i);
    return out;
}

std::pair<bool, bool> parallel_verdicts(const Automaton& a, const Automaton& b, std::span<const Symbol> input) {
    require_union_word(a, b, input);
    return {member(a, input), member(b, input)};
}

}  // namespace mhc
