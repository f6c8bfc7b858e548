#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mhc/automaton.hpp"

namespace mhc {

/// Expression tree over named devices with sequential (concat) and
/// parallel composition nodes. Nodes are shared and immutable.
class CompositionExpr {
public:
    enum class Kind { device, concat, parallel };

    /// Throws mhc::Error("invalid-device-name") for names that are empty or contain
    /// whitespace or expression punctuation.
    static CompositionExpr device(std::string name);
    static CompositionExpr concat(CompositionExpr left, CompositionExpr right);
    static CompositionExpr parallel(CompositionExpr left, CompositionExpr right);

    Kind kind() const noexcept;
    bool is_device() const noexcept { return kind() == Kind::device; }
    /// Device name; empty for composite nodes.
    const std::string& name() const noexcept;
    /// Operands of a composite node. Throws mhc::Error("not-composite") on a device.
    CompositionExpr left() const;
    CompositionExpr right() const;

    /// Names of the device leaves, left to right (with repetitions).
    std::vector<std::string> leaves() const;

    friend bool operator==(const CompositionExpr& a, const CompositionExpr& b);

    static bool valid_device_name(std::string_view name) noexcept;

private:
    struct Node;
    explicit CompositionExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct CompositionExpr::Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
};

inline CompositionExpr::Kind CompositionExpr::kind() const noexcept { return node_->kind; }
inline const std::string& CompositionExpr::name() const noexcept { return node_->name; }

/// Named, validated devices available to `elaborate`.
class DeviceEnvironment {
public:
    DeviceEnvironment() = default;

    /// Binds `a` under its own name. Throws mhc::Error("invalid-automaton") if `a` fails
    /// validation, mhc::Error("duplicate-device") if the name is taken.
    void bind(const Automaton& a);
    void bind(const std::string& name, const Automaton& a);

    bool contains(const std::string& name) const { return bindings_.contains(name); }
    /// Throws mhc::Error("unbound-device").
    const Automaton& at(const std::string& name) const;
    const std::map<std::string, Automaton>& bindings() const noexcept { return bindings_; }

private:
    std::map<std::string, Automaton> bindings_;
};

/// Segment labels used by `elaborate` for the operands of a composite node.
inline constexpr const char* kLeftSegment = "L";
inline constexpr const char* kRightSegment = "R";
/// Local name of the fresh initial state introduced by `parallel`.
inline constexpr const char* kParallelRoot = "r0";

/// Isomorphic copy of `a` with `segment` prepended to every state's namespace.
/// Throws mhc::Error("invalid-segment").
Automaton instantiate(const Automaton& a, const std::string& segment);

/// Sequential composition: `a`'s final states gain an epsilon edge to `b`'s
/// initial state; the result starts where `a` starts and accepts where `b`
/// accepts. Throws mhc::Error("non-disjoint") if the state sets overlap.
Automaton concat(const Automaton& a, const Automaton& b);

/// Parallel composition: a fresh initial state with epsilon edges to both
/// initial states; finals are the union of both. The fresh state is named
/// "r0" (or "r0_<k>" for the least k avoiding a collision) in the root
/// namespace. Throws mhc::Error("non-disjoint") if the state sets overlap.
Automaton parallel(const Automaton& a, const Automaton& b);

/// Builds the automaton denoted by `e`. Each operand of a composite node is
/// instantiated under "L" or "R", so leaves are namespaced by their position
/// path and repeated device names never collide.
/// Throws mhc::Error("unbound-device").
Automaton elaborate(const CompositionExpr& e, const DeviceEnvironment& env);

/// Left folds `((e1 op e2) op e3) ...`, the n-ary form of each operator.
/// Throws mhc::Error("empty-fold") on an empty list.
CompositionExpr concat_all(const std::vector<CompositionExpr>& operands);
CompositionExpr parallel_all(const std::vector<CompositionExpr>& operands);

}  // namespace mhc
