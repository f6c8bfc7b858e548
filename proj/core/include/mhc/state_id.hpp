#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace mhc {

/// A state name qualified by the provenance path of the device it came from.
///
/// The path is written outermost segment first; `L.R.p0` has namespace
/// {"L", "R"} and local name "p0". Ordering is lexicographic on
/// (namespace, local).
struct StateId {
    std::vector<std::string> ns;
    std::string local;

    StateId() = default;
    StateId(std::string local_name) : local(std::move(local_name)) {}  // NOLINT: implicit from a bare name
    StateId(const char* local_name) : local(local_name) {}            // NOLINT
    StateId(std::vector<std::string> path, std::string local_name)
        : ns(std::move(path)), local(std::move(local_name)) {}

    /// Copy with `segment` prepended to the namespace.
    StateId prefixed(const std::string& segment) const;

    friend bool operator==(const StateId&, const StateId&) = default;
    friend auto operator<=>(const StateId&, const StateId&) = default;
};

/// Segments and local names: nonempty, no whitespace, no '.', no '#'.
bool valid_name_segment(std::string_view s) noexcept;

/// Dot-joined spelling, e.g. "L.p0".
std::string to_string(const StateId& id);

/// Inverse of to_string. Throws mhc::Error("invalid-state") on bad input.
StateId parse_state_id(std::string_view text);

/// Dot-joined path; empty for the root.
std::string join_path(const std::vector<std::string>& path);

}  // namespace mhc
