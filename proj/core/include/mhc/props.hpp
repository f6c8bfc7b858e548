#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mhc/automaton.hpp"
#include "mhc/random.hpp"

namespace mhc {

struct PropsOptions {
    std::uint64_t seed = 42;
    std::size_t cases = 200;
    std::size_t max_len = 6;
    /// Worker threads; 0 picks the hardware concurrency. Results do not depend on it.
    unsigned threads = 0;
    RandomAutomatonParams shape;
};

struct PropsFailure {
    std::size_t case_index = 0;
    std::string law;  // "concat-split" or "parallel-union"
    Word input;
    bool composite = false;  // verdict of the composed automaton
    bool oracle = false;     // verdict of the split / disjunction oracle
    Automaton left;
    Automaton right;
};

struct PropsReport {
    std::size_t cases = 0;
    std::size_t checks = 0;
    std::vector<PropsFailure> failures;  // ordered by case index, then word

    bool passed() const noexcept { return failures.empty(); }
};

/// The operand pair of case `index`: two automata drawn from a generator
/// seeded with mix_seed(seed, index), named "A" and "B".
std::pair<Automaton, Automaton> props_case(const PropsOptions& options, std::size_t index);

/// Closure-law suite. For each random pair (a, b) and each word w over the
/// joint alphabet with |w| <= max_len, checks
///   w in L(a ; b)  <=>  some split of w has prefix in L(a), suffix in L(b)
///   w in L(a | b)  <=>  w in L(a) or w in L(b)
/// Cases are independent and may run on several threads; the report is
/// identical for any thread count.
PropsReport run_closure_suite(const PropsOptions& options);

/// Stable textual summary: counts, then the first failing case in full.
std::string render_report(const PropsReport& report);

}  // namespace mhc
