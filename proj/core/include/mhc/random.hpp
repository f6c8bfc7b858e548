#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "mhc/automaton.hpp"

namespace mhc {

/// Shape of the random automata used by the property suites.
struct RandomAutomatonParams {
    unsigned min_states = 1;
    unsigned max_states = 4;
    double edge_probability = 0.3;   // per (from, symbol incl. eps, to) triple
    double final_probability = 0.3;  // per state
    std::string letters = "ab";      // single-character letters
};

/// Seeded generator whose output depends only on the seed.
///
/// Draws come straight from std::mt19937_64, whose sequence is fixed by the
/// standard; integer ranges use modulo reduction and probabilities compare
/// the top 53 bits against the threshold, so no implementation-defined
/// distribution is involved.
class AutomatonGenerator {
public:
    explicit AutomatonGenerator(std::uint64_t seed) : engine_(seed) {}

    /// States s0..s{n-1}, initial s0, n uniform in [min_states, max_states].
    Automaton next(const RandomAutomatonParams& params = {}, const std::string& name = "rand");

    std::uint64_t next_u64() { return engine_(); }
    unsigned uniform(unsigned lo, unsigned hi);  // inclusive
    bool bernoulli(double p);

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finaliser; derives independent per-case seeds from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept;

}  // namespace mhc
