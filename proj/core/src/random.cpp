#include "mhc/random.hpp"

namespace mhc {

unsigned AutomatonGenerator::uniform(unsigned lo, unsigned hi) {
    return lo + static_cast<unsigned>(engine_() % (static_cast<std::uint64_t>(hi) - lo + 1));
}

bool AutomatonGenerator::bernoulli(double p) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
}

Automaton AutomatonGenerator::next(const RandomAutomatonParams& params, const std::string& name) {
    const unsigned n = uniform(params.min_states, params.max_states);
    StateSet states;
    for (unsigned i = 0; i < n; ++i) states.insert(StateId("s" + std::to_string(i)));

    std::set<Symbol> alphabet;
    std::vector<Symbol> symbols{Symbol::epsilon()};
    for (char c : params.letters) {
        alphabet.insert(Symbol::letter(std::string(1, c)));
        symbols.push_back(Symbol::letter(std::string(1, c)));
    }

    // Fixed draw order: from, symbol (eps first, then letters as given), to.
    std::vector<Transition> edges;
    for (unsigned from = 0; from < n; ++from)
        for (const auto& x : symbols)
            for (unsigned to = 0; to < n; ++to)
                if (bernoulli(params.edge_probability))
                    edges.push_back({StateId("s" + std::to_string(from)), x, StateId("s" + std::to_string(to))});

    StateSet finals;
    for (unsigned i = 0; i < n; ++i)
        if (bernoulli(params.final_probability)) finals.insert(StateId("s" + std::to_string(i)));

    return Automaton(name, std::move(alphabet), std::move(states), StateId("s0"), edges, std::move(finals));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace mhc
