#include <doctest.h>

#include <algorithm>
#include <set>

#include "mhc/algebra.hpp"
#include "mhc/analysis.hpp"
#include "mhc/error.hpp"
#include "mhc/random.hpp"
#include "oracles.hpp"

using namespace mhc;
using mhc::testing::reference_n1;
using mhc::testing::reference_n2;
using mhc::testing::sym;

namespace {

std::set<SubsetState> labels(const Dfa& d) { return {d.labels.begin(), d.labels.end()}; }

/// Distinct reachable state sets, found by walking every word up to `len`.
std::set<SubsetState> reachable_sets_by_words(const Automaton& a, std::size_t len) {
    std::set<SubsetState> out;
    for (const auto& s : mhc::testing::all_strings("ab", len)) {
        const auto r = mhc::testing::reached_set(a, word(s));
        out.emplace(r.begin(), r.end());
    }
    return out;
}

Word w_of(const std::string& s) { return word(s); }

}  // namespace

TEST_CASE("determinize the reference automata") {
    const auto d2 = determinize(reference_n2());
    const std::set<SubsetState> expected2{{"q0"}, {"q0", "q1"}, {"q1"}, {}};
    CHECK(reachable_sets_by_words(reference_n2(), 6) == expected2);
    CHECK(labels(d2) == expected2);
    CHECK(d2.labels[d2.initial] == SubsetState{"q0"});

    const auto d1 = determinize(reference_n1());
    const auto by_words = reachable_sets_by_words(reference_n1(), 6);
    CHECK(by_words.size() == 8);
    CHECK(d1.size() == 8);
    CHECK(labels(d1) == by_words);

    // Completeness and the final-state rule.
    for (std::size_t i = 0; i < d1.size(); ++i) {
        CHECK(d1.next[i].size() == d1.alphabet.size());
        const bool has_final = std::find(d1.labels[i].begin(), d1.labels[i].end(), StateId("p3")) != d1.labels[i].end();
        CHECK(d1.final[i] == has_final);
    }
}

TEST_CASE("determinize degenerate automata") {
    const Automaton bare("X", {}, {"s0"}, "s0", {}, {});
    const auto d = determinize(bare);
    CHECK(d.size() == 1);
    CHECK_FALSE(is_empty(d));

    const Automaton one_letter("Y", {sym("a")}, {"s0"}, "s0", {}, {});
    const auto e = determinize(one_letter);
    CHECK(e.size() == 2);  // {s0} and the sink
    CHECK(e.find(SubsetState{}).has_value());
    CHECK_FALSE(is_empty(e));

    const Automaton invalid("Z", {}, {"s0"}, "s9", {}, {});
    CHECK_THROWS_AS(determinize(invalid), Error);
}

TEST_CASE("determinize preserves the language") {
    AutomatonGenerator gen(314159);
    for (int round = 0; round < 100; ++round) {
        const auto a = gen.next();
        const auto d = determinize(a);
        CAPTURE(round);
        for (const auto& s : mhc::testing::all_strings("ab", 6))
            CHECK_MESSAGE(d.accepts(word(s)) == mhc::testing::run_search_accepts(a, word(s)), s);
    }
}

TEST_CASE("product") {
    const auto d1 = determinize(reference_n1());
    const auto d2 = determinize(reference_n2());

    CHECK_FALSE(is_empty(product(d1, d1, [](bool x, bool y) { return x != y; })));

    const auto both = product(d1, d2, [](bool x, bool y) { return x && y; });
    const auto either = product(d1, d2, [](bool x, bool y) { return x || y; });
    const auto par = parallel(reference_n1(), reference_n2());
    for (const auto& s : mhc::testing::all_strings("ab", 8)) {
        const bool l1 = mhc::testing::in_l1(s), l2 = mhc::testing::in_l2(s);
        CHECK_MESSAGE(both.accepts(word(s)) == (l1 && l2), s);
        if (s.size() <= 6) CHECK_MESSAGE(either.accepts(word(s)) == accepts(par, word(s)), s);
    }
    // The intersection is not empty: abbb is in both.
    CHECK(mhc::testing::in_l1("abbb"));
    CHECK(mhc::testing::in_l2("abbb"));
    CHECK(both.accepts(word("abbb")));

    // Pair labels stay distinct.
    CHECK(labels(both).size() == both.size());

    const Automaton only_c("C", {sym("c")}, {"s"}, "s", {}, {"s"});
    CHECK_THROWS_AS(product(d1, determinize(only_c), [](bool x, bool) { return x; }), Error);
}

TEST_CASE("pad routes new letters to the sink") {
    const auto d2 = determinize(reference_n2());
    const auto padded = pad(d2, {sym("c")});
    CHECK(padded.alphabet.size() == 3);
    CHECK(padded.size() == d2.size());  // the sink already existed
    CHECK_FALSE(padded.accepts(word("ac")));
    CHECK(padded.accepts(word("aab")));

    const Automaton loop("A", {sym("a")}, {"s"}, "s", {{"s", sym("a"), "s"}}, {"s"});
    const auto p = pad(determinize(loop), {sym("b")});
    CHECK(p.size() == 2);
    CHECK(p.accepts(word("aaa")));
    CHECK_FALSE(p.accepts(word("ab")));
}

TEST_CASE("is_empty returns the shortlex-least member") {
    const auto w = is_empty(determinize(reference_n1()));
    REQUIRE(w);
    CHECK(to_string(*w) == "baa");
    // Brute force: the least member of L1 by the string predicate.
    for (const auto& s : mhc::testing::all_strings("ab", 4))
        if (mhc::testing::in_l1(s)) {
            CHECK(s == "baa");
            break;
        }

    const Automaton accepts_eps("E", {sym("a")}, {"s"}, "s", {}, {"s"});
    const auto e = is_empty(determinize(accepts_eps));
    REQUIRE(e);
    CHECK(e->empty());
}

TEST_CASE("equivalence") {
    const auto n1 = reference_n1();
    const auto n2 = reference_n2();
    const auto l1 = instantiate(n1, "L"), r1 = instantiate(n1, "R");
    const auto l2 = instantiate(n2, "L"), r2 = instantiate(n2, "R");

    CHECK(equivalent(parallel(l1, r2), parallel(l2, r1)).equivalent);
    CHECK(equivalent(n1, instantiate(n1, "X")).equivalent);

    const auto v = equivalent(concat(l1, r2), concat(l2, r1));
    CHECK_FALSE(v.equivalent);
    REQUIRE(v.counterexample);
    CHECK(to_string(*v.counterexample) == "abaa");
    // Exactly one side accepts it, per the split oracle on the operands.
    CHECK_FALSE(mhc::testing::split_oracle(n1, n2, w_of("abaa")));
    CHECK(mhc::testing::split_oracle(n2, n1, w_of("abaa")));
    // And nothing shorter or lexicographically smaller separates them.
    for (const auto& s : mhc::testing::all_strings("ab", 4)) {
        if (s == "abaa") break;
        CHECK_MESSAGE(mhc::testing::split_oracle(n1, n2, word(s)) == mhc::testing::split_oracle(n2, n1, word(s)), s);
    }

    const Automaton invalid("Z", {}, {"s0"}, "s9", {}, {});
    CHECK_THROWS_AS(equivalent(n1, invalid), Error);
}

TEST_CASE("equivalence agrees with bounded enumeration") {
    AutomatonGenerator gen(2718);
    int decided_equal = 0;
    for (int round = 0; round < 300; ++round) {
        const auto a = gen.next({}, "A");
        const auto b = round % 3 == 0 ? instantiate(a, "X") : gen.next({}, "B");
        const std::size_t bound = determinize(a).size() * determinize(b).size();
        if (bound > kDefaultEnumerationBound) continue;
        CAPTURE(round);
        const auto v = equivalent(a, b);
        const bool same = enumerate_language(a, bound) == enumerate_language(b, bound);
        CHECK(v.equivalent == same);
        decided_equal += v.equivalent;
        if (!v.equivalent) {
            REQUIRE(v.counterexample);
            CHECK(accepts(a, *v.counterexample) != accepts(b, *v.counterexample));
        }
    }
    CHECK(decided_equal > 0);
}

TEST_CASE("enumerate_language") {
    const auto got = enumerate_language(reference_n2(), 2);
    CHECK(got == std::vector<Word>{w_of("a"), w_of("aa"), w_of("ab")});
    CHECK(enumerate_language(reference_n1(), 2).empty());

    const auto up_to_8 = enumerate_language(reference_n2(), 8);
    CHECK(std::none_of(up_to_8.begin(), up_to_8.end(), [](const Word& w) { return w.empty(); }));
    for (std::size_t i = 1; i < up_to_8.size(); ++i) CHECK(shortlex_less(up_to_8[i - 1], up_to_8[i]));

    std::vector<Word> expected;
    for (const auto& s : mhc::testing::all_strings("ab", 8))
        if (mhc::testing::in_l2(s)) expected.push_back(word(s));
    CHECK(up_to_8 == expected);

    try {
        enumerate_language(reference_n2(), 11);
        FAIL("expected bound-exceeded");
    } catch (const Error& e) {
        CHECK(e.code() == "bound-exceeded");
    }
    CHECK_NOTHROW(enumerate_language(reference_n2(), 11, 12));
}
