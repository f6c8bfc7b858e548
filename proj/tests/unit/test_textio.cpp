#include <doctest.h>

#include <algorithm>
#include <regex>

#include "mhc/algebra.hpp"
#include "mhc/analysis.hpp"
#include "mhc/random.hpp"
#include "mhc/textio.hpp"
#include "oracles.hpp"

using namespace mhc;
using mhc::testing::reference_n1;
using mhc::testing::reference_n2;
using mhc::testing::sym;

namespace {

std::vector<std::string> codes(const std::vector<ParseDiagnostic>& ds) {
    std::vector<std::string> out;
    for (const auto& d : ds) out.push_back(d.code);
    return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

CompositionExpr dev(const char* n) { return CompositionExpr::device(n); }

const char* kCanonicalN1 =
    "name N1\n"
    "alphabet a b\n"
    "states p0 p1 p2 p3\n"
    "initial p0\n"
    "final p3\n"
    "trans p0 a p0\n"
    "trans p0 b p0\n"
    "trans p0 b p1\n"
    "trans p1 a p2\n"
    "trans p1 b p2\n"
    "trans p2 a p3\n"
    "trans p2 b p3\n";

}  // namespace

TEST_CASE("the shipped fixtures match the reference automata") {
    const auto n1 = mhc::testing::load_fixture("N1.nfa");
    CHECK(n1.name() == "N1");
    CHECK(n1.states().size() == 4);
    CHECK(n1.transition_count() == 7);
    CHECK(n1.finals() == StateSet{"p3"});
    CHECK(n1 == reference_n1());
    CHECK(mhc::testing::load_fixture("N2.nfa") == reference_n2());
    CHECK(render_automaton(n1) == kCanonicalN1);
}

TEST_CASE("parse_automaton diagnostics") {
    SUBCASE("unknown symbol") {
        const auto r = parse_automaton("name X\nalphabet a b\nstates p0\ninitial p0\ntrans p0 c p0\n");
        REQUIRE_FALSE(r);
        REQUIRE(r.diagnostics.size() == 1);
        CHECK(r.diagnostics[0].code == "unknown-symbol");
        CHECK(r.diagnostics[0].line == 5);
        CHECK(r.diagnostics[0].column == 10);
    }
    SUBCASE("epsilon edge") {
        const auto r = parse_automaton("name X\nalphabet a\nstates p3 q0\ninitial p3\ntrans p3 eps q0\n");
        REQUIRE(r);
        CHECK(r.value->targets("p3", Symbol::epsilon()) == StateSet{"q0"});
    }
    SUBCASE("unknown state") {
        const auto r = parse_automaton("name X\nstates p0\ninitial p1\nfinal p2\n");
        CHECK(codes(r.diagnostics) == std::vector<std::string>{"unknown-state", "unknown-state"});
        CHECK(r.diagnostics[0].line == 3);
        CHECK(r.diagnostics[0].column == 9);
    }
    SUBCASE("duplicate section") {
        const auto r = parse_automaton("name X\nstates p0\nstates p1\ninitial p0\n");
        CHECK(codes(r.diagnostics) == std::vector<std::string>{"duplicate-section"});
        CHECK(r.diagnostics[0].line == 3);
    }
    SUBCASE("missing name") {
        CHECK(codes(parse_automaton("states p0\ninitial p0\n").diagnostics) == std::vector<std::string>{"missing-name"});
        CHECK(codes(parse_automaton("").diagnostics) == std::vector<std::string>{"missing-name"});
        CHECK(codes(parse_automaton("# only a comment\n").diagnostics) == std::vector<std::string>{"missing-name"});
    }
    SUBCASE("missing initial") {
        CHECK(codes(parse_automaton("name X\nstates p0\n").diagnostics) == std::vector<std::string>{"missing-initial"});
    }
    SUBCASE("malformed lines") {
        const auto r = parse_automaton("name X\nstates p0\ninitial p0\ntrans p0 a\nfoo bar\n");
        CHECK(codes(r.diagnostics) == std::vector<std::string>{"malformed-line", "malformed-line"});
        CHECK(codes(parse_automaton("name X\nalphabet eps\nstates p0\ninitial p0\n").diagnostics) ==
              std::vector<std::string>{"reserved-token"});
        CHECK(codes(parse_automaton("name X\nstates p0 a..b\ninitial p0\n").diagnostics) ==
              std::vector<std::string>{"malformed-line"});
    }
    SUBCASE("comments, blank lines and CRLF") {
        const auto r = parse_automaton("# header\r\nname X  # trailing\r\n\r\nstates s\r\ninitial s\r\nfinal\r\n");
        REQUIRE(r);
        CHECK(r.value->finals().empty());
        CHECK(r.value->alphabet().empty());
    }
}

TEST_CASE("render_automaton") {
    SUBCASE("namespaced states are dot-joined") {
        DeviceEnvironment env;
        env.bind(reference_n1());
        env.bind(reference_n2());
        const auto c = elaborate(CompositionExpr::concat(dev("N1"), dev("N2")), env);
        const auto text = render_automaton(c);
        CHECK(text.find("initial L.p0\n") != std::string::npos);
        CHECK(text.find("trans L.p3 eps R.q0\n") != std::string::npos);
        const auto back = parse_automaton(text);
        REQUIRE(back);
        CHECK(structurally_equal(*back.value, c));
        CHECK(equivalent(*back.value, c).equivalent);
    }
    SUBCASE("round trip and byte stability on random composites") {
        AutomatonGenerator gen(404);
        for (int round = 0; round < 50; ++round) {
            DeviceEnvironment env;
            env.bind(gen.next({}, "A"));
            env.bind(gen.next({}, "B"));
            const auto e = round % 2 ? CompositionExpr::concat(dev("A"), CompositionExpr::parallel(dev("B"), dev("A")))
                                     : CompositionExpr::parallel(dev("B"), dev("A"));
            const auto a = elaborate(e, env);
            const auto text = render_automaton(a);
            const auto back = parse_automaton(text);
            REQUIRE(back);
            CHECK(structurally_equal(*back.value, a));
            CHECK(render_automaton(*back.value) == text);
        }
    }
}

TEST_CASE("parse_expression") {
    CHECK(*parse_expression("N1 ; N2").value == CompositionExpr::concat(dev("N1"), dev("N2")));
    CHECK(*parse_expression("N1 ; N2 | N1").value ==
          CompositionExpr::parallel(CompositionExpr::concat(dev("N1"), dev("N2")), dev("N1")));
    CHECK(*parse_expression("A|B|C").value ==
          CompositionExpr::parallel(CompositionExpr::parallel(dev("A"), dev("B")), dev("C")));
    CHECK(*parse_expression("A;(B;C)").value ==
          CompositionExpr::concat(dev("A"), CompositionExpr::concat(dev("B"), dev("C"))));
    CHECK(*parse_expression(" ( N1 ) ").value == dev("N1"));

    const auto dangling = parse_expression("N1 ;");
    REQUIRE_FALSE(dangling);
    CHECK(dangling.diagnostics[0].code == "expected-operand");
    CHECK(dangling.diagnostics[0].column == 5);

    CHECK(parse_expression("(N1 ; N2").diagnostics[0].code == "unbalanced-parenthesis");
    CHECK(parse_expression("N1 ; N2)").diagnostics[0].code == "unbalanced-parenthesis");
    CHECK(parse_expression("").diagnostics[0].code == "empty-expression");
    CHECK(parse_expression("   ").diagnostics[0].code == "empty-expression");
    CHECK(parse_expression("N1 N2").diagnostics[0].code == "unexpected-token");
    CHECK(parse_expression("| N1").diagnostics[0].code == "expected-operand");
    CHECK(parse_expression("N1 # c").diagnostics[0].code == "unexpected-character");
}

TEST_CASE("render_expression is a minimal-parenthesis inverse of parse_expression") {
    CHECK(render_expression(CompositionExpr::parallel(CompositionExpr::concat(dev("N1"), dev("N2")), dev("N1"))) ==
          "N1 ; N2 | N1");
    CHECK(render_expression(CompositionExpr::concat(dev("A"), CompositionExpr::parallel(dev("B"), dev("C")))) ==
          "A ; (B | C)");
    CHECK(render_expression(CompositionExpr::concat(dev("A"), CompositionExpr::concat(dev("B"), dev("C")))) ==
          "A ; (B ; C)");

    // Every tree with up to three leaves over two operators.
    std::vector<CompositionExpr> trees{dev("A"), dev("B"), dev("C")};
    for (int depth = 0; depth < 2; ++depth) {
        const auto base = trees;
        for (const auto& l : base)
            for (const auto& r : base) {
                trees.push_back(CompositionExpr::concat(l, r));
                trees.push_back(CompositionExpr::parallel(l, r));
            }
    }
    for (const auto& e : trees) {
        const auto text = render_expression(e);
        const auto back = parse_expression(text);
        REQUIRE_MESSAGE(back, text);
        CHECK_MESSAGE(*back.value == e, text);
    }
}

TEST_CASE("render_dot") {
    DeviceEnvironment env;
    env.bind(reference_n1());
    env.bind(reference_n2());

    SUBCASE("concatenative composite") {
        const auto dot = render_dot(elaborate(CompositionExpr::concat(dev("N1"), dev("N2")), env), true);
        CHECK(count(dot, "subgraph \"cluster_") == 2);
        CHECK(count(dot, "[label=\"ε\"]") == 1);
        CHECK(dot.find("\"L.p3\" -> \"R.q0\" [label=\"ε\"]") != std::string::npos);
        CHECK(dot.find("\"R.q1\" [label=\"q1\", shape=doublecircle]") != std::string::npos);
        CHECK(dot.find("\"__start\" -> \"L.p0\"") != std::string::npos);
    }
    SUBCASE("parallel composite") {
        const auto dot = render_dot(elaborate(CompositionExpr::parallel(dev("N1"), dev("N2")), env), true);
        CHECK(count(dot, "subgraph \"cluster_") == 2);
        // r0 is declared outside both clusters, after they close.
        const auto root = dot.find("\n  \"r0\" [label=\"r0\"];");
        CHECK(root != std::string::npos);
        CHECK(root > dot.rfind("  }\n"));
        CHECK(count(dot, "[label=\"ε\"]") == 2);
    }
    SUBCASE("ungrouped") {
        const auto dot = render_dot(elaborate(CompositionExpr::concat(dev("N1"), dev("N2")), env), false);
        CHECK(count(dot, "subgraph") == 0);
    }
    SUBCASE("one state") {
        const Automaton single("S", {}, {"s"}, "s", {}, {"s"});
        const auto dot = render_dot(single, true);
        // State nodes are the declarations with a label attribute other than the entry point.
        const std::regex node_decl(R"(^\s*"[^"]+" \[label=)");
        std::size_t nodes = 0;
        std::size_t start = 0;
        while (start < dot.size()) {
            const auto end = dot.find('\n', start);
            const auto line = dot.substr(start, end - start);
            if (std::regex_search(line, node_decl) && line.find("__start") == std::string::npos) ++nodes;
            start = end + 1;
        }
        CHECK(nodes == 1);
        CHECK(count(dot, " -> ") == 1);  // the entry arrow only
    }
}

TEST_CASE("words") {
    const std::set<Symbol> ab{sym("a"), sym("b")};
    CHECK(*parse_word("aabaaaab", ab).value == word("aabaaaab"));
    CHECK(parse_word("eps", ab).value->empty());
    CHECK(parse_word("", ab).value->empty());
    CHECK(*parse_word("a,b", ab).value == word("ab"));
    const auto bad = parse_word("abc", ab);
    REQUIRE_FALSE(bad);
    CHECK(bad.diagnostics[0].code == "unknown-symbol");
    CHECK(bad.diagnostics[0].column == 3);

    const std::set<Symbol> tokens{sym("go"), sym("stop")};
    CHECK(*parse_word("go,stop,go", tokens).value == Word{sym("go"), sym("stop"), sym("go")});
    CHECK(*parse_word("stop", tokens).value == Word{sym("stop")});
    CHECK(render_word(Word{sym("go"), sym("stop")}, tokens) == "go,stop");
    CHECK(render_word(word("aab"), ab) == "aab");
    CHECK(render_word(Word{}, ab) == "eps");

    const std::set<Symbol> eps_letters{sym("e"), sym("p"), sym("s")};
    CHECK(*parse_word(render_word(word("eps"), eps_letters), eps_letters).value == word("eps"));
}
