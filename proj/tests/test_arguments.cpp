#include "burden/argument.hpp"
#include "burden/oracle.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <algorithm>

using namespace burden;

namespace {

std::vector<std::string> signatures(const std::vector<Argument>& args) {
    std::vector<std::string> out;
    for (const auto& a : args)
        out.push_back(a.signature);
    return out;
}

// Attack relation recomputed straight from its definition: A attacks B iff some
// B' in Sub(B) concludes the complement of Conc(A) and TopRule(B') is not superior to TopRule(A).
AttackSet naive_attacks(const ArgumentationGraph& g) {
    AttackSet out;
    const auto& t = g.theory();
    for (ArgIndex a = 0; a < g.size(); ++a)
        for (ArgIndex b = 0; b < g.size(); ++b)
            for (ArgIndex sub = 0; sub < g.size(); ++sub) {
                const auto& subs = g.argument(b).subs;
                if (std::find(subs.begin(), subs.end(), sub) == subs.end())
                    continue;
                const auto& x = g.argument(a).conclusion;
                const auto& y = g.argument(sub).conclusion;
                if (x.atom() == y.atom() && x.negated() != y.negated() &&
                    !t.superior(g.argument(sub).top_rule, g.argument(a).top_rule))
                    out.emplace(a, b);
            }
    return out;
}

void check_structure(const ArgumentationGraph& g) {
    const auto& rules = g.theory().rules();
    for (ArgIndex i = 0; i < g.size(); ++i) {
        const Argument& a = g.argument(i);
        const Rule& top = rules.at(a.top_rule_index);
        CHECK(top.id == a.top_rule);
        CHECK(a.conclusion == top.consequent);
        REQUIRE(a.direct_subs.size() == top.antecedents.size());
        std::size_t height = 0;
        for (std::size_t k = 0; k < a.direct_subs.size(); ++k) {
            ArgIndex s = a.direct_subs[k];
            CHECK(s < i);
            CHECK(g.argument(s).conclusion == top.antecedents[k]);
            height = std::max(height, g.argument(s).height + 1);
        }
        CHECK(a.height == height);
        // no proper subargument repeats the conclusion
        for (ArgIndex s : a.subs)
            if (s != i)
                CHECK(g.argument(s).conclusion != a.conclusion);
        // Sub-closure
        for (ArgIndex s : a.subs)
            for (ArgIndex ss : g.argument(s).subs)
                CHECK(std::binary_search(a.subs.begin(), a.subs.end(), ss));
    }
}

void check_attack_closure(const ArgumentationGraph& g) {
    for (auto [attacker, target] : g.attacks())
        for (ArgIndex b = 0; b < g.size(); ++b) {
            const auto& subs = g.argument(b).subs;
            if (std::binary_search(subs.begin(), subs.end(), target))
                CHECK(g.attacks(attacker, b));
        }
}

} // namespace

TEST_CASE("arguments of the basic example") {
    auto args = construct_arguments(test::load_theory("example1.theory"));
    CHECK(signatures(args) ==
          std::vector<std::string>{"r0()", "r1()", "r5()", "r2(r0())", "r3(r1())", "r4(r3(r1()))"});
    CHECK(args[5].height == 2);
    CHECK(args[5].subs == std::vector<ArgIndex>{1, 4, 5});
}

TEST_CASE("empty theory has no arguments") {
    CHECK(construct_arguments(DefeasibleTheory{}).empty());
    auto g = build_graph(DefeasibleTheory{});
    CHECK(g.size() == 0);
    CHECK(g.attacks().empty());
}

TEST_CASE("cyclic rules stop at a repeated conclusion") {
    // r3(r2(r1())) would conclude p over its own subargument r1() concluding p.
    auto args = construct_arguments(parse_theory("r1: => p\nr2: p => q\nr3: q => p"));
    CHECK(signatures(args) == std::vector<std::string>{"r1()", "r2(r1())"});
}

TEST_CASE("rule bodies with several antecedents combine every choice") {
    auto args = construct_arguments(parse_theory("r1: => a\nr2: => a\nr3: => b\nr4: a, b => c"));
    CHECK(signatures(args) == std::vector<std::string>{"r1()", "r2()", "r3()", "r4(r1(),r3())", "r4(r2(),r3())"});
}

TEST_CASE("argument cap is enforced") {
    // 2 choices per antecedent over three antecedents: 6 leaves + 8 combinations.
    const char* text = "r1: => a\nr2: => a\nr3: => b\nr4: => b\nr5: => c\nr6: => c\nr7: a, b, c => d";
    CHECK(construct_arguments(parse_theory(text)).size() == 14);
    CHECK_THROWS_AS(construct_arguments(parse_theory(text), 13), ResourceLimitError);
    CHECK_NOTHROW(construct_arguments(parse_theory(text), 14));
}

TEST_CASE("last-link preference") {
    auto f = test::load_figure("example1");
    const auto& g = f.graph;
    CHECK(prefers(g.argument(f("A2")), g.argument(f("B2")), f.theory));
    CHECK_FALSE(prefers(g.argument(f("B2")), g.argument(f("A2")), f.theory));
    for (ArgIndex i = 0; i < g.size(); ++i)
        CHECK_FALSE(g.prefers(i, i));

    auto m = test::load_figure("example2");
    // r6 tops B3, r7 tops C2
    CHECK(m.graph.prefers(m("B3"), m("C2")));
    CHECK_FALSE(m.graph.prefers(m("C2"), m("B3")));
}

TEST_CASE("attacks of the basic example") {
    auto f = test::load_figure("example1");
    CHECK(f.graph.attacks() == f.attacks());
    CHECK(f.graph.attacks(f("A2"), f("B2")));
    CHECK(f.graph.attacks(f("A2"), f("B3")));
    CHECK(f.graph.attacks(f("C1"), f("B3")));
    CHECK(f.graph.attacks(f("B3"), f("C1")));
    CHECK_FALSE(f.graph.attacks(f("B2"), f("A2")));
    CHECK(f.graph.attacks().size() == 4);
}

TEST_CASE("single argument, no attacks") {
    auto g = build_graph(parse_theory("r1: => a"));
    CHECK(g.size() == 1);
    CHECK(g.attacks().empty());
}

TEST_CASE("self-defeating argument attacks itself") {
    auto f = test::load_figure("example8");
    CHECK(f.graph.attacks(f("A3"), f("A1")));
    CHECK(f.graph.attacks(f("A3"), f("A2")));
    CHECK(f.graph.attacks(f("A3"), f("A3")));
    CHECK(f.graph.attacks() == f.attacks());
}

TEST_CASE("counterarguments are conclusion-level, not attackers") {
    auto f = test::load_figure("example8");
    // A2 concludes p; nothing concludes ~p, yet A3 attacks it.
    CHECK(f.graph.counterarguments(f("A2")).empty());
    CHECK(f.graph.attackers(f("A2")) == std::vector<ArgIndex>{f("A3")});
    CHECK(f.graph.counterarguments(f("A1")) == std::vector<ArgIndex>{f("A3")});
}

TEST_CASE("figure attack sets of the corpus") {
    for (const auto& key : test::corpus_keys()) {
        auto f = test::load_figure(key);
        CAPTURE(key);
        if (f.raw.contains("attacks"))
            CHECK(f.graph.attacks() == f.attacks());
        CHECK(f.graph.size() == f.names.size());
    }
    CHECK(test::load_figure("example3").graph.size() == 8);
}

TEST_CASE("structural invariants on corpus and random theories") {
    std::vector<DefeasibleTheory> theories;
    for (const auto& key : test::corpus_keys())
        theories.push_back(test::load_figure(key).theory);
    for (std::uint64_t seed = 0; seed < 300; ++seed)
        theories.push_back(oracle::random_theory(seed));
    for (const auto& t : theories) {
        CAPTURE(serialize_theory(t));
        auto g = build_graph(t);
        check_structure(g);
        CHECK(g.attacks() == naive_attacks(g));
        check_attack_closure(g);
        for (ArgIndex a = 0; a < g.size(); ++a)
            for (ArgIndex b = 0; b < g.size(); ++b)
                CHECK_FALSE((g.prefers(a, b) && g.prefers(b, a)));
        // determinism
        auto again = build_graph(t);
        CHECK(signatures(again.arguments()) == signatures(g.arguments()));
        CHECK(again.attacks() == g.attacks());
    }
}
