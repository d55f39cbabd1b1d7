#include "burden/oracle.hpp"

#include "corpus.hpp"

#include <doctest.h>

#include <algorithm>

using namespace burden;

namespace {

// Every starred labelling over the graph, for clause-by-clause comparisons.
std::vector<BPLabelling> all_star_labellings(std::size_t n) {
    std::vector<BPLabelling> out{BPLabelling(n, StarLabel::In)};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<BPLabelling> next;
        for (const auto& l : out)
            for (auto s : {StarLabel::In, StarLabel::Out, StarLabel::Und}) {
                auto m = l;
                m[i] = s;
                next.push_back(std::move(m));
            }
        out = std::move(next);
    }
    return out;
}

void check_clause_agreement(const ArgumentationGraph& g, const BurdenSet& burdens) {
    for (const auto& l : all_star_labellings(g.size()))
        for (ArgIndex a = 0; a < g.size(); ++a) {
            CHECK(oracle::naive_accept(g, a, l, burdens) == bp_condition_in(g, a, l, burdens));
            CHECK(oracle::naive_reject(g, a, l, burdens) == bp_condition_out(g, a, l, burdens));
        }
}

} // namespace

TEST_CASE("oracle on the self-defeating argument") {
    auto f = test::load_figure("example8");
    auto r = oracle::oracle_report(f.theory);
    CHECK(r.exact_bp_models == 0);
    CHECK(r.min_violation == 1);
    CHECK(r.min_violation_models.size() == 3);
    CHECK(std::find(r.min_violation_models.begin(), r.min_violation_models.end(), f.star("bp")) !=
          r.min_violation_models.end());
    CHECK(r.selected == f.star("bp"));
    CHECK(r.completions_count == 0);
    CHECK_FALSE(r.grounding_exists);
}

TEST_CASE("oracle on the basic example") {
    auto f = test::load_figure("example1");
    auto r = oracle::oracle_report(f.theory);
    CHECK(r.grounded == f.tri("grounded"));
    CHECK(r.complete_labellings >= 1);
    CHECK(r.exact_bp_models == 1);
    CHECK(r.selected == starred(f.tri("grounded")));
}

TEST_CASE("oracle on the empty theory") {
    auto r = oracle::oracle_report(DefeasibleTheory{});
    CHECK(r.complete_labellings == 1);
    CHECK(r.exact_bp_models == 1);
    CHECK(r.min_violation == 0);
    CHECK(r.grounding_exists);
}

TEST_CASE("oracle caps") {
    auto t = test::load_theory("example3.theory");
    CHECK_THROWS_AS(oracle::oracle_report(t, {7, 12}), ResourceLimitError);
    CHECK_THROWS_AS(oracle::oracle_report(t, {8, 5}), ResourceLimitError);
    CHECK_NOTHROW(oracle::oracle_report(t, {8, 6}));
}

TEST_CASE("oracle reproduces the figures") {
    for (const char* key : {"example4", "example5", "example6", "example7"}) {
        CAPTURE(key);
        auto f = test::load_figure(key);
        auto r = oracle::oracle_report(f.theory);
        CHECK(r.min_violation == 0);
        CHECK(r.selected == f.star("bp"));
        if (f.raw.contains("grounding")) {
            REQUIRE(r.grounding.has_value());
            CHECK(*r.grounding == f.star("grounding"));
        }
    }
}

TEST_CASE("clause evaluators agree on the corpus") {
    for (const auto& key : test::corpus_keys()) {
        CAPTURE(key);
        auto f = test::load_figure(key);
        check_clause_agreement(f.graph, f.theory.burdens());
        check_clause_agreement(f.graph, BurdenSet{});
    }
}

TEST_CASE("clause evaluators agree on random theories") {
    int checked = 0;
    for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
        auto t = oracle::random_theory(seed);
        auto g = build_graph(t);
        if (g.size() > 7)
            continue;
        ++checked;
        CAPTURE(serialize_theory(t));
        check_clause_agreement(g, t.burdens());
    }
    CHECK(checked > 100);
}

TEST_CASE("random theories are reproducible and bounded") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto t = oracle::random_theory(seed);
        CHECK(t == oracle::random_theory(seed));
        CHECK(t.rules().size() <= 8);
        CHECK(t.superiority().size() <= 4);
        CHECK(t.burdens().size() <= 3);
        std::set<std::string> atoms;
        for (const auto& r : t.rules()) {
            atoms.insert(r.consequent.atom());
            for (const auto& x : r.antecedents)
                atoms.insert(x.atom());
        }
        CHECK(atoms.size() <= 5);
    }
}
