#include "burden/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <random>

namespace burden::oracle {

DefeasibleTheory random_theory(std::uint64_t seed, const RandomTheoryLimits& limits) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    static const char* const kAtoms[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
    const std::size_t atoms = uniform(1, std::min<std::size_t>(limits.atoms, std::size(kAtoms)));
    auto literal = [&] { return Literal(kAtoms[uniform(0, atoms - 1)], uniform(0, 1) == 1); };

    std::vector<Rule> rules;
    const std::size_t rule_count = uniform(1, limits.rules);
    for (std::size_t i = 0; i < rule_count; ++i) {
        // Empty bodies half the time keeps chains short and the graphs within oracle reach.
        std::size_t body = uniform(0, 1) == 0 ? 0 : uniform(1, std::max<std::size_t>(limits.body, 1));
        std::vector<Literal> antecedents;
        for (std::size_t k = 0; k < body; ++k)
            antecedents.push_back(literal());
        rules.push_back(Rule{"r" + std::to_string(i + 1), std::move(antecedents), literal()});
    }

    SuperiorityRelation superiority;
    if (rule_count > 1) {
        const std::size_t wanted = uniform(0, limits.priorities);
        for (std::size_t k = 0; k < wanted; ++k) {
            std::size_t w = uniform(0, rule_count - 1);
            std::size_t l = uniform(0, rule_count - 1);
            if (w == l || superiority.contains({rules[l].id, rules[w].id}))
                continue;
            superiority.emplace(rules[w].id, rules[l].id);
        }
    }

    std::set<Literal> burdens;
    const std::size_t wanted = uniform(0, limits.burdens);
    for (std::size_t k = 0; k < wanted; ++k) {
        Literal x = literal();
        if (!burdens.contains(x.complement()))
            burdens.insert(std::move(x));
    }
    return DefeasibleTheory(std::move(rules), std::move(superiority), BurdenSet(std::move(burdens)));
}

} // namespace burden::oracle
