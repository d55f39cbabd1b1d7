#include "burden/argument.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace burden {

namespace {

struct Draft {
    std::size_t rule;
    std::vector<std::size_t> children;
    std::set<Literal> sub_conclusions; // including its own
    std::size_t height;
    std::string signature;
};

std::string make_signature(const std::string& rule_id, const std::vector<std::size_t>& children,
                           const std::vector<Draft>& drafts) {
    std::string sig = rule_id + "(";
    for (std::size_t k = 0; k < children.size(); ++k) {
        if (k)
            sig += ',';
        sig += drafts[children[k]].signature;
    }
    return sig + ")";
}

} // namespace

std::vector<Argument> construct_arguments(const DefeasibleTheory& theory, std::size_t max_arguments) {
    const auto& rules = theory.rules();
    std::vector<Draft> drafts;
    std::unordered_set<std::string> seen;
    std::map<Literal, std::vector<std::size_t>> by_conclusion;

    auto add = [&](std::size_t rule, std::vector<std::size_t> children) {
        const Literal& head = rules[rule].consequent;
        std::set<Literal> below;
        std::size_t height = 0;
        for (auto c : children) {
            below.insert(drafts[c].sub_conclusions.begin(), drafts[c].sub_conclusions.end());
            height = std::max(height, drafts[c].height + 1);
        }
        if (below.contains(head))
            return;
        std::string sig = make_signature(rules[rule].id, children, drafts);
        if (!seen.insert(sig).second)
            return;
        if (drafts.size() >= max_arguments)
            throw ResourceLimitError("argument construction exceeded the cap of " + std::to_string(max_arguments) +
                                     " arguments");
        below.insert(head);
        drafts.push_back(Draft{rule, std::move(children), std::move(below), height, std::move(sig)});
    };

    for (std::size_t r = 0; r < rules.size(); ++r)
        if (rules[r].antecedents.empty())
            add(r, {});

    // Semi-naive chaining: each round only tries combinations using at least one
    // argument created in the previous round.
    std::size_t delta_begin = 0;
    while (true) {
        const std::size_t round_end = drafts.size();
        for (std::size_t k = delta_begin; k < round_end; ++k)
            by_conclusion[rules[drafts[k].rule].consequent].push_back(k);

        for (std::size_t r = 0; r < rules.size(); ++r) {
            const auto& body = rules[r].antecedents;
            if (body.empty())
                continue;
            std::vector<const std::vector<std::size_t>*> options;
            for (const auto& lit : body) {
                auto it = by_conclusion.find(lit);
                if (it == by_conclusion.end())
                    break;
                options.push_back(&it->second);
            }
            if (options.size() != body.size())
                continue;

            std::vector<std::size_t> pick(body.size(), 0);
            while (true) {
                std::vector<std::size_t> children(body.size());
                bool uses_new = false;
                for (std::size_t k = 0; k < body.size(); ++k) {
                    children[k] = (*options[k])[pick[k]];
                    uses_new = uses_new || children[k] >= delta_begin;
                }
                if (uses_new)
                    add(r, std::move(children));

                std::size_t k = 0;
                while (k < pick.size() && ++pick[k] == options[k]->size())
                    pick[k++] = 0;
                if (k == pick.size())
                    break;
            }
        }
        if (drafts.size() == round_end)
            break;
        delta_begin = round_end;
    }

    auto child_signatures = [&](const Draft& d) {
        std::vector<std::string_view> out;
        for (auto c : d.children)
            out.push_back(drafts[c].signature);
        return out;
    };
    std::vector<std::size_t> order(drafts.size());
    std::iota(order.begin(), order.end(), 0);
    std::ranges::sort(order, [&](std::size_t x, std::size_t y) {
        const Draft& a = drafts[x];
        const Draft& b = drafts[y];
        if (a.height != b.height)
            return a.height < b.height;
        if (a.rule != b.rule)
            return a.rule < b.rule;
        return child_signatures(a) < child_signatures(b);
    });
    std::vector<std::size_t> position(drafts.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = i;

    std::vector<Argument> args;
    args.reserve(drafts.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        Draft& d = drafts[order[i]];
        Argument a{d.signature, rules[d.rule].id, d.rule, {}, {}, rules[d.rule].consequent, d.height};
        std::vector<ArgIndex> subs{i};
        for (auto c : d.children) {
            ArgIndex ci = position[c];
            a.direct_subs.push_back(ci);
            // children precede their parents in the height ordering
            subs.insert(subs.end(), args[ci].subs.begin(), args[ci].subs.end());
        }
        std::ranges::sort(subs);
        subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
        a.subs = std::move(subs);
        args.push_back(std::move(a));
    }
    return args;
}

bool prefers(const Argument& a, const Argument& b, const DefeasibleTheory& theory) {
    return theory.superior(a.top_rule, b.top_rule);
}

AttackSet compute_attacks(const std::vector<Argument>& args, const DefeasibleTheory& theory) {
    std::map<Literal, std::vector<ArgIndex>> by_conclusion;
    for (ArgIndex i = 0; i < args.size(); ++i)
        by_conclusion[args[i].conclusion].push_back(i);

    AttackSet attacks;
    for (ArgIndex target = 0; target < args.size(); ++target) {
        for (ArgIndex sub : args[target].subs) {
            auto it = by_conclusion.find(args[sub].conclusion.complement());
            if (it == by_conclusion.end())
                continue;
            for (ArgIndex attacker : it->second)
                if (!prefers(args[sub], args[attacker], theory))
                    attacks.emplace(attacker, target);
        }
    }
    return attacks;
}

ArgumentationGraph::ArgumentationGraph(DefeasibleTheory theory, std::vector<Argument> args, AttackSet attacks)
    : theory_(std::move(theory)), args_(std::move(args)), attacks_(std::move(attacks)), attackers_(args_.size()),
      attacked_(args_.size()), counters_(args_.size()) {
    for (auto [from, to] : attacks_) {
        if (from >= args_.size() || to >= args_.size())
            throw std::out_of_range("attack endpoint outside the argument set");
        attackers_[to].push_back(from);
        attacked_[from].push_back(to);
    }
    for (auto& v : attackers_)
        std::ranges::sort(v);
    std::map<Literal, std::vector<ArgIndex>> by_conclusion;
    for (ArgIndex i = 0; i < args_.size(); ++i)
        by_conclusion[args_[i].conclusion].push_back(i);
    for (ArgIndex i = 0; i < args_.size(); ++i)
        if (auto it = by_conclusion.find(args_[i].conclusion.complement()); it != by_conclusion.end())
            counters_[i] = it->second;
}

bool ArgumentationGraph::prefers(ArgIndex a, ArgIndex b) const {
    return burden::prefers(args_.at(a), args_.at(b), theory_);
}

std::optional<ArgIndex> ArgumentationGraph::find(std::string_view signature) const {
    auto it = std::ranges::find(args_, signature, &Argument::signature);
    if (it == args_.end())
        return std::nullopt;
    return static_cast<ArgIndex>(it - args_.begin());
}

ArgIndex ArgumentationGraph::index_of(std::string_view signature) const {
    if (auto i = find(signature))
        return *i;
    throw std::out_of_range("no argument with signature " + std::string(signature));
}

ArgumentationGraph build_graph(const DefeasibleTheory& theory, std::size_t max_arguments) {
    auto args = construct_arguments(theory, max_arguments);
    auto attacks = compute_attacks(args, theory);
    return ArgumentationGraph(theory, std::move(args), std::move(attacks));
}

} // namespace burden
