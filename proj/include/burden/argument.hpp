#pragma once

#include "burden/theory.hpp"

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burden {

/// Position of an argument within its graph's ordered argument list.
using ArgIndex = std::size_t;

/// Thrown when a construction or search would exceed its configured cap.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxArguments = 10'000;

/// A tree of rule applications. Subargument links are indices into the owning list.
struct Argument {
    /// `top(sub1,sub2,...)`, e.g. `r4(r3(r1()))`.
    std::string signature;
    std::string top_rule;
    std::size_t top_rule_index = 0; ///< declaration position of the top rule
    std::vector<ArgIndex> direct_subs;
    /// Every subargument including the argument itself, ascending.
    std::vector<ArgIndex> subs;
    Literal conclusion;
    std::size_t height = 0;
};

/// Every argument constructible from `theory`, Sub-closed and ordered by
/// (height, top-rule declaration order, direct-sub signatures). Arguments with a
/// proper subargument of identical conclusion are never built.
std::vector<Argument> construct_arguments(const DefeasibleTheory& theory,
                                          std::size_t max_arguments = kDefaultMaxArguments);

/// Last-link preference: the top rule of `a` is superior to the top rule of `b`.
bool prefers(const Argument& a, const Argument& b, const DefeasibleTheory& theory);

using AttackSet = std::set<std::pair<ArgIndex, ArgIndex>>;

/// (A, B) iff some B' in Sub(B) concludes the complement of Conc(A) and B' is not preferred to A.
AttackSet compute_attacks(const std::vector<Argument>& args, const DefeasibleTheory& theory);

class ArgumentationGraph {
public:
    ArgumentationGraph() = default;
    ArgumentationGraph(DefeasibleTheory theory, std::vector<Argument> args, AttackSet attacks);

    const DefeasibleTheory& theory() const noexcept { return theory_; }
    const std::vector<Argument>& arguments() const noexcept { return args_; }
    const Argument& argument(ArgIndex i) const { return args_.at(i); }
    std::size_t size() const noexcept { return args_.size(); }

    const AttackSet& attacks() const noexcept { return attacks_; }
    bool attacks(ArgIndex from, ArgIndex to) const { return attacks_.contains({from, to}); }
    const std::vector<ArgIndex>& attackers(ArgIndex target) const { return attackers_.at(target); }
    const std::vector<ArgIndex>& attacked_by(ArgIndex source) const { return attacked_.at(source); }

    /// Arguments whose conclusion is the complement of Conc(a). Not the same as attackers.
    const std::vector<ArgIndex>& counterarguments(ArgIndex a) const { return counters_.at(a); }

    bool prefers(ArgIndex a, ArgIndex b) const;

    std::optional<ArgIndex> find(std::string_view signature) const;
    /// Throws std::out_of_range for unknown signatures.
    ArgIndex index_of(std::string_view signature) const;

    /// `a1`, `a2`, ... in argument order.
    static std::string alias(ArgIndex i) { return "a" + std::to_string(i + 1); }

private:
    DefeasibleTheory theory_;
    std::vector<Argument> args_;
    AttackSet attacks_;
    std::vector<std::vector<ArgIndex>> attackers_;
    std::vector<std::vector<ArgIndex>> attacked_;
    std::vector<std::vector<ArgIndex>> counters_;
};

ArgumentationGraph build_graph(const DefeasibleTheory& theory, std::size_t max_arguments = kDefaultMaxArguments);

} // namespace burden
