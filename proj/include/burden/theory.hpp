#pragma once

#include "burden/literal.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace burden {

/// `id: antecedents => consequent`. All rules are defeasible.
struct Rule {
    std::string id;
    std::vector<Literal> antecedents;
    Literal consequent;

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// (winner, loser) pairs over rule ids. No transitive closure is taken.
using SuperiorityRelation = std::set<std::pair<std::string, std::string>>;

/// Literals carrying a burden of persuasion. Never holds both `x` and `~x`.
class BurdenSet {
public:
    BurdenSet() = default;
    /// Throws TheoryError(InconsistentBurden) on a complementary pair.
    explicit BurdenSet(std::set<Literal> literals);
    BurdenSet(std::initializer_list<Literal> literals) : BurdenSet(std::set<Literal>(literals)) {}

    bool contains(const Literal& x) const { return literals_.contains(x); }
    bool empty() const { return literals_.empty(); }
    std::size_t size() const { return literals_.size(); }
    const std::set<Literal>& literals() const { return literals_; }

    friend bool operator==(const BurdenSet&, const BurdenSet&) = default;

private:
    std::set<Literal> literals_;
};

enum class TheoryErrorKind {
    Syntax,
    DuplicateRuleId,
    UnknownRuleId,
    ReflexivePriority,
    SymmetricPriority,
    InconsistentBurden,
};

std::string_view to_string(TheoryErrorKind kind);

/// Validation or parse failure. `line`/`column` are 1-based; 0 when not from text.
class TheoryError : public std::runtime_error {
public:
    TheoryError(TheoryErrorKind kind, std::string message, int line = 0, int column = 0);

    TheoryErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    TheoryErrorKind kind_;
    int line_;
    int column_;
    std::string detail_;
};

/// Rules in declaration order, a superiority relation over their ids and the burden set.
/// Always valid: the constructor checks every invariant and throws TheoryError.
class DefeasibleTheory {
public:
    DefeasibleTheory() = default;
    DefeasibleTheory(std::vector<Rule> rules, SuperiorityRelation superiority, BurdenSet burdens = {});

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    const SuperiorityRelation& superiority() const noexcept { return superiority_; }
    const BurdenSet& burdens() const noexcept { return burdens_; }

    /// Declaration position of the rule with this id.
    std::optional<std::size_t> rule_index(std::string_view id) const;
    bool superior(std::string_view winner, std::string_view loser) const;

    DefeasibleTheory with_burdens(BurdenSet burdens) const;

    friend bool operator==(const DefeasibleTheory&, const DefeasibleTheory&) = default;

private:
    std::vector<Rule> rules_;
    SuperiorityRelation superiority_;
    BurdenSet burdens_;
};

DefeasibleTheory parse_theory(std::istream& in);
DefeasibleTheory parse_theory(std::string_view text);

/// Canonical text: rules in declaration order, then priorities, then one `bp:` line.
std::string serialize_theory(const DefeasibleTheory& theory);

} // namespace burden
