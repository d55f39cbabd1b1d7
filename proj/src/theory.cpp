#include "burden/theory.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace burden {

std::string_view to_string(TheoryErrorKind kind) {
    switch (kind) {
    case TheoryErrorKind::Syntax: return "syntax error";
    case TheoryErrorKind::DuplicateRuleId: return "duplicate rule id";
    case TheoryErrorKind::UnknownRuleId: return "unknown rule id";
    case TheoryErrorKind::ReflexivePriority: return "reflexive priority";
    case TheoryErrorKind::SymmetricPriority: return "symmetric priority";
    case TheoryErrorKind::InconsistentBurden: return "inconsistent burden set";
    }
    return "error";
}

namespace {
std::string format_error(TheoryErrorKind kind, const std::string& message, int line, int column) {
    std::ostringstream os;
    if (line > 0)
        os << "line " << line << ", column " << column << ": ";
    os << to_string(kind) << ": " << message;
    return os.str();
}
} // namespace

TheoryError::TheoryError(TheoryErrorKind kind, std::string message, int line, int column)
    : std::runtime_error(format_error(kind, message, line, column)), kind_(kind), line_(line), column_(column),
      detail_(std::move(message)) {}

BurdenSet::BurdenSet(std::set<Literal> literals) : literals_(std::move(literals)) {
    for (const auto& x : literals_)
        if (!x.negated() && literals_.contains(x.complement()))
            throw TheoryError(TheoryErrorKind::InconsistentBurden,
                              "both " + x.str() + " and " + x.complement().str() + " carry a burden");
}

DefeasibleTheory::DefeasibleTheory(std::vector<Rule> rules, SuperiorityRelation superiority, BurdenSet burdens)
    : rules_(std::move(rules)), superiority_(std::move(superiority)), burdens_(std::move(burdens)) {
    std::unordered_set<std::string> ids;
    for (const auto& r : rules_) {
        if (!is_identifier(r.id))
            throw TheoryError(TheoryErrorKind::Syntax, "invalid rule id '" + r.id + "'");
        if (!ids.insert(r.id).second)
            throw TheoryError(TheoryErrorKind::DuplicateRuleId, "rule '" + r.id + "' declared twice");
    }
    for (const auto& [winner, loser] : superiority_) {
        for (const auto* id : {&winner, &loser})
            if (!ids.contains(*id))
                throw TheoryError(TheoryErrorKind::UnknownRuleId, "priority refers to undeclared rule '" + *id + "'");
        if (winner == loser)
            throw TheoryError(TheoryErrorKind::ReflexivePriority, "rule '" + winner + "' cannot be superior to itself");
        if (superiority_.contains({loser, winner}))
            throw TheoryError(TheoryErrorKind::SymmetricPriority,
                              "both " + winner + " > " + loser + " and " + loser + " > " + winner);
    }
}

std::optional<std::size_t> DefeasibleTheory::rule_index(std::string_view id) const {
    auto it = std::ranges::find(rules_, id, &Rule::id);
    if (it == rules_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - rules_.begin());
}

bool DefeasibleTheory::superior(std::string_view winner, std::string_view loser) const {
    return superiority_.contains({std::string(winner), std::string(loser)});
}

DefeasibleTheory DefeasibleTheory::with_burdens(BurdenSet burdens) const {
    DefeasibleTheory copy = *this;
    copy.burdens_ = std::move(burdens);
    return copy;
}

namespace {
void join_literals(std::ostream& os, const auto& literals) {
    bool first = true;
    for (const auto& x : literals) {
        os << (first ? "" : ", ") << x.str();
        first = false;
    }
}
} // namespace

std::string serialize_theory(const DefeasibleTheory& theory) {
    std::ostringstream os;
    for (const auto& r : theory.rules()) {
        os << r.id << ": ";
        join_literals(os, r.antecedents);
        os << (r.antecedents.empty() ? "=> " : " => ") << r.consequent.str() << '\n';
    }
    for (const auto& [winner, loser] : theory.superiority())
        os << winner << " > " << loser << '\n';
    if (!theory.burdens().empty()) {
        os << "bp: ";
        join_literals(os, theory.burdens().literals());
        os << '\n';
    }
    return os.str();
}

} // namespace burden
