#pragma once

#include "burden/labels.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace burden::oracle {

// Brute-force reference for every labelling notion. Nothing in here calls the
// grounded or BP solvers; the clause evaluation is written out separately.

struct Limits {
    std::size_t max_arguments = 12;
    std::size_t max_und = 12;
};

struct OracleReport {
    std::size_t complete_labellings = 0;
    /// The complete labelling whose IN set is contained in every other's.
    TriLabelling grounded;
    std::size_t exact_bp_models = 0;
    std::vector<BPLabelling> exact_models; ///< sorted by label vector
    std::size_t min_violation = 0;
    std::vector<BPLabelling> min_violation_models; ///< sorted by label vector
    /// Fewest IN*, then smallest sorted IN* signatures, among the minimal-violation models.
    BPLabelling selected;
    std::size_t completions_count = 0; ///< completions of `selected`
    std::vector<BPLabelling> completions; ///< sorted by label vector
    bool grounding_exists = false;
    std::optional<BPLabelling> grounding;
};

/// Acceptance and rejection clauses, evaluated by scanning the whole argument set.
bool naive_accept(const ArgumentationGraph& g, ArgIndex a, const BPLabelling& l, const BurdenSet& burdens);
bool naive_reject(const ArgumentationGraph& g, ArgIndex a, const BPLabelling& l, const BurdenSet& burdens);
std::size_t naive_violations(const ArgumentationGraph& g, const TriLabelling& grounded, const BPLabelling& l,
                             const BurdenSet& burdens);

/// Exhaustive report over 3^n labellings. Uses `burdens`, or the theory's own when omitted.
/// Throws ResourceLimitError when the graph exceeds `limits`.
OracleReport oracle_report(const ArgumentationGraph& g, const BurdenSet& burdens, const Limits& limits = {});
OracleReport oracle_report(const DefeasibleTheory& theory, const Limits& limits = {});

struct RandomTheoryLimits {
    std::size_t atoms = 5;
    std::size_t rules = 8;
    std::size_t priorities = 4;
    std::size_t burdens = 3;
    std::size_t body = 2;
};

/// Valid random theory; identical seeds give identical theories.
DefeasibleTheory random_theory(std::uint64_t seed, const RandomTheoryLimits& limits = {});

} // namespace burden::oracle
