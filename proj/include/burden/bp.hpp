#pragma once

#include "burden/grounded.hpp"

#include <optional>
#include <vector>

namespace burden {

inline constexpr std::size_t kDefaultSearchCap = 20;

/// How the returned BP-labelling relates to the burden constraints.
struct SolverDiagnostics {
    bool exact = false;               ///< every constraint holds
    std::size_t violation_count = 0;  ///< violated constraints of the returned labelling
    std::size_t model_count = 0;      ///< number of exact models found
    bool approximate = false;         ///< no exact model; a minimal-violation labelling was returned

    friend bool operator==(const SolverDiagnostics&, const SolverDiagnostics&) = default;
};

struct BPResult {
    BPLabelling labelling;
    SolverDiagnostics diagnostics;
};

/// Acceptance condition for a first-stage UND argument `a` under `candidate`.
///
/// With the complement of Conc(a) burdened: no superior counterargument is IN*
/// and no direct subargument is OUT*. Otherwise: every counterargument that `a`
/// is not preferred to is OUT* and every direct subargument is IN*.
/// Counterarguments are arguments concluding the complement; they need not attack `a`.
bool bp_condition_in(const ArgumentationGraph& g, ArgIndex a, const BPLabelling& candidate, const BurdenSet& burdens);

/// Rejection condition for a first-stage UND argument `a` under `candidate`.
///
/// With Conc(a) burdened: some counterargument that `a` is not preferred to is
/// not OUT*, or some direct subargument is not IN*. Otherwise: some superior
/// counterargument is IN*, or some direct subargument is OUT*.
bool bp_condition_out(const ArgumentationGraph& g, ArgIndex a, const BPLabelling& candidate, const BurdenSet& burdens);

/// Each first-stage IN argument not IN* and each first-stage OUT argument not OUT*
/// counts one; for first-stage UND arguments each failed biconditional
/// (IN* iff acceptance, OUT* iff rejection) counts one.
std::size_t count_violations(const ArgumentationGraph& g, const TriLabelling& grounded, const BPLabelling& candidate,
                             const BurdenSet& burdens);

/// The canonical BP-labelling. Among exact models the one with fewest IN*
/// (then lexicographically smallest IN* signatures) is returned; when none
/// exists, the labelling minimising (violations, |IN*|, IN* signatures) is
/// returned and flagged approximate. Throws ResourceLimitError when more than
/// `cap` arguments are UND in `grounded`.
BPResult bp_labelling(const ArgumentationGraph& g, const TriLabelling& grounded, const BurdenSet& burdens,
                      std::size_t cap = kDefaultSearchCap);

/// Every exact model, sorted by label vector.
std::vector<BPLabelling> enumerate_bp_labellings(const ArgumentationGraph& g, const TriLabelling& grounded,
                                                 const BurdenSet& burdens, std::size_t cap = kDefaultSearchCap);

/// `candidate` keeps every IN*/OUT* of `bp` and is complete over the attack relation.
bool is_completion(const ArgumentationGraph& g, const BPLabelling& bp, const BPLabelling& candidate);

/// All completions of `bp`, sorted by label vector. `cap` bounds the number of
/// UND* arguments of `bp` left to decide.
std::vector<BPLabelling> completions(const ArgumentationGraph& g, const BPLabelling& bp,
                                     std::size_t cap = kDefaultEnumerationCap);

/// The completion with an inclusion-minimal IN* set (fewest IN*, then
/// lexicographic); empty when `bp` has no completion.
std::optional<BPLabelling> grounding(const ArgumentationGraph& g, const BPLabelling& bp,
                                     std::size_t cap = kDefaultEnumerationCap);

} // namespace burden
