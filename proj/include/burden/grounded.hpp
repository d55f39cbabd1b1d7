#pragma once

#include "burden/labels.hpp"

#include <vector>

namespace burden {

inline constexpr std::size_t kDefaultEnumerationCap = 20;

/// Least fixpoint: IN when all attackers are OUT, OUT when some attacker is IN,
/// UND for whatever is left.
TriLabelling grounded_labelling(const ArgumentationGraph& g);

/// Both complete-labelling biconditionals hold for every argument.
bool is_complete(const ArgumentationGraph& g, const TriLabelling& l);

/// All complete labellings, lexicographic in argument order (IN < OUT < UND).
/// Throws ResourceLimitError when the graph has more than `cap` arguments.
std::vector<TriLabelling> enumerate_complete_labellings(const ArgumentationGraph& g,
                                                        std::size_t cap = kDefaultEnumerationCap);

} // namespace burden
