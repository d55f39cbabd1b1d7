#pragma once

#include "burden/argument.hpp"

#include <functional>
#include <vector>

namespace burden::detail {

enum class Slot : unsigned char { In, Out, Und, Free };

/// Backtracking over the Free slots of `fixed` for assignments where every
/// argument is In iff all its attackers are Out, and Out iff some attacker is In.
/// Solutions are visited in lexicographic order (In < Out < Und by index).
void enumerate_complete(const ArgumentationGraph& g, std::vector<Slot> fixed, std::size_t cap,
                        const std::function<void(const std::vector<Slot>&)>& visit);

} // namespace burden::detail
