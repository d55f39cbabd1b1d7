#include "burden/bp.hpp"

#include "complete_search.hpp"

#include <algorithm>
#include <limits>

namespace burden {

namespace {

// Kleene three-valued logic for evaluating conditions over partial labellings.
enum class Truth : unsigned char { False, True, Unknown };

Truth operator!(Truth t) {
    if (t == Truth::Unknown)
        return t;
    return t == Truth::True ? Truth::False : Truth::True;
}
Truth operator&&(Truth a, Truth b) {
    if (a == Truth::False || b == Truth::False)
        return Truth::False;
    if (a == Truth::True && b == Truth::True)
        return Truth::True;
    return Truth::Unknown;
}
Truth operator||(Truth a, Truth b) { return !(!a && !b); }

using Partial = std::vector<std::optional<StarLabel>>;

Truth is(const Partial& p, ArgIndex x, StarLabel l) {
    if (!p[x])
        return Truth::Unknown;
    return *p[x] == l ? Truth::True : Truth::False;
}

template <class Range, class Pred>
Truth exists(const Range& r, Pred pred) {
    Truth acc = Truth::False;
    for (ArgIndex x : r)
        acc = acc || pred(x);
    return acc;
}

template <class Range, class Pred>
Truth forall(const Range& r, Pred pred) {
    Truth acc = Truth::True;
    for (ArgIndex x : r)
        acc = acc && pred(x);
    return acc;
}

Truth accept(const ArgumentationGraph& g, ArgIndex a, const Partial& p, const BurdenSet& burdens) {
    const Argument& arg = g.argument(a);
    const auto& counters = g.counterarguments(a);
    const auto& subs = arg.direct_subs;
    if (burdens.contains(arg.conclusion.complement())) {
        Truth no_superior_in = !exists(counters, [&](ArgIndex b) {
            return g.prefers(b, a) ? is(p, b, StarLabel::In) : Truth::False;
        });
        Truth no_sub_out = !exists(subs, [&](ArgIndex s) { return is(p, s, StarLabel::Out); });
        return no_superior_in && no_sub_out;
    }
    Truth counters_out = forall(counters, [&](ArgIndex b) {
        return g.prefers(a, b) ? Truth::True : is(p, b, StarLabel::Out);
    });
    Truth subs_in = forall(subs, [&](ArgIndex s) { return is(p, s, StarLabel::In); });
    return counters_out && subs_in;
}

Truth reject(const ArgumentationGraph& g, ArgIndex a, const Partial& p, const BurdenSet& burdens) {
    const Argument& arg = g.argument(a);
    const auto& counters = g.counterarguments(a);
    const auto& subs = arg.direct_subs;
    if (burdens.contains(arg.conclusion)) {
        Truth counter_standing = exists(counters, [&](ArgIndex b) {
            return g.prefers(a, b) ? Truth::False : !is(p, b, StarLabel::Out);
        });
        Truth sub_not_in = exists(subs, [&](ArgIndex s) { return !is(p, s, StarLabel::In); });
        return counter_standing || sub_not_in;
    }
    Truth superior_in = exists(counters, [&](ArgIndex b) {
        return g.prefers(b, a) ? is(p, b, StarLabel::In) : Truth::False;
    });
    Truth sub_out = exists(subs, [&](ArgIndex s) { return is(p, s, StarLabel::Out); });
    return superior_in || sub_out;
}

// Violations of the two biconditionals for `a` that are already decided under `p`.
std::size_t decided_violations(const ArgumentationGraph& g, ArgIndex a, const Partial& p, const BurdenSet& burdens) {
    if (!p[a])
        return 0;
    std::size_t v = 0;
    Truth in = accept(g, a, p, burdens);
    Truth out = reject(g, a, p, burdens);
    if (in != Truth::Unknown && (in == Truth::True) != (*p[a] == StarLabel::In))
        ++v;
    if (out != Truth::Unknown && (out == Truth::True) != (*p[a] == StarLabel::Out))
        ++v;
    return v;
}

Partial to_partial(const BPLabelling& l) {
    Partial p(l.size());
    for (ArgIndex i = 0; i < l.size(); ++i)
        p[i] = l[i];
    return p;
}

BPLabelling to_labelling(const Partial& p) {
    BPLabelling l(p.size(), StarLabel::Und);
    for (ArgIndex i = 0; i < p.size(); ++i)
        l[i] = p[i].value_or(StarLabel::Und);
    return l;
}

// Depth-first assignment of first-stage UND arguments, lowest height first, so
// that subarguments are settled before the arguments built on them.
class BPSearch {
public:
    BPSearch(const ArgumentationGraph& g, const TriLabelling& grounded, const BurdenSet& burdens, std::size_t cap)
        : g_(g), burdens_(burdens), partial_(g.size()) {
        if (grounded.size() != g.size())
            throw std::invalid_argument("grounded labelling does not match the graph");
        for (ArgIndex i = 0; i < g.size(); ++i) {
            if (grounded[i] == Label::Und)
                order_.push_back(i);
            else
                partial_[i] = starred(grounded[i]);
        }
        if (order_.size() > cap)
            throw ResourceLimitError("BP-labelling search over " + std::to_string(order_.size()) +
                                     " undecided arguments exceeds the cap of " + std::to_string(cap));
        std::ranges::stable_sort(order_, {}, [&](ArgIndex i) { return g.argument(i).height; });
    }

    /// Every labelling with no violation.
    std::vector<BPLabelling> exact_models() {
        bound_ = 0;
        found_.clear();
        descend(0);
        return std::move(found_);
    }

    /// Every labelling attaining the minimum violation count, and that count.
    std::pair<std::vector<BPLabelling>, std::size_t> least_violating() {
        bound_ = std::numeric_limits<std::size_t>::max();
        found_.clear();
        descend(0);
        return {std::move(found_), bound_};
    }

private:
    std::size_t violations() const {
        std::size_t v = 0;
        for (ArgIndex a : order_)
            v += decided_violations(g_, a, partial_, burdens_);
        return v;
    }

    void descend(std::size_t depth) {
        std::size_t v = violations();
        if (v > bound_)
            return;
        if (depth == order_.size()) {
            if (v < bound_) {
                bound_ = v;
                found_.clear();
            }
            found_.push_back(to_labelling(partial_));
            return;
        }
        ArgIndex x = order_[depth];
        for (StarLabel l : {StarLabel::In, StarLabel::Out, StarLabel::Und}) {
            partial_[x] = l;
            descend(depth + 1);
        }
        partial_[x].reset();
    }

    const ArgumentationGraph& g_;
    const BurdenSet& burdens_;
    Partial partial_;
    std::vector<ArgIndex> order_;
    std::size_t bound_ = 0;
    std::vector<BPLabelling> found_;
};

BPLabelling least_in(const ArgumentationGraph& g, const std::vector<BPLabelling>& models) {
    return *std::ranges::min_element(
        models, [&](const BPLabelling& a, const BPLabelling& b) { return fewer_in_first(g, a, b); });
}

bool holds(Truth t) { return t == Truth::True; }

} // namespace

bool bp_condition_in(const ArgumentationGraph& g, ArgIndex a, const BPLabelling& candidate, const BurdenSet& burdens) {
    return holds(accept(g, a, to_partial(candidate), burdens));
}

bool bp_condition_out(const ArgumentationGraph& g, ArgIndex a, const BPLabelling& candidate,
                      const BurdenSet& burdens) {
    return holds(reject(g, a, to_partial(candidate), burdens));
}

std::size_t count_violations(const ArgumentationGraph& g, const TriLabelling& grounded, const BPLabelling& candidate,
                             const BurdenSet& burdens) {
    if (grounded.size() != g.size() || candidate.size() != g.size())
        throw std::invalid_argument("labelling does not match the graph");
    Partial p = to_partial(candidate);
    std::size_t v = 0;
    for (ArgIndex a = 0; a < g.size(); ++a) {
        switch (grounded[a]) {
        case Label::In: v += candidate[a] != StarLabel::In; break;
        case Label::Out: v += candidate[a] != StarLabel::Out; break;
        case Label::Und: v += decided_violations(g, a, p, burdens); break;
        }
    }
    return v;
}

std::vector<BPLabelling> enumerate_bp_labellings(const ArgumentationGraph& g, const TriLabelling& grounded,
                                                 const BurdenSet& burdens, std::size_t cap) {
    auto models = BPSearch(g, grounded, burdens, cap).exact_models();
    std::ranges::sort(models);
    return models;
}

BPResult bp_labelling(const ArgumentationGraph& g, const TriLabelling& grounded, const BurdenSet& burdens,
                      std::size_t cap) {
    BPSearch search(g, grounded, burdens, cap);
    auto models = search.exact_models();
    if (!models.empty())
        return {least_in(g, models), SolverDiagnostics{true, 0, models.size(), false}};
    auto [candidates, least] = search.least_violating();
    return {least_in(g, candidates), SolverDiagnostics{false, least, 0, true}};
}

bool is_completion(const ArgumentationGraph& g, const BPLabelling& bp, const BPLabelling& candidate) {
    if (bp.size() != g.size() || candidate.size() != g.size())
        return false;
    for (ArgIndex a = 0; a < g.size(); ++a) {
        if (bp[a] != StarLabel::Und && candidate[a] != bp[a])
            return false;
        const auto& attackers = g.attackers(a);
        bool all_out = std::ranges::all_of(attackers, [&](ArgIndex b) { return candidate[b] == StarLabel::Out; });
        bool some_in = std::ranges::any_of(attackers, [&](ArgIndex b) { return candidate[b] == StarLabel::In; });
        if ((candidate[a] == StarLabel::In) != all_out || (candidate[a] == StarLabel::Out) != some_in)
            return false;
    }
    return true;
}

std::vector<BPLabelling> completions(const ArgumentationGraph& g, const BPLabelling& bp, std::size_t cap) {
    if (bp.size() != g.size())
        throw std::invalid_argument("labelling does not match the graph");
    std::vector<detail::Slot> fixed(g.size(), detail::Slot::Free);
    for (ArgIndex i = 0; i < g.size(); ++i)
        if (bp[i] != StarLabel::Und)
            fixed[i] = static_cast<detail::Slot>(bp[i]);
    std::vector<BPLabelling> out;
    detail::enumerate_complete(g, std::move(fixed), cap, [&](const std::vector<detail::Slot>& slots) {
        BPLabelling l(slots.size(), StarLabel::Und);
        for (ArgIndex i = 0; i < slots.size(); ++i)
            l[i] = static_cast<StarLabel>(slots[i]);
        out.push_back(std::move(l));
    });
    return out;
}

std::optional<BPLabelling> grounding(const ArgumentationGraph& g, const BPLabelling& bp, std::size_t cap) {
    auto all = completions(g, bp, cap);
    if (all.empty())
        return std::nullopt;
    return least_in(g, all);
}

} // namespace burden
