#include "burden/grounded.hpp"

#include "complete_search.hpp"

#include <algorithm>
#include <optional>

namespace burden {

namespace detail {

namespace {

class CompleteSearch {
public:
    CompleteSearch(const ArgumentationGraph& g, std::vector<Slot> slots,
                   const std::function<void(const std::vector<Slot>&)>& visit)
        : g_(g), slots_(std::move(slots)), visit_(visit) {
        for (ArgIndex i = 0; i < slots_.size(); ++i)
            if (slots_[i] == Slot::Free)
                free_.push_back(i);
    }

    std::size_t free_count() const { return free_.size(); }

    void run() {
        for (ArgIndex i = 0; i < slots_.size(); ++i)
            if (!consistent(i))
                return;
        descend(0);
    }

private:
    bool consistent(ArgIndex y) const {
        Slot s = slots_[y];
        if (s == Slot::Free)
            return true;
        bool all_assigned = true;
        bool any_in = false;
        bool all_out = true;
        for (ArgIndex b : g_.attackers(y)) {
            Slot t = slots_[b];
            if (t == Slot::Free) {
                all_assigned = false;
                continue;
            }
            any_in = any_in || t == Slot::In;
            all_out = all_out && t == Slot::Out;
        }
        switch (s) {
        case Slot::In: return all_out;
        case Slot::Out: return any_in || !all_assigned;
        case Slot::Und: return !any_in && !(all_assigned && all_out);
        case Slot::Free: break;
        }
        return true;
    }

    void descend(std::size_t depth) {
        if (depth == free_.size()) {
            visit_(slots_);
            return;
        }
        ArgIndex x = free_[depth];
        for (Slot s : {Slot::In, Slot::Out, Slot::Und}) {
            slots_[x] = s;
            bool ok = consistent(x);
            for (ArgIndex t : g_.attacked_by(x))
                ok = ok && consistent(t);
            if (ok)
                descend(depth + 1);
        }
        slots_[x] = Slot::Free;
    }

    const ArgumentationGraph& g_;
    std::vector<Slot> slots_;
    std::vector<ArgIndex> free_;
    const std::function<void(const std::vector<Slot>&)>& visit_;
};

} // namespace

void enumerate_complete(const ArgumentationGraph& g, std::vector<Slot> fixed, std::size_t cap,
                        const std::function<void(const std::vector<Slot>&)>& visit) {
    CompleteSearch search(g, std::move(fixed), visit);
    if (search.free_count() > cap)
        throw ResourceLimitError("labelling enumeration over " + std::to_string(search.free_count()) +
                                 " arguments exceeds the cap of " + std::to_string(cap));
    search.run();
}

} // namespace detail

TriLabelling grounded_labelling(const ArgumentationGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::optional<Label>> decided(n);
    bool changed = true;
    while (changed) {
        changed = false;
        for (ArgIndex a = 0; a < n; ++a) {
            if (decided[a])
                continue;
            const auto& attackers = g.attackers(a);
            if (std::ranges::all_of(attackers, [&](ArgIndex b) { return decided[b] == Label::Out; })) {
                decided[a] = Label::In;
                changed = true;
            } else if (std::ranges::any_of(attackers, [&](ArgIndex b) { return decided[b] == Label::In; })) {
                decided[a] = Label::Out;
                changed = true;
            }
        }
    }
    TriLabelling out(n, Label::Und);
    for (ArgIndex a = 0; a < n; ++a)
        if (decided[a])
            out[a] = *decided[a];
    return out;
}

bool is_complete(const ArgumentationGraph& g, const TriLabelling& l) {
    if (l.size() != g.size())
        return false;
    for (ArgIndex a = 0; a < g.size(); ++a) {
        const auto& attackers = g.attackers(a);
        bool all_out = std::ranges::all_of(attackers, [&](ArgIndex b) { return l[b] == Label::Out; });
        bool some_in = std::ranges::any_of(attackers, [&](ArgIndex b) { return l[b] == Label::In; });
        if ((l[a] == Label::In) != all_out || (l[a] == Label::Out) != some_in)
            return false;
    }
    return true;
}

std::vector<TriLabelling> enumerate_complete_labellings(const ArgumentationGraph& g, std::size_t cap) {
    if (g.size() > cap)
        throw ResourceLimitError("complete-labelling enumeration over " + std::to_string(g.size()) +
                                 " arguments exceeds the cap of " + std::to_string(cap));
    std::vector<TriLabelling> out;
    detail::enumerate_complete(g, std::vector<detail::Slot>(g.size(), detail::Slot::Free), cap,
                               [&](const std::vector<detail::Slot>& slots) {
                                   TriLabelling l(slots.size(), Label::Und);
                                   for (ArgIndex i = 0; i < slots.size(); ++i)
                                       l[i] = static_cast<Label>(slots[i]);
                                   out.push_back(std::move(l));
                               });
    return out;
}

} // namespace burden
