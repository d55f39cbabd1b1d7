#include "burden/labels.hpp"

#include <algorithm>

namespace burden {

std::string_view to_string(Label l) {
    switch (l) {
    case Label::In: return "IN";
    case Label::Out: return "OUT";
    case Label::Und: return "UND";
    }
    return "?";
}

std::string_view to_string(StarLabel l) {
    switch (l) {
    case StarLabel::In: return "IN*";
    case StarLabel::Out: return "OUT*";
    case StarLabel::Und: return "UND*";
    }
    return "?";
}

StarLabel starred(Label l) {
    switch (l) {
    case Label::In: return StarLabel::In;
    case Label::Out: return StarLabel::Out;
    case Label::Und: break;
    }
    return StarLabel::Und;
}

BPLabelling starred(const TriLabelling& l) {
    BPLabelling out(l.size(), StarLabel::Und);
    for (ArgIndex i = 0; i < l.size(); ++i)
        out[i] = starred(l[i]);
    return out;
}

namespace {
template <class L>
std::map<std::string, std::string> to_map(const ArgumentationGraph& g, const Labelling<L>& l) {
    std::map<std::string, std::string> out;
    for (ArgIndex i = 0; i < l.size(); ++i)
        out.emplace(g.argument(i).signature, std::string(to_string(l[i])));
    return out;
}
} // namespace

std::map<std::string, std::string> by_signature(const ArgumentationGraph& g, const TriLabelling& l) {
    return to_map(g, l);
}

std::map<std::string, std::string> by_signature(const ArgumentationGraph& g, const BPLabelling& l) {
    return to_map(g, l);
}

std::vector<std::string> signatures_with(const ArgumentationGraph& g, const BPLabelling& l, StarLabel label) {
    std::vector<std::string> out;
    for (ArgIndex i : l.with(label))
        out.push_back(g.argument(i).signature);
    std::ranges::sort(out);
    return out;
}

bool fewer_in_first(const ArgumentationGraph& g, const BPLabelling& a, const BPLabelling& b) {
    auto na = a.count(StarLabel::In);
    auto nb = b.count(StarLabel::In);
    if (na != nb)
        return na < nb;
    return signatures_with(g, a, StarLabel::In) < signatures_with(g, b, StarLabel::In);
}

} // namespace burden
