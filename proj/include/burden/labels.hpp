#pragma once

#include "burden/argument.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace burden {

/// First-stage label.
enum class Label : unsigned char { In, Out, Und };
/// Second-stage (burden-aware) label.
enum class StarLabel : unsigned char { In, Out, Und };

std::string_view to_string(Label l);
std::string_view to_string(StarLabel l);
StarLabel starred(Label l);

/// Total labelling, indexed by ArgIndex.
template <class L>
struct Labelling {
    std::vector<L> labels;

    Labelling() = default;
    explicit Labelling(std::vector<L> v) : labels(std::move(v)) {}
    Labelling(std::size_t n, L fill) : labels(n, fill) {}

    std::size_t size() const noexcept { return labels.size(); }
    L operator[](ArgIndex i) const { return labels.at(i); }
    L& operator[](ArgIndex i) { return labels.at(i); }

    std::vector<ArgIndex> with(L l) const {
        std::vector<ArgIndex> out;
        for (ArgIndex i = 0; i < labels.size(); ++i)
            if (labels[i] == l)
                out.push_back(i);
        return out;
    }
    std::size_t count(L l) const {
        std::size_t n = 0;
        for (auto x : labels)
            n += x == l;
        return n;
    }

    friend bool operator==(const Labelling&, const Labelling&) = default;
    friend auto operator<=>(const Labelling&, const Labelling&) = default;
};

using TriLabelling = Labelling<Label>;
using BPLabelling = Labelling<StarLabel>;

BPLabelling starred(const TriLabelling& l);

/// signature -> label text, for output and fixtures.
std::map<std::string, std::string> by_signature(const ArgumentationGraph& g, const TriLabelling& l);
std::map<std::string, std::string> by_signature(const ArgumentationGraph& g, const BPLabelling& l);

/// Sorted signatures of the arguments carrying `label`.
std::vector<std::string> signatures_with(const ArgumentationGraph& g, const BPLabelling& l, StarLabel label);

/// Order used to choose among models: fewer IN* first, then the sorted IN*
/// signature lists compared lexicographically.
bool fewer_in_first(const ArgumentationGraph& g, const BPLabelling& a, const BPLabelling& b);

} // namespace burden
