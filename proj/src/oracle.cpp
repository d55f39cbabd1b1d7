#include "burden/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace burden::oracle {

namespace {

// Odometer over {0,1,2}^n. Returns false after the last assignment.
bool advance(std::vector<int>& digits) {
    for (auto& d : digits) {
        if (++d < 3)
            return true;
        d = 0;
    }
    return false;
}

// attack_matrix[target][source]
std::vector<std::vector<bool>> attack_matrix(const ArgumentationGraph& g) {
    std::vector<std::vector<bool>> m(g.size(), std::vector<bool>(g.size(), false));
    for (auto [from, to] : g.attacks())
        m[to][from] = true;
    return m;
}

bool superior(const ArgumentationGraph& g, ArgIndex a, ArgIndex b) {
    return g.theory().superior(g.argument(a).top_rule, g.argument(b).top_rule);
}

bool concludes_complement(const ArgumentationGraph& g, ArgIndex b, ArgIndex a) {
    const Literal& x = g.argument(a).conclusion;
    const Literal& y = g.argument(b).conclusion;
    return x.atom() == y.atom() && x.negated() != y.negated();
}

std::vector<std::string> in_signatures(const ArgumentationGraph& g, const BPLabelling& l) {
    std::vector<std::string> out;
    for (ArgIndex i = 0; i < l.size(); ++i)
        if (l[i] == StarLabel::In)
            out.push_back(g.argument(i).signature);
    std::sort(out.begin(), out.end());
    return out;
}

const BPLabelling& pick_fewest_in(const ArgumentationGraph& g, const std::vector<BPLabelling>& ls) {
    const BPLabelling* best = &ls.front();
    auto best_key = in_signatures(g, *best);
    for (const auto& l : ls) {
        auto key = in_signatures(g, l);
        if (key.size() < best_key.size() || (key.size() == best_key.size() && key < best_key)) {
            best = &l;
            best_key = std::move(key);
        }
    }
    return *best;
}

bool contained(const std::vector<ArgIndex>& small, const std::vector<ArgIndex>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

} // namespace

bool naive_accept(const ArgumentationGraph& g, ArgIndex a, const BPLabelling& l, const BurdenSet& burdens) {
    const Argument& arg = g.argument(a);
    const bool complement_burdened = burdens.contains(Literal(arg.conclusion.atom(), !arg.conclusion.negated()));
    if (complement_burdened) {
        for (ArgIndex b = 0; b < g.size(); ++b)
            if (concludes_complement(g, b, a) && superior(g, b, a) && l[b] == StarLabel::In)
                return false;
        for (ArgIndex s : arg.direct_subs)
            if (l[s] == StarLabel::Out)
                return false;
        return true;
    }
    for (ArgIndex b = 0; b < g.size(); ++b)
        if (concludes_complement(g, b, a) && !superior(g, a, b) && l[b] != StarLabel::Out)
            return false;
    for (ArgIndex s : arg.direct_subs)
        if (l[s] != StarLabel::In)
            return false;
    return true;
}

bool naive_reject(const ArgumentationGraph& g, ArgIndex a, const BPLabelling& l, const BurdenSet& burdens) {
    const Argument& arg = g.argument(a);
    if (burdens.contains(arg.conclusion)) {
        for (ArgIndex b = 0; b < g.size(); ++b)
            if (concludes_complement(g, b, a) && !superior(g, a, b) && l[b] != StarLabel::Out)
                return true;
        for (ArgIndex s : arg.direct_subs)
            if (l[s] != StarLabel::In)
                return true;
        return false;
    }
    for (ArgIndex b = 0; b < g.size(); ++b)
        if (concludes_complement(g, b, a) && superior(g, b, a) && l[b] == StarLabel::In)
            return true;
    for (ArgIndex s : arg.direct_subs)
        if (l[s] == StarLabel::Out)
            return true;
    return false;
}

std::size_t naive_violations(const ArgumentationGraph& g, const TriLabelling& grounded, const BPLabelling& l,
                             const BurdenSet& burdens) {
    std::size_t v = 0;
    for (ArgIndex a = 0; a < g.size(); ++a) {
        if (grounded[a] == Label::In) {
            if (l[a] != StarLabel::In)
                ++v;
        } else if (grounded[a] == Label::Out) {
            if (l[a] != StarLabel::Out)
                ++v;
        } else {
            if ((l[a] == StarLabel::In) != naive_accept(g, a, l, burdens))
                ++v;
            if ((l[a] == StarLabel::Out) != naive_reject(g, a, l, burdens))
                ++v;
        }
    }
    return v;
}

OracleReport oracle_report(const ArgumentationGraph& g, const BurdenSet& burdens, const Limits& limits) {
    const std::size_t n = g.size();
    if (n > limits.max_arguments)
        throw ResourceLimitError("oracle: " + std::to_string(n) + " arguments exceed the cap of " +
                                 std::to_string(limits.max_arguments));
    OracleReport report;
    const auto attacked = attack_matrix(g);

    // Complete labellings, straight from the biconditionals.
    std::vector<TriLabelling> complete;
    std::vector<int> digits(n, 0);
    do {
        TriLabelling l(n, Label::Und);
        for (ArgIndex i = 0; i < n; ++i)
            l[i] = static_cast<Label>(digits[i]);
        bool ok = true;
        for (ArgIndex a = 0; a < n && ok; ++a) {
            bool all_out = true, some_in = false;
            for (ArgIndex b = 0; b < n; ++b) {
                if (!attacked[a][b])
                    continue;
                all_out = all_out && l[b] == Label::Out;
                some_in = some_in || l[b] == Label::In;
            }
            ok = (l[a] == Label::In) == all_out && (l[a] == Label::Out) == some_in;
        }
        if (ok)
            complete.push_back(std::move(l));
    } while (advance(digits));
    report.complete_labellings = complete.size();

    const TriLabelling* least = nullptr;
    for (const auto& c : complete) {
        auto in = c.with(Label::In);
        bool below_all = std::all_of(complete.begin(), complete.end(),
                                     [&](const TriLabelling& d) { return contained(in, d.with(Label::In)); });
        if (below_all) {
            least = &c;
            break;
        }
    }
    if (!least)
        throw std::logic_error("oracle: no complete labelling has an IN set below all others");
    report.grounded = *least;

    // Starred labellings: first-stage IN/OUT fixed, UND arguments range over all three labels.
    std::vector<ArgIndex> open = report.grounded.with(Label::Und);
    if (open.size() > limits.max_und)
        throw ResourceLimitError("oracle: " + std::to_string(open.size()) + " undecided arguments exceed the cap of " +
                                 std::to_string(limits.max_und));
    BPLabelling base = starred(report.grounded);
    report.min_violation = static_cast<std::size_t>(-1);
    std::vector<int> und_digits(open.size(), 0);
    do {
        BPLabelling l = base;
        for (std::size_t k = 0; k < open.size(); ++k)
            l[open[k]] = static_cast<StarLabel>(und_digits[k]);
        std::size_t v = naive_violations(g, report.grounded, l, burdens);
        if (v == 0)
            report.exact_models.push_back(l);
        if (v < report.min_violation) {
            report.min_violation = v;
            report.min_violation_models.clear();
        }
        if (v == report.min_violation)
            report.min_violation_models.push_back(std::move(l));
    } while (advance(und_digits));
    std::sort(report.exact_models.begin(), report.exact_models.end());
    std::sort(report.min_violation_models.begin(), report.min_violation_models.end());
    report.exact_bp_models = report.exact_models.size();
    report.selected = pick_fewest_in(g, report.min_violation_models);

    // Completions of the selected labelling over every full starred labelling.
    const BPLabelling& sel = report.selected;
    std::fill(digits.begin(), digits.end(), 0);
    do {
        BPLabelling l(n, StarLabel::Und);
        for (ArgIndex i = 0; i < n; ++i)
            l[i] = static_cast<StarLabel>(digits[i]);
        bool ok = true;
        for (ArgIndex a = 0; a < n && ok; ++a) {
            if (sel[a] == StarLabel::In && l[a] != StarLabel::In)
                ok = false;
            if (sel[a] == StarLabel::Out && l[a] != StarLabel::Out)
                ok = false;
            bool all_out = true, some_in = false;
            for (ArgIndex b = 0; b < n; ++b) {
                if (!attacked[a][b])
                    continue;
                all_out = all_out && l[b] == StarLabel::Out;
                some_in = some_in || l[b] == StarLabel::In;
            }
            ok = ok && (l[a] == StarLabel::In) == all_out && (l[a] == StarLabel::Out) == some_in;
        }
        if (ok)
            report.completions.push_back(std::move(l));
    } while (advance(digits));
    report.completions_count = report.completions.size();
    report.grounding_exists = !report.completions.empty();
    if (report.grounding_exists) {
        // Inclusion-minimal IN* sets first, then the usual tie-break.
        std::vector<BPLabelling> minimal;
        for (const auto& c : report.completions) {
            auto in = c.with(StarLabel::In);
            bool dominated = std::any_of(report.completions.begin(), report.completions.end(), [&](const auto& d) {
                auto other = d.with(StarLabel::In);
                return other.size() < in.size() && contained(other, in);
            });
            if (!dominated)
                minimal.push_back(c);
        }
        report.grounding = pick_fewest_in(g, minimal);
    }
    return report;
}

OracleReport oracle_report(const DefeasibleTheory& theory, const Limits& limits) {
    auto g = build_graph(theory, std::max<std::size_t>(limits.max_arguments + 1, 1));
    return oracle_report(g, theory.burdens(), limits);
}

} // namespace burden::oracle
