#include "burden/cli.hpp"

#include <ostream>

namespace burden::cli {

using nlohmann::json;

std::string_view to_string(Semantics s) {
    switch (s) {
    case Semantics::Grounded: return "grounded";
    case Semantics::BP: return "bp";
    case Semantics::BPGrounding: return "bp-grounding";
    }
    return "?";
}

json arguments_json(const ArgumentationGraph& g) {
    json out = json::array();
    for (ArgIndex i = 0; i < g.size(); ++i) {
        const Argument& a = g.argument(i);
        json subs = json::array();
        for (ArgIndex s : a.direct_subs)
            subs.push_back(g.argument(s).signature);
        out.push_back({{"id", ArgumentationGraph::alias(i)},
                       {"signature", a.signature},
                       {"conclusion", a.conclusion.str()},
                       {"topRule", a.top_rule},
                       {"directSubs", std::move(subs)}});
    }
    return out;
}

json attacks_json(const ArgumentationGraph& g) {
    json out = json::array();
    for (auto [from, to] : g.attacks())
        out.push_back({{"from", g.argument(from).signature}, {"to", g.argument(to).signature}});
    return out;
}

namespace {
json diagnostics_json(const SolverDiagnostics& d) {
    return {{"exact", d.exact},
            {"violationCount", d.violation_count},
            {"modelCount", d.model_count},
            {"approximate", d.approximate}};
}

json labels_object(const ArgumentationGraph& g, const std::vector<std::string>& labels) {
    json out = json::object();
    for (ArgIndex i = 0; i < labels.size(); ++i)
        out[g.argument(i).signature] = labels[i];
    return out;
}

template <class L>
json labels_object(const ArgumentationGraph& g, const Labelling<L>& l) {
    json out = json::object();
    for (ArgIndex i = 0; i < l.size(); ++i)
        out[g.argument(i).signature] = std::string(to_string(l[i]));
    return out;
}

template <class L>
json labels_list(const ArgumentationGraph& g, const std::vector<Labelling<L>>& ls) {
    json out = json::array();
    for (const auto& l : ls)
        out.push_back(labels_object(g, l));
    return out;
}

std::string_view fill_colour(std::string_view label) {
    if (label.starts_with("IN"))
        return "palegreen";
    if (label.starts_with("OUT"))
        return "lightcoral";
    return "lightblue";
}

std::string dot_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}
} // namespace

json labelling_json(const ArgumentationGraph& g, const LabelView& view) {
    json out = {{"semantics", to_string(view.semantics)}, {"labels", labels_object(g, view.labels)}};
    if (view.diagnostics)
        out["diagnostics"] = diagnostics_json(*view.diagnostics);
    if (view.grounding_exists)
        out["groundingExists"] = *view.grounding_exists;
    return out;
}

json oracle_json(const ArgumentationGraph& g, const oracle::OracleReport& r) {
    json report = {
        {"completeLabellings", r.complete_labellings},
        {"grounded", labels_object(g, r.grounded)},
        {"exactBPModels", r.exact_bp_models},
        {"minViolation", r.min_violation},
        {"minViolationModels", labels_list(g, r.min_violation_models)},
        {"selected", labels_object(g, r.selected)},
        {"completionsCount", r.completions_count},
        {"groundingExists", r.grounding_exists},
        {"grounding", r.grounding ? labels_object(g, *r.grounding) : json(nullptr)},
    };
    return {{"arguments", arguments_json(g)}, {"attacks", attacks_json(g)}, {"oracle", std::move(report)}};
}

void write_arguments_text(std::ostream& os, const ArgumentationGraph& g) {
    for (ArgIndex i = 0; i < g.size(); ++i)
        os << ArgumentationGraph::alias(i) << '\t' << g.argument(i).signature << '\t'
           << g.argument(i).conclusion.str() << '\n';
}

void write_graph_text(std::ostream& os, const ArgumentationGraph& g) {
    os << "arguments:\n";
    write_arguments_text(os, g);
    os << "attacks:\n";
    for (auto [from, to] : g.attacks())
        os << ArgumentationGraph::alias(from) << " -> " << ArgumentationGraph::alias(to) << '\n';
}

void write_labelling_text(std::ostream& os, const ArgumentationGraph& g, const LabelView& view) {
    os << "# semantics: " << to_string(view.semantics);
    if (view.diagnostics) {
        const auto& d = *view.diagnostics;
        os << " exact=" << (d.exact ? "true" : "false") << " violations=" << d.violation_count
           << " models=" << d.model_count << " approximate=" << (d.approximate ? "true" : "false");
    }
    os << '\n';
    if (view.grounding_exists && !*view.grounding_exists) {
        os << "no grounding exists\n";
        return;
    }
    for (ArgIndex i = 0; i < view.labels.size(); ++i)
        os << ArgumentationGraph::alias(i) << '\t' << g.argument(i).signature << '\t' << view.labels[i] << '\n';
}

void write_dot(std::ostream& os, const ArgumentationGraph& g, const LabelView* view) {
    os << "digraph arguments {\n";
    if (view && view->grounding_exists && !*view->grounding_exists)
        os << "  // no grounding exists\n";
    os << "  node [shape=circle, style=filled, fillcolor=white];\n";
    const bool labelled = view && !view->labels.empty();
    for (ArgIndex i = 0; i < g.size(); ++i) {
        const Argument& a = g.argument(i);
        os << "  " << ArgumentationGraph::alias(i) << " [label=\"" << ArgumentationGraph::alias(i) << "\\n"
           << dot_escape(a.signature) << "\\n" << dot_escape(a.conclusion.str());
        if (labelled)
            os << "\\n" << view->labels[i] << "\", fillcolor=" << fill_colour(view->labels[i]);
        else
            os << '"';
        os << "];\n";
    }
    for (auto [from, to] : g.attacks())
        os << "  " << ArgumentationGraph::alias(from) << " -> " << ArgumentationGraph::alias(to) << ";\n";
    os << "}\n";
}

} // namespace burden::cli
