#pragma once

#include "burden/bp.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#ifndef BURDEN_CORPUS_DIR
#error "BURDEN_CORPUS_DIR must point at tests/corpus"
#endif

namespace burden::test {

inline std::string corpus_path(const std::string& name) { return std::string(BURDEN_CORPUS_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline DefeasibleTheory load_theory(const std::string& name) { return parse_theory(read_file(corpus_path(name))); }

inline const nlohmann::json& figures() {
    static const nlohmann::json doc = nlohmann::json::parse(read_file(corpus_path("figures.json")));
    return doc;
}

inline std::vector<std::string> corpus_keys() {
    std::vector<std::string> keys;
    for (const auto& [key, _] : figures().items())
        keys.push_back(key);
    return keys;
}

/// A corpus theory, its graph, and the figure names (A1, B2, ...) resolved to indices.
struct Figure {
    std::string key;
    DefeasibleTheory theory;
    ArgumentationGraph graph;
    std::map<std::string, ArgIndex> names;
    nlohmann::json raw;

    ArgIndex operator()(const std::string& name) const { return names.at(name); }

    template <class L>
    Labelling<L> labelling(const nlohmann::json& sets, L in, L out, L und) const {
        Labelling<L> l(graph.size(), und);
        for (const auto& n : sets.at("IN"))
            l[names.at(n.get<std::string>())] = in;
        for (const auto& n : sets.at("OUT"))
            l[names.at(n.get<std::string>())] = out;
        return l;
    }
    TriLabelling tri(const std::string& field) const {
        return labelling(raw.at(field), Label::In, Label::Out, Label::Und);
    }
    BPLabelling star(const std::string& field) const {
        return labelling(raw.at(field), StarLabel::In, StarLabel::Out, StarLabel::Und);
    }
    AttackSet attacks() const {
        AttackSet out;
        for (const auto& e : raw.at("attacks"))
            out.emplace(names.at(e[0].get<std::string>()), names.at(e[1].get<std::string>()));
        return out;
    }
};

inline Figure load_figure(const std::string& key) {
    const auto& raw = figures().at(key);
    Figure f{key, load_theory(raw.at("theory").get<std::string>()), {}, {}, raw};
    f.graph = build_graph(f.theory);
    for (const auto& [name, sig] : raw.at("names").items())
        f.names[name] = f.graph.index_of(sig.get<std::string>());
    return f;
}

} // namespace burden::test
