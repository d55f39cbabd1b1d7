#include "burden/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace burden::cli {

std::optional<std::string> validate(const RunConfig& config) {
    if (config.input_path.empty())
        return "an input file is required";
    if (config.command == Command::Label && !config.semantics)
        return "label requires --semantics grounded|bp|bp-grounding";
    if (config.command != Command::Label && config.semantics)
        return "--semantics is only valid for label";
    if (config.format == OutputFormat::Dot && config.command != Command::Graph && config.command != Command::Label)
        return "--dot is only valid for graph and label";
    if (config.format == OutputFormat::Json && config.command == Command::Check)
        return "--json is not available for check";
    return std::nullopt;
}

namespace {

DefeasibleTheory read_theory(const std::string& path) {
    if (path == "-")
        return parse_theory(std::cin);
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parse_theory(in);
}

template <class L>
std::vector<std::string> label_strings(const Labelling<L>& l) {
    std::vector<std::string> out;
    for (auto x : l.labels)
        out.emplace_back(to_string(x));
    return out;
}

LabelView compute_labels(const ArgumentationGraph& g, Semantics semantics, std::size_t max_und) {
    LabelView view;
    view.semantics = semantics;
    TriLabelling grounded = grounded_labelling(g);
    if (semantics == Semantics::Grounded) {
        view.labels = label_strings(grounded);
        return view;
    }
    BPResult bp = bp_labelling(g, grounded, g.theory().burdens(), max_und);
    view.diagnostics = bp.diagnostics;
    if (semantics == Semantics::BP) {
        view.labels = label_strings(bp.labelling);
        return view;
    }
    auto lg = grounding(g, bp.labelling, max_und);
    view.grounding_exists = lg.has_value();
    if (lg)
        view.labels = label_strings(*lg);
    return view;
}

void emit(std::ostream& out, const ArgumentationGraph& g, const RunConfig& config, const LabelView* view) {
    if (config.format == OutputFormat::Dot) {
        write_dot(out, g, view);
        return;
    }
    if (config.format == OutputFormat::Json) {
        nlohmann::json doc = {{"arguments", arguments_json(g)}, {"attacks", attacks_json(g)}};
        if (view)
            doc["labelling"] = labelling_json(g, *view);
        out << doc.dump(2) << '\n';
        return;
    }
    if (view)
        write_labelling_text(out, g, *view);
    else if (config.command == Command::Arguments)
        write_arguments_text(out, g);
    else
        write_graph_text(out, g);
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (auto problem = validate(config)) {
        err << "usage error: " << *problem << '\n';
        return kUsage;
    }
    try {
        DefeasibleTheory theory = read_theory(config.input_path);
        switch (config.command) {
        case Command::Check:
            out << "ok: " << theory.rules().size() << " rules, " << theory.superiority().size() << " priorities, "
                << theory.burdens().size() << " burden literals\n";
            return kOk;
        case Command::Oracle: {
            oracle::Limits limits;
            if (config.max_arguments)
                limits.max_arguments = *config.max_arguments;
            if (config.max_und)
                limits.max_und = *config.max_und;
            auto g = build_graph(theory, std::max(limits.max_arguments, std::size_t{1}) + 1);
            auto report = oracle::oracle_report(g, theory.burdens(), limits);
            out << oracle_json(g, report).dump(2) << '\n';
            return kOk;
        }
        case Command::Arguments:
        case Command::Graph:
        case Command::Label: break;
        }
        auto g = build_graph(theory, config.max_arguments.value_or(kDefaultMaxArguments));
        if (config.command == Command::Label) {
            LabelView view = compute_labels(g, *config.semantics, config.max_und.value_or(kDefaultSearchCap));
            emit(out, g, config, &view);
        } else {
            emit(out, g, config, nullptr);
        }
        return kOk;
    } catch (const TheoryError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Burden-of-persuasion argumentation: arguments, attacks, grounded and BP labellings"};
    app.require_subcommand(1);

    RunConfig config;
    bool json = false;
    bool dot = false;
    std::size_t max_args = 0;
    std::size_t max_und = 0;
    std::string semantics;

    auto add_common = [&](CLI::App* sub, bool with_json, bool with_dot) {
        sub->add_option("FILE", config.input_path, "theory file, or - for standard input")->required();
        if (with_json)
            sub->add_flag("--json", json, "emit JSON");
        if (with_dot)
            sub->add_flag("--dot", dot, "emit Graphviz DOT");
        sub->add_option("--max-args", max_args, "argument cap (oracle: enumeration cap)");
        sub->add_option("--max-und", max_und, "cap on first-stage undecided arguments searched");
    };

    auto* check = app.add_subcommand("check", "validate a theory file");
    add_common(check, false, false);
    auto* arguments = app.add_subcommand("arguments", "list constructed arguments");
    add_common(arguments, true, false);
    auto* graph = app.add_subcommand("graph", "print the argumentation graph");
    add_common(graph, true, true);
    auto* label = app.add_subcommand("label", "compute a labelling");
    add_common(label, true, true);
    label->add_option("--semantics", semantics, "grounded, bp or bp-grounding")
        ->required()
        ->check(CLI::IsMember({"grounded", "bp", "bp-grounding"}));
    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive reference report (JSON)");
    add_common(oracle_cmd, true, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    const std::map<const CLI::App*, Command> commands = {{check, Command::Check},
                                                         {arguments, Command::Arguments},
                                                         {graph, Command::Graph},
                                                         {label, Command::Label},
                                                         {oracle_cmd, Command::Oracle}};
    CLI::App* chosen = app.get_subcommands().front();
    config.command = commands.at(chosen);
    if (json && dot) {
        err << "usage error: --json and --dot are mutually exclusive\n";
        return kUsage;
    }
    config.format = dot ? OutputFormat::Dot : json ? OutputFormat::Json : OutputFormat::Text;
    if (chosen->count("--max-args"))
        config.max_arguments = max_args;
    if (chosen->count("--max-und"))
        config.max_und = max_und;
    if (config.command == Command::Label) {
        static const std::map<std::string, Semantics> names = {
            {"grounded", Semantics::Grounded}, {"bp", Semantics::BP}, {"bp-grounding", Semantics::BPGrounding}};
        config.semantics = names.at(semantics);
    }
    return run(config, out, err);
}

} // namespace burden::cli
