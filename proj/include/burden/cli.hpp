#pragma once

#include "burden/bp.hpp"
#include "burden/oracle.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace burden::cli {

enum class Command { Check, Arguments, Graph, Label, Oracle };
enum class Semantics { Grounded, BP, BPGrounding };
enum class OutputFormat { Text, Json, Dot };

std::string_view to_string(Semantics s);

struct RunConfig {
    std::string input_path; ///< `-` reads standard input
    Command command = Command::Check;
    std::optional<Semantics> semantics; ///< required for, and only for, Label
    OutputFormat format = OutputFormat::Text;
    std::optional<std::size_t> max_arguments; ///< construction cap; the oracle's enumeration cap for Oracle
    std::optional<std::size_t> max_und;       ///< BP search cap
};

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalidInput = 2, kResourceLimit = 3 };

/// Empty when `config` is consistent, otherwise the reason.
std::optional<std::string> validate(const RunConfig& config);

/// parse -> build graph -> requested computation. Results go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point (argv[0] is the program name).
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Output formatting.

/// Labels of one semantics, in argument order, plus the metadata it carries.
struct LabelView {
    Semantics semantics = Semantics::Grounded;
    std::vector<std::string> labels; ///< empty when no grounding exists
    std::optional<SolverDiagnostics> diagnostics;
    std::optional<bool> grounding_exists;
};

nlohmann::json arguments_json(const ArgumentationGraph& g);
nlohmann::json attacks_json(const ArgumentationGraph& g);
nlohmann::json labelling_json(const ArgumentationGraph& g, const LabelView& view);
nlohmann::json oracle_json(const ArgumentationGraph& g, const oracle::OracleReport& report);

void write_arguments_text(std::ostream& os, const ArgumentationGraph& g);
void write_graph_text(std::ostream& os, const ArgumentationGraph& g);
void write_labelling_text(std::ostream& os, const ArgumentationGraph& g, const LabelView& view);
/// Nodes are filled green / red / blue for IN / OUT / UND when labels are given.
void write_dot(std::ostream& os, const ArgumentationGraph& g, const LabelView* view = nullptr);

} // namespace burden::cli
