#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "artinlab/complex.hpp"
#include "artinlab/defining_graph.hpp"
#include "artinlab/oracle.hpp"
#include "artinlab/report.hpp"

namespace artinlab {

/// Reads {"vertices": [names...], "edges": [{"u": .., "v": .., "m": ..}, ...]}.
/// Throws ParseError with the line and column of the offending token.
DefiningGraph parse_graph_document(std::string_view text);

/// Inverse of parse_graph_document. Edges in (u, v) order; missing pairs stay missing.
std::string serialize_graph(const DefiningGraph& g);

nlohmann::ordered_json domain_to_json(const DefiningGraph& g, const FundamentalDomain& k);
nlohmann::ordered_json complex_to_json(const DevelopedComplex& x);
/// 1-skeleton; vertices filled by type. Edges of Gamma-hat are styled when the input is a graph.
std::string complex_to_dot(const DevelopedComplex& x);
std::string graph_to_dot(const DefiningGraph& g);

/// Exit status for a report: 0 PASS or NOT_APPLICABLE, 1 FAIL, 2 INDETERMINATE.
int exit_code(Verdict v);
inline constexpr int kUsageError = 3;

struct RunConfiguration {
  std::string command;             // analyze, develop, systole, certify, witness, splittings
  std::optional<OracleMode> oracle;  // defaults to raag when applicable, else coxeter-shadow
  std::size_t radius = 2;
  std::size_t max_len = 4;
  std::size_t max_cycle_len = 5;
  std::string criterion;           // certify only
  std::vector<std::string> blocks; // generator names picking blocks (witness, lemma-product)
  std::optional<std::string> dot_path;
  std::optional<std::string> out_path;
};

/// Runs one subcommand and writes its document to `out` (or to out_path). Library errors
/// propagate; the CLI maps them to kUsageError.
int run_command(const RunConfiguration& config, const DefiningGraph& g, std::ostream& out);

}  // namespace artinlab
