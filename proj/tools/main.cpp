#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "artinlab/errors.hpp"
#include "artinlab/io.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw artinlab::InputError("cannot open " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin group complexes and acylindricity criteria"};
  app.require_subcommand(1);

  artinlab::RunConfiguration config;
  std::string graph_path;
  std::string oracle;

  auto common = [&](CLI::App* sub) {
    sub->add_option("graph", graph_path, "graph document (JSON), or - for stdin")->required();
    sub->add_option("--oracle", oracle, "raag | dihedral | coxeter-shadow")
        ->check(CLI::IsMember({"raag", "dihedral", "coxeter-shadow"}));
    sub->add_option("--out", config.out_path, "write the report here instead of stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "blocks, local reducibility and the fundamental domain");
  common(analyze);
  analyze->add_option("--dot", config.dot_path, "write the defining graph as DOT");

  auto* develop = app.add_subcommand("develop", "develop a word-length ball of the complex");
  common(develop);
  develop->add_option("--radius", config.radius, "word-length radius")->check(CLI::NonNegativeNumber);
  develop->add_option("--dot", config.dot_path, "write the 1-skeleton as DOT");

  auto* systole = app.add_subcommand("systole", "certify that short cycles in a ball are not full");
  common(systole);
  systole->add_option("--radius", config.radius, "word-length radius")->check(CLI::NonNegativeNumber);
  systole->add_option("--max-cycle-len", config.max_cycle_len, "longest cycle examined")
      ->check(CLI::Range(3, 64));
  systole->add_option("--dot", config.dot_path, "write the 1-skeleton as DOT");

  auto* certify = app.add_subcommand("certify", "run one criterion");
  common(certify);
  certify->add_option("--criterion", config.criterion)
      ->required()
      ->check(CLI::IsMember({"acylindrical", "angle", "cliques", "local-reducibility", "lemma-product",
                             "no-full-4cycle", "weak-malnormality", "systole", "locally-6-large"}));
  certify->add_option("--radius", config.radius, "word-length radius")->check(CLI::NonNegativeNumber);
  certify->add_option("--max-len", config.max_len, "word-length bound for group elements")
      ->check(CLI::NonNegativeNumber);
  certify->add_option("--max-cycle-len", config.max_cycle_len, "longest cycle examined")->check(CLI::Range(3, 64));
  certify->add_option("--block", config.blocks, "generator naming a block (repeatable)");

  auto* witness = app.add_subcommand("witness", "bounded weak-malnormality check for one block");
  common(witness);
  witness->add_option("--block", config.blocks, "generator naming the block")->expected(1);
  witness->add_option("--max-len", config.max_len, "word-length bound")->check(CLI::NonNegativeNumber);

  auto* splittings = app.add_subcommand("splittings", "list amalgam splittings along separators");
  common(splittings);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : artinlab::kUsageError;
  }
  config.command = app.get_subcommands().front()->get_name();

  try {
    if (!oracle.empty()) config.oracle = artinlab::parse_oracle_mode(oracle);
    const artinlab::DefiningGraph g = artinlab::parse_graph_document(read_input(graph_path));
    return artinlab::run_command(config, g, std::cout);
  } catch (const artinlab::ParseError& e) {
    std::cerr << graph_path << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return artinlab::kUsageError;
}
