#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "qspp/io.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return qspp::read_file(path);
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = qspp::cli;
  CLI::App app{"Quadratic shortest path toolkit"};
  app.require_subcommand(1);

  cli::GenerateOptions gen;
  std::uint64_t seed = 0;
  std::uint64_t orientation = 0;
  std::string output;
  auto* generate = app.add_subcommand("generate", "Write a generated instance file");
  generate->add_option("family", gen.family,
                       "grid | complete | cycle | hypercube | tournament | qap-reduce | "
                       "disjoint-reduce | cyclic-counterexample")
      ->required();
  generate->add_option("params", gen.params, "Family parameters, e.g. 'grid 3 3'");
  generate->add_option("--q", gen.fill, "Interaction fill: zero | random | weak-sum | product | adjacent");
  generate->add_option("--c", gen.linear, "Linear cost fill: zero | random");
  generate->add_option("--lo", gen.lo, "Smallest random entry");
  generate->add_option("--hi", gen.hi, "Largest random entry");
  generate->add_option("--density", gen.density, "Probability of a nonzero pair / arc")
      ->check(CLI::Range(0.0, 1.0));
  auto* seed_opt = generate->add_option("--seed", seed, "Seed for all random data");
  auto* orient_opt = generate->add_option("--orientation", orientation,
                                          "Tournament orientation bits");
  generate->add_flag("--paper-example", gen.paper_example,
                     "complete 4 / complete 5: the worked examples");
  generate->add_option("--epsilon", gen.epsilon, "cyclic-counterexample: cost in (0, 1)");
  generate->add_option("-o,--output", output, "Output file (default stdout)");

  std::string file;
  std::string method = "brute";
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  solve->add_option("file", file, "Instance file, '-' for stdin")->required();
  solve->add_option("--method", method, "brute | aqspp | product | spp")
      ->check(CLI::IsMember({"brute", "aqspp", "product", "spp"}));

  std::string mode = "oracle";
  auto* linearize = app.add_subcommand("linearize", "Decide linearizability");
  linearize->add_option("file", file, "Instance file, '-' for stdin")->required();
  linearize->add_option("--mode", mode, "grid | k4 | t4 | oracle | oracle-nonneg")
      ->check(CLI::IsMember({"grid", "k4", "t4", "oracle", "oracle-nonneg"}));

  bool as_problem = false;
  auto* validate = app.add_subcommand("validate", "Check instance structure");
  validate->add_option("file", file, "Instance file, '-' for stdin")->required();
  validate->add_flag("--nonnegative", as_problem, "Also require c >= 0 and Q >= 0");

  auto* conditions =
      app.add_subcommand("conditions", "Path-length cost sums and necessary conditions on K_n^*");
  conditions->add_option("file", file, "Instance file, '-' for stdin")->required();

  int max_p = 8;
  int max_q = 8;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Time grid linearization");
  bench->add_option("--max-p", max_p, "Largest row count")->check(CLI::Range(0, 64));
  bench->add_option("--max-q", max_q, "Largest column count")->check(CLI::Range(0, 64));
  bench->add_option("--seed", bench_seed, "Seed for the weak-sum instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitUsage;
  }

  try {
    if (*generate) {
      if (*seed_opt) gen.seed = seed;
      if (*orient_opt) gen.orientation = orientation;
      if (output.empty()) return cli::cmd_generate(gen, std::cout, std::cerr);
      std::ostringstream buf;
      const int code = cli::cmd_generate(gen, buf, std::cerr);
      if (code == cli::kExitOk) qspp::write_file(output, buf.str());
      return code;
    }
    if (*bench) return cli::cmd_bench(max_p, max_q, bench_seed, std::cout);
    const std::string text = slurp(file);
    if (*solve) return cli::cmd_solve(text, method, std::cout, std::cerr);
    if (*linearize) return cli::cmd_linearize(text, mode, std::cout, std::cerr);
    if (*validate) return cli::cmd_validate(text, as_problem, std::cout, std::cerr);
    if (*conditions) return cli::cmd_conditions(text, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
  return cli::kExitUsage;
}
