#pragma once

// Command implementations behind the qspp executable. Each returns the
// process exit code: 0 success or linearizable, 3 not linearizable,
// 2 usage or precondition error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qspp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotLinearizable = 3;

struct GenerateOptions {
  std::string family;
  std::vector<std::string> params;
  std::string fill = "zero";    ///< zero | random | weak-sum | product | adjacent
  std::string linear = "zero";  ///< zero | random
  int lo = 0;
  int hi = 9;
  double density = 1.0;
  std::optional<std::uint64_t> seed;
  bool paper_example = false;
  std::optional<std::uint64_t> orientation;
  std::string epsilon = "1/2";
};

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_solve(const std::string& text, const std::string& method, std::ostream& out,
              std::ostream& err);
int cmd_linearize(const std::string& text, const std::string& mode, std::ostream& out,
                  std::ostream& err);
int cmd_validate(const std::string& text, bool as_problem, std::ostream& out, std::ostream& err);
int cmd_conditions(const std::string& text, std::ostream& out, std::ostream& err);

struct BenchRow {
  int p = 0;
  int q = 0;
  double seconds = 0;
  bool linearizable = false;
};

/// linearize_grid on a weak-sum instance for every 2 <= p <= max_p,
/// 2 <= q <= max_q, timed.
std::vector<BenchRow> run_bench(int max_p, int max_q, std::uint64_t seed);
int cmd_bench(int max_p, int max_q, std::uint64_t seed, std::ostream& out);

}  // namespace qspp::cli
