#include "commands.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <variant>

#include "qspp/aqspp.hpp"
#include "qspp/complete.hpp"
#include "qspp/errors.hpp"
#include "qspp/grid.hpp"
#include "qspp/io.hpp"
#include "qspp/random.hpp"
#include "qspp/reductions.hpp"
#include "qspp/special_cases.hpp"

namespace qspp::cli {
namespace {

// Paths enumerated to double-check a returned vector.
constexpr std::size_t kVerifyLimit = 100'000;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int int_param(const GenerateOptions& opt, std::size_t i, const char* name, int lo, int hi) {
  if (i >= opt.params.size()) {
    throw UsageError(opt.family + " needs parameter " + name);
  }
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(opt.params[i], &used);
    if (used != opt.params[i].size()) throw UsageError("");
  } catch (const std::exception&) {
    throw UsageError(std::string(name) + " must be an integer, got '" + opt.params[i] + "'");
  }
  if (value < lo || value > hi) {
    throw UsageError(std::string(name) + " must lie in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
  return value;
}

void expect_params(const GenerateOptions& opt, std::size_t count) {
  if (opt.params.size() != count) {
    throw UsageError(opt.family + " takes " + std::to_string(count) + " parameter(s)");
  }
}

Rng make_rng(const GenerateOptions& opt) {
  if (!opt.seed) throw UsageError("random data needs --seed");
  return Rng(*opt.seed);
}

bool needs_rng(const GenerateOptions& opt) {
  return opt.fill != "zero" || opt.linear != "zero";
}

void fill_costs(const GenerateOptions& opt, QsppInstance& inst) {
  const int m = inst.arc_count();
  if (!needs_rng(opt)) return;
  Rng rng = make_rng(opt);
  if (opt.fill == "random") {
    inst.q = random_interaction(rng, m, opt.lo, opt.hi, opt.density);
  } else if (opt.fill == "weak-sum") {
    inst.q = random_weak_sum(rng, m, opt.lo, opt.hi).first;
  } else if (opt.fill == "product") {
    auto [q, c] = random_product(rng, m, opt.lo, opt.hi);
    inst.q = std::move(q);
    inst.c = std::move(c);
  } else if (opt.fill == "adjacent") {
    inst.q = random_adjacent_interaction(rng, inst.graph, opt.lo, opt.hi);
  } else if (opt.fill != "zero") {
    throw UsageError("unknown --q fill '" + opt.fill + "'");
  }
  if (opt.linear == "random") {
    if (opt.fill == "product") throw UsageError("--q product fixes the linear costs");
    inst.c = random_costs(rng, m, opt.lo, opt.hi);
  } else if (opt.linear != "zero") {
    throw UsageError("unknown --c fill '" + opt.linear + "'");
  }
}

void reject_fill(const GenerateOptions& opt) {
  if (needs_rng(opt)) throw UsageError(opt.family + " does not take --q/--c fills");
}

QsppInstance generate(const GenerateOptions& opt) {
  const std::string& f = opt.family;
  if (opt.paper_example && f != "complete") {
    throw UsageError("--paper-example applies to the complete family only");
  }
  if (f == "grid") {
    expect_params(opt, 2);
    const int p = int_param(opt, 0, "p", 2, 200);
    const int q = int_param(opt, 1, "q", 2, 200);
    const GridShape g{p, q};
    QsppInstance inst(make_grid(p, q), g.source(), g.sink());
    fill_costs(opt, inst);
    return inst;
  }
  if (f == "complete") {
    expect_params(opt, 1);
    const int n = int_param(opt, 0, "n", 3, 40);
    if (opt.paper_example) {
      reject_fill(opt);
      if (n == 4) return make_k4_example();
      if (n == 5) return make_k5_example();
      throw UsageError("built-in examples exist for n = 4 and n = 5");
    }
    QsppInstance inst(make_complete_symmetric(n, true, {0}, {n - 1}), {0}, {n - 1});
    fill_costs(opt, inst);
    return inst;
  }
  if (f == "cycle") {
    expect_params(opt, 1);
    const int n = int_param(opt, 0, "n", 2, 100000);
    QsppInstance inst(make_directed_cycle(n), {0}, {n - 1});
    fill_costs(opt, inst);
    return inst;
  }
  if (f == "hypercube") {
    expect_params(opt, 1);
    const int n = int_param(opt, 0, "n", 1, 12);
    QsppInstance inst(make_hypercube(n), {0}, {(1 << n) - 1});
    fill_costs(opt, inst);
    return inst;
  }
  if (f == "tournament") {
    expect_params(opt, 1);
    const int n = int_param(opt, 0, "n", 2, 11);
    std::uint64_t bits = 0;
    if (opt.orientation) {
      bits = *opt.orientation;
    } else {
      Rng rng = make_rng(opt);
      bits = rng();
    }
    const int pairs = n * (n - 1) / 2;
    if (pairs < 64) bits &= (std::uint64_t{1} << pairs) - 1;
    QsppInstance inst(make_tournament(n, bits), {0}, {n - 1});
    fill_costs(opt, inst);
    return inst;
  }
  if (f == "qap-reduce") {
    reject_fill(opt);
    expect_params(opt, 1);
    QapInstance qap;
    bool is_number = !opt.params[0].empty() &&
                     opt.params[0].find_first_not_of("0123456789") == std::string::npos;
    if (is_number) {
      const int n = int_param(opt, 0, "n", 1, 12);
      Rng rng = make_rng(opt);
      qap = random_qap(rng, n, opt.lo, opt.hi);
    } else {
      qap = parse_qaplib(read_file(opt.params[0])).instance;
    }
    return qap_to_qspp(qap);
  }
  if (f == "disjoint-reduce") {
    reject_fill(opt);
    expect_params(opt, 1);
    const int n = int_param(opt, 0, "n", 4, 60);
    Rng rng = make_rng(opt);
    std::bernoulli_distribution keep(opt.density);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v && keep(rng)) arcs.push_back({{u}, {v}, {}});
      }
    }
    DisjointPathsInstance dp{Digraph(n, std::move(arcs)), {0}, {1}, {2}, {3}};
    return disjoint_to_aqspp(dp);
  }
  if (f == "cyclic-counterexample") {
    reject_fill(opt);
    expect_params(opt, 0);
    Rational eps;
    try {
      eps = parse_rational(opt.epsilon);
    } catch (const std::invalid_argument&) {
      throw UsageError("--epsilon must be a rational");
    }
    return make_cyclic_counterexample(eps);
  }
  throw UsageError("unknown family '" + f + "'");
}

void print_path(std::ostream& out, const Path& p) {
  out << "path:";
  for (VertexId v : p.vertices()) out << ' ' << v.index;
  out << "\narcs:";
  for (ArcId e : p.arcs()) out << ' ' << e.index;
  out << '\n';
}

void print_witness(std::ostream& out, const Witness& w) {
  if (const auto* mismatch = std::get_if<PathMismatch>(&w)) {
    out << "witness ";
    print_path(out, mismatch->path);
    out << "expected: " << to_string(mismatch->expected) << "\ngot: " << to_string(mismatch->got)
        << '\n';
    return;
  }
  const auto& cert = std::get<FarkasCertificate>(w);
  out << "certificate (" << (cert.nonnegative ? "B^T y >= 0" : "B^T y = 0") << "):";
  for (Eigen::Index i = 0; i < cert.y.size(); ++i) out << ' ' << to_string(cert.y(i));
  out << "\nb^T y: " << to_string(cert.b_dot_y) << '\n';
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int cmd_generate(const GenerateOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    out << write_instance(generate(opt));
    return kExitOk;
  });
}

int cmd_solve(const std::string& text, const std::string& method, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const QsppInstance inst = read_instance(text);
    Solution sol = [&] {
      if (method == "brute") return brute_force_solve(inst);
      if (method == "aqspp") return solve_aqspp(inst);
      if (method == "product") return solve_product_case(inst);
      if (method == "spp") {
        if (!(inst.q.array() == Rational(0)).all()) {
          throw PreconditionError("method spp needs Q = 0");
        }
        return spp_solve(SppInstance(inst.graph, inst.s, inst.t, inst.c));
      }
      throw UsageError("unknown method '" + method + "'");
    }();
    print_path(out, sol.path);
    out << "cost: " << to_string(sol.cost) << '\n';
    return kExitOk;
  });
}

int cmd_linearize(const std::string& text, const std::string& mode, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const QsppInstance inst = read_instance(text);
    const LinearizationResult result = [&] {
      if (mode == "grid") return linearize_grid(inst);
      if (mode == "k4") return k4_linearize(inst);
      if (mode == "t4") return tournament4_linearize(inst);
      if (mode == "oracle" || mode == "oracle-nonneg") {
        return lp_oracle(build_path_matrix(inst), mode == "oracle-nonneg");
      }
      throw UsageError("unknown mode '" + mode + "'");
    }();
    if (!result.linearizable()) {
      out << "verdict: not linearizable\n";
      if (!result.detail.empty()) out << "detail: " << result.detail << '\n';
      print_witness(out, *result.witness);
      return kExitNotLinearizable;
    }
    out << "verdict: linearizable\n";
    if (!result.detail.empty()) out << "detail: " << result.detail << '\n';
    out << format_cost_vector(*result.vector);
    const PathEnumeration paths = enumerate_st_paths(inst.graph, inst.s, inst.t, kVerifyLimit);
    if (paths.overflow) {
      out << "check: skipped, more than " << kVerifyLimit << " paths\n";
    } else if (reproduces_all_paths(inst, *result.vector, kVerifyLimit)) {
      out << "check: reproduces all " << paths.paths.size() << " path costs\n";
    } else {
      err << "error: returned vector does not reproduce every path cost\n";
      return 1;
    }
    return kExitOk;
  });
}

int cmd_validate(const std::string& text, bool as_problem, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const QsppInstance inst = read_instance(text);
    const ValidationReport report = validate_instance(inst, as_problem);
    for (const Violation& v : report.violations) out << "violation: " << v.message << '\n';
    out << (report.ok() ? "ok\n" : "invalid\n");
    return report.ok() ? kExitOk : kExitUsage;
  });
}

int cmd_conditions(const std::string& text, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const QsppInstance inst = read_instance(text);
    const ConditionReport report = check_necessary_conditions(inst);
    for (const auto& [k, cp] : report.cp) out << "CP_" << k << " = " << to_string(cp) << '\n';
    for (const ConditionCheck& c : report.checks) {
      out << "(" << c.kind << ") k = " << c.k << ": " << to_string(c.lhs) << " <= "
          << to_string(c.rhs) << (c.holds ? "  holds" : "  VIOLATED") << '\n';
    }
    if (report.any_violated()) {
      out << "verdict: not linearizable\n";
      return kExitNotLinearizable;
    }
    out << "verdict: inconclusive\n";
    return kExitOk;
  });
}

std::vector<BenchRow> run_bench(int max_p, int max_q, std::uint64_t seed) {
  std::vector<BenchRow> rows;
  Rng rng(seed);
  for (int p = 2; p <= max_p; ++p) {
    for (int q = 2; q <= max_q; ++q) {
      const GridShape g{p, q};
      QsppInstance inst(make_grid(p, q), g.source(), g.sink());
      inst.q = random_weak_sum(rng, inst.arc_count(), 0, 9).first;
      const auto start = std::chrono::steady_clock::now();
      const LinearizationResult result = linearize_grid(inst);
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      rows.push_back({p, q, elapsed.count(), result.linearizable()});
    }
  }
  return rows;
}

int cmd_bench(int max_p, int max_q, std::uint64_t seed, std::ostream& out) {
  const std::vector<BenchRow> rows = run_bench(max_p, max_q, seed);
  out << std::setw(4) << "p" << std::setw(5) << "q" << std::setw(12) << "seconds" << "  verdict\n";
  out << std::fixed << std::setprecision(6);
  for (const BenchRow& r : rows) {
    out << std::setw(4) << r.p << std::setw(5) << r.q << std::setw(12) << r.seconds << "  "
        << (r.linearizable ? "linearizable" : "not linearizable") << '\n';
  }
  return kExitOk;
}

}  // namespace qspp::cli
