// coopcolor: generate, solve, verify and benchmark cooperative coloring instances.
//
// Exit codes: 0 ok / coloring found, 1 invalid coloring, 2 proven uncolorable,
// 3 budget exhausted, 64 bad usage, 65 malformed input, 66 algorithm does not
// apply to the instance.

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "coopcolor/coopcolor.hpp"

namespace {

using namespace coopcolor;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUncolorable = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;
constexpr int kExitDataErr = 65;
constexpr int kExitMismatch = 66;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenParams {
  std::string kind;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t d = 0;
  bool connect = false;
};

struct SolveParams {
  std::string algo;
  std::uint64_t max_nodes = 1'000'000'000;
  double deadline = 0;         // seconds; 0 = none
  std::uint64_t max_rounds = 0;  // 0 = 1000 n
};

struct RunResult {
  SolveReport report;
  std::optional<ResampleStats> stats;
};

InstanceFile generate(const GenParams& p, std::uint64_t seed) {
  InstanceFile file;
  nlohmann::json meta = nlohmann::json::object();
  meta["generator"] = p.kind;
  try {
    if (p.kind == "tree-lb") {
      file.system = tree_counterexample(p.m, p.connect).system;
      meta["m"] = p.m;
      meta["connect"] = p.connect;
      if (p.connect)
        meta["connect_scheme"] =
            "chain components by lowest vertex; link lowest degree<=1 vertices "
            "(second-lowest on the outgoing side)";
    } else if (p.kind == "bip-lb") {
      file.system = hypercube_counterexample(p.m);
      meta["m"] = p.m;
    } else if (p.kind == "random-trees") {
      file.system = random_forest_system(p.n, p.m, p.d, seed);
      meta["n"] = p.n;
      meta["m"] = p.m;
      meta["d"] = p.d;
      meta["seed"] = seed;
    } else if (p.kind == "random-bip") {
      file.system = random_bipartite_system(p.n, p.m, p.d, seed);
      meta["n"] = p.n;
      meta["m"] = p.m;
      meta["d"] = p.d;
      meta["seed"] = seed;
    } else {
      throw UsageError("unknown generator " + p.kind);
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  file.metadata = std::move(meta);
  return file;
}

GraphSystem with_bipartitions(const GraphSystem& s) {
  GraphSystem out = s;
  for (GraphIndex j = 0; j < s.graph_count(); ++j) {
    if (s.annotation(j).left) continue;
    GraphAnnotation a = out.annotation(j);
    a.left = bipartition(out, j).left;
    out = out.with_annotation(j, std::move(a));
  }
  return out;
}

RunResult run_algorithm(const GraphSystem& s, const SolveParams& p, std::uint64_t seed) {
  const std::optional<std::uint64_t> rounds =
      p.max_rounds ? std::optional<std::uint64_t>(p.max_rounds) : std::nullopt;
  try {
    if (p.algo == "exact") {
      SearchBudget budget;
      budget.max_nodes = p.max_nodes;
      if (p.deadline > 0) budget.deadline_seconds = p.deadline;
      return {decide_colorable(s, budget), std::nullopt};
    }
    if (p.algo == "tree-lll") {
      auto r = solve_trees(s, seed, rounds);
      return {std::move(r.report), std::move(r.stats)};
    }
    if (p.algo == "bip-semirandom") {
      auto r = solve_bipartite(with_bipartitions(s), seed, rounds);
      return {std::move(r.report), std::move(r.stats)};
    }
  } catch (const Error& e) {
    throw MismatchError(e.what());
  }
  throw UsageError("unknown algorithm " + p.algo);
}

InstanceFile load_instance(const std::string& path) {
  try {
    return parse_instance(read_text_file(path));
  } catch (const Error& e) {
    throw DataError(e.what());
  }
}

int exit_code_for(Outcome o) {
  switch (o) {
    case Outcome::Colorable: return kExitOk;
    case Outcome::Uncolorable: return kExitUncolorable;
    case Outcome::BudgetExceeded: return kExitBudget;
  }
  return kExitBudget;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

int cmd_gen(const GenParams& p, std::uint64_t seed, const std::string& out) {
  const InstanceFile file = generate(p, seed);
  const std::string text = emit_instance(file);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    try {
      write_text_file(out, text);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  std::cerr << "n=" << file.system.vertex_count() << " m=" << file.system.graph_count()
            << " max_degree=" << max_degree(file.system) << "\n";
  return kExitOk;
}

int cmd_solve(const SolveParams& p, const std::string& in, std::uint64_t seed,
              const std::string& out) {
  const InstanceFile file = load_instance(in);
  const GraphSystem& s = file.system;
  const RunResult r = run_algorithm(s, p, seed);

  if (r.report.outcome == Outcome::Colorable && !out.empty()) {
    try {
      write_text_file(out, emit_coloring(*r.report.coloring));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }

  std::cerr << "algorithm:        " << p.algo << "\n"
            << "instance:         n=" << s.vertex_count() << " m=" << s.graph_count()
            << " max_degree=" << max_degree(s) << "\n"
            << "outcome:          " << to_string(r.report.outcome) << "\n";
  if (r.stats)
    std::cerr << "rounds:           " << r.stats->rounds << "\n"
              << "resampled events: " << r.stats->resampled_events << "\n"
              << "resampled vars:   " << r.stats->resampled_variables << "\n";
  else
    std::cerr << "nodes expanded:   " << r.report.nodes_expanded << "\n";
  std::cerr << "elapsed:          " << fixed(r.report.elapsed_seconds, 6) << " s\n";

  std::cout << "algo=" << p.algo << " outcome=" << to_string(r.report.outcome)
            << " n=" << s.vertex_count() << " m=" << s.graph_count()
            << " max_degree=" << max_degree(s) << " seed=" << seed
            << " nodes=" << r.report.nodes_expanded
            << " rounds=" << (r.stats ? r.stats->rounds : 0)
            << " resampled_events=" << (r.stats ? r.stats->resampled_events : 0)
            << " elapsed_s=" << fixed(r.report.elapsed_seconds, 6) << "\n";
  return exit_code_for(r.report.outcome);
}

int cmd_verify(const std::string& instance_path, const std::string& coloring_path) {
  const InstanceFile file = load_instance(instance_path);
  VerificationReport report;
  try {
    const auto entries = parse_coloring_entries(read_text_file(coloring_path));
    report = verify_sets(file.system, entries_to_sets(file.system, entries));
  } catch (const Error& e) {
    throw DataError(e.what());
  }
  if (report.valid) {
    std::cout << "valid\n";
    return kExitOk;
  }
  std::cout << "invalid\n";
  for (const Violation& v : report.violations)
    std::cout << "violation: graph " << v.graph << " edge " << to_string(v.edge) << "\n";
  for (Vertex v : report.uncovered) std::cout << "uncovered: vertex " << v << "\n";
  return kExitInvalid;
}

int cmd_bounds(const std::string& cls, std::uint64_t d, double eps) {
  const auto gc = parse_graph_class(cls);
  if (!gc) throw UsageError("unknown class " + cls);
  try {
    switch (*gc) {
      case GraphClass::General: {
        const auto b = general_bounds(d);
        std::cout << "class: general\nd: " << d << "\n"
                  << b.lower << " ≤ m(" << d << ") ≤ " << b.upper << "\n";
        break;
      }
      case GraphClass::Tree: {
        const auto b = tree_bounds(d);
        std::cout << "class: tree\nd: " << d << "\n"
                  << "lower: " << fixed(b.lower, 4) << "  (m_T(" << d << ") > log2 log2 d)\n"
                  << "sufficient m: " << b.upper_m << "  ((3/4)^m * m * 2d * e <= 1)\n";
        break;
      }
      case GraphClass::Bipartite: {
        const auto b = bipartite_bounds(d, eps);
        std::cout << "class: bipartite\nd: " << d << "\neps: " << fixed(eps, 4) << "\n"
                  << "lower: " << fixed(b.lower, 4) << "  (m_B(" << d << ") >= log2 d)\n"
                  << "upper reference: " << fixed(b.upper_reference, 4)
                  << "  ((1+eps) 2d / ln d, asymptotic)\n"
                  << "sufficient m: "
                  << (b.sufficient_m ? std::to_string(*b.sufficient_m) : std::string("none"))
                  << "\n";
        break;
      }
    }
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int cmd_bench(const GenParams& gen, const SolveParams& solve, std::uint64_t trials,
              std::uint64_t seed, unsigned threads) {
  if (trials < 1) throw UsageError("--trials must be >= 1");
  // Surface bad generator parameters before any worker starts.
  (void)generate(gen, seed);

  struct Row {
    std::uint64_t seed = 0;
    Outcome outcome = Outcome::BudgetExceeded;
    std::uint64_t rounds = 0;
    std::uint64_t resamples = 0;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0;
    std::string error;
  };
  std::vector<Row> rows(trials);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t t = next++; t < trials; t = next++) {
      Row& row = rows[t];
      row.seed = seed + t;
      try {
        const InstanceFile file = generate(gen, row.seed);
        const RunResult r = run_algorithm(file.system, solve, row.seed);
        row.outcome = r.report.outcome;
        row.nodes = r.report.nodes_expanded;
        row.elapsed_ms = r.report.elapsed_seconds * 1e3;
        if (r.stats) {
          row.rounds = r.stats->rounds;
          row.resamples = r.stats->resampled_events;
        }
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
  }
  for (const Row& row : rows)
    if (!row.error.empty()) throw MismatchError(row.error);

  auto median = [](std::vector<std::uint64_t> xs) -> std::uint64_t {
    std::sort(xs.begin(), xs.end());
    return xs[(xs.size() - 1) / 2];
  };
  std::vector<std::uint64_t> rounds, resamples, nodes;
  std::uint64_t successes = 0;
  double total_ms = 0;
  std::cout << "trial,seed,outcome,rounds,resamples,nodes,elapsed_ms\n";
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Row& r = rows[t];
    std::cout << t << ',' << r.seed << ',' << to_string(r.outcome) << ',' << r.rounds << ','
              << r.resamples << ',' << r.nodes << ',' << fixed(r.elapsed_ms, 3) << "\n";
    successes += r.outcome == Outcome::Colorable;
    rounds.push_back(r.rounds);
    resamples.push_back(r.resamples);
    nodes.push_back(r.nodes);
    total_ms += r.elapsed_ms;
  }
  std::cout << "summary," << seed << ",colorable=" << successes << "/" << trials << ','
            << median(rounds) << ',' << median(resamples) << ',' << median(nodes) << ','
            << fixed(total_ms, 3) << "\n";
  return kExitOk;
}

void add_gen_flags(CLI::App* cmd, GenParams& p, bool kind_positional) {
  const auto kinds = CLI::IsMember({"tree-lb", "bip-lb", "random-trees", "random-bip"});
  if (kind_positional)
    cmd->add_option("kind", p.kind, "tree-lb | bip-lb | random-trees | random-bip")
        ->required()
        ->check(kinds);
  else
    cmd->add_option("--gen", p.kind, "tree-lb | bip-lb | random-trees | random-bip")
        ->required()
        ->check(kinds);
  cmd->add_option("--n", p.n, "vertex count (random generators)");
  cmd->add_option("--m", p.m, "number of graphs")->required();
  cmd->add_option("--d", p.d, "maximum degree (random generators)");
  cmd->add_flag("--connect", p.connect, "join each forest into a tree (tree-lb)");
}

void add_solve_flags(CLI::App* cmd, SolveParams& p) {
  cmd->add_option("--algo", p.algo, "exact | tree-lll | bip-semirandom")
      ->required()
      ->check(CLI::IsMember({"exact", "tree-lll", "bip-semirandom"}));
  cmd->add_option("--max-nodes", p.max_nodes, "exact search node budget")
      ->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
  cmd->add_option("--deadline", p.deadline, "exact search wall-clock budget in seconds")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-rounds", p.max_rounds, "resampling round cap (default 1000 n)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cooperative coloring: generators, exact and resampling solvers, bounds"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "random seed")->envname("COOPCOLOR_SEED");
  };

  GenParams gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance file");
  add_gen_flags(gen_cmd, gen, true);
  add_seed(gen_cmd);
  gen_cmd->add_option("--out,-o", gen_out, "output path (default: standard output)");

  SolveParams solve;
  std::string solve_in, solve_out;
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  add_solve_flags(solve_cmd, solve);
  solve_cmd->add_option("--in,-i", solve_in, "instance file")->required();
  solve_cmd->add_option("--out,-o", solve_out, "coloring file written on success");
  add_seed(solve_cmd);

  std::string verify_instance, verify_coloring_path;
  auto* verify_cmd = app.add_subcommand("verify", "check a coloring against an instance");
  verify_cmd->add_option("--instance", verify_instance, "instance file")->required();
  verify_cmd->add_option("--coloring", verify_coloring_path, "coloring file")->required();

  std::string bounds_class;
  std::uint64_t bounds_d = 0;
  double eps = 0.1;
  auto* bounds_cmd = app.add_subcommand("bounds", "print bounds on the minimal m");
  bounds_cmd->add_option("--class", bounds_class, "general | tree | bipartite")
      ->required()
      ->check(CLI::IsMember({"general", "tree", "forest", "bipartite"}));
  bounds_cmd->add_option("--d", bounds_d, "maximum degree")->required();
  bounds_cmd->add_option("--eps", eps, "slack for the bipartite bound")->check(CLI::PositiveNumber);

  GenParams bench_gen;
  SolveParams bench_solve;
  std::uint64_t trials = 1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* bench_cmd = app.add_subcommand("bench", "seeded trials as CSV on standard output");
  add_solve_flags(bench_cmd, bench_solve);
  add_gen_flags(bench_cmd, bench_gen, false);
  bench_cmd->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  add_seed(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, seed, gen_out);
    if (*solve_cmd) return cmd_solve(solve, solve_in, seed, solve_out);
    if (*verify_cmd) return cmd_verify(verify_instance, verify_coloring_path);
    if (*bounds_cmd) return cmd_bounds(bounds_class, bounds_d, eps);
    if (*bench_cmd) return cmd_bench(bench_gen, bench_solve, trials, seed, threads);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDataErr;
  } catch (const MismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
