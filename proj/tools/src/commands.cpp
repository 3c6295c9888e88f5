#include "islands_tool/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "islands/errors.hpp"
#include "islands/generate.hpp"
#include "islands/hall.hpp"
#include "islands/instance_io.hpp"
#include "islands/oracle.hpp"
#include "islands/planar.hpp"
#include "islands/render.hpp"
#include "islands/sandwich.hpp"
#include "islands/verify.hpp"

namespace islands::tool {

namespace {

struct GenArgs {
  gen::GenParams params;
  std::string sizes;
  std::string out;
};

struct SolveArgs {
  std::string mode;
  std::string in;
  std::string out;
  int k = 0;
  int n = 0;
  int d = 0;
  int j = 0;
};

struct VerifyArgs {
  std::string in;
  std::string sol;
  int k = 0;
  int j = 0;
};

struct RenderArgs {
  std::string in;
  std::string sol;
  std::string out;
};

struct ScanArgs {
  bool conjecture = false;
  std::int64_t budget = 0;
  int seeds = 3;
};

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw PreconditionError("bad class size \"" + item + "\"");
    }
  }
  return out;
}

void write_or_print(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    io::write_file(path, text);
  }
}

int cmd_gen(GenArgs& args, std::ostream& out) {
  if (!args.sizes.empty()) args.params.sizes = parse_sizes(args.sizes);
  const io::Instance instance = gen::generate(args.params);
  write_or_print(args.out, io::serialize_instance(instance), out);
  return kOk;
}

int pick(int flag, int meta, const char* name) {
  const int v = flag > 0 ? flag : meta;
  if (v <= 0) throw PreconditionError(std::string(name) + " not given and not present in the instance meta");
  return v;
}

// Combinatorial part of verification only: ids, cover, sizes, colors.
bool combinatorial_ok(const VerificationReport& report) {
  for (const auto& c : report.clauses) {
    if (c.clause == Clause::kHullsDisjoint || c.clause == Clause::kIslands) continue;
    if (c.checked && !c.passed) return false;
  }
  return true;
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const io::Instance instance = io::parse_instance(io::read_file(args.in));
  const ColoredPointSet& set = instance.set;
  io::Solution sol;
  sol.mode = args.mode;
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;

  if (args.mode == "plane") {
    const int k = pick(args.k, instance.meta.k, "k");
    const int n = pick(args.n, instance.meta.n, "n");
    const planar::PlanarInstance planar_instance(set, k, n);
    planar::PlanarResult result = planar::partition_plane(planar_instance);
    sol.partition = std::move(result.partition);
    for (const auto& step : result.steps) {
      for (const auto& cut : step.cuts) sol.cuts.push_back(cut);
      sol.steps.push_back("depth " + std::to_string(step.depth) + " " + planar::step_kind_name(step.kind) + " on " +
                          std::to_string(step.points) + " points into " + std::to_string(step.parts) + " parts: " +
                          step.detail);
    }
    report = verify_island_partition(sol.partition, set, static_cast<std::size_t>(k), 2);
    sol.verified = report.passed;
  } else if (args.mode == "rd") {
    const int d = set.dim();
    const int n = args.n > 0 ? args.n
                  : instance.meta.n > 0 ? instance.meta.n
                                        : static_cast<int>(set.size() / static_cast<std::size_t>(d + 1));
    const sandwich::BalancedInstance balanced(set, n);
    sandwich::RdResult result = sandwich::partition_rd(balanced);
    sol.partition = std::move(result.partition);
    for (const auto& cut : result.cuts) {
      sol.cuts.push_back(cut.cut);
      sol.steps.push_back("special cut " + std::to_string(cut.above_total) + " above / " +
                          std::to_string(cut.below_total) + " below");
    }
    report = verify_island_partition(sol.partition, set, static_cast<std::size_t>(d + 1), d);
    sol.verified = report.passed;
  } else if (args.mode == "hall") {
    const int k = pick(args.k, instance.meta.k, "k");
    const int n = pick(args.n, instance.meta.n, "n");
    const int d = args.d > 0 ? args.d : set.dim();
    const hall::ColorProfile profile{set.class_sizes(), k, n, d};
    const std::vector<hall::Tuple> tuples = hall::colorful_tuple_partition(profile);
    // Abstract element ids run through the classes in index order; map them
    // to point ids sorted by (color, id).
    std::vector<PointId> by_color = set.all_ids();
    std::stable_sort(by_color.begin(), by_color.end(),
                     [&](PointId a, PointId b) { return set.color(a) < set.color(b); });
    for (const auto& tuple : tuples) {
      IdList part;
      std::vector<int> colors;
      for (const auto& e : tuple) {
        part.push_back(by_color.at(e.id));
        colors.push_back(e.color);
      }
      sol.partition.parts.push_back(std::move(part));
      sol.compositions.push_back(std::move(colors));
    }
    report = verify_island_partition(sol.partition, set, static_cast<std::size_t>(k), d);
    sol.verified = combinatorial_ok(report);
  } else if (args.mode == "oracle") {
    const int k = pick(args.k, instance.meta.k, "k");
    const int n = pick(args.n, instance.meta.n, "n");
    const int j = args.j > 0 ? args.j : set.dim();
    const oracle::PartitionSearch search =
        oracle::brute_force_partition(set, k, j, n, oracle::SearchBudget::from_env());
    sol.status = oracle::status_name(search.status);
    sol.partition = search.partition;
    if (search.status == oracle::SearchStatus::kFound) {
      report = verify_island_partition(sol.partition, set, static_cast<std::size_t>(k), j);
      sol.verified = report.passed;
    }
  } else {
    throw PreconditionError("unknown mode \"" + args.mode + "\"");
  }

  sol.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  sol.report = report.clauses.empty() ? "not verified" : report.summary();
  write_or_print(args.out, io::serialize_solution(sol), out);
  if (args.mode == "oracle" && *sol.status != "found") {
    err << "oracle: " << *sol.status << "\n";
    return kOk;
  }
  if (!sol.verified) {
    err << "self-verification failed: " << sol.report << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const io::Instance instance = io::parse_instance(io::read_file(args.in));
  const io::Solution sol = io::parse_solution(io::read_file(args.sol));
  if (args.k < 1) throw PreconditionError("k must be positive");
  if (args.j < 0) throw PreconditionError("j must be non-negative");
  const VerificationReport report =
      verify_island_partition(sol.partition, instance.set, static_cast<std::size_t>(args.k), args.j);
  for (const auto& c : report.clauses) {
    out << (c.checked ? (c.passed ? "PASS " : "FAIL ") : "SKIP ") << clause_name(c.clause);
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << (report.passed ? "verified" : "not verified") << "\n";
  return report.passed ? kOk : kVerificationFailed;
}

int cmd_render(const RenderArgs& args, std::ostream& out) {
  const io::Instance instance = io::parse_instance(io::read_file(args.in));
  IslandPartition partition;
  if (!args.sol.empty()) partition = io::parse_solution(io::read_file(args.sol)).partition;
  write_or_print(args.out, render::render_svg(instance.set, partition), out);
  return kOk;
}

struct ScanCase {
  std::string regime;  // "guaranteed" cases must succeed; "explore" cases are only recorded
  gen::GenParams params;
  int m;
  int d;
};

std::vector<ScanCase> scan_matrix(int seeds) {
  std::vector<ScanCase> cases;
  for (int seed = 0; seed < seeds; ++seed) {
    const auto s = static_cast<std::uint64_t>(seed);
    for (int k = 2; k <= 4; ++k) {
      for (int n = 1; k * n <= 12; ++n) {
        cases.push_back({"guaranteed", {"random_general_position", s, k, n, 2, 2, {}, 10000}, 2, 2});
      }
    }
    for (int n = 1; n <= 2; ++n) {
      cases.push_back({"guaranteed", {"random_general_position", s, 4, n, 3, 3, {}, 10000}, 3, 3});
    }
    cases.push_back({"explore", {"random_general_position", s, 4, 2, 3, 4, {}, 10000}, 4, 3});
    cases.push_back({"explore", {"convex_position", s, 3, 3, 2, 3, {}, 10000}, 3, 2});
    cases.push_back({"explore", {"convex_position", s, 4, 3, 2, 2, {}, 10000}, 2, 2});
  }
  return cases;
}

int cmd_scan(const ScanArgs& args, std::ostream& out) {
  if (!args.conjecture) throw PreconditionError("scan needs --conjecture");
  if (args.seeds < 1) throw PreconditionError("--seeds must be positive");
  oracle::SearchBudget budget = oracle::SearchBudget::from_env();
  if (args.budget > 0) budget.node_limit = args.budget;
  int contradictions = 0;
  int candidates = 0;
  for (const ScanCase& c : scan_matrix(args.seeds)) {
    const io::Instance instance = gen::generate(c.params);
    const oracle::ConjectureReport r =
        oracle::conjecture_scan(instance.set, c.params.k, c.m, c.d, c.params.n, budget);
    out << c.regime << " " << c.params.family << " d=" << c.params.dim << " m=" << c.m << " k=" << c.params.k
        << " n=" << c.params.n << " seed=" << c.params.seed << " hall_feasible=" << (r.hall_feasible ? "true" : "false")
        << " search=" << oracle::status_name(r.search) << "\n";
    if (r.counterexample_candidate) {
      ++candidates;
      out << "counterexample candidate:\n" << r.dump;
      if (c.regime == "guaranteed") ++contradictions;
    }
  }
  out << "candidates " << candidates << "\n";
  return contradictions > 0 ? kInvariantFailure : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Disjoint colorful islands: generate, solve, verify and render instances"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--family", gen_args.params.family, "random_general_position | rings | tightness | convex_position");
  gen_cmd->add_option("--seed", gen_args.params.seed, "random seed");
  gen_cmd->add_option("--k", gen_args.params.k, "island size")->required();
  gen_cmd->add_option("--n", gen_args.params.n, "number of islands")->required();
  gen_cmd->add_option("--dim", gen_args.params.dim, "dimension");
  gen_cmd->add_option("--colors", gen_args.params.colors, "number of color classes");
  gen_cmd->add_option("--sizes", gen_args.sizes, "explicit class sizes, comma separated");
  gen_cmd->add_option("--out", gen_args.out, "output file (stdout when omitted)");

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "partition an instance into islands");
  solve_cmd->add_option("--mode", solve_args.mode, "plane | rd | hall | oracle")->required();
  solve_cmd->add_option("--in", solve_args.in, "instance file")->required();
  solve_cmd->add_option("--out", solve_args.out, "solution file (stdout when omitted)");
  solve_cmd->add_option("--k", solve_args.k, "island size (default: instance meta)");
  solve_cmd->add_option("--n", solve_args.n, "number of islands (default: instance meta)");
  solve_cmd->add_option("--d", solve_args.d, "colorfulness for hall mode (default: dimension)");
  solve_cmd->add_option("--j", solve_args.j, "colorfulness for oracle mode (default: dimension)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "check a partition");
  verify_cmd->add_option("--in", verify_args.in, "instance file")->required();
  verify_cmd->add_option("--sol", verify_args.sol, "solution file")->required();
  verify_cmd->add_option("--k", verify_args.k, "island size")->required();
  verify_cmd->add_option("--j", verify_args.j, "required number of colors per island")->required();

  RenderArgs render_args;
  auto* render_cmd = app.add_subcommand("render", "draw an instance and its partition as SVG");
  render_cmd->add_option("--in", render_args.in, "instance file")->required();
  render_cmd->add_option("--sol", render_args.sol, "solution file");
  render_cmd->add_option("--out", render_args.out, "SVG file (stdout when omitted)");

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "exhaustive search over small instances");
  scan_cmd->add_flag("--conjecture", scan_args.conjecture, "pair the Hall condition with exhaustive island search");
  scan_cmd->add_option("--budget", scan_args.budget, "node limit per instance");
  scan_cmd->add_option("--seeds", scan_args.seeds, "seeds per configuration");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (gen_cmd->parsed()) return cmd_gen(gen_args, out);
    if (solve_cmd->parsed()) return cmd_solve(solve_args, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify_args, out);
    if (render_cmd->parsed()) return cmd_render(render_args, out);
    if (scan_cmd->parsed()) return cmd_scan(scan_args, out);
  } catch (const InvariantError& e) {
    err << "internal invariant failure: " << e.what() << "\n";
    return kInvariantFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariantFailure;
  }
  return kBadInput;
}

}  // namespace islands::tool
