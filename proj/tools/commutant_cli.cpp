// Command-line driver: validates chains, computes graded commutants,
// closure tables and labeling diagnostics, with a persistent basis cache.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "commutant/builtin_chains.hpp"
#include "commutant/cache.hpp"
#include "commutant/chain_io.hpp"
#include "commutant/closure.hpp"
#include "commutant/invariants.hpp"
#include "commutant/labels.hpp"
#include "commutant/report.hpp"

namespace {

using namespace commutant;

struct RunConfig {
  std::string chain_source = "surfon";
  int max_degree = 6;
  int threads = 1;
  std::string cache_dir;
  std::uint64_t seed = 1;
  unsigned long long budget = 2'000'000ull;
  std::string output_path;
  bool show_indecomposable = false;
  bool show_bidegree = false;
  long l0 = 0;
  int rank_trials = 3;
  std::optional<long> rank_g, rank_sub;
};

ChainSpec load_chain(const RunConfig& cfg) {
  for (const auto& name : builtin_chain_names())
    if (name == cfg.chain_source) return builtin_chain(name);
  std::ifstream in(cfg.chain_source, std::ios::binary);
  if (!in)
    throw ParseError("chain-file", "cannot open chain file or unknown builtin '" +
                                       cfg.chain_source + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_chain_file(text);
}

std::pair<long, long> default_ranks(const RunConfig& cfg) {
  if (cfg.rank_g && cfg.rank_sub) return {*cfg.rank_g, *cfg.rank_sub};
  if (cfg.chain_source == "elliott") return {2, 1};
  if (cfg.chain_source == "seniority") return {2, 2};
  if (cfg.chain_source == "supermultiplet") return {3, 2};
  if (cfg.chain_source == "surfon") return {2, 1};
  if (!cfg.rank_g || !cfg.rank_sub)
    throw ParseError("ranks-required",
                     "file chains need --rank-g and --rank-sub for label counts");
  return {*cfg.rank_g, *cfg.rank_sub};
}

struct Session {
  RunConfig cfg;
  ChainSpec chain;
  InvariantOptions opts;
  SolverStats stats;
  std::unique_ptr<BasisCache> cache;
  std::size_t solver_invocations = 0;

  explicit Session(RunConfig c) : cfg(std::move(c)), chain(load_chain(cfg)) {
    opts.monomial_budget = cfg.budget;
    opts.threads = cfg.threads;
    if (!cfg.cache_dir.empty())
      cache = std::make_unique<BasisCache>(cfg.cache_dir, [](const std::string& w) {
        std::cerr << "warning: " << w << "\n";
      });
  }

  DegreeBasis basis_for(const ChainSpec& ch, int k) {
    if (cache) {
      if (auto hit = cache->load(ch, k)) return *hit;
    }
    ++solver_invocations;
    DegreeBasis basis = invariant_space(ch, k, opts, &stats);
    if (cache) cache->store(ch, basis);
    return basis;
  }

  GradedCommutant run_sweep() {
    return sweep(chain, cfg.max_degree, opts, &stats,
                 [this](const ChainSpec& ch, int k) { return basis_for(ch, k); });
  }
};

Json runtime_json(const Session& s, double wall_ms) {
  // everything in this section is legitimately run-dependent (documented as
  // non-deterministic in the report contract)
  Json j;
  j["note"] = "non-deterministic section: timings and cache/solver statistics";
  j["wall_ms"] = wall_ms;
  j["cache_hits"] = s.cache ? s.cache->hits() : 0;
  j["solver_invocations"] = s.solver_invocations;
  j["exact_solves"] = s.stats.exact_solves;
  j["modular_solves"] = s.stats.modular_solves;
  j["primes_used"] = s.stats.primes_used;
  return j;
}

int cmd_validate(Session& s) {
  ValidationReport rep = validate_structure(s.chain.algebra());
  Json j;
  j["chain"] = chain_summary_json(s.chain);
  j["validation"] = validation_json(rep, s.chain);
  std::cout << j.dump(2) << "\n";
  if (!rep.passed) {
    std::cerr << "validation failed: " << rep.failing_triples.size()
              << " Jacobi triple(s)\n";
    return int(ExitCode::validation);
  }
  return 0;
}

int cmd_invariants(Session& s, double* wall_ms) {
  auto t0 = std::chrono::steady_clock::now();
  GradedCommutant com = s.run_sweep();
  *wall_ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
  Json j;
  j["chain"] = chain_summary_json(s.chain);
  j["seed"] = s.cfg.seed;
  j["max_degree"] = s.cfg.max_degree;
  j["commutant"] = commutant_json(com, s.chain);
  if (s.cfg.show_bidegree) {
    Json bid = Json::array();
    for (const auto& [k, basis] : com.per_degree) {
      for (const auto& [bds, rows] : basis.bidegree_split) {
        Json e;
        e["degree"] = k;
        e["grading"] = bidegree_set_json(bds);
        e["dimension"] = rows.size();
        bid.push_back(e);
      }
    }
    j["bidegree_blocks"] = bid;
  }
  if (!s.cfg.show_indecomposable) j["commutant"].erase("indecomposables");
  j["runtime"] = runtime_json(s, *wall_ms);
  std::cout << j.dump(2) << "\n";
  if (com.resource_failure) {
    std::cerr << "resource error at degree " << com.resource_failure->first
              << ": " << com.resource_failure->second << "\n";
    return int(ExitCode::resource);
  }
  return 0;
}

int cmd_closure(Session& s, double* wall_ms) {
  auto t0 = std::chrono::steady_clock::now();
  GradedCommutant com = s.run_sweep();
  if (com.resource_failure) {
    std::cerr << "resource error at degree " << com.resource_failure->first
              << ": " << com.resource_failure->second << "\n";
    return int(ExitCode::resource);
  }
  GeneratorSet gens = build_generator_set(s.chain, com);
  StructureReport rep = closure_table(gens, s.chain, s.cfg.threads);
  *wall_ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
  Json j;
  j["chain"] = chain_summary_json(s.chain);
  j["seed"] = s.cfg.seed;
  j["max_degree"] = s.cfg.max_degree;
  j["closure"] = closure_json(rep, s.chain);
  j["runtime"] = runtime_json(s, *wall_ms);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_labels(Session& s, double* wall_ms) {
  auto t0 = std::chrono::steady_clock::now();
  auto [rg, rs] = default_ranks(s.cfg);
  LabelCounts counts = label_counts(s.chain, rg, rs, s.cfg.l0);
  GradedCommutant com = s.run_sweep();
  if (com.resource_failure) {
    std::cerr << "resource error at degree " << com.resource_failure->first
              << ": " << com.resource_failure->second << "\n";
    return int(ExitCode::resource);
  }
  GeneratorSet gens = build_generator_set(s.chain, com);
  std::vector<Polynomial> polys;
  for (const auto& e : gens.entries) polys.push_back(e.poly);
  int frank = functional_rank(polys, s.chain.algebra().dim(),
                              s.cfg.rank_trials, s.cfg.seed);
  auto pairs = commuting_pairs(gens, s.chain);
  *wall_ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
  Json j;
  j["chain"] = chain_summary_json(s.chain);
  j["seed"] = s.cfg.seed;
  j["label_counts"] = label_counts_json(counts);
  j["generators"] = generator_set_json(gens, s.chain);
  j["functional_rank"] = {{"rank", frank},
                          {"trials", s.cfg.rank_trials},
                          {"seed", s.cfg.seed}};
  Json cp = Json::array();
  for (const auto& [a, b] : pairs) cp.push_back(Json::array({a, b}));
  j["commuting_pairs"] = cp;
  j["runtime"] = runtime_json(s, *wall_ms);
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_report(Session& s) {
  auto t0 = std::chrono::steady_clock::now();
  ValidationReport vrep = validate_structure(s.chain.algebra());
  GradedCommutant com = s.run_sweep();
  Json j;
  j["chain"] = chain_summary_json(s.chain);
  j["seed"] = s.cfg.seed;
  j["max_degree"] = s.cfg.max_degree;
  j["budget"] = s.cfg.budget;
  j["validation"] = validation_json(vrep, s.chain);
  j["commutant"] = commutant_json(com, s.chain);
  int status = 0;
  if (!com.resource_failure) {
    GeneratorSet gens = build_generator_set(s.chain, com);
    StructureReport crep = closure_table(gens, s.chain, s.cfg.threads);
    j["closure"] = closure_json(crep, s.chain);
    auto [rg, rs] = default_ranks(s.cfg);
    j["label_counts"] = label_counts_json(label_counts(s.chain, rg, rs, s.cfg.l0));
    std::vector<Polynomial> polys;
    for (const auto& e : gens.entries) polys.push_back(e.poly);
    j["functional_rank"] = {
        {"rank", functional_rank(polys, s.chain.algebra().dim(),
                                 s.cfg.rank_trials, s.cfg.seed)},
        {"trials", s.cfg.rank_trials},
        {"seed", s.cfg.seed}};
    Json cp = Json::array();
    for (const auto& [a, b] : commuting_pairs(gens, s.chain))
      cp.push_back(Json::array({a, b}));
    j["commuting_pairs"] = cp;
  } else {
    status = int(ExitCode::resource);
  }
  if (!vrep.passed) status = int(ExitCode::validation);
  double wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  j["runtime"] = runtime_json(s, wall_ms);
  if (!s.cfg.output_path.empty()) {
    std::ofstream out(s.cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("output", "cannot write " + s.cfg.output_path);
    out << j.dump(2) << "\n";
    std::cout << "report written to " << s.cfg.output_path << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poisson commutants of Lie algebra reduction chains"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--chain", cfg.chain_source,
                 "builtin name (elliott, seniority, supermultiplet, surfon) "
                 "or chain file path")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads")
      ->envname("COMMUTANT_THREADS")
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir,
                 "directory for the persistent basis cache")
      ->envname("COMMUTANT_CACHE_DIR");
  app.add_option("--seed", cfg.seed, "seed for randomized diagnostics")
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "monomial-column budget per degree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "exact Jacobi check");

  auto* invariants =
      app.add_subcommand("invariants", "graded commutant sweep");
  invariants->add_option("--max-degree", cfg.max_degree, "sweep limit zeta")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  invariants->add_flag("--indecomposable", cfg.show_indecomposable,
                       "list indecomposable generators");
  invariants->add_flag("--bidegree", cfg.show_bidegree,
                       "list bidegree block dimensions");

  auto* closure = app.add_subcommand("closure", "polynomial Poisson algebra");
  closure->add_option("--max-degree", cfg.max_degree, "sweep limit zeta")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* labels = app.add_subcommand("labels", "labeling-operator bookkeeping");
  labels->add_option("--l0", cfg.l0, "number of common Casimirs")
      ->capture_default_str();
  labels->add_option("--rank-trials", cfg.rank_trials,
                     "random points for the Jacobian rank")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  labels->add_option("--rank-g", cfg.rank_g, "rank of g (file chains)");
  labels->add_option("--rank-sub", cfg.rank_sub, "rank of g' (file chains)");
  labels->add_option("--max-degree", cfg.max_degree, "sweep limit zeta")
      ->check(CLI::PositiveNumber);

  auto* report = app.add_subcommand("report", "full machine-readable report");
  report->add_option("-o,--output", cfg.output_path, "output path");
  report->add_option("--max-degree", cfg.max_degree, "sweep limit zeta")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  report->add_option("--l0", cfg.l0, "number of common Casimirs");
  report->add_option("--rank-trials", cfg.rank_trials,
                     "random points for the Jacobian rank");
  report->add_option("--rank-g", cfg.rank_g, "rank of g (file chains)");
  report->add_option("--rank-sub", cfg.rank_sub, "rank of g' (file chains)");

  CLI11_PARSE(app, argc, argv);

  try {
    Session session(cfg);
    double wall_ms = 0;
    if (validate->parsed()) return cmd_validate(session);
    if (invariants->parsed()) return cmd_invariants(session, &wall_ms);
    if (closure->parsed()) return cmd_closure(session, &wall_ms);
    if (labels->parsed()) return cmd_labels(session, &wall_ms);
    if (report->parsed()) return cmd_report(session);
    return int(commutant::ExitCode::internal);
  } catch (const commutant::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return int(commutant::ExitCode::parse);
  } catch (const commutant::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return int(commutant::ExitCode::validation);
  } catch (const commutant::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return int(commutant::ExitCode::resource);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return int(commutant::ExitCode::internal);
  }
}
