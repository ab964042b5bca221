// Command-line front end: generate digraphs, build witness networks, run and
// measure trajectories, drive parameter sweeps, and run the self-check
// suites. Exit codes: 0 success, 1 input error, 2 capped result.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "refnet/constructions.hpp"
#include "refnet/detect.hpp"
#include "refnet/digraph.hpp"
#include "refnet/experiments.hpp"
#include "refnet/io.hpp"
#include "refnet/network.hpp"
#include "refnet/verify.hpp"

namespace {

using refnet::Network;
using refnet::Rng;
using refnet::SeededNetwork;
using refnet::State;

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    refnet::write_file(path, text);
}

State load_or_draw_state(const Network& net, const std::string& state_path, bool random_state,
                         std::uint64_t seed) {
  if (!state_path.empty()) {
    State s = refnet::state_from_text(refnet::read_file(state_path));
    refnet::require_valid_state(net, s);
    return s;
  }
  if (!random_state)
    throw std::runtime_error("need either --state FILE or --random-state");
  Rng rng(seed);
  return refnet::random_state(net, rng);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"refractory threshold networks on random digraphs: simulation and analysis"};
  app.require_subcommand(1);
  int exit_code = 0;

  // gen: write a random digraph, print its arc count.
  auto* gen = app.add_subcommand("gen", "generate a random digraph with arc probability c/n");
  {
    struct {
      std::uint32_t n = 0;
      double c = 0.0;
      std::uint64_t seed = 1;
      std::string out;
    } static opt;
    gen->add_option("--n", opt.n, "number of nodes")->required()->check(CLI::PositiveNumber);
    gen->add_option("--c", opt.c, "mean out-degree; arc probability is c/n")
        ->required()
        ->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", opt.seed, "random seed");
    gen->add_option("--out", opt.out, "output file for the arc list")->required();
    gen->callback([&] {
      Rng rng(opt.seed);
      const double pi = std::min(opt.c / opt.n, 1.0);
      refnet::Digraph g = refnet::gen_erdos_renyi(opt.n, pi, rng);
      refnet::write_file(opt.out, refnet::digraph_to_text(g));
      std::cout << g.arc_count() << "\n";
    });
  }

  // construct: emit a witness network and its canonical initial state.
  auto* construct = app.add_subcommand("construct", "build a witness network with a known state");
  {
    struct {
      std::string kind;
      std::uint32_t length = 0;
      std::uint32_t refractory = 1;
      std::uint32_t depth = 1;
      std::uint32_t branching = 2;
      std::vector<std::uint32_t> lengths;
      std::string out_net;
      std::string out_state;
    } static opt;
    construct->add_option("--kind", opt.kind, "witness family")
        ->required()
        ->check(CLI::IsMember({"restless-cycle", "pulse-cycle", "staircase-cycle",
                               "cycle-collector", "firing-tree"}));
    construct->add_option("--length", opt.length, "cycle length");
    construct->add_option("--refractory", opt.refractory, "refractory period p");
    construct->add_option("--depth", opt.depth, "tree depth");
    construct->add_option("--branching", opt.branching, "tree branching factor");
    construct->add_option("--lengths", opt.lengths, "collector cycle lengths");
    construct->add_option("--out-net", opt.out_net, "network file (stdout when omitted)");
    construct->add_option("--out-state", opt.out_state, "state file (stdout when omitted)");
    construct->callback([&] {
      SeededNetwork sn = [&] {
        if (opt.kind == "restless-cycle") return refnet::build_restless_cycle(opt.length);
        if (opt.kind == "pulse-cycle") return refnet::build_pulse_cycle(opt.length, opt.refractory);
        if (opt.kind == "staircase-cycle")
          return refnet::build_staircase_cycle(opt.length, opt.refractory);
        if (opt.kind == "cycle-collector") return refnet::build_cycle_collector(opt.lengths);
        return refnet::build_firing_tree(opt.depth, opt.branching, opt.refractory);
      }();
      emit(refnet::network_to_text(sn.net), opt.out_net);
      emit(refnet::state_to_text(sn.state), opt.out_state);
    });
  }

  // simulate: print the trajectory, one state line per step.
  auto* simulate = app.add_subcommand("simulate", "run the synchronous update for a fixed horizon");
  {
    struct {
      std::string net_path;
      std::string state_path;
      bool random_state = false;
      std::uint64_t seed = 1;
      std::uint64_t steps = 0;
      std::string out;
    } static opt;
    simulate->add_option("--net", opt.net_path, "network file")->required();
    auto* state_opt = simulate->add_option("--state", opt.state_path, "initial state file");
    simulate->add_flag("--random-state", opt.random_state, "draw the initial state from --seed")
        ->excludes(state_opt);
    simulate->add_option("--seed", opt.seed, "seed for --random-state");
    simulate->add_option("--steps", opt.steps, "number of update steps")->required();
    simulate->add_option("--out", opt.out, "output file (stdout when omitted)");
    simulate->callback([&] {
      Network net = refnet::network_from_text(refnet::read_file(opt.net_path));
      State s0 = load_or_draw_state(net, opt.state_path, opt.random_state, opt.seed);
      std::string text;
      for (const State& s : refnet::simulate(net, s0, opt.steps))
        text += refnet::state_to_text(s);
      emit(text, opt.out);
    });
  }

  // detect: measure tau and alpha, print the JSON summary.
  auto* detect = app.add_subcommand("detect", "measure transient and attractor lengths");
  {
    struct {
      std::string net_path;
      std::string state_path;
      bool random_state = false;
      std::uint64_t seed = 1;
      std::uint64_t cap = 10'000'000;
      bool decomposed = false;
      bool no_periods = false;
    } static opt;
    detect->add_option("--net", opt.net_path, "network file")->required();
    auto* state_opt = detect->add_option("--state", opt.state_path, "initial state file");
    detect->add_flag("--random-state", opt.random_state, "draw the initial state from --seed")
        ->excludes(state_opt);
    detect->add_option("--seed", opt.seed, "seed for --random-state");
    detect->add_option("--cap", opt.cap,
                       "step cap (per subsystem with --decomposed); hitting it flags the result");
    detect->add_flag("--decomposed", opt.decomposed,
                     "measure upstream-closed subsystems and combine by max/lcm");
    detect->add_flag("--no-periods", opt.no_periods, "skip per-node periods");
    detect->callback([&] {
      Network net = refnet::network_from_text(refnet::read_file(opt.net_path));
      State s0 = load_or_draw_state(net, opt.state_path, opt.random_state, opt.seed);
      refnet::DynamicsSummary sum;
      if (opt.decomposed) {
        refnet::DecomposeOptions o;
        o.component_step_cap = opt.cap;
        sum = refnet::detect_decomposed(net, s0, o);
      } else {
        refnet::DetectOptions o;
        o.step_cap = opt.cap;
        o.per_node_periods = !opt.no_periods;
        sum = refnet::detect_hashing(net, s0, o);
      }
      std::cout << refnet::summary_to_json(sum) << "\n";
      if (sum.capped()) exit_code = 2;
    });
  }

  // sweep: run the (n, c) grid from a config file into two CSV files.
  auto* sweep = app.add_subcommand("sweep", "run a seeded parameter sweep from a config file");
  {
    struct {
      std::string config;
      std::string out_records;
      std::string out_stats;
      unsigned jobs = 1;
    } static opt;
    sweep->add_option("--config", opt.config, "flat key-value sweep config")->required();
    sweep->add_option("--out-records", opt.out_records, "per-repetition CSV")->required();
    sweep->add_option("--out-stats", opt.out_stats, "per-cell statistics CSV")->required();
    sweep->add_option("--jobs", opt.jobs, "worker threads; never changes the output bytes")
        ->check(CLI::PositiveNumber);
    sweep->callback([&] {
      refnet::SweepConfig cfg = refnet::sweep_config_from_text(refnet::read_file(opt.config));
      std::vector<refnet::SweepRecord> records = refnet::run_sweep(cfg, opt.jobs);
      refnet::write_file(opt.out_records, refnet::records_to_csv(records));
      std::vector<refnet::CellStats> cells = refnet::collect_cell_stats(records);
      refnet::write_file(opt.out_stats, refnet::stats_to_csv(cells));
      std::cout << "wrote " << records.size() << " records across " << cells.size()
                << " cells\n";
    });
  }

  // stats: recompute the per-cell statistics CSV from a records CSV.
  auto* stats = app.add_subcommand("stats", "aggregate a records CSV into per-cell statistics");
  {
    struct {
      std::string records;
      std::string out;
    } static opt;
    stats->add_option("--records", opt.records, "records CSV from sweep")->required();
    stats->add_option("--out", opt.out, "statistics CSV (stdout when omitted)");
    stats->callback([&] {
      std::vector<refnet::SweepRecord> records =
          refnet::records_from_csv(refnet::read_file(opt.records));
      emit(refnet::stats_to_csv(refnet::collect_cell_stats(records)), opt.out);
    });
  }

  // laws: Monte Carlo digraph structure report as flat key-value lines.
  auto* laws = app.add_subcommand("laws", "estimate digraph structure against analytic laws");
  {
    struct {
      std::uint32_t n = 0;
      double c = 0.0;
      std::uint32_t reps = 0;
      std::uint64_t seed = 1;
    } static opt;
    laws->add_option("--n", opt.n, "nodes per draw")->required()->check(CLI::PositiveNumber);
    laws->add_option("--c", opt.c, "mean out-degree")->required()->check(CLI::NonNegativeNumber);
    laws->add_option("--reps", opt.reps, "number of draws (at least 30)")->required();
    laws->add_option("--seed", opt.seed, "random seed");
    laws->callback([&] {
      Rng rng(opt.seed);
      refnet::GraphLawReport r = refnet::estimate_graph_laws(opt.n, opt.c, opt.reps, rng);
      std::cout << "n " << r.n << "\n";
      std::cout << "c " << refnet::format_double(r.c) << "\n";
      std::cout << "reps " << r.reps << "\n";
      std::cout << "giant_fraction_mean " << refnet::format_double(r.giant_fraction_mean) << "\n";
      std::cout << "giant_fraction_se " << refnet::format_double(r.giant_fraction_se) << "\n";
      std::cout << "downstream_fraction_mean "
                << refnet::format_double(r.downstream_fraction_mean) << "\n";
      std::cout << "downstream_fraction_se " << refnet::format_double(r.downstream_fraction_se)
                << "\n";
      for (const refnet::CycleLengthLaw& law : r.cycle_laws) {
        std::cout << "cycle_mean_" << law.length << " " << refnet::format_double(law.mean_count)
                  << "\n";
        std::cout << "cycle_se_" << law.length << " " << refnet::format_double(law.se) << "\n";
      }
      std::cout << "supersimple_samples " << r.supersimple_samples << "\n";
      std::cout << "supersimple_true " << r.supersimple_true << "\n";
      std::cout << "supersimple_undecided " << r.supersimple_undecided << "\n";
      std::cout << "supersimple_fraction " << refnet::format_double(r.supersimple_fraction)
                << "\n";
      std::cout << "supersimple_se " << refnet::format_double(r.supersimple_se) << "\n";
    });
  }

  // verify: run one named self-check suite.
  auto* verify = app.add_subcommand("verify", "run a named self-check suite");
  {
    struct {
      std::string suite;
      std::uint64_t seed = 20260819;
    } static opt;
    verify->add_option("--suite", opt.suite, "props, nsc, landau, tree, or laws")
        ->required()
        ->check(CLI::IsMember(refnet::suite_names()));
    verify->add_option("--seed", opt.seed, "seed for the fuzzed checks");
    verify->callback([&] {
      refnet::SuiteReport report = refnet::run_suite(opt.suite, opt.seed);
      std::cout << refnet::format_report(report);
      if (!report.all_passed()) exit_code = 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
