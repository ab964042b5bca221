#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "refnet/constructions.hpp"
#include "refnet/detect.hpp"
#include "refnet/io.hpp"
#include "refnet/rng.hpp"

using refnet::BigInt;
using refnet::CellStats;
using refnet::Digraph;
using refnet::DynamicsSummary;
using refnet::Network;
using refnet::Rng;
using refnet::State;
using refnet::SweepConfig;
using refnet::SweepRecord;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "refnet_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_path = scratch_dir() / ("out" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(REFNET_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = raw < 0 ? raw : WEXITSTATUS(raw);
  std::ifstream in(out_path);
  r.out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return r;
}

std::string write_scratch(const std::string& name, const std::string& content) {
  const fs::path p = scratch_dir() / name;
  refnet::write_file(p.string(), content);
  return p.string();
}

}  // namespace

TEST_CASE("shortest round-trip rendering of doubles") {
  CHECK(refnet::format_double(1.0) == "1");
  CHECK(refnet::format_double(0.8) == "0.8");
  CHECK(refnet::format_double(0.1 + 0.2) == "0.30000000000000004");
  CHECK(refnet::format_double(-2.5) == "-2.5");
}

TEST_CASE("digraph text layout is fixed and ordered") {
  Digraph g(3);
  g.add_arc(2, 1);
  g.add_arc(1, 3);
  g.add_arc(1, 2);
  CHECK(digraph_to_text(g) == "3\n1 2\n1 3\n2 1\n");
  CHECK(refnet::digraph_from_text(digraph_to_text(g)) == g);
  CHECK(digraph_to_text(Digraph(2)) == "2\n");
}

TEST_CASE("digraph parsing rejects malformed text") {
  CHECK_THROWS_AS(static_cast<void>(refnet::digraph_from_text("")), std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(refnet::digraph_from_text("x\n")), std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(refnet::digraph_from_text("2\n1\n")), std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(refnet::digraph_from_text("2\n1 3\n")), std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(refnet::digraph_from_text("2\n1 1\n")), std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(refnet::digraph_from_text("2\n1 2\n1 2\n")),
                  std::runtime_error);
}

TEST_CASE("network text carries the arc list plus both parameter rows") {
  const refnet::SeededNetwork sn = refnet::build_pulse_cycle(3, 2);
  const std::string text = network_to_text(sn.net);
  CHECK(text == "3\n1 2\n2 3\n3 1\np: 2 2 2\nth: 1 1 1\n");
  const Network back = refnet::network_from_text(text);
  CHECK(back.graph == sn.net.graph);
  CHECK(back.p == sn.net.p);
  CHECK(back.th == sn.net.th);
}

TEST_CASE("network parsing rejects wrong labels, counts, and values") {
  CHECK_THROWS_AS(static_cast<void>(refnet::network_from_text("1\np: 1\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(refnet::network_from_text("1\nth: 1\np: 1\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(refnet::network_from_text("2\np: 1\nth: 1 1\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(refnet::network_from_text("1\np: 0\nth: 1\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(refnet::network_from_text("1\np: 1\nth: 1\nextra\n")),
                  std::runtime_error);
}

TEST_CASE("state text round-trips without the internal padding slot") {
  const State s = {0, 2, 0, 1};
  CHECK(refnet::state_to_text(s) == "2 0 1\n");
  CHECK(refnet::state_from_text("2 0 1\n") == s);
  CHECK(refnet::state_from_text("2 0 1") == s);
  CHECK_THROWS_AS(static_cast<void>(refnet::state_from_text("")), std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(refnet::state_from_text("1 x\n")), std::runtime_error);
}

TEST_CASE("summary JSON carries tau, alpha as text, and optional periods") {
  DynamicsSummary s;
  s.tau = 6;
  s.alpha = BigInt("123456789012345678901234567890");
  const std::string noperiods = summary_to_json(s);
  CHECK(noperiods.find("\"tau\": 6") != std::string::npos);
  CHECK(noperiods.find("\"alpha\": \"123456789012345678901234567890\"") != std::string::npos);
  CHECK(noperiods.find("\"capped\": false") != std::string::npos);
  CHECK(noperiods.find("per_node_period") == std::string::npos);

  s.per_node_period = std::vector<std::uint64_t>{0, 2, 4};
  const DynamicsSummary back = refnet::summary_from_json(summary_to_json(s));
  CHECK(back.tau == s.tau);
  CHECK(back.alpha == s.alpha);
  CHECK(back.capped() == false);
  REQUIRE(back.per_node_period.has_value());
  CHECK(*back.per_node_period == *s.per_node_period);

  CHECK_THROWS_AS(static_cast<void>(refnet::summary_from_json("{")), std::runtime_error);
  CHECK_THROWS_AS(static_cast<void>(refnet::summary_from_json("{\"tau\": 1}")),
                  std::runtime_error);
}

TEST_CASE("records CSV round-trips exactly") {
  SweepRecord r;
  r.n = 100;
  r.c = 0.8;
  r.rep = 3;
  r.seed = 17646044602923778810ull;
  r.alpha = BigInt("340282366920938463463374607431768211456");
  r.tau = 42;
  r.capped_alpha = false;
  r.capped_tau = true;
  const std::vector<SweepRecord> records = {r};
  const std::string csv = records_to_csv(records);
  CHECK(csv ==
        "n,c,rep,seed,alpha,tau,capped_alpha,capped_tau\n"
        "100,0.8,3,17646044602923778810,340282366920938463463374607431768211456,42,0,1\n");
  const auto back = refnet::records_from_csv(csv);
  REQUIRE(back.size() == 1);
  CHECK(back[0].n == r.n);
  CHECK(back[0].c == r.c);
  CHECK(back[0].seed == r.seed);
  CHECK(back[0].alpha == r.alpha);
  CHECK(back[0].capped_tau);
  CHECK_FALSE(back[0].capped_alpha);

  CHECK_THROWS_AS(static_cast<void>(refnet::records_from_csv("bad,header\n1,2\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(
      static_cast<void>(refnet::records_from_csv("n,c,rep,seed,alpha,tau,capped_alpha,capped_tau\n1,2,3\n")),
      std::runtime_error);
}

TEST_CASE("stats CSV renders halves exactly and missing values as nan") {
  CellStats s;
  s.n = 30;
  s.c = 1.0;
  s.reps = 5;
  s.uncapped = 5;
  s.capped_fraction = 0.0;
  s.median_alpha = BigInt(1);
  s.p999_alpha_times2 = BigInt(15);
  s.max_alpha = BigInt(12);
  s.median_tau = 6;
  s.p999_tau_times2 = 15;
  s.max_tau = 9;

  CellStats empty;
  empty.n = 40;
  empty.c = 2.0;
  empty.reps = 2;
  empty.uncapped = 0;
  empty.capped_fraction = 1.0;

  const std::vector<CellStats> cells = {s, empty};
  CHECK(stats_to_csv(cells) ==
        "n,c,reps,median_alpha,p999_alpha,max_alpha,median_tau,p999_tau,max_tau,capped_fraction\n"
        "30,1,5,1,7.5,12,6,7.5,9,0\n"
        "40,2,2,nan,nan,nan,nan,nan,nan,1\n");
}

TEST_CASE("sweep config text round-trips and tolerates comments") {
  SweepConfig cfg;
  cfg.n_list = {100, 200};
  cfg.c_list = {0.8, 1.5};
  cfg.reps = 9;
  cfg.p_hi = 2;
  cfg.step_cap = 5000;
  cfg.base_seed = 77;
  const SweepConfig back = refnet::sweep_config_from_text(sweep_config_to_text(cfg));
  CHECK(back.n_list == cfg.n_list);
  CHECK(back.c_list == cfg.c_list);
  CHECK(back.reps == cfg.reps);
  CHECK(back.p_hi == cfg.p_hi);
  CHECK(back.step_cap == cfg.step_cap);
  CHECK(back.base_seed == cfg.base_seed);

  const SweepConfig parsed = refnet::sweep_config_from_text(
      "# grid\nn_list = 10 20\nc_list 0.5\nreps = 3\n\n# tail comment\n");
  CHECK(parsed.n_list == std::vector<std::uint32_t>{10, 20});
  CHECK(parsed.c_list == std::vector<double>{0.5});
  CHECK(parsed.reps == 3);
  CHECK(parsed.p_lo == 1);

  CHECK_THROWS_AS(static_cast<void>(refnet::sweep_config_from_text("n_list 5\n")),
                  std::runtime_error);
  CHECK_THROWS_AS(
      static_cast<void>(refnet::sweep_config_from_text("n_list 5\nc_list 1\nbogus 3\n")),
      std::runtime_error);
}

TEST_CASE("file helpers write and read back bytes") {
  const std::string path = (scratch_dir() / "roundtrip.txt").string();
  refnet::write_file(path, "two\nlines\n");
  CHECK(refnet::read_file(path) == "two\nlines\n");
  CHECK_THROWS_AS(static_cast<void>(refnet::read_file((scratch_dir() / "absent").string())),
                  std::runtime_error);
}

TEST_CASE("cli generation matches the library given the same seed") {
  const std::string out = (scratch_dir() / "gen.txt").string();
  const RunResult r = run_cli("gen --n 100 --c 0.8 --seed 7 --out " + out);
  REQUIRE(r.exit_code == 0);

  Rng rng(7);
  const Digraph expected = gen_erdos_renyi(100, 0.8 / 100, rng);
  CHECK(r.out == std::to_string(expected.arc_count()) + "\n");
  CHECK(refnet::read_file(out) == digraph_to_text(expected));

  const RunResult again = run_cli("gen --n 100 --c 0.8 --seed 7 --out " + out);
  CHECK(again.out == r.out);
  CHECK(run_cli("gen --n 5 --c 0 --seed 1 --out " + out).exit_code == 0);
  CHECK(refnet::read_file(out) == "5\n");
}

TEST_CASE("cli detect prints the summary and signals capping by exit code") {
  const refnet::SeededNetwork sn = refnet::build_restless_cycle(4);
  const std::string net = write_scratch("cycle.net", network_to_text(sn.net));
  const std::string state = write_scratch("cycle.state", refnet::state_to_text(sn.state));

  const RunResult ok = run_cli("detect --net " + net + " --state " + state);
  CHECK(ok.exit_code == 0);
  const DynamicsSummary sum = refnet::summary_from_json(ok.out);
  CHECK(sum.alpha == 4);
  CHECK(sum.tau == 0);

  const RunResult capped = run_cli("detect --net " + net + " --state " + state + " --cap 2");
  CHECK(capped.exit_code == 2);
  CHECK(refnet::summary_from_json(capped.out).capped());

  const RunResult decomposed =
      run_cli("detect --net " + net + " --state " + state + " --decomposed");
  CHECK(decomposed.exit_code == 0);
  CHECK(refnet::summary_from_json(decomposed.out).alpha == 4);

  CHECK(run_cli("detect --net " + net).exit_code == 1);
  CHECK(run_cli("detect --net missing.net --random-state").exit_code == 1);
  const std::string bad = write_scratch("bad.state", "9 9 9 9\n");
  CHECK(run_cli("detect --net " + net + " --state " + bad).exit_code == 1);
}

TEST_CASE("cli construct detect pipeline reproduces a recorded value") {
  const std::string net = (scratch_dir() / "coll.net").string();
  const std::string state = (scratch_dir() / "coll.state").string();
  const RunResult made = run_cli("construct --kind cycle-collector --lengths 3 5 --out-net " +
                                 net + " --out-state " + state);
  REQUIRE(made.exit_code == 0);
  const RunResult r = run_cli("detect --net " + net + " --state " + state + " --no-periods");
  CHECK(r.exit_code == 0);
  const DynamicsSummary sum = refnet::summary_from_json(r.out);
  CHECK(sum.alpha == 30);
  CHECK(sum.tau == 6);
}

TEST_CASE("cli simulate emits one state line per step") {
  const refnet::SeededNetwork sn = refnet::build_restless_cycle(3);
  const std::string net = write_scratch("small.net", network_to_text(sn.net));
  const std::string state = write_scratch("small.state", refnet::state_to_text(sn.state));
  const RunResult r = run_cli("simulate --net " + net + " --state " + state + " --steps 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0 1 1\n1 0 1\n1 1 0\n0 1 1\n");
}

TEST_CASE("cli sweep produces identical bytes for any job count") {
  const std::string cfg = write_scratch(
      "sweep.cfg", "n_list 15 25\nc_list 0.8 1.2\nreps 6\nbase_seed 11\n");
  const std::string rec1 = (scratch_dir() / "r1.csv").string();
  const std::string st1 = (scratch_dir() / "s1.csv").string();
  const std::string rec4 = (scratch_dir() / "r4.csv").string();
  const std::string st4 = (scratch_dir() / "s4.csv").string();

  CHECK(run_cli("sweep --config " + cfg + " --out-records " + rec1 + " --out-stats " + st1 +
                " --jobs 1")
            .exit_code == 0);
  CHECK(run_cli("sweep --config " + cfg + " --out-records " + rec4 + " --out-stats " + st4 +
                " --jobs 4")
            .exit_code == 0);
  CHECK(refnet::read_file(rec1) == refnet::read_file(rec4));
  CHECK(refnet::read_file(st1) == refnet::read_file(st4));
  CHECK(refnet::read_file(rec1).substr(0, 47) ==
        "n,c,rep,seed,alpha,tau,capped_alpha,capped_tau\n");

  // stats over the records file reproduces the sweep's own stats output
  const RunResult redo = run_cli("stats --records " + rec1);
  CHECK(redo.exit_code == 0);
  CHECK(redo.out == refnet::read_file(st1));
}

TEST_CASE("cli verify reports unknown suites as usage errors") {
  CHECK(run_cli("verify --suite unknown").exit_code == 1);
  const RunResult nsc = run_cli("verify --suite nsc --seed 3");
  CHECK(nsc.exit_code == 0);
  CHECK(nsc.out.find("suite nsc") != std::string::npos);
}

TEST_CASE("cli rejects bad flags and missing subcommands") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("gen --n 5").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}
