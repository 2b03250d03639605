#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tking/harness.hpp"

namespace {

using namespace tking;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << text;
}

struct Common {
  std::string algo = "randomized-king";
  std::string family = "random";
  std::uint64_t trials = 10;
  std::uint64_t seed = 1;
  std::string config;
  std::vector<std::string> overrides;
  std::string csv;
  std::string json;
  bool memoize = false;
  bool no_timing = false;
  unsigned threads = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--algo", algo, "brute|ssw|randomized-king|quantum-king|exact-mod|quantum-mod")
        ->capture_default_str();
    cmd->add_option("--family", family, "random|transitive|regular|mu|usearch")
        ->capture_default_str();
    cmd->add_option("--trials", trials)->capture_default_str();
    cmd->add_option("--seed", seed, "master seed")->capture_default_str();
    cmd->add_option("--config", config, "key=value file");
    cmd->add_option("--set", overrides, "key=value override, repeatable");
    cmd->add_option("--csv", csv, "per-trial CSV output path");
    cmd->add_option("--json", json, "per-trial JSON output path");
    cmd->add_flag("--memoize", memoize, "charge each edge once per run");
    cmd->add_flag("--no-timing", no_timing, "omit wall_ms from output files");
    cmd->add_option("--threads", threads, "worker threads, 0 = all cores");
  }

  HarnessConfig harness_config() const {
    HarnessConfig cfg;
    if (!config.empty()) cfg.load_file(config);
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--set expects key=value: " + kv);
      cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (memoize) cfg.memoize = true;
    if (threads != 0) cfg.threads = threads;
    return cfg;
  }

  void emit(const std::vector<TrialRecord>& records, const HarnessConfig& cfg) const {
    if (!csv.empty()) write_text(csv, to_csv(records, !no_timing));
    if (!json.empty()) write_text(json, to_json(records, cfg, !no_timing));
  }
};

int cmd_gen(const std::string& family_name_arg, std::uint64_t n, std::uint64_t seed,
            const std::string& out) {
  const auto family = parse_instance_family(family_name_arg);
  if (family == InstanceFamily::mu) check_compatible(Algo::exact_mod, family, n);
  if (family != InstanceFamily::mu) check_compatible(Algo::brute, family, n);
  Rng rng = Rng(trial_seed(seed, 0)).fork(0);
  const auto inst = draw_instance(family, n, rng);
  write_trnk(out, inst.tournament);

  nlohmann::ordered_json side;
  side["family"] = std::string(instance_family_name(family));
  side["n"] = n;
  side["seed"] = seed;
  if (inst.known_answer) side["answer"] = *inst.known_answer;
  for (const auto& [k, v] : inst.meta) side[k] = v;
  write_text(out + ".json", side.dump(2) + "\n");
  std::cout << "wrote " << out << " and " << out << ".json\n";
  return 0;
}

int cmd_inspect(const std::string& path) {
  const auto t = read_trnk(path);
  std::cout << "n " << t.size() << "\n";
  for (Vertex i = 0; i < t.size(); ++i) {
    for (Vertex j = i + 1; j < t.size(); ++j) {
      if (t.beats(i, j)) {
        std::cout << i << ' ' << j << '\n';
      } else {
        std::cout << j << ' ' << i << '\n';
      }
    }
  }
  return 0;
}

void print_row(const SweepRow& row) {
  std::cout << "n=" << row.n << " trials=" << row.trials << " success_rate=" << row.success_rate
            << " classical(mean/median/max)=" << row.classical.mean << '/'
            << row.classical.median << '/' << row.classical.max
            << " charged(mean/median/max)=" << row.charged.mean << '/' << row.charged.median
            << '/' << row.charged.max << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tournament query-complexity lab"};
  app.require_subcommand(1);

  std::string gen_family = "random";
  std::uint64_t gen_n = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "write one instance as TRNK plus a sidecar JSON");
  gen->add_option("--family", gen_family)->capture_default_str();
  gen->add_option("--n", gen_n)->required();
  gen->add_option("--seed", gen_seed)->capture_default_str();
  gen->add_option("-o,--out", gen_out)->required();

  Common run_opts;
  std::uint64_t run_n = 0;
  auto* run = app.add_subcommand("run", "run metered trials at one n");
  run_opts.attach(run);
  run->add_option("--n", run_n)->required();

  Common sweep_opts;
  std::uint64_t n_min = 0, n_max = 0, factor = 2;
  std::string summary_path;
  auto* sw = app.add_subcommand("sweep", "run trials at n_min, n_min*factor, ... <= n_max");
  sweep_opts.attach(sw);
  sw->add_option("--n-min", n_min)->required();
  sw->add_option("--n-max", n_max)->required();
  sw->add_option("--factor", factor)->capture_default_str();
  sw->add_option("--summary", summary_path, "per-n summary CSV output path");

  std::string suite_name;
  std::uint64_t verify_trials = 0;
  std::uint64_t verify_seed = 1;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite_name, "lemmas|grover|uniformity|hardness")->required();
  ver->add_option("--trials", verify_trials, "corpus size, 0 = suite default")
      ->capture_default_str();
  ver->add_option("--seed", verify_seed)->capture_default_str();

  std::string inspect_path;
  auto* ins = app.add_subcommand("inspect", "dump a TRNK file as an edge list (tail head)");
  ins->add_option("file", inspect_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_gen(gen_family, gen_n, gen_seed, gen_out);
    if (*ins) return cmd_inspect(inspect_path);
    if (*ver) {
      const auto report = verify(parse_suite(suite_name), verify_trials, verify_seed);
      for (const auto& line : report.lines) std::cout << line << '\n';
      return report.passed ? 0 : 1;
    }
    if (*run) {
      const auto cfg = run_opts.harness_config();
      const auto algo = parse_algo(run_opts.algo);
      const auto records = run_trials(algo, parse_instance_family(run_opts.family), run_n,
                                      run_opts.trials, run_opts.seed, cfg);
      run_opts.emit(records, cfg);
      print_row(summarize(run_n, records));
      return 0;
    }
    if (*sw) {
      const auto cfg = sweep_opts.harness_config();
      const auto summary = sweep(parse_algo(sweep_opts.algo),
                                 parse_instance_family(sweep_opts.family), n_min, n_max, factor,
                                 sweep_opts.trials, sweep_opts.seed, cfg);
      sweep_opts.emit(summary.records, cfg);
      if (!summary_path.empty()) write_text(summary_path, summary_csv(summary));
      for (const auto& row : summary.rows) print_row(row);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
