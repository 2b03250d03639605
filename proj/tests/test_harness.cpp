#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "tking/harness.hpp"

using namespace tking;

TEST_CASE("names round trip") {
  for (auto a : {Algo::brute, Algo::ssw, Algo::randomized_king, Algo::quantum_king,
                 Algo::exact_mod, Algo::quantum_mod}) {
    CHECK(parse_algo(algo_name(a)) == a);
  }
  for (auto f : {InstanceFamily::random, InstanceFamily::transitive, InstanceFamily::regular,
                 InstanceFamily::mu, InstanceFamily::usearch}) {
    CHECK(parse_instance_family(instance_family_name(f)) == f);
  }
  CHECK_THROWS(parse_algo("dijkstra"));
  CHECK_THROWS(parse_instance_family("planar"));
  CHECK_THROWS(parse_suite("everything"));
  CHECK(parse_suite("grover") == Suite::grover);
}

TEST_CASE("incompatible requests are rejected") {
  CHECK_THROWS_AS(check_compatible(Algo::randomized_king, InstanceFamily::mu, 11), std::invalid_argument);
  CHECK_THROWS_AS(check_compatible(Algo::exact_mod, InstanceFamily::mu, 10), std::invalid_argument);
  CHECK_THROWS_AS(check_compatible(Algo::brute, InstanceFamily::regular, 10), std::invalid_argument);
  CHECK_NOTHROW(check_compatible(Algo::quantum_mod, InstanceFamily::mu, 11));
  CHECK_NOTHROW(check_compatible(Algo::ssw, InstanceFamily::usearch, 10));
  HarnessConfig cfg;
  CHECK_THROWS(run_trials(Algo::ssw, InstanceFamily::mu, 11, 2, 1, cfg));
}

TEST_CASE("config keys, file loading and dump") {
  HarnessConfig cfg;
  cfg.set("quantum.eps", "0.05");
  cfg.set("randomized.sample_count", "4");
  cfg.set("memoize", "true");
  CHECK(cfg.quantum.eps == 0.05);
  CHECK(cfg.randomized.sample_count == 4);
  CHECK(cfg.memoize);
  CHECK_THROWS(cfg.set("quantum.nope", "1"));
  CHECK_THROWS(cfg.set("quantum.eps", "abc"));
  CHECK_THROWS(cfg.set("randomized.loop_floor", "-3"));

  const auto path = std::filesystem::temp_directory_path() / "tking_cfg_test.txt";
  {
    std::ofstream os(path);
    os << "# comment\n  quantum.angle_boost = 2.5  \n\npolicy.c_max=3 # trailing\n";
  }
  HarnessConfig loaded;
  loaded.load_file(path.string());
  CHECK(loaded.quantum.angle_boost == 2.5);
  CHECK(loaded.quantum.policy.c_max == 3.0);
  {
    std::ofstream os(path);
    os << "nonsense line\n";
  }
  CHECK_THROWS(loaded.load_file(path.string()));
  std::filesystem::remove(path);

  // Every dumped key can be fed back unchanged.
  HarnessConfig copy;
  for (const auto& [k, v] : cfg.dump()) copy.set(k, v);
  CHECK(copy.dump() == cfg.dump());
}

TEST_CASE("brute force trials") {
  HarnessConfig cfg;
  const auto recs = run_trials(Algo::brute, InstanceFamily::random, 8, 10, 1, cfg);
  REQUIRE(recs.size() == 10);
  for (std::size_t i = 0; i < recs.size(); ++i) {
    CHECK(recs[i].trial == i);
    CHECK(recs[i].seed == trial_seed(1, i));
    CHECK(recs[i].success);
    CHECK(recs[i].classical_queries == 28);
    CHECK(recs[i].charged_quantum_queries == 0);
  }
}

TEST_CASE("outputs are reproducible and independent of thread count") {
  HarnessConfig one;
  one.threads = 1;
  HarnessConfig many;
  many.threads = 4;
  for (auto algo : {Algo::randomized_king, Algo::quantum_king}) {
    const auto a = run_trials(algo, InstanceFamily::random, 200, 12, 9, one);
    const auto b = run_trials(algo, InstanceFamily::random, 200, 12, 9, many);
    CHECK(to_csv(a, false) == to_csv(b, false));
    CHECK(to_json(a, one, false) == to_json(b, one, false));
  }
  const auto m1 = run_trials(Algo::quantum_mod, InstanceFamily::mu, 51, 8, 3, many);
  const auto m2 = run_trials(Algo::quantum_mod, InstanceFamily::mu, 51, 8, 3, many);
  CHECK(to_csv(m1, false) == to_csv(m2, false));
}

TEST_CASE("csv and json layout") {
  HarnessConfig cfg;
  const auto recs = run_trials(Algo::quantum_king, InstanceFamily::usearch, 40, 3, 2, cfg);
  std::istringstream csv(to_csv(recs));
  std::string line;
  std::getline(csv, line);
  CHECK(line == kCsvHeader);
  int rows = 0;
  while (std::getline(csv, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 9);
    CHECK(line.rfind("40,quantum-king,usearch,", 0) == 0);
  }
  CHECK(rows == 3);

  const auto doc = nlohmann::json::parse(to_json(recs, cfg));
  CHECK(doc["config"]["quantum.eps"] == "0.01");
  REQUIRE(doc["records"].size() == 3);
  const auto& r0 = doc["records"][0];
  CHECK(r0["charged_quantum_queries"] == recs[0].charged_quantum_queries);
  std::uint64_t sum = 0;
  for (const auto& [label, c] : r0["per_subroutine"].items()) sum += c["units"].get<std::uint64_t>();
  CHECK(sum == recs[0].charged_quantum_queries);
  CHECK(nlohmann::json::parse(to_json(recs, cfg, false))["records"][0]["wall_ms"].is_null());
}

TEST_CASE("sweep") {
  HarnessConfig cfg;
  const auto s = sweep(Algo::exact_mod, InstanceFamily::mu, 10, 80, 2, 3, 4, cfg);
  REQUIRE(s.rows.size() == 4);
  CHECK(s.rows[0].n == 11);
  CHECK(s.rows[3].n == 81);
  for (const auto& r : s.records) CHECK(r.classical_queries == pair_count(r.n));
  for (const auto& row : s.rows) {
    CHECK(row.success_rate == 1.0);
    CHECK(row.classical.max == pair_count(row.n));
  }
  CHECK(s.records.size() == 12);
  CHECK(summary_csv(s).rfind("n,trials,success_rate", 0) == 0);
  CHECK_THROWS(sweep(Algo::brute, InstanceFamily::random, 10, 5, 2, 1, 1, cfg));
  CHECK_THROWS(sweep(Algo::brute, InstanceFamily::random, 10, 50, 1, 1, 1, cfg));
  CHECK_THROWS(sweep(Algo::brute, InstanceFamily::random, 1, 50, 2, 1, 1, cfg));
}

TEST_CASE("summaries") {
  std::vector<TrialRecord> recs(4);
  const std::uint64_t q[] = {4, 1, 3, 10};
  for (int i = 0; i < 4; ++i) {
    recs[i].classical_queries = q[i];
    recs[i].success = i != 0;
  }
  const auto row = summarize(7, recs);
  CHECK(row.success_rate == 0.75);
  CHECK(row.classical.mean == 4.5);
  CHECK(row.classical.median == 3.5);
  CHECK(row.classical.max == 10);
}

TEST_CASE("instance drawing matches the trial stream") {
  Rng rng = Rng(trial_seed(5, 0)).fork(0);
  const auto inst = draw_instance(InstanceFamily::mu, 21, rng);
  REQUIRE(inst.known_answer);
  CHECK(inst.meta.at("flip_head") == *inst.known_answer);
  HarnessConfig cfg;
  const auto rec = run_single_trial(Algo::exact_mod, InstanceFamily::mu, 21, 0, 5, cfg);
  CHECK(rec.output_vertex == *inst.known_answer);
}

TEST_CASE("chi-square tail") {
  CHECK(chi_square_p_value(0.0, 10.0) == doctest::Approx(1.0));
  CHECK(chi_square_p_value(3.841458820694124, 1.0) == doctest::Approx(0.05).epsilon(1e-6));
  CHECK(chi_square_p_value(18.307038053275146, 10.0) == doctest::Approx(0.05).epsilon(1e-6));
}
