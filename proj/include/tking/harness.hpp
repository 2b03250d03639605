#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tking/classical_king.hpp"
#include "tking/oracle.hpp"
#include "tking/quantum_king.hpp"

namespace tking {

enum class Algo { brute, ssw, randomized_king, quantum_king, exact_mod, quantum_mod };
enum class InstanceFamily { random, transitive, regular, mu, usearch };

Algo parse_algo(std::string_view name);
std::string_view algo_name(Algo a);
InstanceFamily parse_instance_family(std::string_view name);
std::string_view instance_family_name(InstanceFamily f);

/// King algorithms are checked with is_king, MOD algorithms against the
/// maximum out-degree set.
bool is_mod_algo(Algo a);
/// Throws std::invalid_argument naming the offending pair.
void check_compatible(Algo a, InstanceFamily f, std::uint64_t n);

/// Every tunable knob, loadable from a key=value file.
struct HarnessConfig {
  RandomizedKingParams randomized;
  QuantumKingConfig quantum;
  std::uint64_t ssw_block = 0;
  bool memoize = false;
  unsigned threads = 0;  // 0: hardware concurrency

  /// Throws std::invalid_argument on unknown keys or unparsable values.
  void set(std::string_view key, std::string_view value);
  void load_file(const std::string& path);
  /// key -> value for every knob, in stable order.
  std::map<std::string, std::string> dump() const;
};

struct TrialRecord {
  Algo algo = Algo::brute;
  InstanceFamily family = InstanceFamily::random;
  std::uint64_t n = 0;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  Vertex output_vertex = 0;
  bool success = false;
  std::uint64_t classical_queries = 0;
  std::uint64_t charged_quantum_queries = 0;
  double wall_ms = 0.0;
  std::map<std::string, SubroutineCharge> per_subroutine;
};

struct Instance {
  Tournament tournament;
  std::optional<Vertex> known_answer;   // set for mu and usearch
  std::map<std::string, std::uint64_t> meta;  // flip edge for mu, y for usearch
};

/// One instance of the family. Stateless families ignore rng.
Instance draw_instance(InstanceFamily family, std::uint64_t n, Rng& rng);

/// Seed of trial i: derive_seed(master_seed, i). The instance is drawn from
/// fork(0) of that stream and the algorithm consumes fork(1).
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial);

TrialRecord run_single_trial(Algo algo, InstanceFamily family, std::uint64_t n,
                             std::uint64_t trial, std::uint64_t master_seed,
                             const HarnessConfig& cfg);

/// Trials run on a worker pool; the result is ordered by trial index.
std::vector<TrialRecord> run_trials(Algo algo, InstanceFamily family, std::uint64_t n,
                                    std::uint64_t trials, std::uint64_t master_seed,
                                    const HarnessConfig& cfg);

struct MeterSummary {
  double mean = 0.0;
  double median = 0.0;
  std::uint64_t max = 0;
};

struct SweepRow {
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  double success_rate = 0.0;
  MeterSummary classical;
  MeterSummary charged;
};

struct SweepSummary {
  std::vector<SweepRow> rows;
  std::vector<TrialRecord> records;
};

SweepRow summarize(std::uint64_t n, const std::vector<TrialRecord>& records);

/// n = n_min, n_min*factor, ... <= n_max. Families that need odd n
/// (regular, mu) round each even n up by one.
SweepSummary sweep(Algo algo, InstanceFamily family, std::uint64_t n_min, std::uint64_t n_max,
                   std::uint64_t factor, std::uint64_t trials, std::uint64_t master_seed,
                   const HarnessConfig& cfg);

inline constexpr std::string_view kCsvHeader =
    "n,algo,family,trial,seed,output_vertex,success,classical_queries,charged_quantum_queries,"
    "wall_ms";

std::string to_csv(const std::vector<TrialRecord>& records, bool with_wall_ms = true);
std::string summary_csv(const SweepSummary& summary);
std::string to_json(const std::vector<TrialRecord>& records, const HarnessConfig& cfg,
                    bool with_wall_ms = true);

// ---- verification suites -------------------------------------------------

enum class Suite { lemmas, grover, uniformity, hardness };
Suite parse_suite(std::string_view name);

struct VerifyReport {
  bool passed = true;
  std::vector<std::string> lines;
  void check(bool ok, const std::string& what);
};

/// trials == 0 picks each suite's default corpus size.
VerifyReport verify(Suite suite, std::uint64_t trials, std::uint64_t master_seed);

/// Upper tail of the chi-square distribution.
double chi_square_p_value(double statistic, double dof);

}  // namespace tking
