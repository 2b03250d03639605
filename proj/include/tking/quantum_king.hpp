#pragma once

#include <cstdint>
#include <vector>

#include "tking/oracle.hpp"
#include "tking/quantum_primitives.hpp"
#include "tking/rng.hpp"

namespace tking {

/// Desk-scale stand-ins for the asymptotic parameters of the quantum king
/// algorithm. Each *_rule method documents the asymptotic quantity it replaces.
struct QuantumKingConfig {
  std::uint64_t space_multiplier = 10000;  // padded search space N = multiplier * n
  std::uint64_t threshold_floor = 32;      // replaces log^100 n
  std::uint64_t threshold_log_power = 2;
  std::uint64_t t_multiplier = 3;          // t = Θ(log log n)
  std::uint64_t count_multiplier = 10;     // COUNT = O(log n)
  std::uint64_t inner_cap_multiplier = 10; // In-Sample loop budget O(t polyloglog n)
  double eps = 0.01;
  std::uint64_t delta_floor = 16;          // δ = 1/polylog n
  std::uint64_t delta_log_power = 2;
  double angle_boost = 1.0;                // γ; target angle γπ/200
  ChargePolicy policy;

  /// max(threshold_floor, ceil(log2 n)^power)
  std::uint64_t poly_threshold(std::uint64_t n) const;
  /// t_multiplier * max(1, ceil(log2 log2 n))
  std::uint64_t sample_count(std::uint64_t n) const;
  /// count_multiplier * max(1, ceil(log2 n))
  std::uint64_t outer_budget(std::uint64_t n) const;
  /// inner_cap_multiplier * t * ceil(1 / sin^2(γπ/200))
  std::uint64_t inner_cap(std::uint64_t t) const;
  /// 1 / max(delta_floor, ceil(log2 n)^power)
  double delta(std::uint64_t n) const;
  std::uint64_t space(std::uint64_t n) const { return space_multiplier * n; }

  void validate() const;
};

/// floor(γπ / (400 asin √(w'/N)) + 1/2); w' is clamped to >= 1.
std::uint64_t grover_iterations_for(std::uint64_t w_prime, std::uint64_t space, double angle_boost);

struct InSampleResult {
  VertexSet samples;
  bool estimate_failed = false;
  bool cap_exhausted = false;  // samples = {0..t-1}, the documented error return
  double estimate = 0.0;
  std::uint64_t k_tilde = 0;
  std::uint64_t measurements = 0;
  /// (2k̃+1) asin √(|W^-|/N) < π/2
  bool angle_safe = true;
};

/// Draws t distinct vertices of W^- by repeated amplified measurements.
///
/// W empty: t distinct uniform vertices of V, free. Otherwise |W^-| is
/// estimated over the padded space N, half the estimate fixes the iteration
/// count k̃, and each measurement (k̃ iterates plus one membership check,
/// (k̃+1)|W| charged) that lands in W^- joins the result. If the loop budget
/// runs out first, {0, ..., t-1} is returned as is.
InSampleResult in_sample(OracleHandle& h, const VertexSet& w, std::uint64_t t,
                         const QuantumKingConfig& cfg, Rng& rng);

struct DecideResult {
  bool verdict = false;
  CountEstimate common;    // estimate of |W^-|
  CountEstimate outgoing;  // estimate of |N+(u) ∩ W^-|
};

/// True iff est|N+(u) ∩ W^-| / est|W^-| >= 99/505. Counting costs |W| and
/// 1 + |W| edge queries per probe respectively.
DecideResult decide_high_out_degree(OracleHandle& h, const VertexSet& w, Vertex u,
                                    const QuantumKingConfig& cfg, Rng& rng);

enum class QuantumKingExit { brute_force, fallback_random, empty_candidates };

struct QuantumKingRun {
  Vertex vertex = 0;
  QuantumKingExit exit = QuantumKingExit::brute_force;
  std::uint64_t iterations = 0;
  std::vector<Vertex> w_order;  // vertices in the order they joined W
  std::uint64_t final_candidates = 0;
  bool budget_exhausted = false;

  // Bad-event instrumentation.
  bool multi_search_failed = false;
  bool in_sample_failed = false;
  bool decide_failed = false;
  bool angle_always_safe = true;

  bool clean() const noexcept {
    return !multi_search_failed && !in_sample_failed && !decide_failed && !budget_exhausted &&
           exit == QuantumKingExit::brute_force;
  }
};

QuantumKingRun quantum_king_run(OracleHandle& h, const QuantumKingConfig& cfg, Rng& rng);

inline Vertex quantum_king(OracleHandle& h, const QuantumKingConfig& cfg, Rng& rng) {
  return quantum_king_run(h, cfg, rng).vertex;
}

}  // namespace tking
