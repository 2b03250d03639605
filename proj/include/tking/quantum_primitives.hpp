#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tking/oracle.hpp"
#include "tking/rng.hpp"

// Classically simulated quantum query subroutines.
//
// Grover sampling follows the exact two-dimensional rotation: after k iterates
// on N items with t marked, every marked item has amplitude sin((2k+1)θ)/√t and
// reproduce only their published input/output guarantees, with a
// reproduce only the input/output guarantees of their theorems, with a
// deterministic failure branch taken with probability δ. Simulators may look at
// ground truth for free (reads through the handle still show up on the
// classical meter); the charged meter only ever moves by the cost formulas.

namespace tking {

struct GroverState {
  std::uint64_t total = 1;
  std::uint64_t marked = 0;
  std::uint64_t iterations = 0;
  double theta = 0.0;

  static GroverState make(std::uint64_t total, std::uint64_t marked, std::uint64_t iterations);
  /// (2k+1)θ
  double angle() const noexcept { return static_cast<double>(2 * iterations + 1) * theta; }
  /// Probability that a measurement lands on some marked item.
  double marked_mass() const noexcept;
};

struct GroverDistribution {
  double p_marked_each = 0.0;
  double p_unmarked_each = 0.0;
};

GroverDistribution grover_distribution(std::uint64_t total, std::uint64_t marked,
                                       std::uint64_t iterations);

/// Explicit amplitude simulation, N <= 64. Test oracle for grover_distribution.
std::vector<double> statevector_oracle(std::uint64_t total, const VertexSet& marked,
                                       std::uint64_t iterations);

/// Multipliers on the O(.) costs. All default to 1.
struct ChargePolicy {
  std::uint64_t unit_cost = 1;
  double c_search = 1.0;
  double c_multi = 1.0;
  double c_count = 1.0;
  double c_max = 1.0;
  double max_find_success = 2.0 / 3.0;

  ChargePolicy with_unit(std::uint64_t unit) const {
    ChargePolicy p = *this;
    p.unit_cost = unit;
    return p;
  }
  void validate() const;
};

/// 1 / max(16, ceil(log2 n)^2).
double default_delta(std::uint64_t n);

/// Measurement outcomes of a fixed Grover state; charges nothing.
class GroverSampler {
 public:
  GroverSampler(VertexSet marked, std::uint64_t total, std::uint64_t iterations);

  std::uint64_t sample(Rng& rng) const;
  const GroverState& state() const noexcept { return state_; }
  bool is_marked(std::uint64_t i) const noexcept {
    return i < state_.total && marked_.contains(static_cast<Vertex>(i));
  }

 private:
  VertexSet marked_;
  GroverState state_;
  double hit_;
};

/// Samples one measurement outcome after `iterations` Grover iterates over
/// 0..total-1 with `marked` (all < total) marked. Charges iterations*unit_cost.
std::uint64_t grover_sample(OracleHandle& h, const VertexSet& marked, std::uint64_t total,
                            std::uint64_t iterations, std::uint64_t unit_cost, Rng& rng,
                            const std::string& label = "grover_sample");

/// Predicate form: evaluates membership on all of 0..total-1 (uncharged).
std::uint64_t grover_sample(OracleHandle& h, const std::function<bool(std::uint64_t)>& member,
                            std::uint64_t total, std::uint64_t iterations,
                            std::uint64_t unit_cost, Rng& rng,
                            const std::string& label = "grover_sample");

struct CountEstimate {
  double estimate = 0.0;
  bool failed = false;
  std::uint64_t charged = 0;
};

/// ceil(c_count * sqrt(N / max(K,1)) * (1/eps) * ln(1/delta)) * unit_cost
std::uint64_t approx_count_cost(std::uint64_t k_true, std::uint64_t total, double eps,
                                double delta, const ChargePolicy& policy);

/// With probability 1-delta: uniform on [K(1-eps), K(1+eps)].
/// Otherwise: uniform on [0, N].
CountEstimate approx_count(OracleHandle& h, std::uint64_t k_true, std::uint64_t total, double eps,
                           double delta, const ChargePolicy& policy, Rng& rng,
                           const std::string& label = "approx_count");

struct MultiSearchResult {
  VertexSet found;
  bool found_all = false;  // fewer than k marked items existed
  bool failed = false;     // one member dropped
};

/// ceil(c_multi * sqrt(N*k) * ln(max(3, log2 N))) * unit_cost
std::uint64_t multi_search_cost(std::uint64_t total, std::uint64_t k, const ChargePolicy& policy);

MultiSearchResult multi_search(OracleHandle& h, const VertexSet& marked, std::uint64_t total,
                               std::uint64_t k, double delta, const ChargePolicy& policy, Rng& rng,
                               const std::string& label = "multi_search");

struct MaxFindResult {
  std::size_t index = 0;
  bool failed = false;
  std::uint64_t charged = 0;
};

/// ceil(c_max * sqrt(n)) * item_query_cost
std::uint64_t max_find_cost(std::uint64_t n, std::uint64_t item_query_cost,
                            const ChargePolicy& policy);

/// With probability policy.max_find_success returns the lowest index holding
/// the maximum, otherwise a uniformly random non-maximal index (or the
/// maximum itself when every entry ties).
template <typename T>
MaxFindResult max_find(OracleHandle& h, std::span<const T> values, std::uint64_t item_query_cost,
                       const ChargePolicy& policy, Rng& rng,
                       const std::string& label = "max_find") {
  policy.validate();
  if (values.empty()) throw std::invalid_argument("max_find: empty list");
  const auto best = static_cast<std::size_t>(
      std::max_element(values.begin(), values.end()) - values.begin());

  MaxFindResult r;
  r.charged = max_find_cost(values.size(), item_query_cost, policy);
  h.charge(label, r.charged);
  r.index = best;
  if (rng.bernoulli(policy.max_find_success)) return r;

  std::vector<std::size_t> losers;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < values[best]) losers.push_back(i);
  }
  if (!losers.empty()) {
    r.index = losers[static_cast<std::size_t>(rng.uniform_below(losers.size()))];
    r.failed = true;
  }
  return r;
}

}  // namespace tking
