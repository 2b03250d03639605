#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tking/oracle.hpp"
#include "tking/quantum_primitives.hpp"
#include "tking/rng.hpp"
#include "tking/tournament.hpp"

namespace tking {

/// A regular tournament with one edge reversed.
struct MuInstance {
  Tournament tournament;
  /// (u, v): the base edge u -> v now reads v -> u.
  std::pair<Vertex, Vertex> flipped_edge{0, 0};
  /// v, the unique vertex of out-degree (n+1)/2.
  Vertex answer = 0;
};

/// rotational_regular(n) with a uniformly chosen edge reversed. Odd n >= 3.
MuInstance mu_sample(std::uint64_t n, Rng& rng);
/// Same, with the edge fixed to {a, b} (whichever way the base orients it).
MuInstance mu_instance(std::uint64_t n, Vertex a, Vertex b);

/// Member of the source-flip family: y == nullopt is the base (source n-1),
/// y == j makes j the source by flipping V_j, the in-edges of j in the base.
struct UsearchInstance {
  Tournament tournament;
  std::optional<Vertex> y;
  Vertex answer = 0;
};

/// Base tournament whose source is n-1. With no seed: rotational_regular(n)
/// for odd n, rotational_regular(n+1) restricted to 0..n-1 for even n, then
/// every edge at n-1 oriented away from it. With a seed: the same
/// reorientation applied to random_uniform(n, seed).
Tournament usearch_base(std::uint64_t n, std::optional<std::uint64_t> base_seed = std::nullopt);

/// V_j for j in 0..n-2: edge indices of the base that end at j. They
/// partition all C(n,2) edges.
std::vector<std::vector<std::uint64_t>> usearch_flip_sets(const Tournament& base);

UsearchInstance usearch_family(std::uint64_t n, std::optional<Vertex> y,
                               std::optional<std::uint64_t> base_seed = std::nullopt);

/// Queries every edge; lowest-id vertex of maximum out-degree.
Vertex exact_mod(OracleHandle& h);

/// Degree table built with n-1 probes per vertex, then simulated maximum
/// finding charged ceil(c_max sqrt n) * (n-1).
MaxFindResult quantum_mod(OracleHandle& h, const ChargePolicy& policy, Rng& rng);

/// Budget-limited fixed-order strategy: probe edges in edge_index order until
/// floor(fraction * C(n,2)) probes (fraction in [0, 1]), then answer the
/// vertex with the most wins seen so far (lowest id on ties). Returns the
/// error rate over mu samples.
double mod_error_experiment(double budget_fraction, std::uint64_t trials, std::uint64_t n,
                            Rng& rng);

/// The single-instance strategy used by mod_error_experiment.
Vertex budgeted_mod_guess(OracleHandle& h, std::uint64_t budget);

}  // namespace tking
