#pragma once

#include <cstdint>
#include <vector>

#include "tking/oracle.hpp"
#include "tking/rng.hpp"

namespace tking {

/// Knobs of the sampling algorithm. Zero in an override field selects the
/// default rule.
struct RandomizedKingParams {
  std::uint64_t sample_count = 0;  // k; default max(1, ceil(log2 log2 max(n,4)))
  std::uint64_t degree_fraction_den = 5;
  std::uint64_t loop_floor = 0;  // default ceil(sqrt(n))

  std::uint64_t samples_for(std::uint64_t n) const;
  std::uint64_t floor_for(std::uint64_t n) const;
  void validate() const;
};

/// How a king run ended; the bad branch returns an unverified vertex.
enum class KingExit { full_out_degree, bad_event, brute_force };

struct ClassicalKingRun {
  Vertex vertex = 0;
  KingExit exit = KingExit::brute_force;
  std::uint64_t iterations = 0;
  /// |V| at the start of each while-loop pass.
  std::vector<std::uint64_t> survivor_sizes;
  /// |V| handed to the final brute force (0 if not reached).
  std::uint64_t final_size = 0;
};

/// Queries all C(n,2) edges and returns the lowest-id max-out-degree vertex.
Vertex brute_force_king(OracleHandle& h);

/// Shen-Sheng-Wu style deterministic reduction. Block size 0 means ceil(sqrt(n)).
Vertex ssw_king(OracleHandle& h, std::uint64_t block_size = 0);

/// Sample-and-shrink randomized king finder.
///
/// While |V| >= floor: sample k vertices of V uniformly (with replacement),
/// query every edge from each sample into V, and let w be the sample of largest
/// out-degree within V (lowest id on ties). If w beats all of V it is returned;
/// if its out-degree is below floor((|V|-1)/den) a uniformly random vertex of V
/// is returned unflagged; otherwise V shrinks to the in-neighbours of w inside
/// V. Once |V| < floor the remaining sub-tournament is solved by brute force.
ClassicalKingRun randomized_king_run(OracleHandle& h, const RandomizedKingParams& params,
                                     Rng& rng);

inline Vertex randomized_king(OracleHandle& h, const RandomizedKingParams& params, Rng& rng) {
  return randomized_king_run(h, params, rng).vertex;
}

}  // namespace tking
