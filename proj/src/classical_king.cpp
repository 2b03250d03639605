#include "tking/classical_king.hpp"

#include <algorithm>
#include <stdexcept>

#include "tking/math.hpp"

namespace tking {

std::uint64_t RandomizedKingParams::samples_for(std::uint64_t n) const {
  return sample_count != 0 ? sample_count : ceil_log2_log2(n);
}

std::uint64_t RandomizedKingParams::floor_for(std::uint64_t n) const {
  return loop_floor != 0 ? loop_floor : ceil_sqrt(n);
}

void RandomizedKingParams::validate() const {
  if (degree_fraction_den < 2) {
    throw std::invalid_argument("degree_fraction_den must be >= 2");
  }
}

Vertex brute_force_king(OracleHandle& h) {
  if (h.size() == 0) throw std::invalid_argument("empty tournament");
  return brute_force_king_of(h, VertexSet::range(0, static_cast<Vertex>(h.size())));
}

Vertex ssw_king(OracleHandle& h, std::uint64_t block_size) {
  const auto n = h.size();
  if (n == 0) throw std::invalid_argument("empty tournament");
  const auto b = static_cast<std::size_t>(block_size != 0 ? block_size : ceil_sqrt(n));

  std::vector<Vertex> survivors(n);
  for (Vertex v = 0; v < n; ++v) survivors[v] = v;

  std::vector<std::uint8_t> block_wins(b * b, 0);
  std::vector<std::uint64_t> block_deg(b, 0);
  while (survivors.size() > b) {
    // Lowest-id block: survivors are kept sorted.
    std::fill(block_deg.begin(), block_deg.end(), 0);
    for (std::size_t x = 0; x < b; ++x) {
      for (std::size_t y = x + 1; y < b; ++y) {
        const bool x_wins = h.query(survivors[x], survivors[y]);
        block_wins[x * b + y] = x_wins;
        block_wins[y * b + x] = !x_wins;
        ++block_deg[x_wins ? x : y];
      }
    }
    const auto wpos = static_cast<std::size_t>(
        std::max_element(block_deg.begin(), block_deg.end()) - block_deg.begin());
    const Vertex w = survivors[wpos];

    std::vector<Vertex> next;
    for (std::size_t x = 0; x < b; ++x) {
      if (x != wpos && block_wins[x * b + wpos]) next.push_back(survivors[x]);
    }
    for (std::size_t x = b; x < survivors.size(); ++x) {
      if (!h.query(w, survivors[x])) next.push_back(survivors[x]);
    }
    if (next.empty()) return w;
    survivors = std::move(next);
  }
  return brute_force_king_of(h, VertexSet(std::move(survivors)));
}

ClassicalKingRun randomized_king_run(OracleHandle& h, const RandomizedKingParams& params,
                                     Rng& rng) {
  params.validate();
  const auto n = h.size();
  if (n == 0) throw std::invalid_argument("empty tournament");
  const auto k = params.samples_for(n);
  const auto floor = params.floor_for(n);

  ClassicalKingRun run;
  std::vector<Vertex> alive(n);
  for (Vertex v = 0; v < n; ++v) alive[v] = v;

  std::vector<std::uint8_t> wins;
  std::vector<std::uint8_t> best_wins;
  while (alive.size() >= floor) {
    const auto t = alive.size();
    run.survivor_sizes.push_back(t);
    ++run.iterations;

    std::size_t best_pos = 0;
    std::uint64_t best_deg = 0;
    bool have_best = false;
    for (std::uint64_t s = 0; s < k; ++s) {
      const auto pos = static_cast<std::size_t>(rng.uniform_below(t));
      wins.assign(t, 0);
      std::uint64_t deg = 0;
      for (std::size_t p = 0; p < t; ++p) {
        if (p == pos) continue;
        wins[p] = h.query(alive[pos], alive[p]);
        deg += wins[p];
      }
      if (!have_best || deg > best_deg || (deg == best_deg && alive[pos] < alive[best_pos])) {
        have_best = true;
        best_pos = pos;
        best_deg = deg;
        best_wins.swap(wins);
      }
    }

    if (best_deg == t - 1) {
      run.vertex = alive[best_pos];
      run.exit = KingExit::full_out_degree;
      return run;
    }
    if (best_deg < (t - 1) / params.degree_fraction_den) {
      run.vertex = alive[static_cast<std::size_t>(rng.uniform_below(t))];
      run.exit = KingExit::bad_event;
      return run;
    }
    std::vector<Vertex> next;
    next.reserve(t - 1 - best_deg);
    for (std::size_t p = 0; p < t; ++p) {
      if (p != best_pos && !best_wins[p]) next.push_back(alive[p]);
    }
    alive = std::move(next);
  }

  run.final_size = alive.size();
  run.vertex = brute_force_king_of(h, VertexSet(std::move(alive)));
  run.exit = KingExit::brute_force;
  return run;
}

}  // namespace tking
