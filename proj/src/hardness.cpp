#include "tking/hardness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tking {

MuInstance mu_instance(std::uint64_t n, Vertex a, Vertex b) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("mu instances need odd n >= 3");
  if (a == b || a >= n || b >= n) throw std::invalid_argument("mu_instance: bad edge");
  MuInstance inst;
  inst.tournament = generate(Family::rotational_regular, n);
  const Vertex tail = inst.tournament.beats(a, b) ? a : b;
  const Vertex head = tail == a ? b : a;
  inst.tournament.flip(tail, head);
  inst.flipped_edge = {tail, head};
  inst.answer = head;
  return inst;
}

MuInstance mu_sample(std::uint64_t n, Rng& rng) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("mu instances need odd n >= 3");
  // Uniform edge: uniform index in edge_index order, decoded back to (i, j).
  auto idx = rng.uniform_below(pair_count(n));
  Vertex i = 0;
  while (idx >= n - 1 - i) {
    idx -= n - 1 - i;
    ++i;
  }
  const auto j = static_cast<Vertex>(i + 1 + idx);
  return mu_instance(n, i, j);
}

Tournament usearch_base(std::uint64_t n, std::optional<std::uint64_t> base_seed) {
  if (n == 0) throw std::invalid_argument("usearch_base: n must be >= 1");
  Tournament t;
  if (base_seed) {
    t = generate(Family::random_uniform, n, *base_seed);
  } else if (n % 2 == 1) {
    t = generate(Family::rotational_regular, n);
  } else {
    t = induced(generate(Family::rotational_regular, n + 1),
                VertexSet::range(0, static_cast<Vertex>(n)));
  }
  const auto source = static_cast<Vertex>(n - 1);
  for (Vertex v = 0; v < source; ++v) t.orient(source, v);
  return t;
}

std::vector<std::vector<std::uint64_t>> usearch_flip_sets(const Tournament& base) {
  const auto n = base.size();
  if (n < 2) return {};
  std::vector<std::vector<std::uint64_t>> sets(n - 1);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const auto idx = base.index_unchecked(i, j);
      const Vertex head = base.bit(idx) ? j : i;
      if (head == n - 1) throw std::invalid_argument("usearch base: n-1 is not a source");
      sets[head].push_back(idx);
    }
  }
  return sets;
}

UsearchInstance usearch_family(std::uint64_t n, std::optional<Vertex> y,
                               std::optional<std::uint64_t> base_seed) {
  if (y && (n < 2 || *y >= n - 1)) {
    throw std::invalid_argument("usearch_family: y must be a unit vector of length n-1");
  }
  UsearchInstance inst;
  inst.tournament = usearch_base(n, base_seed);
  inst.y = y;
  inst.answer = static_cast<Vertex>(n - 1);
  if (y) {
    const auto sets = usearch_flip_sets(inst.tournament);
    for (auto idx : sets[*y]) inst.tournament.set_bit(idx, !inst.tournament.bit(idx));
    inst.answer = *y;
  }
  return inst;
}

Vertex exact_mod(OracleHandle& h) {
  if (h.size() == 0) throw std::invalid_argument("empty tournament");
  return brute_force_king_of(h, VertexSet::range(0, static_cast<Vertex>(h.size())));
}

MaxFindResult quantum_mod(OracleHandle& h, const ChargePolicy& policy, Rng& rng) {
  const auto n = h.size();
  if (n == 0) throw std::invalid_argument("empty tournament");
  std::vector<std::uint64_t> degree(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) {
      if (u != v && h.query(v, u)) ++degree[v];
    }
  }
  return max_find(h, std::span<const std::uint64_t>(degree), n - 1, policy, rng, "quantum_mod");
}

Vertex budgeted_mod_guess(OracleHandle& h, std::uint64_t budget) {
  const auto n = h.size();
  std::vector<std::uint64_t> wins(n, 0);
  std::uint64_t spent = 0;
  for (Vertex i = 0; i < n && spent < budget; ++i) {
    for (Vertex j = i + 1; j < n && spent < budget; ++j, ++spent) {
      ++wins[h.query(i, j) ? i : j];
    }
  }
  return static_cast<Vertex>(std::max_element(wins.begin(), wins.end()) - wins.begin());
}

double mod_error_experiment(double budget_fraction, std::uint64_t trials, std::uint64_t n,
                            Rng& rng) {
  if (!(budget_fraction >= 0.0 && budget_fraction <= 1.0)) {
    throw std::invalid_argument("budget_fraction must be in [0, 1]");
  }
  if (trials == 0) throw std::invalid_argument("mod_error_experiment: trials must be >= 1");
  const auto budget =
      static_cast<std::uint64_t>(std::floor(budget_fraction * static_cast<double>(pair_count(n))));
  std::uint64_t errors = 0;
  for (std::uint64_t k = 0; k < trials; ++k) {
    const auto inst = mu_sample(n, rng);
    OracleHandle h(inst.tournament);
    if (budgeted_mod_guess(h, budget) != inst.answer) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(trials);
}

}  // namespace tking
