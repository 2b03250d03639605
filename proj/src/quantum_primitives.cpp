#include "tking/quantum_primitives.hpp"

#include <cmath>

#include "tking/math.hpp"

namespace tking {

GroverState GroverState::make(std::uint64_t total, std::uint64_t marked,
                              std::uint64_t iterations) {
  if (total == 0) throw std::invalid_argument("grover: search space must be non-empty");
  if (marked > total) throw std::invalid_argument("grover: more marked items than items");
  GroverState s;
  s.total = total;
  s.marked = marked;
  s.iterations = iterations;
  s.theta = std::asin(std::sqrt(static_cast<double>(marked) / static_cast<double>(total)));
  return s;
}

double GroverState::marked_mass() const noexcept {
  if (marked == 0) return 0.0;
  if (marked == total) return 1.0;
  const double s = std::sin(angle());
  return s * s;
}

GroverDistribution grover_distribution(std::uint64_t total, std::uint64_t marked,
                                       std::uint64_t iterations) {
  const auto state = GroverState::make(total, marked, iterations);
  const double hit = state.marked_mass();
  GroverDistribution d;
  if (marked > 0) d.p_marked_each = hit / static_cast<double>(marked);
  if (marked < total) d.p_unmarked_each = (1.0 - hit) / static_cast<double>(total - marked);
  return d;
}

std::vector<double> statevector_oracle(std::uint64_t total, const VertexSet& marked,
                                       std::uint64_t iterations) {
  if (total == 0 || total > 64) throw std::invalid_argument("statevector_oracle: need 1 <= N <= 64");
  marked.check_bound(total);
  std::vector<double> amp(total, 1.0 / std::sqrt(static_cast<double>(total)));
  for (std::uint64_t it = 0; it < iterations; ++it) {
    for (Vertex m : marked) amp[m] = -amp[m];
    double mean = 0.0;
    for (double a : amp) mean += a;
    mean /= static_cast<double>(total);
    for (double& a : amp) a = 2.0 * mean - a;
  }
  for (double& a : amp) a *= a;
  return amp;
}

void ChargePolicy::validate() const {
  if (unit_cost < 1) throw std::invalid_argument("ChargePolicy: unit_cost must be >= 1");
  if (c_search < 1 || c_multi < 1 || c_count < 1 || c_max < 1) {
    throw std::invalid_argument("ChargePolicy: constants must be >= 1");
  }
  if (!(max_find_success > 0.0 && max_find_success <= 1.0)) {
    throw std::invalid_argument("ChargePolicy: max_find_success must be in (0, 1]");
  }
}

double default_delta(std::uint64_t n) {
  const auto lg = ceil_log2(n);
  return 1.0 / static_cast<double>(std::max<std::uint64_t>(16, lg * lg));
}

namespace {

// r-th (0-based) index of 0..total-1 that is not in `marked`.
std::uint64_t nth_unmarked(const VertexSet& marked, std::uint64_t r) {
  const auto& m = marked.members();
  // Unmarked indices below m[i] number m[i] - i, which is non-decreasing in i.
  std::size_t lo = 0;
  std::size_t hi = m.size();
  while (lo < hi) {
    const auto mid = (lo + hi) / 2;
    if (m[mid] - mid <= r) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return r + lo;
}

}  // namespace

GroverSampler::GroverSampler(VertexSet marked, std::uint64_t total, std::uint64_t iterations)
    : marked_(std::move(marked)),
      state_(GroverState::make(total, marked_.size(), iterations)),
      hit_(state_.marked_mass()) {
  marked_.check_bound(total);
}

std::uint64_t GroverSampler::sample(Rng& rng) const {
  if (rng.uniform01() < hit_) {
    return marked_[static_cast<std::size_t>(rng.uniform_below(marked_.size()))];
  }
  return nth_unmarked(marked_, rng.uniform_below(state_.total - marked_.size()));
}

std::uint64_t grover_sample(OracleHandle& h, const VertexSet& marked, std::uint64_t total,
                            std::uint64_t iterations, std::uint64_t unit_cost, Rng& rng,
                            const std::string& label) {
  const GroverSampler sampler(marked, total, iterations);
  h.charge(label, iterations * unit_cost);
  return sampler.sample(rng);
}

std::uint64_t grover_sample(OracleHandle& h, const std::function<bool(std::uint64_t)>& member,
                            std::uint64_t total, std::uint64_t iterations,
                            std::uint64_t unit_cost, Rng& rng, const std::string& label) {
  std::vector<Vertex> marked;
  for (std::uint64_t i = 0; i < total; ++i) {
    if (member(i)) marked.push_back(static_cast<Vertex>(i));
  }
  return grover_sample(h, VertexSet(std::move(marked)), total, iterations, unit_cost, rng, label);
}

std::uint64_t approx_count_cost(std::uint64_t k_true, std::uint64_t total, double eps,
                                double delta, const ChargePolicy& policy) {
  const double ratio =
      static_cast<double>(total) / static_cast<double>(std::max<std::uint64_t>(k_true, 1));
  const double units = policy.c_count * std::sqrt(ratio) * (1.0 / eps) * std::log(1.0 / delta);
  return static_cast<std::uint64_t>(std::ceil(units)) * policy.unit_cost;
}

CountEstimate approx_count(OracleHandle& h, std::uint64_t k_true, std::uint64_t total, double eps,
                           double delta, const ChargePolicy& policy, Rng& rng,
                           const std::string& label) {
  policy.validate();
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("approx_count: eps must be in (0,1)");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("approx_count: delta must be in (0,1)");
  }
  if (k_true > total) throw std::invalid_argument("approx_count: K exceeds N");

  CountEstimate r;
  r.charged = approx_count_cost(k_true, total, eps, delta, policy);
  h.charge(label, r.charged);
  const bool fail = rng.bernoulli(delta);
  if (k_true == 0) return r;
  if (fail) {
    r.failed = true;
    r.estimate = rng.uniform_real(0.0, static_cast<double>(total));
  } else {
    const auto k = static_cast<double>(k_true);
    r.estimate = rng.uniform_real(k * (1.0 - eps), k * (1.0 + eps));
  }
  return r;
}

std::uint64_t multi_search_cost(std::uint64_t total, std::uint64_t k, const ChargePolicy& policy) {
  const double loglog = std::log(std::max(3.0, std::log2(static_cast<double>(total))));
  const double units =
      policy.c_multi * std::sqrt(static_cast<double>(total) * static_cast<double>(k)) * loglog;
  return static_cast<std::uint64_t>(std::ceil(units)) * policy.unit_cost;
}

MultiSearchResult multi_search(OracleHandle& h, const VertexSet& marked, std::uint64_t total,
                               std::uint64_t k, double delta, const ChargePolicy& policy, Rng& rng,
                               const std::string& label) {
  policy.validate();
  if (k < 1) throw std::invalid_argument("multi_search: k must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("multi_search: delta must be in (0,1)");
  }
  marked.check_bound(total);
  h.charge(label, multi_search_cost(total, k, policy));

  MultiSearchResult r;
  const bool fail = rng.bernoulli(delta);
  std::vector<Vertex> pool = marked.members();
  if (pool.size() >= k) {
    partial_shuffle(std::span<Vertex>(pool), static_cast<std::size_t>(k), rng);
    pool.resize(static_cast<std::size_t>(k));
  } else {
    r.found_all = true;
  }
  if (fail && !pool.empty()) {
    r.failed = true;
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(rng.uniform_below(pool.size())));
  }
  r.found = VertexSet(std::move(pool));
  return r;
}

std::uint64_t max_find_cost(std::uint64_t n, std::uint64_t item_query_cost,
                            const ChargePolicy& policy) {
  const double units = policy.c_max * std::sqrt(static_cast<double>(n));
  return static_cast<std::uint64_t>(std::ceil(units)) * item_query_cost;
}

}  // namespace tking
