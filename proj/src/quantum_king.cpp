#include "tking/quantum_king.hpp"

#include <cmath>
#include <stdexcept>

#include "tking/math.hpp"

namespace tking {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t log2_at_least_one(std::uint64_t n) { return std::max<std::uint64_t>(1, ceil_log2(n)); }

// Line-by-line In-Sample with W^- already known to the simulator.
InSampleResult in_sample_known(OracleHandle& h, const VertexSet& w, const VertexSet& w_minus,
                               std::uint64_t t, const QuantumKingConfig& cfg, Rng& rng) {
  const auto n = h.size();
  InSampleResult r;
  if (w.empty()) {
    const auto want = std::min<std::uint64_t>(t, n);
    while (r.samples.size() < want) r.samples.insert(static_cast<Vertex>(rng.uniform_below(n)));
    return r;
  }

  const auto unit = static_cast<std::uint64_t>(w.size());
  const auto space = cfg.space(n);
  const auto est = approx_count(h, w_minus.size(), space, cfg.eps, cfg.delta(n),
                                cfg.policy.with_unit(unit), rng, "in_sample.count");
  r.estimate = est.estimate;
  r.estimate_failed = est.failed;
  const auto w_prime = static_cast<std::uint64_t>(std::floor(est.estimate / 2.0));
  r.k_tilde = grover_iterations_for(w_prime, space, cfg.angle_boost);
  const double true_theta =
      std::asin(std::sqrt(static_cast<double>(w_minus.size()) / static_cast<double>(space)));
  r.angle_safe = static_cast<double>(2 * r.k_tilde + 1) * true_theta < kPi / 2.0;

  // Each measurement costs k̃ iterates plus one membership check, |W| apiece;
  // charged in bulk once the loop ends.
  const GroverSampler sampler(w_minus, space, r.k_tilde);
  const auto cap = cfg.inner_cap(t);
  bool done = false;
  while (!done && r.measurements < cap) {
    const auto v = sampler.sample(rng);
    ++r.measurements;
    if (sampler.is_marked(v)) {
      r.samples.insert(static_cast<Vertex>(v));
      done = r.samples.size() == t;
    }
  }
  h.charge("in_sample.grover", r.measurements * r.k_tilde * unit, r.measurements);
  h.charge("in_sample.check", r.measurements * unit, r.measurements);
  if (!done) {
    r.cap_exhausted = true;
    r.samples = VertexSet::range(0, static_cast<Vertex>(std::min<std::uint64_t>(t, n)));
  }
  return r;
}

DecideResult decide_known(OracleHandle& h, const VertexSet& w, const VertexSet& w_minus, Vertex u,
                          const QuantumKingConfig& cfg, Rng& rng) {
  const auto n = h.size();
  if (u >= n) throw std::out_of_range("decide_high_out_degree: vertex out of range");
  std::uint64_t outgoing = 0;
  for (Vertex x : w_minus) {
    if (x != u && h.query(u, x)) ++outgoing;
  }
  const auto unit = static_cast<std::uint64_t>(w.size());
  const double delta = cfg.delta(n);
  DecideResult r;
  r.common = approx_count(h, w_minus.size(), n, cfg.eps, delta,
                          cfg.policy.with_unit(std::max<std::uint64_t>(1, unit)), rng,
                          "decide.count_common");
  r.outgoing = approx_count(h, outgoing, n, cfg.eps, delta, cfg.policy.with_unit(1 + unit), rng,
                            "decide.count_outgoing");
  r.verdict = r.common.estimate > 0.0 && r.outgoing.estimate / r.common.estimate >= 99.0 / 505.0;
  return r;
}

}  // namespace

std::uint64_t QuantumKingConfig::poly_threshold(std::uint64_t n) const {
  return std::max(threshold_floor, ipow(log2_at_least_one(n), threshold_log_power));
}

std::uint64_t QuantumKingConfig::sample_count(std::uint64_t n) const {
  return t_multiplier * ceil_log2_log2(n);
}

std::uint64_t QuantumKingConfig::outer_budget(std::uint64_t n) const {
  return count_multiplier * log2_at_least_one(n);
}

std::uint64_t QuantumKingConfig::inner_cap(std::uint64_t t) const {
  const double s = std::sin(angle_boost * kPi / 200.0);
  return inner_cap_multiplier * t * static_cast<std::uint64_t>(std::ceil(1.0 / (s * s)));
}

double QuantumKingConfig::delta(std::uint64_t n) const {
  return 1.0 / static_cast<double>(
                   std::max(delta_floor, ipow(log2_at_least_one(n), delta_log_power)));
}

void QuantumKingConfig::validate() const {
  policy.validate();
  if (space_multiplier < 1) throw std::invalid_argument("space_multiplier must be >= 1");
  if (t_multiplier < 1 || count_multiplier < 1 || inner_cap_multiplier < 1 ||
      threshold_floor < 1 || delta_floor < 2) {
    throw std::invalid_argument("quantum king rules must be positive");
  }
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must be in (0,1)");
  if (!(angle_boost > 0.0) || angle_boost * kPi / 200.0 >= kPi / 2.0) {
    throw std::invalid_argument("angle_boost must satisfy 0 < γπ/200 < π/2");
  }
}

std::uint64_t grover_iterations_for(std::uint64_t w_prime, std::uint64_t space,
                                    double angle_boost) {
  const auto clamped = std::max<std::uint64_t>(w_prime, 1);
  const double theta =
      std::asin(std::sqrt(std::min(1.0, static_cast<double>(clamped) / static_cast<double>(space))));
  return static_cast<std::uint64_t>(std::floor(angle_boost * kPi / (400.0 * theta) + 0.5));
}

InSampleResult in_sample(OracleHandle& h, const VertexSet& w, std::uint64_t t,
                         const QuantumKingConfig& cfg, Rng& rng) {
  cfg.validate();
  if (t < 1) throw std::invalid_argument("in_sample: t must be >= 1");
  const auto w_minus = w.empty() ? VertexSet{} : probe_common_in_neighbours(h, w);
  return in_sample_known(h, w, w_minus, t, cfg, rng);
}

DecideResult decide_high_out_degree(OracleHandle& h, const VertexSet& w, Vertex u,
                                    const QuantumKingConfig& cfg, Rng& rng) {
  cfg.validate();
  return decide_known(h, w, probe_common_in_neighbours(h, w), u, cfg, rng);
}

QuantumKingRun quantum_king_run(OracleHandle& h, const QuantumKingConfig& cfg, Rng& rng) {
  cfg.validate();
  const auto n = h.size();
  if (n == 0) throw std::invalid_argument("empty tournament");
  const auto threshold = cfg.poly_threshold(n);
  const auto t = cfg.sample_count(n);
  const double delta = cfg.delta(n);

  QuantumKingRun run;
  VertexSet w;
  VertexSet candidates;
  auto budget = cfg.outer_budget(n);
  bool broke = false;
  while (budget > 0) {
    --budget;
    ++run.iterations;
    const auto w_minus = probe_common_in_neighbours(h, w);
    const auto unit = std::max<std::uint64_t>(1, w.size());
    auto found = multi_search(h, w_minus, n, threshold, delta, cfg.policy.with_unit(unit), rng,
                              "king.multi_search");
    run.multi_search_failed |= found.failed;
    candidates = std::move(found.found);
    if (candidates.size() < threshold) {
      broke = true;
      break;
    }

    const auto sample = in_sample_known(h, w, w_minus, t, cfg, rng);
    run.in_sample_failed |= sample.estimate_failed || sample.cap_exhausted;
    run.angle_always_safe &= sample.angle_safe || sample.estimate_failed;

    bool extended = false;
    for (Vertex v : sample.samples) {
      const auto d = decide_known(h, w, w_minus, v, cfg, rng);
      run.decide_failed |= d.common.failed || d.outgoing.failed;
      if (d.verdict) {
        w.insert(v);
        run.w_order.push_back(v);
        extended = true;
        break;
      }
    }
    if (!extended) {
      run.vertex = static_cast<Vertex>(rng.uniform_below(n));
      run.exit = QuantumKingExit::fallback_random;
      return run;
    }
  }
  run.budget_exhausted = !broke;

  run.final_candidates = candidates.size();
  if (candidates.empty()) {
    run.vertex = static_cast<Vertex>(rng.uniform_below(n));
    run.exit = QuantumKingExit::empty_candidates;
    return run;
  }
  run.vertex = brute_force_king_of(h, candidates);
  h.charge("king.brute_force", pair_count(candidates.size()));
  run.exit = QuantumKingExit::brute_force;
  return run;
}

}  // namespace tking
