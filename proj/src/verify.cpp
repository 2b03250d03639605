#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "tking/hardness.hpp"
#include "tking/harness.hpp"
#include "tking/quantum_primitives.hpp"

namespace tking {

Suite parse_suite(std::string_view name) {
  if (name == "lemmas") return Suite::lemmas;
  if (name == "grover") return Suite::grover;
  if (name == "uniformity") return Suite::uniformity;
  if (name == "hardness") return Suite::hardness;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

void VerifyReport::check(bool ok, const std::string& what) {
  passed = passed && ok;
  lines.push_back(std::string(ok ? "PASS  " : "FAIL  ") + what);
}

double chi_square_p_value(double statistic, double dof) {
  return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

VerifyReport verify_lemmas(std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) trials = 1000;
  Rng rng(seed);
  std::uint64_t no_king = 0, degree_sum = 0, low_degree = 0, random_vertex = 0, closure = 0,
                max_degree = 0;
  for (std::uint64_t k = 0; k < trials; ++k) {
    const auto n = 3 + rng.uniform_below(62);
    const auto t = generate(Family::random_uniform, n, rng.next());
    const auto kings = kings_bruteforce(t);
    const auto deg = out_degrees(t);

    no_king += kings.empty();

    std::uint64_t out_sum = 0, in_sum = 0;
    for (auto d : deg) {
      out_sum += d;
      in_sum += n - 1 - d;
    }
    degree_sum += out_sum != pair_count(n) || in_sum != pair_count(n);

    std::vector<std::uint64_t> at_most(n, 0);
    for (auto d : deg) ++at_most[d];
    std::uint64_t running = 0;
    bool low_ok = true;
    for (std::uint64_t d = 0; d < n; ++d) {
      running += at_most[d];
      low_ok = low_ok && running <= 2 * d + 1;
    }
    low_degree += !low_ok;

    const auto cutoff = (n - 1) / 5;
    const auto high = std::count_if(deg.begin(), deg.end(), [&](auto d) { return d >= cutoff; });
    random_vertex += 5 * static_cast<std::uint64_t>(high) < 3 * n;

    bool closure_ok = true;
    for (Vertex v = 0; v < n && closure_ok; ++v) {
      const auto in = in_neighbours(t, v);
      if (in.empty()) continue;
      for (Vertex local : kings_bruteforce(induced(t, in))) {
        closure_ok = closure_ok && is_king(t, in[local]);
      }
    }
    closure += !closure_ok;

    const auto maxset = max_out_degree_set(t);
    max_degree += !std::all_of(maxset.begin(), maxset.end(),
                               [&](Vertex v) { return kings.contains(v); });
  }
  VerifyReport r;
  const auto corpus = " (" + std::to_string(trials) + " tournaments, n in 3..64)";
  r.check(no_king == 0, "every tournament has a king" + corpus);
  r.check(degree_sum == 0, "out- and in-degree sums equal C(n,2)" + corpus);
  r.check(low_degree == 0, "|{v : d+(v) <= k}| <= 2k+1 for all k" + corpus);
  r.check(random_vertex == 0, ">= 3/5 of vertices have d+ >= floor((n-1)/5)" + corpus);
  r.check(closure == 0, "kings of T[N-(v)] are kings of T" + corpus);
  r.check(max_degree == 0, "maximum out-degree vertices are kings" + corpus);
  return r;
}

VerifyReport verify_grover(std::uint64_t seed) {
  Rng rng(seed);
  double max_dev = 0.0;
  double max_norm = 0.0;
  for (std::uint64_t total = 1; total <= 64; ++total) {
    std::vector<Vertex> order(total);
    for (Vertex i = 0; i < total; ++i) order[i] = i;
    for (std::uint64_t marked = 0; marked <= total; ++marked) {
      partial_shuffle(std::span<Vertex>(order), marked, rng);
      const VertexSet set(std::vector<Vertex>(order.begin(), order.begin() + marked));
      for (std::uint64_t k = 0; k <= 2 * total; ++k) {
        const auto closed = grover_distribution(total, marked, k);
        const auto exact = statevector_oracle(total, set, k);
        for (Vertex i = 0; i < total; ++i) {
          const double p = set.contains(i) ? closed.p_marked_each : closed.p_unmarked_each;
          max_dev = std::max(max_dev, std::abs(p - exact[i]));
        }
        const double mass = static_cast<double>(marked) * closed.p_marked_each +
                            static_cast<double>(total - marked) * closed.p_unmarked_each;
        max_norm = std::max(max_norm, std::abs(mass - 1.0));
      }
    }
  }
  VerifyReport r;
  r.check(max_dev <= 1e-9, "closed form vs statevector, N <= 64, t <= N, k <= 2N: max deviation " +
                               num(max_dev));
  r.check(max_norm <= 1e-12, "closed form normalisation: max error " + num(max_norm));
  return r;
}

VerifyReport verify_uniformity(std::uint64_t trials, std::uint64_t seed) {
  const std::uint64_t wanted = std::max<std::uint64_t>(trials, 40000);
  const auto t = generate(Family::transitive, 64);
  const VertexSet w{63};
  QuantumKingConfig cfg;
  Rng rng(seed);
  std::vector<std::uint64_t> counts(63, 0);
  std::uint64_t accepted = 0;
  std::uint64_t errors = 0;
  while (accepted < wanted) {
    OracleHandle h(t);
    const auto s = in_sample(h, w, 1, cfg, rng);
    if (s.cap_exhausted) {
      ++errors;
      continue;
    }
    ++counts[s.samples[0]];
    ++accepted;
  }
  const double expected = static_cast<double>(accepted) / 63.0;
  double chi2 = 0.0;
  double tv = 0.0;
  for (auto c : counts) {
    const double diff = static_cast<double>(c) - expected;
    chi2 += diff * diff / expected;
    tv += std::abs(static_cast<double>(c) / static_cast<double>(accepted) - 1.0 / 63.0);
  }
  tv /= 2.0;
  const double p = chi_square_p_value(chi2, 62.0);
  VerifyReport r;
  r.check(p >= 1e-3, "In-Sample on transitive(64), W={63}: chi-square " + num(chi2) +
                         " over " + std::to_string(accepted) + " samples, p = " + num(p));
  r.check(tv <= 0.05, "In-Sample total variation distance " + num(tv));
  r.lines.push_back("info  cap-exhausted runs: " + std::to_string(errors));
  return r;
}

VerifyReport verify_hardness(std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) trials = 10000;
  Rng rng(seed);
  VerifyReport r;

  std::uint64_t bad_mu = 0;
  for (std::uint64_t k = 0; k < trials; ++k) {
    const auto inst = mu_sample(101, rng);
    const auto maxset = max_out_degree_set(inst.tournament);
    bad_mu += maxset.size() != 1 || maxset[0] != inst.answer ||
              out_degree_true(inst.tournament, inst.answer) != 51;
  }
  r.check(bad_mu == 0, "mu(101): unique max-degree vertex equals the flip head (" +
                           std::to_string(trials) + " instances)");

  bool usearch_ok = true;
  bool partition_ok = true;
  for (std::uint64_t n : {8, 32}) {
    const auto sets = usearch_flip_sets(usearch_base(n));
    std::vector<int> hits(pair_count(n), 0);
    for (const auto& s : sets) {
      for (auto idx : s) ++hits[idx];
    }
    partition_ok = partition_ok && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    for (std::uint64_t j = 0; j <= n - 1; ++j) {
      const auto y = j == n - 1 ? std::nullopt : std::optional<Vertex>(static_cast<Vertex>(j));
      const auto inst = usearch_family(n, y);
      const auto kings = kings_bruteforce(inst.tournament);
      usearch_ok = usearch_ok && kings.size() == 1 && kings[0] == inst.answer &&
                   in_neighbours(inst.tournament, inst.answer).empty();
    }
  }
  r.check(usearch_ok, "USEARCH n in {8,32}: every |y| <= 1 has the designated source as sole king");
  r.check(partition_ok, "USEARCH n in {8,32}: flip sets partition all C(n,2) edges");

  const double err = mod_error_experiment(0.01, 2000, 101, rng);
  r.check(err > 1.0 / 3.0, "fixed-order MOD strategy at 1% budget, n=101: error " + num(err));
  const double full = mod_error_experiment(1.0, 200, 101, rng);
  r.check(full == 0.0, "fixed-order MOD strategy at full budget: error " + num(full));

  bool exact_ok = true;
  for (std::uint64_t n : {5, 51, 101}) {
    const auto inst = mu_sample(n, rng);
    OracleHandle h(inst.tournament);
    exact_ok = exact_ok && exact_mod(h) == inst.answer &&
               h.ledger().classical_edge_queries() == pair_count(n);
  }
  r.check(exact_ok, "exact_mod is correct and probes exactly C(n,2) edges");
  return r;
}

}  // namespace

VerifyReport verify(Suite suite, std::uint64_t trials, std::uint64_t master_seed) {
  switch (suite) {
    case Suite::lemmas: return verify_lemmas(trials, master_seed);
    case Suite::grover: return verify_grover(master_seed);
    case Suite::uniformity: return verify_uniformity(trials, master_seed);
    case Suite::hardness: return verify_hardness(trials, master_seed);
  }
  throw std::invalid_argument("bad suite");
}

}  // namespace tking
