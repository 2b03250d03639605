#include "tking/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "tking/hardness.hpp"

namespace tking {

Algo parse_algo(std::string_view name) {
  if (name == "brute") return Algo::brute;
  if (name == "ssw") return Algo::ssw;
  if (name == "randomized-king") return Algo::randomized_king;
  if (name == "quantum-king") return Algo::quantum_king;
  if (name == "exact-mod") return Algo::exact_mod;
  if (name == "quantum-mod") return Algo::quantum_mod;
  throw std::invalid_argument("unknown algo '" + std::string(name) + "'");
}

std::string_view algo_name(Algo a) {
  switch (a) {
    case Algo::brute: return "brute";
    case Algo::ssw: return "ssw";
    case Algo::randomized_king: return "randomized-king";
    case Algo::quantum_king: return "quantum-king";
    case Algo::exact_mod: return "exact-mod";
    case Algo::quantum_mod: return "quantum-mod";
  }
  return "?";
}

InstanceFamily parse_instance_family(std::string_view name) {
  if (name == "random") return InstanceFamily::random;
  if (name == "transitive") return InstanceFamily::transitive;
  if (name == "regular") return InstanceFamily::regular;
  if (name == "mu") return InstanceFamily::mu;
  if (name == "usearch") return InstanceFamily::usearch;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string_view instance_family_name(InstanceFamily f) {
  switch (f) {
    case InstanceFamily::random: return "random";
    case InstanceFamily::transitive: return "transitive";
    case InstanceFamily::regular: return "regular";
    case InstanceFamily::mu: return "mu";
    case InstanceFamily::usearch: return "usearch";
  }
  return "?";
}

bool is_mod_algo(Algo a) { return a == Algo::exact_mod || a == Algo::quantum_mod; }

void check_compatible(Algo a, InstanceFamily f, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (f == InstanceFamily::mu && !is_mod_algo(a)) {
    throw std::invalid_argument("family 'mu' is a maximum-out-degree distribution; algo '" +
                                std::string(algo_name(a)) + "' finds kings");
  }
  if ((f == InstanceFamily::mu || f == InstanceFamily::regular) && n % 2 == 0) {
    throw std::invalid_argument("family '" + std::string(instance_family_name(f)) +
                                "' needs odd n, got " + std::to_string(n));
  }
  if (f == InstanceFamily::mu && n < 3) throw std::invalid_argument("family 'mu' needs n >= 3");
  if (f == InstanceFamily::usearch && n < 2) {
    throw std::invalid_argument("family 'usearch' needs n >= 2");
  }
}

// ---- config ----------------------------------------------------------------

namespace {

std::uint64_t parse_u64(std::string_view key, std::string_view v) {
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw std::invalid_argument("bad integer for " + std::string(key) + ": '" + std::string(v) +
                                "'");
  }
  return out;
}

double parse_double(std::string_view key, std::string_view v) {
  double out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw std::invalid_argument("bad number for " + std::string(key) + ": '" + std::string(v) +
                                "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "1" || v == "true" || v == "yes") return true;
  if (v == "0" || v == "false" || v == "no") return false;
  throw std::invalid_argument("bad boolean for " + std::string(key) + ": '" + std::string(v) + "'");
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

}  // namespace

void HarnessConfig::set(std::string_view key, std::string_view value) {
  auto& q = quantum;
  auto& p = quantum.policy;
  if (key == "randomized.sample_count") randomized.sample_count = parse_u64(key, value);
  else if (key == "randomized.degree_fraction_den") randomized.degree_fraction_den = parse_u64(key, value);
  else if (key == "randomized.loop_floor") randomized.loop_floor = parse_u64(key, value);
  else if (key == "ssw.block_size") ssw_block = parse_u64(key, value);
  else if (key == "quantum.space_multiplier") q.space_multiplier = parse_u64(key, value);
  else if (key == "quantum.threshold_floor") q.threshold_floor = parse_u64(key, value);
  else if (key == "quantum.threshold_log_power") q.threshold_log_power = parse_u64(key, value);
  else if (key == "quantum.t_multiplier") q.t_multiplier = parse_u64(key, value);
  else if (key == "quantum.count_multiplier") q.count_multiplier = parse_u64(key, value);
  else if (key == "quantum.inner_cap_multiplier") q.inner_cap_multiplier = parse_u64(key, value);
  else if (key == "quantum.eps") q.eps = parse_double(key, value);
  else if (key == "quantum.delta_floor") q.delta_floor = parse_u64(key, value);
  else if (key == "quantum.delta_log_power") q.delta_log_power = parse_u64(key, value);
  else if (key == "quantum.angle_boost") q.angle_boost = parse_double(key, value);
  else if (key == "policy.c_search") p.c_search = parse_double(key, value);
  else if (key == "policy.c_multi") p.c_multi = parse_double(key, value);
  else if (key == "policy.c_count") p.c_count = parse_double(key, value);
  else if (key == "policy.c_max") p.c_max = parse_double(key, value);
  else if (key == "policy.max_find_success") p.max_find_success = parse_double(key, value);
  else if (key == "memoize") memoize = parse_bool(key, value);
  else if (key == "threads") threads = static_cast<unsigned>(parse_u64(key, value));
  else throw std::invalid_argument("unknown config key '" + std::string(key) + "'");
}

void HarnessConfig::load_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string_view view = line;
    if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    set(trim(view.substr(0, eq)), trim(view.substr(eq + 1)));
  }
}

std::map<std::string, std::string> HarnessConfig::dump() const {
  const auto& q = quantum;
  const auto& p = quantum.policy;
  return {
      {"randomized.sample_count", std::to_string(randomized.sample_count)},
      {"randomized.degree_fraction_den", std::to_string(randomized.degree_fraction_den)},
      {"randomized.loop_floor", std::to_string(randomized.loop_floor)},
      {"ssw.block_size", std::to_string(ssw_block)},
      {"quantum.space_multiplier", std::to_string(q.space_multiplier)},
      {"quantum.threshold_floor", std::to_string(q.threshold_floor)},
      {"quantum.threshold_log_power", std::to_string(q.threshold_log_power)},
      {"quantum.t_multiplier", std::to_string(q.t_multiplier)},
      {"quantum.count_multiplier", std::to_string(q.count_multiplier)},
      {"quantum.inner_cap_multiplier", std::to_string(q.inner_cap_multiplier)},
      {"quantum.eps", fmt_double(q.eps)},
      {"quantum.delta_floor", std::to_string(q.delta_floor)},
      {"quantum.delta_log_power", std::to_string(q.delta_log_power)},
      {"quantum.angle_boost", fmt_double(q.angle_boost)},
      {"policy.c_search", fmt_double(p.c_search)},
      {"policy.c_multi", fmt_double(p.c_multi)},
      {"policy.c_count", fmt_double(p.c_count)},
      {"policy.c_max", fmt_double(p.c_max)},
      {"policy.max_find_success", fmt_double(p.max_find_success)},
      {"memoize", memoize ? "true" : "false"},
  };
}

// ---- trials ----------------------------------------------------------------

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial) {
  return derive_seed(master_seed, trial);
}

Instance draw_instance(InstanceFamily family, std::uint64_t n, Rng& rng) {
  switch (family) {
    case InstanceFamily::random:
      return {generate(Family::random_uniform, n, rng.next()), std::nullopt, {}};
    case InstanceFamily::transitive:
      return {generate(Family::transitive, n), std::nullopt, {}};
    case InstanceFamily::regular:
      return {generate(Family::rotational_regular, n), std::nullopt, {}};
    case InstanceFamily::mu: {
      auto inst = mu_sample(n, rng);
      std::map<std::string, std::uint64_t> meta{{"flip_tail", inst.flipped_edge.first},
                                                {"flip_head", inst.flipped_edge.second}};
      return {std::move(inst.tournament), inst.answer, std::move(meta)};
    }
    case InstanceFamily::usearch: {
      const auto pick = rng.uniform_below(n);
      const auto y = pick == n - 1 ? std::nullopt : std::optional<Vertex>(static_cast<Vertex>(pick));
      auto inst = usearch_family(n, y);
      std::map<std::string, std::uint64_t> meta;
      if (y) meta["y"] = *y;
      return {std::move(inst.tournament), inst.answer, std::move(meta)};
    }
  }
  throw std::invalid_argument("bad family");
}

TrialRecord run_single_trial(Algo algo, InstanceFamily family, std::uint64_t n,
                             std::uint64_t trial, std::uint64_t master_seed,
                             const HarnessConfig& cfg) {
  check_compatible(algo, family, n);
  TrialRecord rec;
  rec.algo = algo;
  rec.family = family;
  rec.n = n;
  rec.trial = trial;
  rec.seed = trial_seed(master_seed, trial);

  const Rng root(rec.seed);
  Rng instance_rng = root.fork(0);
  Rng algo_rng = root.fork(1);
  const auto inst = draw_instance(family, n, instance_rng);

  OracleHandle h(inst.tournament, cfg.memoize);
  const auto start = std::chrono::steady_clock::now();
  Vertex out = 0;
  switch (algo) {
    case Algo::brute: out = brute_force_king(h); break;
    case Algo::ssw: out = ssw_king(h, cfg.ssw_block); break;
    case Algo::randomized_king: out = randomized_king(h, cfg.randomized, algo_rng); break;
    case Algo::quantum_king: out = quantum_king(h, cfg.quantum, algo_rng); break;
    case Algo::exact_mod: out = exact_mod(h); break;
    case Algo::quantum_mod:
      out = static_cast<Vertex>(quantum_mod(h, cfg.quantum.policy, algo_rng).index);
      break;
  }
  const auto stop = std::chrono::steady_clock::now();
  rec.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  rec.output_vertex = out;
  if (is_mod_algo(algo)) {
    rec.success = inst.known_answer ? out == *inst.known_answer
                                    : max_out_degree_set(inst.tournament).contains(out);
  } else {
    rec.success = is_king(inst.tournament, out);
  }
  rec.classical_queries = h.ledger().classical_edge_queries();
  rec.charged_quantum_queries = h.ledger().charged_quantum_queries();
  rec.per_subroutine = h.ledger().per_subroutine();
  return rec;
}

std::vector<TrialRecord> run_trials(Algo algo, InstanceFamily family, std::uint64_t n,
                                    std::uint64_t trials, std::uint64_t master_seed,
                                    const HarnessConfig& cfg) {
  check_compatible(algo, family, n);
  std::vector<TrialRecord> records(trials);
  unsigned workers = cfg.threads != 0 ? cfg.threads : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::uint64_t>(trials, 1))));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (auto i = next++; i < trials; i = next++) {
      try {
        records[i] = run_single_trial(algo, family, n, i, master_seed, cfg);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

namespace {

MeterSummary meter(std::vector<std::uint64_t> values) {
  MeterSummary m;
  if (values.empty()) return m;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (auto v : values) sum += static_cast<double>(v);
  m.mean = sum / static_cast<double>(values.size());
  const auto mid = values.size() / 2;
  m.median = values.size() % 2 == 1
                 ? static_cast<double>(values[mid])
                 : 0.5 * (static_cast<double>(values[mid - 1]) + static_cast<double>(values[mid]));
  m.max = values.back();
  return m;
}

}  // namespace

SweepRow summarize(std::uint64_t n, const std::vector<TrialRecord>& records) {
  SweepRow row;
  row.n = n;
  row.trials = records.size();
  std::vector<std::uint64_t> classical;
  std::vector<std::uint64_t> charged;
  std::uint64_t ok = 0;
  for (const auto& r : records) {
    ok += r.success;
    classical.push_back(r.classical_queries);
    charged.push_back(r.charged_quantum_queries);
  }
  row.success_rate = records.empty() ? 0.0 : static_cast<double>(ok) / static_cast<double>(records.size());
  row.classical = meter(std::move(classical));
  row.charged = meter(std::move(charged));
  return row;
}

SweepSummary sweep(Algo algo, InstanceFamily family, std::uint64_t n_min, std::uint64_t n_max,
                   std::uint64_t factor, std::uint64_t trials, std::uint64_t master_seed,
                   const HarnessConfig& cfg) {
  if (n_min < 2) throw std::invalid_argument("sweep: n_min must be >= 2");
  if (factor < 2) throw std::invalid_argument("sweep: factor must be >= 2");
  if (n_min > n_max) throw std::invalid_argument("sweep: empty range");
  const bool odd_only = family == InstanceFamily::regular || family == InstanceFamily::mu;

  SweepSummary out;
  for (std::uint64_t n = n_min; n <= n_max; n *= factor) {
    const auto size = odd_only && n % 2 == 0 ? n + 1 : n;
    auto records = run_trials(algo, family, size, trials, master_seed, cfg);
    out.rows.push_back(summarize(size, records));
    out.records.insert(out.records.end(), records.begin(), records.end());
    if (n > n_max / factor) break;
  }
  return out;
}

// ---- output ----------------------------------------------------------------

std::string to_csv(const std::vector<TrialRecord>& records, bool with_wall_ms) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : records) {
    os << r.n << ',' << algo_name(r.algo) << ',' << instance_family_name(r.family) << ','
       << r.trial << ',' << r.seed << ',' << r.output_vertex << ',' << (r.success ? 1 : 0) << ','
       << r.classical_queries << ',' << r.charged_quantum_queries << ',';
    if (with_wall_ms) os << std::fixed << std::setprecision(3) << r.wall_ms << std::defaultfloat;
    os << '\n';
  }
  return os.str();
}

std::string summary_csv(const SweepSummary& summary) {
  std::ostringstream os;
  os << "n,trials,success_rate,classical_mean,classical_median,classical_max,charged_mean,"
        "charged_median,charged_max\n";
  os << std::setprecision(10);
  for (const auto& r : summary.rows) {
    os << r.n << ',' << r.trials << ',' << r.success_rate << ',' << r.classical.mean << ','
       << r.classical.median << ',' << r.classical.max << ',' << r.charged.mean << ','
       << r.charged.median << ',' << r.charged.max << '\n';
  }
  return os.str();
}

std::string to_json(const std::vector<TrialRecord>& records, const HarnessConfig& cfg,
                    bool with_wall_ms) {
  nlohmann::ordered_json doc;
  doc["config"] = cfg.dump();
  auto& arr = doc["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["algo"] = algo_name(r.algo);
    j["family"] = instance_family_name(r.family);
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["output_vertex"] = r.output_vertex;
    j["success"] = r.success;
    j["classical_queries"] = r.classical_queries;
    j["charged_quantum_queries"] = r.charged_quantum_queries;
    j["wall_ms"] = with_wall_ms ? nlohmann::ordered_json(r.wall_ms) : nlohmann::ordered_json();
    auto& subs = j["per_subroutine"] = nlohmann::ordered_json::object();
    for (const auto& [label, c] : r.per_subroutine) {
      subs[label] = {{"calls", c.calls}, {"units", c.units}};
    }
    arr.push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

}  // namespace tking
