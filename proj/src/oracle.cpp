#include "tking/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace tking {

void QueryLedger::charge(const std::string& label, std::uint64_t units, std::uint64_t calls) {
  auto& entry = per_subroutine_[label];
  entry.calls += calls;
  entry.units += units;
  charged_ += units;
}

OracleHandle::OracleHandle(const Tournament& t, bool memoize)
    : tournament_(&t), memoize_(memoize) {
  if (memoize_) seen_.assign(t.edge_count(), false);
}

bool OracleHandle::query(Vertex i, Vertex j) {
  const auto n = tournament_->size();
  if (i == j) throw std::invalid_argument("oracle query on a self pair");
  if (i >= n || j >= n) throw std::out_of_range("oracle query vertex out of range");
  const auto idx = tournament_->index_unchecked(std::min(i, j), std::max(i, j));
  if (memoize_) {
    if (!seen_[idx]) {
      seen_[idx] = true;
      ledger_.count_probe();
    }
  } else {
    ledger_.count_probe();
  }
  const bool low_beats_high = tournament_->bit(idx);
  return i < j ? low_beats_high : !low_beats_high;
}

Vertex brute_force_king_of(OracleHandle& h, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("brute_force_king_of: empty set");
  std::vector<std::uint64_t> deg(s.size(), 0);
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      ++deg[h.query(s[a], s[b]) ? a : b];
    }
  }
  const auto best = std::max_element(deg.begin(), deg.end()) - deg.begin();
  return s[static_cast<std::size_t>(best)];
}

VertexSet probe_common_in_neighbours(OracleHandle& h, const VertexSet& w) {
  w.check_bound(h.size());
  std::vector<Vertex> result;
  for (Vertex v = 0; v < h.size(); ++v) {
    if (w.contains(v)) continue;
    bool all = true;
    for (Vertex x : w) {
      if (!h.query(v, x)) {
        all = false;
        break;
      }
    }
    if (all) result.push_back(v);
  }
  return VertexSet(std::move(result));
}

}  // namespace tking
