#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tking/tournament.hpp"

namespace tking {

struct SubroutineCharge {
  std::uint64_t calls = 0;
  std::uint64_t units = 0;
  friend bool operator==(const SubroutineCharge&, const SubroutineCharge&) = default;
};

/// Two independent meters.
///
/// classical_edge_queries counts every raw bit read through an OracleHandle,
/// including reads a quantum simulator makes to build its outcome
/// distribution. charged_quantum_queries only grows through charge(), which
/// is where the cost formulas of the simulated subroutines land; it always
/// equals the sum of per_subroutine units.
class QueryLedger {
 public:
  std::uint64_t classical_edge_queries() const noexcept { return classical_; }
  std::uint64_t charged_quantum_queries() const noexcept { return charged_; }
  const std::map<std::string, SubroutineCharge>& per_subroutine() const noexcept {
    return per_subroutine_;
  }

  void count_probe() noexcept { ++classical_; }
  void charge(const std::string& label, std::uint64_t units, std::uint64_t calls = 1);

  friend bool operator==(const QueryLedger&, const QueryLedger&) = default;

 private:
  std::uint64_t classical_ = 0;
  std::uint64_t charged_ = 0;
  std::map<std::string, SubroutineCharge> per_subroutine_;
};

/// The only door algorithms have to a tournament.
///
/// Holds a reference; the tournament must outlive the handle. Single writer:
/// one run owns one handle.
class OracleHandle {
 public:
  explicit OracleHandle(const Tournament& t, bool memoize = false);

  /// true iff i -> j. Rejects i == j and out-of-range ids.
  bool query(Vertex i, Vertex j);

  std::uint64_t size() const noexcept { return tournament_->size(); }
  bool memoize() const noexcept { return memoize_; }
  const QueryLedger& ledger() const noexcept { return ledger_; }
  QueryLedger& ledger() noexcept { return ledger_; }

  void charge(const std::string& label, std::uint64_t units, std::uint64_t calls = 1) {
    ledger_.charge(label, units, calls);
  }

 private:
  const Tournament* tournament_;
  bool memoize_;
  std::vector<bool> seen_;
  QueryLedger ledger_;
};

/// Lowest-id maximum out-degree vertex of T[S], found by querying every pair
/// in S once. That vertex is a king of T[S]. Charges exactly C(|S|,2) probes.
Vertex brute_force_king_of(OracleHandle& h, const VertexSet& s);

/// W^- computed through the handle: |W| probes per vertex of V (minus pairs
/// with itself). Used by simulators for their ground-truth view.
VertexSet probe_common_in_neighbours(OracleHandle& h, const VertexSet& w);

}  // namespace tking
