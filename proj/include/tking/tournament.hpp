#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tking/rng.hpp"

namespace tking {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  /// Sorts and deduplicates.
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet range(Vertex first, Vertex last);  // [first, last)

  const std::vector<Vertex>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Vertex v) const noexcept;
  Vertex operator[](std::size_t i) const { return members_[i]; }

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  /// Inserts keeping order; no-op if already present.
  void insert(Vertex v);

  /// Throws std::out_of_range if any member is >= n.
  void check_bound(std::uint64_t n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

/// Position of the pair {i, j}, i < j, in row-major upper-triangle order:
/// i*n - i(i+1)/2 + (j - i - 1).
std::uint64_t edge_index(std::uint64_t i, std::uint64_t j, std::uint64_t n);

/// C(n, 2).
constexpr std::uint64_t pair_count(std::uint64_t n) noexcept {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

/// Complete orientation of all C(n,2) vertex pairs.
///
/// One bit per unordered pair in edge_index order, most-significant bit first
/// within each byte; bit 1 at {i, j} (i < j) means i -> j. Pad bits in the last
/// byte are always zero. The byte layout is exactly the payload of a TRNK file.
class Tournament {
 public:
  Tournament() = default;
  /// All bits zero: j -> i for every i < j.
  explicit Tournament(std::uint64_t n);
  /// Adopts a packed payload; validates length and pad bits.
  Tournament(std::uint64_t n, std::vector<std::uint8_t> bytes);

  std::uint64_t size() const noexcept { return n_; }
  std::uint64_t edge_count() const noexcept { return pair_count(n_); }

  /// true iff u -> v. Unchecked except for debug assertions.
  bool beats(Vertex u, Vertex v) const noexcept {
    return u < v ? bit(index_unchecked(u, v)) : !bit(index_unchecked(v, u));
  }

  bool bit(std::uint64_t idx) const noexcept {
    return (bytes_[idx >> 3] >> (7 - (idx & 7))) & 1U;
  }
  void set_bit(std::uint64_t idx, bool value) noexcept {
    const auto mask = static_cast<std::uint8_t>(0x80U >> (idx & 7));
    if (value) {
      bytes_[idx >> 3] |= mask;
    } else {
      bytes_[idx >> 3] &= static_cast<std::uint8_t>(~mask);
    }
  }

  /// Orients the pair so that from -> to.
  void orient(Vertex from, Vertex to);
  void flip(Vertex u, Vertex v);

  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

  std::uint64_t index_unchecked(std::uint64_t i, std::uint64_t j) const noexcept {
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  std::uint64_t n_ = 0;
  std::vector<std::uint8_t> bytes_;
};

enum class Family { random_uniform, transitive, rotational_regular, three_cycle_like };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// Instance generators.
///   random_uniform      every bit independent and uniform (bytes filled from
///                       the seeded stream, big-endian within each 64-bit draw)
///   transitive          i -> j iff i < j
///   rotational_regular  i -> j iff (j - i) mod n in {1, ..., (n-1)/2}; odd n only
///   three_cycle_like    transitive with the source/sink pair reversed
///                       (n - 1 -> 0); the 3-cycle 0->1->2->0 at n = 3
Tournament generate(Family family, std::uint64_t n, std::uint64_t seed = 0);

// ---- ground truth (never touches a query ledger) -------------------------

std::uint64_t out_degree_true(const Tournament& t, Vertex v);
std::vector<std::uint64_t> out_degrees(const Tournament& t);
VertexSet out_neighbours(const Tournament& t, Vertex v);
VertexSet in_neighbours(const Tournament& t, Vertex v);

/// W^- = {v : v -> w for all w in W}; V when W is empty.
VertexSet common_in_neighbours(const Tournament& t, const VertexSet& w);

/// Every u != v reachable from v by a directed path of length <= 2.
bool is_king(const Tournament& t, Vertex v);
VertexSet kings_bruteforce(const Tournament& t);
VertexSet max_out_degree_set(const Tournament& t);

/// T[S] relabelled 0..|S|-1 in the order of S.
Tournament induced(const Tournament& t, const VertexSet& s);

// ---- TRNK file format ----------------------------------------------------
// "TRNK", version byte 0x01, n as 8-byte big-endian, then the packed bits.

inline constexpr std::uint8_t kTrnkVersion = 0x01;

std::vector<std::uint8_t> encode_trnk(const Tournament& t);
Tournament decode_trnk(const std::vector<std::uint8_t>& data);
void write_trnk(const std::string& path, const Tournament& t);
Tournament read_trnk(const std::string& path);

}  // namespace tking
