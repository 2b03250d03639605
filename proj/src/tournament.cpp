#include "tking/tournament.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <ostream>
#include <stdexcept>

namespace tking {

// ---- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  VertexSet s;
  if (last > first) {
    s.members_.resize(last - first);
    for (Vertex v = first; v < last; ++v) s.members_[v - first] = v;
  }
  return s;
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::check_bound(std::uint64_t n) const {
  if (!members_.empty() && members_.back() >= n) {
    throw std::out_of_range("vertex " + std::to_string(members_.back()) +
                            " out of range for n = " + std::to_string(n));
  }
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  return os << '}';
}

// ---- indexing --------------------------------------------------------------

std::uint64_t edge_index(std::uint64_t i, std::uint64_t j, std::uint64_t n) {
  if (i >= j || j >= n) {
    throw std::invalid_argument("edge_index requires 0 <= i < j < n");
  }
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// ---- Tournament ------------------------------------------------------------

namespace {

std::uint64_t byte_count(std::uint64_t n) { return (pair_count(n) + 7) / 8; }

void check_vertex(const Tournament& t, Vertex v) {
  if (v >= t.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n = " +
                            std::to_string(t.size()));
  }
}

}  // namespace

Tournament::Tournament(std::uint64_t n) : n_(n), bytes_(byte_count(n), 0) {}

Tournament::Tournament(std::uint64_t n, std::vector<std::uint8_t> bytes)
    : n_(n), bytes_(std::move(bytes)) {
  if (bytes_.size() != byte_count(n_)) {
    throw std::invalid_argument("tournament payload has " + std::to_string(bytes_.size()) +
                                " bytes, expected " + std::to_string(byte_count(n_)));
  }
  const auto used = pair_count(n_) % 8;
  if (used != 0) {
    const auto pad_mask = static_cast<std::uint8_t>(0xFFU >> used);
    if (bytes_.back() & pad_mask) throw std::invalid_argument("nonzero pad bits");
  }
}

void Tournament::orient(Vertex from, Vertex to) {
  if (from == to) throw std::invalid_argument("orient: self loop");
  check_vertex(*this, from);
  check_vertex(*this, to);
  if (from < to) {
    set_bit(index_unchecked(from, to), true);
  } else {
    set_bit(index_unchecked(to, from), false);
  }
}

void Tournament::flip(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("flip: self loop");
  check_vertex(*this, u);
  check_vertex(*this, v);
  const auto idx = index_unchecked(std::min(u, v), std::max(u, v));
  set_bit(idx, !bit(idx));
}

// ---- generators ------------------------------------------------------------

Family parse_family(std::string_view name) {
  if (name == "random_uniform" || name == "random") return Family::random_uniform;
  if (name == "transitive") return Family::transitive;
  if (name == "rotational_regular" || name == "regular") return Family::rotational_regular;
  if (name == "three_cycle_like" || name == "cycle") return Family::three_cycle_like;
  throw std::invalid_argument("unknown tournament family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::random_uniform: return "random_uniform";
    case Family::transitive: return "transitive";
    case Family::rotational_regular: return "rotational_regular";
    case Family::three_cycle_like: return "three_cycle_like";
  }
  return "?";
}

Tournament generate(Family family, std::uint64_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("generate: n must be >= 1");
  Tournament t(n);
  switch (family) {
    case Family::random_uniform: {
      Rng rng(seed);
      const auto m = pair_count(n);
      std::vector<std::uint8_t> bytes(byte_count(n), 0);
      std::uint64_t word = 0;
      for (std::size_t b = 0; b < bytes.size(); ++b) {
        if (b % 8 == 0) word = rng.next();
        bytes[b] = static_cast<std::uint8_t>(word >> (56 - 8 * (b % 8)));
      }
      if (m % 8 != 0) bytes.back() &= static_cast<std::uint8_t>(0xFFU << (8 - m % 8));
      return Tournament(n, std::move(bytes));
    }
    case Family::transitive:
      for (std::uint64_t idx = 0; idx < pair_count(n); ++idx) t.set_bit(idx, true);
      return t;
    case Family::rotational_regular: {
      if (n % 2 == 0) throw std::invalid_argument("rotational_regular requires odd n");
      const auto half = (n - 1) / 2;
      for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = i + 1; j < n; ++j) {
          t.set_bit(t.index_unchecked(i, j), (j - i) <= half);
        }
      }
      return t;
    }
    case Family::three_cycle_like:
      t = generate(Family::transitive, n);
      if (n >= 2) t.orient(static_cast<Vertex>(n - 1), 0);
      return t;
  }
  throw std::invalid_argument("generate: bad family");
}

// ---- ground truth ----------------------------------------------------------

std::uint64_t out_degree_true(const Tournament& t, Vertex v) {
  check_vertex(t, v);
  std::uint64_t d = 0;
  for (Vertex u = 0; u < t.size(); ++u) {
    if (u != v && t.beats(v, u)) ++d;
  }
  return d;
}

std::vector<std::uint64_t> out_degrees(const Tournament& t) {
  const auto n = t.size();
  std::vector<std::uint64_t> deg(n, 0);
  std::uint64_t idx = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t wins = 0;
    for (std::uint64_t j = i + 1; j < n; ++j, ++idx) {
      if (t.bit(idx)) {
        ++wins;
      } else {
        ++deg[j];
      }
    }
    deg[i] += wins;
  }
  return deg;
}

VertexSet out_neighbours(const Tournament& t, Vertex v) {
  check_vertex(t, v);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < t.size(); ++u) {
    if (u != v && t.beats(v, u)) out.push_back(u);
  }
  return VertexSet(std::move(out));
}

VertexSet in_neighbours(const Tournament& t, Vertex v) {
  check_vertex(t, v);
  std::vector<Vertex> in;
  for (Vertex u = 0; u < t.size(); ++u) {
    if (u != v && t.beats(u, v)) in.push_back(u);
  }
  return VertexSet(std::move(in));
}

VertexSet common_in_neighbours(const Tournament& t, const VertexSet& w) {
  w.check_bound(t.size());
  std::vector<Vertex> result;
  for (Vertex v = 0; v < t.size(); ++v) {
    bool all = true;
    for (Vertex x : w) {
      if (x == v || !t.beats(v, x)) {
        all = false;
        break;
      }
    }
    if (all) result.push_back(v);
  }
  return VertexSet(std::move(result));
}

bool is_king(const Tournament& t, Vertex v) {
  check_vertex(t, v);
  const auto n = t.size();
  std::vector<Vertex> out;
  std::vector<Vertex> beaten_by;
  for (Vertex u = 0; u < n; ++u) {
    if (u == v) continue;
    (t.beats(v, u) ? out : beaten_by).push_back(u);
  }
  for (Vertex u : beaten_by) {
    const bool reached =
        std::any_of(out.begin(), out.end(), [&](Vertex w) { return t.beats(w, u); });
    if (!reached) return false;
  }
  return true;
}

VertexSet kings_bruteforce(const Tournament& t) {
  std::vector<Vertex> kings;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (is_king(t, v)) kings.push_back(v);
  }
  return VertexSet(std::move(kings));
}

VertexSet max_out_degree_set(const Tournament& t) {
  const auto deg = out_degrees(t);
  if (deg.empty()) return {};
  const auto best = *std::max_element(deg.begin(), deg.end());
  std::vector<Vertex> result;
  for (Vertex v = 0; v < deg.size(); ++v) {
    if (deg[v] == best) result.push_back(v);
  }
  return VertexSet(std::move(result));
}

Tournament induced(const Tournament& t, const VertexSet& s) {
  s.check_bound(t.size());
  Tournament sub(s.size());
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      sub.set_bit(sub.index_unchecked(a, b), t.beats(s[a], s[b]));
    }
  }
  return sub;
}

// ---- TRNK ------------------------------------------------------------------

std::vector<std::uint8_t> encode_trnk(const Tournament& t) {
  std::vector<std::uint8_t> out{'T', 'R', 'N', 'K', kTrnkVersion};
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(t.size() >> shift));
  }
  out.insert(out.end(), t.bytes().begin(), t.bytes().end());
  return out;
}

Tournament decode_trnk(const std::vector<std::uint8_t>& data) {
  constexpr std::size_t kHeader = 13;
  if (data.size() < kHeader || data[0] != 'T' || data[1] != 'R' || data[2] != 'N' ||
      data[3] != 'K') {
    throw std::invalid_argument("not a TRNK file");
  }
  if (data[4] != kTrnkVersion) {
    throw std::invalid_argument("unsupported TRNK version " + std::to_string(data[4]));
  }
  std::uint64_t n = 0;
  for (std::size_t i = 5; i < kHeader; ++i) n = (n << 8) | data[i];
  // Guards the C(n,2) arithmetic against absurd headers.
  if (n > (1ULL << 31)) throw std::invalid_argument("TRNK vertex count too large");
  return Tournament(n, std::vector<std::uint8_t>(data.begin() + kHeader, data.end()));
}

void write_trnk(const std::string& path, const Tournament& t) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  const auto data = encode_trnk(t);
  os.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!os) throw std::runtime_error("write failed: " + path);
}

Tournament read_trnk(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(is)),
                                 std::istreambuf_iterator<char>());
  return decode_trnk(data);
}

}  // namespace tking
