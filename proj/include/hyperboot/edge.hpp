#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "hyperboot/binomial.hpp"
#include "hyperboot/errors.hpp"

namespace hyperboot {

using VertexId = std::uint32_t;
using EdgeKey = std::uint64_t;

/// An r-subset of vertices stored in strictly increasing order.
class Edge {
 public:
  Edge() = default;

  /// Builds from an already strictly increasing vertex list. No checks.
  static Edge from_sorted(std::vector<VertexId> sorted) {
    Edge e;
    e.vertices_ = std::move(sorted);
    return e;
  }

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  VertexId operator[](std::size_t i) const noexcept { return vertices_[i]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  bool contains(VertexId v) const noexcept {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& a, const Edge& b) { return a.vertices_ <=> b.vertices_; }

 private:
  std::vector<VertexId> vertices_;
};

inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  os << '{';
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  return os << '}';
}

/// Sorts and validates an r-subset of [0, n).
inline Edge canonical_edge(std::vector<VertexId> vertices, unsigned r, unsigned n) {
  if (vertices.size() != r) {
    throw InvalidEdge("edge has " + std::to_string(vertices.size()) + " vertices, expected " +
                      std::to_string(r));
  }
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n) {
      throw InvalidEdge("vertex " + std::to_string(vertices[i]) + " out of range [0, " +
                        std::to_string(n) + ")");
    }
    if (i > 0 && vertices[i] == vertices[i - 1]) {
      throw InvalidEdge("duplicate vertex " + std::to_string(vertices[i]));
    }
  }
  return Edge::from_sorted(std::move(vertices));
}

/// Colexicographic ranking of r-subsets of [0, n):
/// key(v_1 < ... < v_r) = sum_i C(v_i, i), a bijection onto [0, C(n, r)).
class EdgeCodec {
 public:
  EdgeCodec(unsigned r, unsigned n)
      : r_(r), n_(n), binom_(std::make_shared<const BinomialTable>(n, r)) {
    if (r == 0) throw InvalidConfig("uniformity must be positive");
    edge_space_ = r > n ? 0 : binom_->checked(n, r);
  }

  unsigned uniformity() const noexcept { return r_; }
  unsigned vertex_count() const noexcept { return n_; }
  /// C(n, r): size of the key range.
  std::uint64_t edge_space() const noexcept { return edge_space_; }
  const BinomialTable& binomials() const noexcept { return *binom_; }

  /// Rank of a strictly increasing vertex sequence of length r.
  EdgeKey key(std::span<const VertexId> sorted) const noexcept {
    EdgeKey k = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) k += (*binom_)(sorted[i], unsigned(i + 1));
    return k;
  }
  EdgeKey key(const Edge& e) const noexcept { return key(e.vertices()); }

  /// Writes the r vertices of the subset ranked `key` into `out` (ascending).
  void unkey(EdgeKey key, std::span<VertexId> out) const noexcept {
    unsigned v = n_;
    for (unsigned i = r_; i >= 1; --i) {
      // Greedy: largest v with C(v, i) <= key.
      do {
        --v;
      } while ((*binom_)(v, i) > key);
      out[i - 1] = v;
      key -= (*binom_)(v, i);
    }
  }

  Edge unkey(EdgeKey key) const {
    std::vector<VertexId> v(r_);
    unkey(key, v);
    return Edge::from_sorted(std::move(v));
  }

 private:
  unsigned r_;
  unsigned n_;
  std::shared_ptr<const BinomialTable> binom_;
  std::uint64_t edge_space_ = 0;
};

inline EdgeKey edge_key(const Edge& e, unsigned n) {
  const EdgeCodec codec(static_cast<unsigned>(e.size()), n);
  return codec.key(e);
}

inline Edge edge_unkey(EdgeKey key, unsigned r, unsigned n) {
  const EdgeCodec codec(r, n);
  if (key >= codec.edge_space()) throw InvalidEdge("key " + std::to_string(key) + " out of range");
  return codec.unkey(key);
}

/// Advances a strictly increasing sequence over [0, n) to its colex
/// successor. Returns false after the last subset.
inline bool next_colex(std::span<VertexId> s, unsigned n) noexcept {
  const std::size_t r = s.size();
  for (std::size_t i = 0; i < r; ++i) {
    const VertexId limit = (i + 1 < r) ? s[i + 1] : n;
    if (s[i] + 1 < limit) {
      ++s[i];
      for (std::size_t j = 0; j < i; ++j) s[j] = VertexId(j);
      return true;
    }
  }
  return false;
}

/// Advances a strictly increasing index sequence over [0, n) to its
/// lexicographic successor. Returns false after the last subset.
inline bool next_lex(std::span<VertexId> s, unsigned n) noexcept {
  const std::size_t r = s.size();
  for (std::size_t i = r; i-- > 0;) {
    if (s[i] < n - (r - i)) {
      ++s[i];
      for (std::size_t j = i + 1; j < r; ++j) s[j] = s[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace hyperboot
