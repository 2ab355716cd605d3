#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "hyperboot/edge.hpp"
#include "hyperboot/errors.hpp"

namespace hyperboot {

enum class Backend {
  hashed,     ///< unordered set of keys
  dense,      ///< one bit per key in [0, C(n, r))
  automatic,  ///< dense when it fits the memory budget, hashed otherwise
};

struct StorageOptions {
  Backend backend = Backend::hashed;
  std::size_t memory_budget_bytes = std::size_t{256} << 20;
};

/// An r-uniform hypergraph on vertices [0, n) with O(1) edge membership.
///
/// Edges are identified by their colex key; keys() preserves insertion
/// order so iteration does not depend on the membership backend.
class Hypergraph {
 public:
  Hypergraph(unsigned r, unsigned n, StorageOptions options = {})
      : codec_(r, n), options_(options) {
    if (r < 2) throw InvalidConfig("uniformity must be at least 2");
    const std::uint64_t words = (codec_.edge_space() + 63) / 64;
    const bool fits = words <= options.memory_budget_bytes / sizeof(std::uint64_t);
    switch (options.backend) {
      case Backend::dense:
        if (!fits) {
          throw ResourceError("dense edge table of " + std::to_string(codec_.edge_space()) +
                              " bits exceeds memory budget of " +
                              std::to_string(options.memory_budget_bytes) + " bytes");
        }
        dense_ = true;
        break;
      case Backend::automatic:
        dense_ = fits;
        break;
      case Backend::hashed:
        dense_ = false;
        break;
    }
    if (dense_) bits_.assign(words, 0);
  }

  unsigned uniformity() const noexcept { return codec_.uniformity(); }
  unsigned vertex_count() const noexcept { return codec_.vertex_count(); }
  std::size_t edge_count() const noexcept { return keys_.size(); }
  std::uint64_t edge_space() const noexcept { return codec_.edge_space(); }
  const EdgeCodec& codec() const noexcept { return codec_; }
  Backend backend() const noexcept { return dense_ ? Backend::dense : Backend::hashed; }
  const StorageOptions& options() const noexcept { return options_; }

  bool contains_key(EdgeKey k) const noexcept {
    if (dense_) return (bits_[k >> 6] >> (k & 63)) & 1u;
    return set_.count(k) != 0;
  }

  bool contains(const Edge& e) const {
    validate(e);
    return contains_key(codec_.key(e));
  }

  /// Inserts a key in [0, C(n, r)). Returns false if it was already present.
  bool add_key(EdgeKey k) {
    if (dense_) {
      std::uint64_t& w = bits_[k >> 6];
      const std::uint64_t mask = std::uint64_t{1} << (k & 63);
      if (w & mask) return false;
      w |= mask;
    } else if (!set_.insert(k).second) {
      return false;
    }
    keys_.push_back(k);
    return true;
  }

  /// Inserts a canonical edge. Returns false (and leaves the hypergraph
  /// unchanged) if the edge was already present.
  bool add_edge(const Edge& e) {
    validate(e);
    return add_key(codec_.key(e));
  }

  bool remove_edge(const Edge& e) {
    validate(e);
    const EdgeKey k = codec_.key(e);
    if (!contains_key(k)) return false;
    if (dense_) {
      bits_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
    } else {
      set_.erase(k);
    }
    keys_.erase(std::find(keys_.begin(), keys_.end(), k));
    return true;
  }

  /// Edge keys in insertion order.
  const std::vector<EdgeKey>& keys() const noexcept { return keys_; }

  std::vector<EdgeKey> sorted_keys() const {
    std::vector<EdgeKey> k = keys_;
    std::sort(k.begin(), k.end());
    return k;
  }

  /// All edges in colex order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(keys_.size());
    for (EdgeKey k : sorted_keys()) out.push_back(codec_.unkey(k));
    return out;
  }

  /// Same edge set under a different membership backend.
  Hypergraph with_storage(StorageOptions options) const {
    Hypergraph g(uniformity(), vertex_count(), options);
    g.keys_.reserve(keys_.size());
    for (EdgeKey k : keys_) g.add_key(k);
    return g;
  }

  /// Equal edge sets on the same (r, n); the backend is not compared.
  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.uniformity() == b.uniformity() && a.vertex_count() == b.vertex_count() &&
           a.sorted_keys() == b.sorted_keys();
  }

 private:
  void validate(const Edge& e) const {
    if (e.size() != uniformity()) {
      throw InvalidEdge("edge of size " + std::to_string(e.size()) + " in " +
                        std::to_string(uniformity()) + "-uniform hypergraph");
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= vertex_count()) throw InvalidEdge("vertex " + std::to_string(e[i]) + " out of range");
      if (i > 0 && e[i] <= e[i - 1]) throw InvalidEdge("edge vertices not strictly increasing");
    }
  }

  EdgeCodec codec_;
  StorageOptions options_;
  bool dense_ = false;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<EdgeKey> set_;
  std::vector<EdgeKey> keys_;
};

inline bool is_complete(const Hypergraph& g) noexcept { return g.edge_count() == g.edge_space(); }

}  // namespace hyperboot
