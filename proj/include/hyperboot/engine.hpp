#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "hyperboot/edge.hpp"
#include "hyperboot/errors.hpp"
#include "hyperboot/hypergraph.hpp"

// Synchronous K_k^(r)-bootstrap percolation: in round t every non-edge e of
// G_{t-1} that is the only missing r-subset of some k-set S is added.

namespace hyperboot {

/// Sorted vertex set of a K_k^(r) copy.
using VertexSet = std::vector<VertexId>;

enum class EngineKind { naive, incremental };

struct PercolationConfig {
  unsigned k = 0;
  /// Defaults to C(n, r) + 1.
  std::optional<std::uint64_t> max_rounds;
  bool record_witnesses = true;
  EngineKind engine = EngineKind::incremental;
  StorageOptions storage{Backend::automatic};
};

struct Infection {
  Edge edge;
  /// Lexicographically least completed k-set; empty when witnesses are off.
  VertexSet witness;

  friend bool operator==(const Infection&, const Infection&) = default;
};

struct RoundRecord {
  std::uint64_t t = 0;
  /// Colex-key order.
  std::vector<Infection> added;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct RunResult {
  /// Number of rounds that added at least one edge.
  std::uint64_t M = 0;
  std::vector<RoundRecord> rounds;
  std::size_t initial_edge_count = 0;
  std::size_t final_edge_count = 0;
  bool percolated = false;
  /// Stopped by max_rounds while still active.
  bool truncated = false;
  Hypergraph final_state{2, 0};
};

namespace detail {

inline void check_k(const Hypergraph& g, unsigned k) {
  if (k <= g.uniformity()) {
    throw InvalidConfig("clique size k=" + std::to_string(k) + " must exceed uniformity r=" +
                        std::to_string(g.uniformity()));
  }
}

/// Merges two disjoint ascending sequences.
inline void merge_into(std::span<const VertexId> a, std::span<const VertexId> b, VertexSet& out) {
  out.resize(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
}

/// Enumerates the r-subsets of a sorted k-set, calling fn(key) for each;
/// stops early when fn returns false.
template <typename Fn>
void for_each_face(const EdgeCodec& codec, std::span<const VertexId> set, std::vector<VertexId>& pos,
                   std::vector<VertexId>& face, Fn&& fn) {
  const unsigned r = codec.uniformity();
  const unsigned k = unsigned(set.size());
  pos.resize(r);
  face.resize(r);
  for (unsigned i = 0; i < r; ++i) pos[i] = i;
  do {
    for (unsigned i = 0; i < r; ++i) face[i] = set[pos[i]];
    if (!fn(codec.key(face))) return;
  } while (next_lex(pos, k));
}

}  // namespace detail

/// Lexicographically least k-set S containing `e` whose r-subsets other
/// than `e` all satisfy `present`. Empty if none exists.
template <typename Present>
VertexSet least_witness(const EdgeCodec& codec, const Edge& e, unsigned k, Present&& present) {
  const unsigned n = codec.vertex_count();
  const unsigned r = codec.uniformity();
  if (k > n) return {};
  const EdgeKey ekey = codec.key(e);
  std::vector<VertexId> rest;
  rest.reserve(n - r);
  for (VertexId v = 0; v < n; ++v)
    if (!e.contains(v)) rest.push_back(v);
  const unsigned extra = k - r;
  std::vector<VertexId> idx(extra), chosen(extra), pos, face;
  for (unsigned i = 0; i < extra; ++i) idx[i] = i;
  VertexSet best, s;
  do {
    for (unsigned i = 0; i < extra; ++i) chosen[i] = rest[idx[i]];
    detail::merge_into(e.vertices(), chosen, s);
    bool ok = true;
    detail::for_each_face(codec, s, pos, face, [&](EdgeKey fk) {
      if (fk != ekey && !present(fk)) ok = false;
      return ok;
    });
    if (ok && (best.empty() || s < best)) {
      best = s;
      // With a single extra vertex the ascending scan already yields the least set.
      if (extra == 1) break;
    }
  } while (next_lex(idx, unsigned(rest.size())));
  return best;
}

/// One synchronous round by exhaustive scan of every non-edge of G.
///
/// The scan is independent of the frontier bookkeeping used by
/// run_incremental and serves as its oracle. For each non-edge e the
/// admissible extra vertices are intersected from the links of e's
/// (r-1)-subsets before any k-set is examined.
inline std::vector<Infection> infect_round_naive(const Hypergraph& g, unsigned k, bool record_witnesses = true) {
  detail::check_k(g, k);
  const unsigned r = g.uniformity();
  const unsigned n = g.vertex_count();
  std::vector<Infection> out;
  if (k > n) return out;

  const EdgeCodec& codec = g.codec();
  const EdgeCodec link_codec(r - 1, n);
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> links(link_codec.edge_space() * words, 0);

  std::vector<VertexId> e(r), sub(r - 1);
  for (EdgeKey key : g.keys()) {
    codec.unkey(key, e);
    for (unsigned drop = 0; drop < r; ++drop) {
      for (unsigned i = 0, j = 0; i < r; ++i)
        if (i != drop) sub[j++] = e[i];
      links[link_codec.key(sub) * words + e[drop] / 64] |= std::uint64_t{1} << (e[drop] % 64);
    }
  }

  std::vector<std::uint64_t> cand(words);
  std::vector<VertexId> cands, idx, chosen, pos, face;
  VertexSet s, best;
  for (unsigned i = 0; i < r; ++i) e[i] = i;
  EdgeKey key = 0;
  const std::uint64_t* top = nullptr;
  do {
    // Colex order varies the smallest vertex fastest, so e[1..r) is fixed
    // across a run of e[1] consecutive keys; skip runs whose shared link is empty.
    if (e[0] == 0) {
      top = &links[link_codec.key(std::span<const VertexId>(e).subspan(1)) * words];
      if (std::all_of(top, top + words, [](std::uint64_t w) { return w == 0; })) {
        key += e[1] - 1;
        e[0] = e[1] - 1;
        ++key;
        continue;
      }
    }
    if (!g.contains_key(key)) {
      std::copy(top, top + words, cand.begin());
      for (unsigned drop = 1; drop < r; ++drop) {
        for (unsigned i = 0, j = 0; i < r; ++i)
          if (i != drop) sub[j++] = e[i];
        const std::uint64_t* l = &links[link_codec.key(sub) * words];
        for (std::size_t w = 0; w < words; ++w) cand[w] &= l[w];
      }
      cands.clear();
      for (std::size_t w = 0; w < words; ++w)
        for (std::uint64_t b = cand[w]; b; b &= b - 1) cands.push_back(VertexId(w * 64 + __builtin_ctzll(b)));

      const unsigned extra = k - r;
      if (cands.size() >= extra) {
        best.clear();
        idx.resize(extra);
        chosen.resize(extra);
        for (unsigned i = 0; i < extra; ++i) idx[i] = i;
        do {
          for (unsigned i = 0; i < extra; ++i) chosen[i] = cands[idx[i]];
          detail::merge_into(e, chosen, s);
          bool ok = true;
          detail::for_each_face(codec, s, pos, face, [&](EdgeKey fk) {
            if (fk != key && !g.contains_key(fk)) ok = false;
            return ok;
          });
          if (ok && (best.empty() || s < best)) best = s;
        } while (next_lex(idx, unsigned(cands.size())));
        if (!best.empty()) {
          out.push_back({Edge::from_sorted(e), record_witnesses ? best : VertexSet{}});
        }
      }
    }
    ++key;
  } while (next_colex(e, n));
  return out;
}

/// New K_k^(r) copies created by adding `added` to g_prev: k-sets whose
/// r-subsets all lie in g_prev plus `added`, but not all in g_prev.
/// Sorted lexicographically.
inline std::vector<VertexSet> new_copies(const Hypergraph& g_prev, const std::vector<Edge>& added, unsigned k) {
  detail::check_k(g_prev, k);
  const EdgeCodec& codec = g_prev.codec();
  const unsigned n = g_prev.vertex_count();
  const unsigned r = g_prev.uniformity();
  std::vector<VertexSet> out;
  if (k > n || added.empty()) return out;

  std::unordered_set<EdgeKey> extra_keys;
  for (const Edge& a : added) {
    const EdgeKey ak = codec.key(a);
    if (g_prev.contains_key(ak)) throw InvalidInput("added edge already present in G_prev");
    extra_keys.insert(ak);
  }
  auto present = [&](EdgeKey fk) { return g_prev.contains_key(fk) || extra_keys.count(fk) != 0; };

  const unsigned extra = k - r;
  std::vector<VertexId> rest, idx(extra), chosen(extra), pos, face;
  VertexSet s;
  for (const Edge& a : added) {
    rest.clear();
    for (VertexId v = 0; v < n; ++v)
      if (!a.contains(v)) rest.push_back(v);
    for (unsigned i = 0; i < extra; ++i) idx[i] = i;
    do {
      for (unsigned i = 0; i < extra; ++i) chosen[i] = rest[idx[i]];
      detail::merge_into(a.vertices(), chosen, s);
      bool ok = true;
      detail::for_each_face(codec, s, pos, face, [&](EdgeKey fk) {
        ok = present(fk);
        return ok;
      });
      if (ok) out.push_back(s);
    } while (next_lex(idx, unsigned(rest.size())));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

inline RunResult finish_run(Hypergraph&& g, std::vector<RoundRecord>&& rounds, std::size_t initial, bool truncated) {
  RunResult res;
  res.M = rounds.size();
  res.rounds = std::move(rounds);
  res.initial_edge_count = initial;
  res.final_edge_count = g.edge_count();
  res.percolated = is_complete(g);
  res.truncated = truncated;
  res.final_state = std::move(g);
  return res;
}

inline std::uint64_t round_cap(const Hypergraph& g, const PercolationConfig& cfg) {
  if (cfg.max_rounds) return *cfg.max_rounds;
  const std::uint64_t space = g.edge_space();
  return space == std::numeric_limits<std::uint64_t>::max() ? space : space + 1;
}

}  // namespace detail

/// Runs the process with a full naive rescan every round.
inline RunResult run_naive(const Hypergraph& g0, const PercolationConfig& cfg) {
  detail::check_k(g0, cfg.k);
  Hypergraph g = g0.with_storage(cfg.storage);
  const std::uint64_t cap = detail::round_cap(g, cfg);
  std::vector<RoundRecord> rounds;
  bool truncated = false;
  for (std::uint64_t t = 1;; ++t) {
    if (t > cap) {
      truncated = !infect_round_naive(g, cfg.k, false).empty();
      break;
    }
    auto added = infect_round_naive(g, cfg.k, cfg.record_witnesses);
    if (added.empty()) break;
    for (const Infection& inf : added) g.add_edge(inf.edge);
    rounds.push_back({t, std::move(added)});
  }
  return detail::finish_run(std::move(g), std::move(rounds), g0.edge_count(), truncated);
}

/// Runs the process scanning only k-sets that contain an edge added in
/// the previous round (all of G0 before round 1). A non-edge that becomes
/// infectable in round t+1 but was not in round t must have a witness
/// containing a round-t edge, so the scan misses nothing.
inline RunResult run_incremental(const Hypergraph& g0, const PercolationConfig& cfg) {
  detail::check_k(g0, cfg.k);
  Hypergraph g = g0.with_storage(cfg.storage);
  const std::uint64_t cap = detail::round_cap(g, cfg);
  const unsigned n = g.vertex_count();
  const unsigned r = g.uniformity();
  const unsigned k = cfg.k;
  const EdgeCodec& codec = g.codec();
  std::vector<RoundRecord> rounds;
  bool truncated = false;
  if (k > n) return detail::finish_run(std::move(g), std::move(rounds), g0.edge_count(), false);

  const unsigned extra = k - r;
  std::vector<EdgeKey> frontier = g.keys();
  std::vector<EdgeKey> candidates;
  std::vector<VertexId> f(r), rest, idx(extra), chosen(extra), pos, face;
  std::vector<bool> in_f(n, false);
  VertexSet s;
  auto present = [&](EdgeKey fk) { return g.contains_key(fk); };

  for (std::uint64_t t = 1;; ++t) {
    candidates.clear();
    for (EdgeKey fkey : frontier) {
      codec.unkey(fkey, f);
      rest.clear();
      for (VertexId v : f) in_f[v] = true;
      for (VertexId v = 0; v < n; ++v)
        if (!in_f[v]) rest.push_back(v);
      for (VertexId v : f) in_f[v] = false;
      for (unsigned i = 0; i < extra; ++i) idx[i] = i;
      do {
        for (unsigned i = 0; i < extra; ++i) chosen[i] = rest[idx[i]];
        detail::merge_into(f, chosen, s);
        unsigned missing = 0;
        EdgeKey missing_key = 0;
        detail::for_each_face(codec, s, pos, face, [&](EdgeKey fk) {
          if (!g.contains_key(fk)) {
            ++missing;
            missing_key = fk;
          }
          return missing <= 1;
        });
        if (missing == 1) candidates.push_back(missing_key);
      } while (next_lex(idx, unsigned(rest.size())));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.empty()) break;
    if (t > cap) {
      truncated = true;
      break;
    }

    RoundRecord rec{t, {}};
    rec.added.reserve(candidates.size());
    for (EdgeKey ck : candidates) {
      Edge e = codec.unkey(ck);
      VertexSet w = cfg.record_witnesses ? least_witness(codec, e, k, present) : VertexSet{};
      rec.added.push_back({std::move(e), std::move(w)});
    }
    for (EdgeKey ck : candidates) g.add_key(ck);
    rounds.push_back(std::move(rec));
    frontier.swap(candidates);
  }
  return detail::finish_run(std::move(g), std::move(rounds), g0.edge_count(), truncated);
}

inline RunResult run(const Hypergraph& g0, const PercolationConfig& cfg) {
  return cfg.engine == EngineKind::naive ? run_naive(g0, cfg) : run_incremental(g0, cfg);
}

inline const char* to_string(EngineKind kind) noexcept {
  return kind == EngineKind::naive ? "naive" : "incremental";
}

}  // namespace hyperboot
