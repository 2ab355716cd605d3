#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperboot/edge.hpp"
#include "hyperboot/errors.hpp"
#include "hyperboot/hypergraph.hpp"

namespace hyperboot {

/// Semantic name of a vertex in the slow K_4^(3) construction with
/// parameter n:
///   top t_i (1..n), bottom b_j (1..n), bottom b_{-j} (1..n-1),
///   middle m_l (-(n-1)..2n), dummy d_{i,s} (i in 1..n-1, s in 1..3).
struct Label {
  enum class Kind { top, bottom_pos, bottom_neg, middle, dummy };

  Kind kind = Kind::top;
  int index = 0;
  int sub = 0;  // dummy slot s

  static Label t(int i) { return {Kind::top, i, 0}; }
  /// b_j for j > 0, b_{-|j|} for j < 0.
  static Label b(int j) { return j > 0 ? Label{Kind::bottom_pos, j, 0} : Label{Kind::bottom_neg, -j, 0}; }
  static Label m(int l) { return {Kind::middle, l, 0}; }
  static Label d(int i, int s) { return {Kind::dummy, i, s}; }

  /// Rendered as t1, b3, b-3, m-2, d2,1.
  std::string str() const {
    switch (kind) {
      case Kind::top: return "t" + std::to_string(index);
      case Kind::bottom_pos: return "b" + std::to_string(index);
      case Kind::bottom_neg: return "b-" + std::to_string(index);
      case Kind::middle: return "m" + std::to_string(index);
      case Kind::dummy: return "d" + std::to_string(index) + "," + std::to_string(sub);
    }
    return {};
  }

  friend bool operator==(const Label&, const Label&) = default;
};

inline unsigned slow3_vertex_count(int n) { return unsigned(9 * n - 4); }

/// Fixed label map: t_i -> i-1, b_j -> n+j-1, b_{-j} -> 2n+j-1,
/// m_l -> l+4n-2, d_{i,s} -> 6n-1+3(i-1)+(s-1).
inline VertexId slow3_index(const Label& l, int n) {
  auto require = [&](bool ok) {
    if (!ok) throw std::out_of_range("label " + l.str() + " outside construction with n=" + std::to_string(n));
  };
  switch (l.kind) {
    case Label::Kind::top:
      require(l.index >= 1 && l.index <= n);
      return VertexId(l.index - 1);
    case Label::Kind::bottom_pos:
      require(l.index >= 1 && l.index <= n);
      return VertexId(n + l.index - 1);
    case Label::Kind::bottom_neg:
      require(l.index >= 1 && l.index <= n - 1);
      return VertexId(2 * n + l.index - 1);
    case Label::Kind::middle:
      require(l.index >= -(n - 1) && l.index <= 2 * n);
      return VertexId(l.index + 4 * n - 2);
    case Label::Kind::dummy:
      require(l.index >= 1 && l.index <= n - 1 && l.sub >= 1 && l.sub <= 3);
      return VertexId(6 * n - 1 + 3 * (l.index - 1) + (l.sub - 1));
  }
  require(false);
  return 0;
}

inline Label slow3_label(VertexId v, int n) {
  const int x = int(v);
  if (x < n) return Label::t(x + 1);
  if (x < 2 * n) return Label::b(x - n + 1);
  if (x < 3 * n - 1) return Label::b(-(x - 2 * n + 1));
  if (x < 6 * n - 1) return Label::m(x - 4 * n + 2);
  if (x < 9 * n - 4) return Label::d((x - (6 * n - 1)) / 3 + 1, (x - (6 * n - 1)) % 3 + 1);
  throw std::out_of_range("vertex " + std::to_string(v) + " outside construction with n=" + std::to_string(n));
}

struct LabeledConstruction {
  Hypergraph g0;
  /// labels[v] is the label of vertex v.
  std::vector<Label> labels;
  Edge e0;
  int n_param = 0;

  VertexId vertex(const Label& l) const { return slow3_index(l, n_param); }

  Edge edge(std::initializer_list<Label> ls) const {
    std::vector<VertexId> vs;
    for (const Label& l : ls) vs.push_back(vertex(l));
    return canonical_edge(std::move(vs), 3, g0.vertex_count());
  }
};

namespace detail {

inline void require_slow3_param(int n) {
  if (n < 2) throw UnsupportedParameter("n must be >= 2 (got " + std::to_string(n) + ")");
}

inline Edge triple(int n, const Label& a, const Label& b, const Label& c) {
  return canonical_edge({slow3_index(a, n), slow3_index(b, n), slow3_index(c, n)}, 3, slow3_vertex_count(n));
}

}  // namespace detail

/// Initial infection on 9n-4 vertices whose K_4^(3) process adds exactly
/// one edge per round for 4n^3 - 2n^2 + 6n - 6 rounds.
inline LabeledConstruction slow3(int n, StorageOptions storage = {}) {
  detail::require_slow3_param(n);
  using L = Label;
  Hypergraph g(3, slow3_vertex_count(n), storage);
  auto add = [&](const L& a, const L& b, const L& c) {
    if (!g.add_edge(detail::triple(n, a, b, c))) {
      throw std::logic_error("slow3: edge families overlap at " + a.str() + b.str() + c.str());
    }
  };

  // starting edge e0
  add(L::t(1), L::m(0), L::m(1));
  // top beachball halves
  for (int i = 1; i <= n; ++i)
    for (int l = 1; l <= n - 1; ++l) add(L::t(i), L::m(l), L::m(l + 1));
  // bottom beachball halves
  for (int j = 1; j <= n; ++j)
    for (int l = -(j - 1); l <= n + j - 1; ++l) add(L::b(j), L::m(l), L::m(l + 1));
  for (int j = 1; j <= n - 1; ++j)
    for (int l = -j; l <= n + j - 1; ++l) add(L::b(-j), L::m(l), L::m(l + 1));
  // bottom-swap gadgets
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      add(L::t(i), L::b(j), L::m(-(j - 1)));
      add(L::t(i), L::b(j), L::m(n + j));
    }
    for (int j = 1; j <= n - 1; ++j) {
      add(L::t(i), L::b(-j), L::m(n + j));
      add(L::t(i), L::b(-j), L::m(-j));
    }
  }
  // top-swap gadget through d_{i,1}, d_{i,2}, d_{i,3}
  for (int i = 1; i <= n - 1; ++i) {
    const L t = L::t(i), tn = L::t(i + 1), d1 = L::d(i, 1), d2 = L::d(i, 2), d3 = L::d(i, 3);
    const L a = L::m(2 * n - 1), b = L::m(2 * n), m0 = L::m(0), m1 = L::m(1);
    add(t, a, d1);
    add(t, b, d1);
    add(a, b, d2);
    add(a, d1, d2);
    add(b, d1, d3);
    add(b, d2, d3);
    add(d1, d2, tn);
    add(d1, d3, tn);
    add(d2, d3, m0);
    add(d2, tn, m0);
    add(d3, tn, m1);
    add(d3, m0, m1);
  }

  std::vector<Label> labels;
  labels.reserve(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) labels.push_back(slow3_label(v, n));
  Edge e0 = detail::triple(n, L::t(1), L::m(0), L::m(1));
  return LabeledConstruction{std::move(g), std::move(labels), std::move(e0), n};
}

inline void write_labels(std::ostream& out, const LabeledConstruction& c) {
  for (std::size_t v = 0; v < c.labels.size(); ++v) out << v << '\t' << c.labels[v].str() << '\n';
}

/// One predicted infection. `stage` is the signed bottom index j of the
/// stage, or kTopSwapStage for the dummy chain between phases.
struct ExpectedStep {
  static constexpr int kTopSwapStage = 0;

  Edge edge;
  int phase = 0;
  int stage = 0;
  int position = 0;
};

/// The predicted infection order A_1, ..., A_n for slow3(n).
///
/// Phase i with top t_i walks stages 1, -1, 2, -2, ..., n-1, -(n-1), n.
/// Stage j > 0 infects t_i b_j m_l for l = -(j-2) .. n+j-1 and then the
/// path extension t_i m_{n+j-1} m_{n+j}; stage -j infects t_i b_{-j} m_l
/// for l = n+j-1 down to -(j-1), then t_i m_{-(j-1)} m_{-j}. Phases i < n
/// end with the six-edge chain through d_{i,1..3} that reaches t_{i+1} m_0 m_1.
inline std::vector<ExpectedStep> expected_sequence(int n) {
  detail::require_slow3_param(n);
  using L = Label;
  std::vector<ExpectedStep> seq;
  int phase = 0, stage = 0, position = 0;
  auto push = [&](const L& a, const L& b, const L& c) {
    seq.push_back({detail::triple(n, a, b, c), phase, stage, position++});
  };

  for (int i = 1; i <= n; ++i) {
    phase = i;
    const L t = L::t(i);
    for (int j = 1; j <= n; ++j) {
      stage = j;
      position = 0;
      for (int l = -(j - 2); l <= n + j - 1; ++l) push(t, L::b(j), L::m(l));
      push(t, L::m(n + j - 1), L::m(n + j));
      if (j == n) break;
      stage = -j;
      position = 0;
      for (int l = n + j - 1; l >= -(j - 1); --l) push(t, L::b(-j), L::m(l));
      push(t, L::m(-(j - 1)), L::m(-j));
    }
    if (i == n) break;
    stage = ExpectedStep::kTopSwapStage;
    position = 0;
    const L d1 = L::d(i, 1), d2 = L::d(i, 2), d3 = L::d(i, 3), tn = L::t(i + 1);
    push(L::m(2 * n - 1), L::m(2 * n), d1);
    push(L::m(2 * n), d1, d2);
    push(d1, d2, d3);
    push(d2, d3, tn);
    push(d3, tn, L::m(0));
    push(tn, L::m(0), L::m(1));
  }
  return seq;
}

/// Length of expected_sequence(n): n(4n^2 - 2n) bottom-stage steps plus
/// six per top swap.
inline std::uint64_t closed_form_T(std::uint64_t n) { return 4 * n * n * n - 2 * n * n + 6 * n - 6; }

/// Beachball: edges {top, m_a, m_{a+1}} and {bottom, m_a, m_{a+1}} for
/// consecutive middles. Vertex count defaults to the largest vertex + 1.
inline Hypergraph beachball(VertexId top, VertexId bottom, const std::vector<VertexId>& middles,
                            std::optional<unsigned> vertex_count = std::nullopt) {
  if (middles.size() < 2) throw UnsupportedParameter("beachball needs at least two middle vertices");
  std::vector<VertexId> all = middles;
  all.push_back(top);
  all.push_back(bottom);
  std::vector<VertexId> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidEdge("beachball vertices must be distinct");
  }
  const unsigned n = vertex_count.value_or(sorted.back() + 1);
  Hypergraph g(3, n);
  for (std::size_t a = 0; a + 1 < middles.size(); ++a) {
    g.add_edge(canonical_edge({top, middles[a], middles[a + 1]}, 3, n));
    g.add_edge(canonical_edge({bottom, middles[a], middles[a + 1]}, 3, n));
  }
  return g;
}

/// Graph path 0 - 1 - ... - (n-1).
inline Hypergraph path_graph(unsigned n) {
  if (n < 2) throw UnsupportedParameter("path needs n >= 2");
  Hypergraph g(2, n);
  for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(Edge::from_sorted({i, i + 1}));
  return g;
}

/// K_n with the edges inside {0, ..., n-k+1} (a clique on n-k+2 vertices) removed.
inline Hypergraph complete_minus_clique(unsigned n, unsigned k) {
  if (k < 2 || k > n) {
    throw UnsupportedParameter("complete-minus-clique needs 2 <= k <= n (got n=" + std::to_string(n) +
                               ", k=" + std::to_string(k) + ")");
  }
  const VertexId clique = n - k + 2;
  Hypergraph g(2, n);
  for (VertexId b = 1; b < n; ++b)
    for (VertexId a = 0; a < b; ++a)
      if (b >= clique) g.add_edge(Edge::from_sorted({a, b}));
  return g;
}

/// Each r-subset of [0, n) present independently with probability p,
/// decided in colex order from a 64-bit Mersenne Twister seeded with `seed`.
inline Hypergraph random_hypergraph(unsigned r, unsigned n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw UnsupportedParameter("edge probability must lie in [0, 1]");
  Hypergraph g(r, n);
  std::mt19937_64 rng(seed);
  for (EdgeKey key = 0; key < g.edge_space(); ++key) {
    const double u = double(rng() >> 11) * 0x1.0p-53;
    if (u < p) g.add_key(key);
  }
  return g;
}

}  // namespace hyperboot
