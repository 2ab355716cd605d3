#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <future>
#include <locale>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperboot/constructions.hpp"
#include "hyperboot/engine.hpp"
#include "hyperboot/errors.hpp"
#include "hyperboot/hypergraph.hpp"

namespace hyperboot {

struct Violation {
  int condition = 0;  // 1, 2 or 3
  std::uint64_t round = 0;
  std::string detail;
};

struct CivilisedReport {
  bool cond1_ok = false;
  bool cond2_ok = false;
  bool cond3_ok = false;
  std::optional<Violation> first_violation;
  std::uint64_t T = 0;

  bool ok() const noexcept { return cond1_ok && cond2_ok && cond3_ok; }
};

namespace detail {

inline std::string describe(const std::vector<Infection>& added) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < added.size(); ++i) os << (i ? " " : "") << added[i].edge;
  os << ']';
  return os.str();
}

}  // namespace detail

/// Checks that g0 with distinguished edge e0 is K_{r+1}^(r)-civilised:
///  (1) every round adds exactly one edge e_t and creates exactly one new copy H_t;
///  (2) the r-subsets of H_t among e_0, ..., e_T are exactly e_{t-1} and e_t;
///  (3) g0 - e0 infects nothing.
/// The earliest failing condition (lowest id, then earliest round) is
/// reported. Condition (2) is only evaluated on rounds that pass (1) and
/// fails outright when the distinguished sequence is not well defined.
inline CivilisedReport check_civilised(const Hypergraph& g0, const Edge& e0,
                                       EngineKind engine = EngineKind::incremental,
                                       StorageOptions storage = {Backend::automatic}) {
  if (!g0.contains(e0)) throw InvalidInput("e0 is not an edge of G0");
  const unsigned k = g0.uniformity() + 1;
  PercolationConfig cfg;
  cfg.k = k;
  cfg.engine = engine;
  cfg.record_witnesses = true;
  cfg.storage = storage;
  const RunResult res = run(g0, cfg);

  CivilisedReport rep;
  rep.T = res.M;
  rep.cond1_ok = true;
  rep.cond2_ok = true;
  std::optional<Violation> v1, v2, v3;

  const EdgeCodec& codec = g0.codec();
  bool sequence_defined = true;
  std::vector<EdgeKey> distinguished{codec.key(e0)};
  for (const RoundRecord& round : res.rounds) {
    if (round.added.size() != 1) {
      sequence_defined = false;
      break;
    }
    distinguished.push_back(codec.key(round.added[0].edge));
  }
  const std::set<EdgeKey> dset(distinguished.begin(), distinguished.end());

  Hypergraph g = g0.with_storage(storage);
  std::vector<VertexId> pos, face;
  for (const RoundRecord& round : res.rounds) {
    std::vector<Edge> added;
    for (const Infection& inf : round.added) added.push_back(inf.edge);
    const auto copies = new_copies(g, added, k);
    const bool one_edge = added.size() == 1;
    const bool one_copy = copies.size() == 1;
    if (!(one_edge && one_copy)) {
      rep.cond1_ok = false;
      if (!v1) {
        std::ostringstream os;
        os << "round adds " << added.size() << " edge(s) " << detail::describe(round.added) << " and creates "
           << copies.size() << " new copies";
        v1 = Violation{1, round.t, os.str()};
      }
    } else if (sequence_defined) {
      std::set<EdgeKey> hit;
      detail::for_each_face(codec, copies[0], pos, face, [&](EdgeKey fk) {
        if (dset.count(fk)) hit.insert(fk);
        return true;
      });
      const std::set<EdgeKey> want{distinguished[round.t - 1], distinguished[round.t]};
      if (hit != want) {
        rep.cond2_ok = false;
        if (!v2) {
          std::ostringstream os;
          os << "copy {";
          for (std::size_t i = 0; i < copies[0].size(); ++i) os << (i ? "," : "") << copies[0][i];
          os << "} meets " << hit.size() << " distinguished edges, expected e_" << (round.t - 1) << " and e_"
             << round.t;
          v2 = Violation{2, round.t, os.str()};
        }
      }
    }
    for (const Edge& e : added) g.add_edge(e);
  }
  if (!sequence_defined) {
    rep.cond2_ok = false;
    if (!v2) v2 = Violation{2, 0, "distinguished edge sequence undefined: some round adds more than one edge"};
  }

  // Condition (3): a single empty round is a fixpoint by monotonicity.
  Hypergraph without = g0.with_storage(storage);
  without.remove_edge(e0);
  const auto first = infect_round_naive(without, k, false);
  rep.cond3_ok = first.empty();
  if (!rep.cond3_ok) v3 = Violation{3, 1, "G0 - e0 infects " + detail::describe(first)};

  rep.first_violation = v1 ? v1 : (v2 ? v2 : v3);
  return rep;
}

struct SequenceMismatch {
  std::uint64_t round = 0;
  /// Absent when the simulation ran past the end of the expected sequence.
  std::optional<Edge> expected;
  std::vector<Edge> actual;
};

struct SequenceDiff {
  std::uint64_t matched_prefix_len = 0;
  std::uint64_t expected_len = 0;
  std::uint64_t simulated_rounds = 0;
  std::optional<SequenceMismatch> first_mismatch;

  bool full_match() const noexcept { return !first_mismatch; }
};

/// Compares the run of g0 (k = 4) round by round against `expected`:
/// round t must add exactly the edge expected[t-1].
inline SequenceDiff compare_sequence(const Hypergraph& g0, const std::vector<Edge>& expected,
                                     EngineKind engine = EngineKind::incremental) {
  PercolationConfig cfg;
  cfg.k = g0.uniformity() + 1;
  cfg.engine = engine;
  cfg.record_witnesses = false;
  const RunResult res = run(g0, cfg);

  SequenceDiff diff;
  diff.expected_len = expected.size();
  diff.simulated_rounds = res.M;
  const std::size_t horizon = std::max<std::size_t>(expected.size(), res.rounds.size());
  for (std::size_t t = 0; t < horizon; ++t) {
    const bool have_round = t < res.rounds.size();
    const bool have_expected = t < expected.size();
    const bool ok = have_round && have_expected && res.rounds[t].added.size() == 1 &&
                    res.rounds[t].added[0].edge == expected[t];
    if (ok) {
      ++diff.matched_prefix_len;
      continue;
    }
    SequenceMismatch mm;
    mm.round = t + 1;
    if (have_expected) mm.expected = expected[t];
    if (have_round)
      for (const Infection& inf : res.rounds[t].added) mm.actual.push_back(inf.edge);
    diff.first_mismatch = std::move(mm);
    break;
  }
  return diff;
}

inline std::vector<Edge> expected_edges(int n) {
  std::vector<Edge> out;
  for (const ExpectedStep& s : expected_sequence(n)) out.push_back(s.edge);
  return out;
}

/// Simulates slow3(n) and compares against expected_sequence(n).
inline SequenceDiff check_sequence(int n, EngineKind engine = EngineKind::incremental) {
  const LabeledConstruction c = slow3(n);
  return compare_sequence(c.g0, expected_edges(n), engine);
}

struct ScalingRow {
  int n = 0;
  std::uint64_t T = 0;
  unsigned vertices = 0;
  std::size_t edges_initial = 0;
  std::size_t edges_final = 0;
  double wall_ms = 0;
  std::optional<double> ratio_vs_half_n;
};

/// Simulates slow3(n) for each n (ascending, duplicates dropped) with up
/// to `jobs` concurrent runs, and records T(n)/T(n/2) where n/2 is present.
inline std::vector<ScalingRow> scaling_report(std::vector<int> n_values, EngineKind engine = EngineKind::incremental,
                                              unsigned jobs = 1) {
  std::sort(n_values.begin(), n_values.end());
  n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());
  for (int n : n_values) detail::require_slow3_param(n);

  auto measure = [engine](int n) {
    const auto start = std::chrono::steady_clock::now();
    const LabeledConstruction c = slow3(n);
    PercolationConfig cfg;
    cfg.k = 4;
    cfg.engine = engine;
    cfg.record_witnesses = false;
    const RunResult res = run(c.g0, cfg);
    ScalingRow row;
    row.n = n;
    row.T = res.M;
    row.vertices = c.g0.vertex_count();
    row.edges_initial = res.initial_edge_count;
    row.edges_final = res.final_edge_count;
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
  };

  std::vector<ScalingRow> rows(n_values.size());
  if (jobs == 0) jobs = 1;
  for (std::size_t begin = 0; begin < n_values.size(); begin += jobs) {
    std::vector<std::future<ScalingRow>> batch;
    for (std::size_t i = begin; i < std::min(n_values.size(), begin + jobs); ++i)
      batch.push_back(std::async(std::launch::async, measure, n_values[i]));
    for (std::size_t i = 0; i < batch.size(); ++i) rows[begin + i] = batch[i].get();
  }

  std::map<int, std::uint64_t> by_n;
  for (const ScalingRow& row : rows) by_n[row.n] = row.T;
  for (ScalingRow& row : rows) {
    if (row.n % 2 != 0) continue;
    const auto half = by_n.find(row.n / 2);
    if (half != by_n.end() && half->second > 0) row.ratio_vs_half_n = double(row.T) / double(half->second);
  }
  return rows;
}

inline void write_scaling_csv(std::ostream& out, const std::vector<ScalingRow>& rows) {
  out << "n,T,vertices,edges_initial,edges_final,wall_ms,ratio_vs_half_n\n";
  for (const ScalingRow& row : rows) {
    std::ostringstream ms, ratio;
    ms.imbue(std::locale::classic());
    ms.setf(std::ios::fixed);
    ms.precision(3);
    ms << row.wall_ms;
    if (row.ratio_vs_half_n) {
      ratio.imbue(std::locale::classic());
      ratio.setf(std::ios::fixed);
      ratio.precision(6);
      ratio << *row.ratio_vs_half_n;
    }
    out << row.n << ',' << row.T << ',' << row.vertices << ',' << row.edges_initial << ',' << row.edges_final << ','
        << ms.str() << ',' << ratio.str() << '\n';
  }
}

}  // namespace hyperboot
