#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperboot/engine.hpp"
#include "hyperboot/errors.hpp"

// JSON Lines trace, one object per round:
//   {"t": 3, "edges": [{"e": [0, 4, 7], "w": [0, 2, 4, 7]}]}
// "w" is omitted when witnesses were not recorded.

namespace hyperboot {

namespace detail {

inline void write_int_list(std::ostream& out, std::span<const VertexId> vs) {
  out << '[';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? ", " : "") << vs[i];
  out << ']';
}

}  // namespace detail

inline void write_trace_round(std::ostream& out, const RoundRecord& round, bool witnesses) {
  out << "{\"t\": " << round.t << ", \"edges\": [";
  for (std::size_t i = 0; i < round.added.size(); ++i) {
    const Infection& inf = round.added[i];
    out << (i ? ", " : "") << "{\"e\": ";
    detail::write_int_list(out, inf.edge.vertices());
    if (witnesses) {
      out << ", \"w\": ";
      detail::write_int_list(out, inf.witness);
    }
    out << '}';
  }
  out << "]}\n";
}

inline void write_trace(std::ostream& out, const RunResult& result, bool witnesses) {
  for (const RoundRecord& round : result.rounds) write_trace_round(out, round, witnesses);
}

/// Parses a trace back into round records. Edges are taken as written.
inline std::vector<RoundRecord> read_trace(std::istream& in) {
  std::vector<RoundRecord> rounds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      RoundRecord rec;
      rec.t = j.at("t").get<std::uint64_t>();
      for (const auto& item : j.at("edges")) {
        Infection inf;
        inf.edge = Edge::from_sorted(item.at("e").get<std::vector<VertexId>>());
        if (item.contains("w")) inf.witness = item.at("w").get<VertexSet>();
        rec.added.push_back(std::move(inf));
      }
      rounds.push_back(std::move(rec));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, std::string("bad trace line: ") + e.what());
    }
  }
  return rounds;
}

}  // namespace hyperboot
