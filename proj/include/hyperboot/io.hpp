#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperboot/errors.hpp"
#include "hyperboot/hypergraph.hpp"

// Text format:
//   # comment lines and blank lines are ignored
//   r n m
//   v_1 ... v_r      (m lines, 0-based, any order within a line)

namespace hyperboot {

namespace detail {

inline std::vector<std::uint64_t> parse_uints(std::string_view line, std::size_t line_no) {
  std::vector<std::uint64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    const std::string_view tok = line.substr(i, j - i);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(tok) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

inline bool is_ignorable(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string_view::npos || line[first] == '#';
}

}  // namespace detail

inline Hypergraph read_hypergraph(std::istream& in, StorageOptions storage = {}) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Hypergraph> g;
  std::uint64_t expected = 0;
  std::uint64_t seen = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_ignorable(line)) continue;
    const auto nums = detail::parse_uints(line, line_no);
    if (!g) {
      if (nums.size() != 3) throw ParseError(line_no, "header must be 'r n m'");
      const auto r = nums[0], n = nums[1];
      if (r < 2) throw ParseError(line_no, "uniformity r must be at least 2");
      if (n > std::numeric_limits<VertexId>::max()) throw ParseError(line_no, "vertex count too large");
      if (r > n) throw ParseError(line_no, "uniformity exceeds vertex count");
      try {
        g.emplace(unsigned(r), unsigned(n), storage);
      } catch (const ResourceError& e) {
        throw ParseError(line_no, e.what());
      }
      expected = nums[2];
      if (expected > g->edge_space()) throw ParseError(line_no, "edge count exceeds C(n, r)");
      continue;
    }
    if (seen == expected) throw ParseError(line_no, "more edge lines than declared");
    if (nums.size() != g->uniformity()) {
      throw ParseError(line_no, "edge line has " + std::to_string(nums.size()) + " vertices, expected " +
                                    std::to_string(g->uniformity()));
    }
    std::vector<VertexId> vs;
    vs.reserve(nums.size());
    for (auto v : nums) {
      if (v >= g->vertex_count()) throw ParseError(line_no, "vertex " + std::to_string(v) + " out of range");
      vs.push_back(VertexId(v));
    }
    Edge e;
    try {
      e = canonical_edge(std::move(vs), g->uniformity(), g->vertex_count());
    } catch (const InvalidEdge& err) {
      throw ParseError(line_no, err.what());
    }
    if (!g->add_edge(e)) throw ParseError(line_no, "duplicate edge");
    ++seen;
  }
  if (!g) throw ParseError(line_no, "missing header");
  if (seen != expected) {
    throw ParseError(line_no, "declared " + std::to_string(expected) + " edges, found " + std::to_string(seen));
  }
  return std::move(*g);
}

/// Writes header then edges in colex order, vertices ascending.
inline void write_hypergraph(std::ostream& out, const Hypergraph& g) {
  out << g.uniformity() << ' ' << g.vertex_count() << ' ' << g.edge_count() << '\n';
  std::vector<VertexId> v(g.uniformity());
  for (EdgeKey k : g.sorted_keys()) {
    g.codec().unkey(k, v);
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << '\n';
  }
}

inline Hypergraph read_hypergraph_file(const std::string& path, StorageOptions storage = {}) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "' for reading");
  return read_hypergraph(in, storage);
}

inline void write_hypergraph_file(const std::string& path, const Hypergraph& g) {
  std::ofstream out(path);
  if (!out) throw std::ios_base::failure("cannot open '" + path + "' for writing");
  write_hypergraph(out, g);
  if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

}  // namespace hyperboot
