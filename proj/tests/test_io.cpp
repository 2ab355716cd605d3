#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "hyperboot/constructions.hpp"
#include "hyperboot/io.hpp"
#include "seed.hpp"

using namespace hyperboot;

namespace {

Hypergraph parse(const std::string& text) {
  std::istringstream in(text);
  return read_hypergraph(in);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return 0;
}

}  // namespace

TEST(TextFormat, ReadsCommentsAndCanonicalizes) {
  const Hypergraph g = parse("# a comment\n\n3 5 2\n4 0 2\n# inside\n1 3 2\n");
  EXPECT_EQ(g.uniformity(), 3u);
  EXPECT_EQ(g.vertex_count(), 5u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.contains(Edge::from_sorted({0, 2, 4})));
  EXPECT_TRUE(g.contains(Edge::from_sorted({1, 2, 3})));
}

TEST(TextFormat, WritesCanonicalForm) {
  const Hypergraph g = parse("3 5 2\n4 0 2\n1 3 2\n");
  std::ostringstream out;
  write_hypergraph(out, g);
  EXPECT_EQ(out.str(), "3 5 2\n1 2 3\n0 2 4\n");
}

TEST(TextFormat, EmptyEdgeSet) {
  const Hypergraph g = parse("2 4 0\n");
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(TextFormat, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line(""), 0u);
  EXPECT_EQ(parse_error_line("# only comments\n"), 1u);
  EXPECT_EQ(parse_error_line("3 5\n"), 1u);
  EXPECT_EQ(parse_error_line("3 5 1 7\n"), 1u);
  EXPECT_EQ(parse_error_line("1 5 0\n"), 1u);
  EXPECT_EQ(parse_error_line("3 x 1\n0 1 2\n"), 1u);
  EXPECT_EQ(parse_error_line("3 4 5\n"), 1u);
  EXPECT_EQ(parse_error_line("3 5 2\n0 1 2\n0 1\n"), 3u);
  EXPECT_EQ(parse_error_line("3 5 1\n0 1 -2\n"), 2u);
  EXPECT_EQ(parse_error_line("3 5 1\n0 1 5\n"), 2u);
  EXPECT_EQ(parse_error_line("3 5 1\n0 1 1\n"), 2u);
  EXPECT_EQ(parse_error_line("3 5 2\n0 1 2\n2 1 0\n"), 3u);
  EXPECT_EQ(parse_error_line("3 5 1\n0 1 2\n0 1 3\n"), 3u);
  EXPECT_EQ(parse_error_line("3 5 3\n0 1 2\n0 1 3\n"), 3u);
  EXPECT_EQ(parse_error_line("3 5 1\n0 1 2.5\n"), 2u);
}

TEST(TextFormat, RoundTripPreservesEdgeSet) {
  const std::uint64_t base = hyperboot::testing::corpus_seed();
  for (std::uint64_t i = 0; i < 30; ++i) {
    const std::uint64_t seed = base + i;
    const unsigned r = 2 + i % 3;
    const Hypergraph g = random_hypergraph(r, 9, 0.1 + 0.03 * double(i), seed);
    std::stringstream buf;
    write_hypergraph(buf, g);
    const Hypergraph back = read_hypergraph(buf);
    EXPECT_EQ(back, g) << "seed " << seed;
    std::ostringstream again;
    write_hypergraph(again, back);
    EXPECT_EQ(again.str(), buf.str());
  }
}
