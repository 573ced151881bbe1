#include "brooks/formats.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "brooks/instances.hpp"
#include "support/brute_force.hpp"

namespace brooks {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

std::size_t error_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(ParseGraph, Triangle) {
  const Graph g = parse_graph("c a triangle\np edge 3 3\ne 1 2\ne 2 3\n\ne 3 1\n");
  EXPECT_EQ(g, gen_named(NamedKind::complete, 3));
}

TEST(ParseGraph, ColKeywordAndCountIgnored) {
  const Graph g = parse_graph("p col 4 99\ne 1 2\n");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("e 1 2\np edge 2 1\n"), 1u);
  EXPECT_EQ(error_line("c only a comment\n"), 1u);
  EXPECT_EQ(error_line("p edge 3 1\nc\ne 2 2\n"), 3u);
  EXPECT_EQ(error_line("p edge 3 1\ne 1 4\n"), 2u);
  EXPECT_EQ(error_line("p edge 3 1\np edge 3 1\n"), 2u);
  EXPECT_EQ(error_line("p edge 3 1\ne 1 x\n"), 2u);
  EXPECT_EQ(error_line("p edge 3 1\ne 1 0\n"), 2u);
  EXPECT_EQ(error_line("p edge 3 1\nq 1 2\n"), 2u);
  try {
    parse_graph("e 1 2\n");
  } catch (const ParseError& e) {
    EXPECT_THAT(e.what(), HasSubstr("line 1"));
    EXPECT_THAT(e.what(), HasSubstr("before the 'p edge' line"));
  }
}

TEST(EmitGraph, Canonical) {
  EXPECT_EQ(emit_graph(gen_named(NamedKind::path, 3)), "p edge 3 2\ne 1 2\ne 2 3\n");
}

TEST(Lists, ParseAndEmit) {
  const ListAssignment l = parse_lists("c lists\n2 3 1\n1 5\n", 2);
  EXPECT_THAT(testing::as_vector(l[0]), ElementsAre(5));
  EXPECT_THAT(testing::as_vector(l[1]), ElementsAre(1, 3));
  EXPECT_EQ(emit_lists(l), "1 5\n2 1 3\n");
}

TEST(Lists, Errors) {
  EXPECT_THROW(parse_lists("1 1\n1 2\n", 1), ParseError);
  EXPECT_THROW(parse_lists("1\n", 1), ParseError);
  EXPECT_THROW(parse_lists("1 1\n", 2), ParseError);
  EXPECT_THROW(parse_lists("3 1\n", 2), ParseError);
  EXPECT_THROW(parse_lists("1 -4\n", 1), ParseError);
}

TEST(Coloring, ParseAndEmit) {
  const PartialColoring f = parse_coloring("3 7\n1 2\n", 3);
  EXPECT_EQ(f[0], 2u);
  EXPECT_FALSE(f[1].has_value());
  EXPECT_EQ(f[2], 7u);
  EXPECT_EQ(emit_coloring(f), "1 2\n3 7\n");
  EXPECT_EQ(emit_coloring(Coloring{4, 5}), "1 4\n2 5\n");
  EXPECT_THROW(parse_coloring("1 2\n1 3\n", 1), ParseError);
  EXPECT_THROW(parse_coloring("1 2 3\n", 1), ParseError);
}

TEST(FormatsProperties, RoundTrip) {
  for (Seed s = 0; s < 50; ++s) {
    const Graph g = gen_random_connected(1 + s, 2 + s % 5, s);
    EXPECT_EQ(parse_graph(emit_graph(g)), g);
    const ListAssignment lists = gen_lists(g, 3, 10, s);
    EXPECT_EQ(parse_lists(emit_lists(lists), g.size()), lists);
    Coloring f(g.size());
    for (std::size_t v = 0; v < f.size(); ++v) f[v] = v * 31 + s;
    const PartialColoring back = parse_coloring(emit_coloring(f), g.size());
    for (std::size_t v = 0; v < f.size(); ++v) EXPECT_EQ(back[v], f[v]);
  }
}

}  // namespace
}  // namespace brooks
