#include <gtest/gtest.h>

#include <sstream>

#include "streamcert/errors.hpp"
#include "streamcert/generators.hpp"
#include "streamcert/graph_io.hpp"

using namespace streamcert;

TEST(GraphIo, RoundTrip) {
  Digraph g = gen::random_digraph(12, 0.3, 5);
  std::stringstream buf;
  write_graph(buf, g);
  EXPECT_EQ(read_graph(buf), g);
}

TEST(GraphIo, RejectsBadLines) {
  std::istringstream dup("3 2\n0 1\n0 1\n");
  EXPECT_THROW(read_graph(dup), ParseError);
  std::istringstream loop("3 1\n1 1\n");
  EXPECT_THROW(read_graph(loop), ParseError);
  std::istringstream range("3 1\n0 3\n");
  EXPECT_THROW(read_graph(range), ParseError);
  std::istringstream count("3 2\n0 1\n");
  EXPECT_THROW(read_graph(count), ParseError);
}

TEST(GraphIo, ParseErrorCarriesLine) {
  std::istringstream in("3 2\n0 1\nx y\n");
  try {
    read_graph(in);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(StreamIo, RoundTrip) {
  ArcStream s = turnstile_stream(gen::random_digraph(8, 0.4, 2), 0.5, 2);
  std::stringstream buf;
  write_stream(buf, s);
  ArcStream back = read_stream(buf);
  ASSERT_EQ(back.updates.size(), s.updates.size());
  EXPECT_EQ(back.model, StreamModel::kTurnstile);
  EXPECT_EQ(final_multiplicity(back), final_multiplicity(s));
}
