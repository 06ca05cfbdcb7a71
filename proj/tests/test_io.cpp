#include "listcrit/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace listcrit;

TEST_CASE("edge list round trip") {
  std::istringstream in("# a comment\n5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
  Graph g = read_edge_list(in);
  CHECK(g.order() == 5);
  CHECK(g.size() == 5);
  CHECK(g.adjacent(0, 4));
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  Graph h = read_edge_list(back);
  CHECK(h.edges() == g.edges());
}

TEST_CASE("edge list parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      read_edge_list(in);
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
    }
  };
  expect_error("2 1\n0 0\n", 2);                 // loop
  expect_error("3 2\n0 1\n0 1\n", 3);            // duplicate
  expect_error("3 1\n1 0\n", 2);                 // misordered endpoints
  expect_error("3 1\n0 5\n", 2);                 // out of range
  expect_error("# only comments\n", 2);          // missing header
  expect_error("2 2\n0 1\n", 3);                 // truncated
  expect_error("2 1\n0 1\nextra tokens\n", 3);   // trailing data
  expect_error("x y\n", 1);                      // bad header
}

TEST_CASE("list size file") {
  std::istringstream in("# f values\n0 2\n2 1\n1 3\n");
  auto f = read_list_sizes(in, 3);
  CHECK(f == std::vector<int>{2, 3, 1});
  std::istringstream missing("0 2\n");
  CHECK_THROWS_AS(read_list_sizes(missing, 2), ParseError);
  std::istringstream twice("0 2\n0 1\n");
  CHECK_THROWS_AS(read_list_sizes(twice, 1), ParseError);
  std::istringstream negative("0 -1\n");
  CHECK_THROWS_AS(read_list_sizes(negative, 1), ParseError);
}
