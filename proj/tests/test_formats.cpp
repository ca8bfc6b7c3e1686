#include <doctest.h>

#include "cgt/formats.hpp"

using namespace cgt;

TEST_CASE("permutation group files") {
  auto g = parse_group_text("degree 3\ngen (1 2)\ngen (1 2 3)\n", "inline");
  REQUIRE(g.perm.has_value());
  CHECK(g.perm->order() == 6);

  auto with_order = parse_group_text("# comment\ndegree 3\norder 6\ngen (1 2)\ngen (2 3)\n",
                                     "inline");
  CHECK(with_order.perm->order() == 6);

  CHECK_THROWS_AS(parse_group_text("degree 3\norder 5\ngen (1 2)\n", "inline"), ParseError);
  CHECK_THROWS_AS(parse_group_text("gen (1 2)\n", "inline"), ParseError);
  CHECK_THROWS_AS(parse_group_text("degree 3\ngen (1 4)\n", "inline"), ParseError);
  CHECK_THROWS_AS(parse_group_text("degree 3\nfoo bar\n", "inline"), ParseError);

  // error messages carry the line
  try {
    parse_group_text("degree 3\ngen (1 4)\n", "inline");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("inline:2") != std::string::npos);
  }
}

TEST_CASE("matrix group files") {
  auto g = parse_group_text("field 3 1\ndim 2\ngen [[1,1],[0,1]]\ngen [[1,0],[1,1]]\n",
                            "inline");
  REQUIRE(g.mat.has_value());
  CHECK(g.mat->order() == 24);  // SL(2,3)

  auto ext = parse_group_text("field 2 2\ndim 1\ngen [[1+1*t]]\n", "inline");
  REQUIRE(ext.mat.has_value());
  CHECK(ext.mat->order() == 3);  // multiplicative order of a generator of GF(4)

  CHECK_THROWS_AS(parse_group_text("field 3 1\ndim 2\ngen [[1,1],[1,1]]\n", "inline"),
                  ParseError);  // singular
  CHECK_THROWS_AS(parse_group_text("field 3 1\ndim 2\ngen [[1,1]]\n", "inline"), ParseError);
  CHECK_THROWS_AS(
      parse_group_text("degree 3\nfield 3 1\ndim 2\ngen [[1,1],[0,1]]\n", "inline"),
      ParseError);
}

TEST_CASE("writer round trip") {
  auto g = parse_group_text("degree 4\ngen (1 2 3 4)\ngen (1 2)\n", "inline");
  std::string text = perm_group_to_text(*g.perm, true);
  auto back = parse_group_text(text, "roundtrip");
  CHECK(back.perm->order() == 24);
  CHECK(back.declared_order == 24);
}
