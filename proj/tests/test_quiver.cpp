#include <doctest.h>

#include <vector>

#include "semiq/quiver.hpp"
#include "test_util.hpp"

using namespace semiq;
using testutil::fixture;

TEST_CASE("constructor validates labels and arrow endpoints") {
  CHECK_THROWS_AS(Quiver({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(Quiver(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Quiver(2, {{-1, 0}}), InputError);
  CHECK_THROWS_AS(Quiver(-1, {}), InputError);
  CHECK_NOTHROW(Quiver(0, {}));
  CHECK_NOTHROW(Quiver(1, {{0, 0}}));
}

TEST_CASE("index_of resolves labels") {
  Quiver q({"x", "y"}, {{0, 1}});
  CHECK(q.index_of("x") == 0);
  CHECK(q.index_of("y") == 1);
  CHECK_THROWS_AS(q.index_of("z"), InputError);
  CHECK(q.label(1) == "y");
}

TEST_CASE("linear_quiver is the equioriented path") {
  Quiver q = linear_quiver(4);
  CHECK(q.vertex_count() == 4);
  REQUIRE(q.arrow_count() == 3);
  CHECK(q.arrows()[0] == Arrow{0, 1});
  CHECK(q.arrows()[2] == Arrow{2, 3});
  CHECK(q.label(0) == "1");
  CHECK(q.label(3) == "4");
  CHECK_THROWS_AS(linear_quiver(0), InputError);
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(linear_quiver(5)));
  CHECK_FALSE(is_acyclic(Quiver(3, {{0, 1}, {1, 2}, {2, 0}})));
  CHECK_FALSE(is_acyclic(Quiver(1, {{0, 0}})));
  for (const char* name : testutil::kAllFixtures) {
    CAPTURE(name);
    CHECK(is_acyclic(fixture(name)));
  }
}

TEST_CASE("connectivity") {
  CHECK(is_connected(Quiver(1, {})));
  CHECK(is_connected(fixture("e6t")));
  CHECK_FALSE(is_connected(Quiver(2, {})));
  CHECK_FALSE(is_connected(Quiver(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("fixture quivers classify as the expected extended Dynkin graphs") {
  const std::pair<const char*, const char*> expected[] = {
      {"kronecker", "A1~"}, {"a2t", "A2~"}, {"a3t", "A3~"}, {"a4t", "A4~"}, {"d4t", "D4~"},
      {"d5t", "D5~"},       {"e6t", "E6~"}, {"e7t", "E7~"}, {"e8t", "E8~"},
  };
  for (const auto& [name, cls] : expected) {
    CAPTURE(name);
    Quiver q = fixture(name);
    GraphClass c = classify_graph(q);
    CHECK(is_extended_dynkin(c.tag));
    CHECK_FALSE(is_finite_dynkin(c.tag));
    CHECK(class_name(c, q.vertex_count()) == cls);
  }
}

TEST_CASE("finite Dynkin trees classify by branch lengths") {
  Quiver a5 = linear_quiver(5);
  CHECK(classify_graph(a5).tag == GraphTag::A);
  CHECK(class_name(classify_graph(a5), 5) == "A5");

  Quiver d4(4, {{0, 3}, {1, 3}, {2, 3}});
  CHECK(classify_graph(d4).tag == GraphTag::D);
  CHECK(class_name(classify_graph(d4), 4) == "D4");

  Quiver e6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 2}});
  CHECK(classify_graph(e6).tag == GraphTag::E6);

  Quiver e7(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 2}});
  CHECK(classify_graph(e7).tag == GraphTag::E7);

  Quiver e8(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {7, 2}});
  CHECK(classify_graph(e8).tag == GraphTag::E8);

  Quiver point(1, {});
  CHECK(classify_graph(point).tag == GraphTag::A);
  CHECK(class_name(classify_graph(point), 1) == "A1");
}

TEST_CASE("one-vertex loop and the double edge are extended type A") {
  GraphClass loop = classify_graph(Quiver(1, {{0, 0}}));
  CHECK(loop.tag == GraphTag::ATilde);
  CHECK(class_name(loop, 1) == "A0~");

  GraphClass kron = classify_graph(Quiver(2, {{0, 1}, {0, 1}}));
  CHECK(kron.tag == GraphTag::ATilde);
  CHECK(kron.canonical_order == std::vector<int>{0, 1});
}

TEST_CASE("graphs outside the Dynkin lists classify as other") {
  CHECK(classify_graph(Quiver(6, {{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}})).tag ==
        GraphTag::Other);  // five-valent star
  CHECK(classify_graph(Quiver(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})).tag ==
        GraphTag::Other);  // cycle with a chord
  CHECK(classify_graph(Quiver(1, {{0, 0}, {0, 0}})).tag == GraphTag::Other);
  CHECK(classify_graph(Quiver(3, {{0, 1}, {0, 1}, {1, 2}})).tag == GraphTag::Other);
  CHECK(classify_graph(Quiver(2, {{0, 1}, {0, 1}, {0, 1}})).tag == GraphTag::Other);
  CHECK(classify_graph(Quiver(4, {{0, 1}, {2, 3}})).tag == GraphTag::Other);  // disconnected
  // junction with branch lengths {2,2,3}: one vertex past extended E6
  CHECK(classify_graph(Quiver(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 2}, {6, 5}, {7, 3}})).tag ==
        GraphTag::Other);
  CHECK(class_name(GraphClass{}, 9) == "other");
}

TEST_CASE("canonical orders walk paths, cycles, and branches deterministically") {
  CHECK(classify_graph(linear_quiver(3)).canonical_order == std::vector<int>{0, 1, 2});
  // reversing arrows does not change the undirected walk
  CHECK(classify_graph(Quiver(3, {{1, 0}, {2, 1}})).canonical_order == std::vector<int>{0, 1, 2});

  // 4-cycle: lowest vertex, then its lower neighbour
  Quiver a3t = fixture("a3t");
  CHECK(classify_graph(a3t).canonical_order == std::vector<int>{0, 1, 2, 3});

  // one junction: centre first, branches by increasing length
  Quiver d4t = fixture("d4t");
  CHECK(classify_graph(d4t).canonical_order == std::vector<int>{4, 0, 1, 2, 3});

  // two junctions: first junction, its leaves, the link, second junction's leaves
  Quiver d5t = fixture("d5t");
  CHECK(classify_graph(d5t).canonical_order == std::vector<int>{4, 0, 1, 5, 2, 3});
}
