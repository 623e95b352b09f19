#include <doctest.h>

#include "htc/cover.hpp"
#include "htc/error.hpp"
#include "htc/homology.hpp"
#include "support/corpus.hpp"

using namespace htc;

namespace {

Cover one_part(const SimplicialComplex& x) { return Cover(x, {"U0"}, {x}); }

// Two arcs of the hexagon overlapping in the edges v2v3 and v5v0.
Cover two_arcs() {
  const auto hex = corpus::cycle(6);
  return Cover::from_named_parts(
      hex, {{"A", build_complex({{"v5", "v0"}, {"v0", "v1"}, {"v1", "v2"}, {"v2", "v3"}})},
            {"B", build_complex({{"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}, {"v5", "v0"}})}});
}

}  // namespace

TEST_CASE("star cover") {
  CHECK(star_cover(corpus::point()).size() == 1);
  const auto circle = star_cover(corpus::hollow_triangle());
  REQUIRE(circle.size() == 3);
  CHECK(circle.part(0) == build_complex({{"a", "b"}, {"a", "c"}}));
  const auto tri = star_cover(corpus::full_triangle());
  for (int i = 0; i < 3; ++i) CHECK(tri.part(i) == corpus::full_triangle());
}

TEST_CASE("cech nerve") {
  SUBCASE("one part") {
    const auto n = cech_nerve(one_part(corpus::torus()));
    CHECK(n.complex.vertex_count() == 1);
    CHECK(n.complex.dimension() == 0);
  }
  SUBCASE("star cover of the hollow triangle is a hollow triangle") {
    const auto n = cech_nerve(star_cover(corpus::hollow_triangle()));
    CHECK(n.complex == corpus::hollow_triangle());
    CHECK_FALSE(n.has_cell({0, 1, 2}));
    // Pairwise intersections are single open edges.
    CHECK(n.cells.at({0, 1}).openSimplices.size() == 1);
  }
  SUBCASE("star cover of the full triangle is a full triangle") {
    const auto n = cech_nerve(star_cover(corpus::full_triangle()));
    CHECK(n.complex == corpus::full_triangle());
    CHECK(n.has_cell({0, 1, 2}));
  }
  SUBCASE("parts with empty interior are not nerve vertices") {
    const auto e = corpus::edge();
    const Cover u(e, {"A", "B", "C"}, {e, build_complex({{"a"}}), e});
    const auto n = cech_nerve(u);
    CHECK(n.complex.vertex_count() == 2);
    CHECK(n.indexVertex[1] == -1);
  }
  SUBCASE("invalid parts are rejected") {
    CHECK_THROWS_AS(Cover(corpus::edge(), {"A"}, {corpus::full_triangle()}), InputError);
    CHECK_THROWS_AS(Cover(corpus::edge(), {"A", "A"}, {corpus::edge(), corpus::edge()}), InputError);
  }
}

TEST_CASE("star cover nerves reproduce the homology of the base") {
  for (const auto& [name, x] : corpus::complexes()) {
    CAPTURE(name);
    const auto u = star_cover(x);
    const auto n = cech_nerve(u);
    CHECK(n.complex.vertex_count() == x.vertex_count());
    const int deg = std::max(x.dimension(), 0);
    CHECK(homology(n.complex, deg) == homology(x, deg));
    CHECK(is_good_cover(u, n).good);
    CHECK(carrier_check(u));
    const auto rho = section_map(u, n);
    CHECK(induces_homology_isomorphism(rho));
    const auto pi = forget_map(u, n);
    CHECK(induces_homology_isomorphism(pi));
  }
}

TEST_CASE("good cover checks") {
  CHECK(is_good_cover(star_cover(corpus::hollow_triangle())).good);
  const auto report = is_good_cover(two_arcs());
  CHECK_FALSE(report.good);
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].tuple == IndexTuple{0, 1});
  CHECK(report.failures[0].reason.find("2 components") != std::string::npos);
  CHECK(is_good_cover(one_part(corpus::cone_with_tail())).good);
  // One part over a circle is connected but not acyclic.
  CHECK_FALSE(is_good_cover(one_part(corpus::hollow_triangle())).good);
}

TEST_CASE("carrier condition") {
  CHECK(carrier_check(one_part(corpus::projective_plane())));
  const auto e = corpus::edge();
  const Cover bad(e, {"A", "B"}, {build_complex({{"a"}}), build_complex({{"b"}})});
  CHECK_FALSE(carrier_check(bad));
  CHECK(uncovered_simplices(bad).size() == 1);
  CHECK_THROWS_AS(section_map(bad), ValidationError);
  CHECK(uncovered_simplices(star_cover(corpus::torus())).empty());
}

TEST_CASE("section map") {
  SUBCASE("one part gives a constant map") {
    const auto rho = section_map(one_part(corpus::full_triangle()));
    for (int v : rho.vertex_map()) CHECK(v == 0);
  }
  SUBCASE("hollow triangle") {
    const auto rho = section_map(star_cover(corpus::hollow_triangle()));
    CHECK(homology(rho.source()).betti() == std::vector<Integer>{1, 1});
    CHECK(induces_homology_isomorphism(rho));
  }
  SUBCASE("boundary of the tetrahedron") {
    const auto rho = section_map(star_cover(corpus::tetrahedron_boundary()));
    CHECK(induces_homology_isomorphism(rho));
  }
  SUBCASE("non-star good covers") {
    // Three arcs of the hexagon, each overlapping the next in one edge.
    const auto hex = corpus::cycle(6);
    const auto u = Cover::from_named_parts(hex, {{"A", build_complex({{"v5", "v0"}, {"v0", "v1"}, {"v1", "v2"}})},
                                                 {"B", build_complex({{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}})},
                                                 {"C", build_complex({{"v3", "v4"}, {"v4", "v5"}, {"v5", "v0"}})}});
    const auto n = cech_nerve(u);
    CHECK(n.complex == build_complex({{"A", "B"}, {"B", "C"}, {"A", "C"}}));
    CHECK(is_good_cover(u, n).good);
    CHECK(induces_homology_isomorphism(section_map(u, n)));
  }
}

TEST_CASE("forget map is for star covers only") {
  const auto u = one_part(corpus::full_triangle());
  CHECK_THROWS_AS(forget_map(u, cech_nerve(u)), InputError);
}

TEST_CASE("disjoint union of covers") {
  const auto pt = corpus::full_triangle();
  const auto one = one_part(pt);
  const auto uu = disjoint_union_cover(one, one);
  CHECK(uu.size() == 2);
  CHECK(cech_nerve(uu).complex.count(1) == 1);
  CHECK(cech_nerve(uu).complex.count(0) == 2);

  const auto mixed = disjoint_union_cover(star_cover(pt), one);
  CHECK(mixed.size() == 4);
  CHECK(mixed.index(0) == "1:a");
  CHECK(mixed.index(3) == "2:U0");
  const auto n = cech_nerve(mixed);
  CHECK(n.complex.dimension() == 3);
  CHECK(n.complex.count(3) == 1);

  CHECK_THROWS_AS(disjoint_union_cover(one, one_part(corpus::edge())), InputError);

  // Swapping the two sides gives an isomorphic nerve.
  const auto swapped = cech_nerve(disjoint_union_cover(one, star_cover(pt)));
  for (int d = 0; d <= 3; ++d) CHECK(swapped.complex.count(d) == n.complex.count(d));

  for (const auto& [name, x] : corpus::complexes()) {
    const auto s = star_cover(x);
    CHECK(disjoint_union_cover(s, one_part(x)).size() == s.size() + 1);
  }
}

TEST_CASE("closed intersections") {
  const auto u = star_cover(corpus::hollow_triangle());
  const auto ab = closed_intersection(u, {0, 1});
  // Closed stars of a and b share the edge ab and the vertex c.
  CHECK(ab.count(1) == 1);
  CHECK(ab.count(0) == 3);
  CHECK(closed_intersection(u, {}) == corpus::hollow_triangle());
}
