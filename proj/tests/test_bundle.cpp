#include <doctest.h>

#include <random>

#include "htc/bundle.hpp"
#include "htc/homology.hpp"
#include "support/corpus.hpp"
#include "support/gauge.hpp"
#include "support/random.hpp"

using namespace htc;

namespace {

std::shared_ptr<const CoverAnalysis> stars(const SimplicialComplex& x) { return analyze_cover(star_cover(x)); }

Cocycle1 circle_cocycle() {
  return validate_cocycle(stars(corpus::hollow_triangle()), cyclic_group(2), {{{0, 1}, 0}, {{1, 2}, 0}, {{0, 2}, 1}});
}

struct Instance {
  std::string name;
  Cocycle1 cocycle;
  GroupAction action;
};

std::vector<Instance> instances(std::mt19937& rng) {
  std::vector<Instance> out;
  for (const auto& [name, x] : corpus::connected_complexes()) {
    const auto a = stars(x);
    for (const auto& [gname, g] : corpus::groups()) {
      out.push_back({name + "/" + gname, testing::random_cocycle(a, g, rng), regular_action(g)});
    }
    const auto s3 = symmetric_group(3);
    out.push_back({name + "/S3 on 3 points", testing::random_cocycle(a, s3, rng), corpus::s3_on_three_points()});
  }
  return out;
}

}  // namespace

TEST_CASE("bundle invariants are enforced") {
  const auto e = corpus::edge();
  const auto total = build_complex({{"x", "y"}});
  const auto pt = build_complex({{"p"}});
  // Projection collapsing an edge.
  CHECK_THROWS_AS(Bundle(SimplicialMap(total, pt, {0, 0}), trivial_action(trivial_group(), 2)), ValidationError);
  // Wrong fiber count.
  CHECK_THROWS_AS(Bundle(identity_map(e), trivial_action(trivial_group(), 2)), ValidationError);
  CHECK_NOTHROW(Bundle(identity_map(e), trivial_action(trivial_group(), 1)));
}

TEST_CASE("total space examples") {
  const auto z2 = cyclic_group(2);
  SUBCASE("trivial cocycle gives copies of the nerve") {
    const auto b = total_space(trivial_cocycle(stars(corpus::hollow_triangle()), z2), regular_action(z2));
    CHECK(connected_components(b.total()).size() == 2);
    CHECK(homology(b.total()).betti() == std::vector<Integer>{2, 2});
  }
  SUBCASE("nontrivial circle cocycle gives the connected double cover") {
    const auto b = total_space(circle_cocycle(), regular_action(z2));
    CHECK(euler_characteristic(b.total()) == 0);
    CHECK(homology(b.total()).betti() == std::vector<Integer>{1, 1});
    CHECK(b.total().vertex_count() == 6);
  }
  SUBCASE("group mismatch") {
    CHECK_THROWS_AS(total_space(circle_cocycle(), regular_action(cyclic_group(3))), InputError);
  }
}

TEST_CASE("covering invariants over random cocycles") {
  std::mt19937 rng(41);
  for (int round = 0; round < 2; ++round) {
    for (const auto& [name, c, action] : instances(rng)) {
      CAPTURE(name);
      const auto b = total_space(c, action);
      CHECK(euler_characteristic(b.total()) == action.fiber_size() * euler_characteristic(c.nerve().complex));
      CHECK(connected_components(b.total()).size() == orbits(action, holonomy(c).images).size());
      for (int v = 0; v < b.base().vertex_count(); ++v) CHECK(b.fiber_over(v).size() == static_cast<std::size_t>(action.fiber_size()));
    }
  }
}

TEST_CASE("skeletal construction agrees with the direct quotient") {
  std::mt19937 rng(43);
  for (const auto& [name, c, action] : instances(rng)) {
    CAPTURE(name);
    const auto direct = total_space(c, action);
    const auto skeletal = skeletal_construction(c, action);
    CHECK(euler_characteristic(skeletal.total()) == action.fiber_size() * euler_characteristic(c.nerve().complex));
    CHECK(find_isomorphism(skeletal, direct).has_value());
  }
  const auto pt = corpus::point();
  const auto b = skeletal_construction(trivial_cocycle(stars(pt), cyclic_group(3)), regular_action(cyclic_group(3)));
  CHECK(find_isomorphism(b, product_bundle(b.base(), regular_action(cyclic_group(3)))).has_value());
}

TEST_CASE("isomorphism search separates non-isomorphic bundles") {
  const auto z2 = cyclic_group(2);
  const auto twisted = total_space(circle_cocycle(), regular_action(z2));
  const auto product = product_bundle(twisted.base(), regular_action(z2));
  CHECK_FALSE(find_isomorphism(twisted, product).has_value());
  const auto iso = find_isomorphism(twisted, twisted);
  REQUIRE(iso.has_value());
  CHECK_THROWS_AS(find_isomorphism(twisted, product_bundle(corpus::edge(), regular_action(z2))), InputError);
}

TEST_CASE("pullback") {
  const auto z2 = cyclic_group(2);
  const auto c = circle_cocycle();
  const auto b = total_space(c, regular_action(z2));
  SUBCASE("identity") { CHECK(find_isomorphism(pullback(b, identity_map(b.base())), b).has_value()); }
  SUBCASE("constant map") {
    const auto x = corpus::torus();
    const SimplicialMap f(x, b.base(), std::vector<int>(7, 1));
    const auto p = pullback(b, f);
    CHECK(find_isomorphism(p, product_bundle(x, regular_action(z2))).has_value());
  }
  SUBCASE("along the section map") {
    const auto rho = section_map(c.cover(), c.nerve());
    const auto p = pullback(b, rho);
    CHECK(homology(p.total()).betti() == std::vector<Integer>{1, 1});
    CHECK(euler_characteristic(p.total()) == 2 * euler_characteristic(rho.source()));
  }
  SUBCASE("euler characteristic over random instances") {
    std::mt19937 rng(47);
    for (const auto& [name, cc, action] : instances(rng)) {
      CAPTURE(name);
      const auto bb = total_space(cc, action);
      const auto rho = section_map(cc.cover(), cc.nerve());
      const auto p = pullback(bb, rho);
      CHECK(euler_characteristic(p.total()) == action.fiber_size() * euler_characteristic(rho.source()));
    }
  }
  SUBCASE("base mismatch") { CHECK_THROWS_AS(pullback(b, identity_map(corpus::edge())), InputError); }
}

TEST_CASE("local trivializations") {
  const auto z2 = cyclic_group(2);
  const auto b = total_space(circle_cocycle(), regular_action(z2));
  CHECK(local_trivialization_check(b, star_cover(b.base())).all());
  CHECK_FALSE(local_trivialization_check(b, Cover(b.base(), {"U"}, {b.base()})).all());
  const auto product = product_bundle(corpus::torus(), corpus::s3_on_three_points());
  CHECK(local_trivialization_check(product, star_cover(corpus::torus())).all());
  CHECK(local_trivialization_check(product, Cover(corpus::torus(), {"U"}, {corpus::torus()})).all());
}

TEST_CASE("patching restrictions reassembles the bundle") {
  std::mt19937 rng(53);
  for (const auto& [name, c, action] : instances(rng)) {
    CAPTURE(name);
    const auto b = total_space(c, action);
    const auto u = star_cover(b.base());
    std::vector<Bundle> locals;
    for (int i = 0; i < u.size(); ++i) locals.push_back(restrict_bundle(b, u.part(i)));
    const auto patched = patch_bundles(u, locals);
    CHECK(patched == b);
    for (int i = 0; i < u.size(); ++i) CHECK(restrict_bundle(patched, u.part(i)) == locals[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("patching errors and products") {
  const auto e = corpus::edge();
  const Cover u(e, {"A", "B"}, {e, e});
  const auto z2 = cyclic_group(2);
  const auto p = product_bundle(e, regular_action(z2));
  CHECK(patch_bundles(u, {p, p}) == p);

  // Same base, different fiber labels.
  const auto other = product_bundle(e, GroupAction(z2, {"x", "y"}, {{0, 1}, {1, 0}}));
  try {
    patch_bundles(u, {p, other});
    FAIL("expected disagreement");
  } catch (const ValidationError& err) {
    CHECK_FALSE(err.witness().empty());
  }
  CHECK_THROWS_AS(patch_bundles(u, {p}), InputError);

  // Two half covers of a path glued at the middle vertex.
  const auto path = build_complex({{"a", "b"}, {"b", "c"}});
  const auto left = build_complex({{"a", "b"}});
  const auto right = build_complex({{"b", "c"}});
  const auto glued = patch_bundles(Cover(path, {"L", "R"}, {left, right}),
                                   {product_bundle(left, regular_action(z2)), product_bundle(right, regular_action(z2))});
  CHECK(glued == product_bundle(path, regular_action(z2)));
}

TEST_CASE("fiberwise mapping cylinders") {
  const auto z2 = cyclic_group(2);
  const auto pt = corpus::point();
  SUBCASE("identity over a point is an edge times the fiber") {
    const auto p = product_bundle(pt, regular_action(z2));
    const auto cyl = mapping_cylinder_bundle(p, p, identity_map(p.total()));
    CHECK(cyl.bundle.total().count(0) == 4);
    CHECK(cyl.bundle.total().count(1) == 2);
    CHECK(connected_components(cyl.bundle.total()).size() == 2);
    CHECK(cyl.basePrism.complex.count(1) == 1);
  }
  SUBCASE("fiber swap over a point") {
    const auto p = product_bundle(pt, regular_action(z2));
    const auto swap = SimplicialMap::from_labels(p.total(), p.total(), {{"a|0", "a|1"}, {"a|1", "a|0"}});
    const auto cyl = mapping_cylinder_bundle(p, p, swap);
    CHECK(cyl.bundle.total().count(0) == 4);
    CHECK(cyl.bundle.total().count(1) == 2);
    CHECK(cyl.bundle.total().contains(cyl.bundle.total().simplex_of({"0:a|0", "1:a|1"})));
    CHECK(restrict_to_end(cyl, 0) == p);
    CHECK(restrict_to_end(cyl, 1) == p);
  }
  SUBCASE("identity over the hollow triangle") {
    const auto s3 = corpus::s3_on_three_points();
    const auto p = product_bundle(corpus::hollow_triangle(), s3);
    const auto cyl = mapping_cylinder_bundle(p, p, identity_map(p.total()));
    CHECK(homology(cyl.bundle.total()).betti() == std::vector<Integer>{3, 3, 0});
  }
  SUBCASE("gauge isomorphisms between random cocycles") {
    std::mt19937 rng(59);
    for (const auto& [name, x] : corpus::connected_complexes()) {
      const auto a = stars(x);
      for (const auto& [gname, g] : corpus::groups()) {
        CAPTURE(name);
        CAPTURE(gname);
        const auto c = testing::random_cocycle(a, g, rng);
        const auto lambda = testing::random_cochain(a->cover, g, rng);
        const auto e = total_space(c, regular_action(g));
        const auto e2 = total_space(coboundary_transform(c, lambda), regular_action(g));
        const auto cyl = mapping_cylinder_bundle(e, e2, testing::gauge_map(e, e2, c, lambda));
        CHECK(restrict_to_end(cyl, 0) == e);
        CHECK(restrict_to_end(cyl, 1) == e2);
        const int deg = std::max(cyl.bundle.total().dimension(), 0);
        CHECK(homology(cyl.bundle.total(), deg) == homology(e2.total(), deg));
      }
    }
  }
  SUBCASE("maps that are not fiberwise bijections are rejected") {
    const auto p = product_bundle(corpus::edge(), regular_action(z2));
    const auto collapse = SimplicialMap::from_labels(p.total(), p.total(),
                                                     {{"a|0", "a|0"}, {"a|1", "a|0"}, {"b|0", "b|0"}, {"b|1", "b|0"}});
    CHECK_THROWS_AS(mapping_cylinder_bundle(p, p, collapse), ValidationError);
    const auto q = product_bundle(corpus::full_triangle(), regular_action(z2));
    const auto across = SimplicialMap::from_labels(q.total(), q.total(),
                                                   {{"a|0", "b|0"}, {"a|1", "b|1"}, {"b|0", "a|0"}, {"b|1", "a|1"},
                                                    {"c|0", "c|0"}, {"c|1", "c|1"}});
    CHECK_THROWS_AS(mapping_cylinder_bundle(q, q, across), ValidationError);
  }
}
