#include <doctest.h>

#include <random>

#include "htc/error.hpp"
#include "htc/homology.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace htc;

namespace {

bool is_diagonal_chain(const IntMatrix& d, const std::vector<Integer>& diag) {
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      const Integer expected = (i == j && i < diag.size()) ? diag[i] : 0;
      if (d(i, j) != expected) return false;
    }
  }
  for (std::size_t i = 1; i < diag.size(); ++i) {
    if (diag[i] % diag[i - 1] != 0) return false;
  }
  return true;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> entry(-4, 4);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = entry(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("smith normal form examples") {
  SUBCASE("identity") {
    const auto s = smith_normal_form(IntMatrix::identity(3));
    CHECK(s.diagonal == std::vector<Integer>{1, 1, 1});
  }
  SUBCASE("zero") {
    const auto s = smith_normal_form(IntMatrix(2, 3));
    CHECK(s.diagonal.empty());
    CHECK((s.left * IntMatrix(2, 3) * s.right).is_zero());
  }
  SUBCASE("diag(2,3) becomes diag(1,6)") {
    const IntMatrix m(2, 2, {2, 0, 0, 3});
    const auto s = smith_normal_form(m);
    CHECK(s.diagonal == std::vector<Integer>{1, 6});
    CHECK(smith_diagonal(m) == s.diagonal);
  }
}

TEST_CASE("smith normal form transforms on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(rng, static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    const auto s = smith_normal_form(m);
    CHECK(is_diagonal_chain(s.left * m * s.right, s.diagonal));
    CHECK(std::abs(determinant(s.left)) == 1);
    CHECK(std::abs(determinant(s.right)) == 1);
    CHECK(smith_diagonal(m) == s.diagonal);
    // Rank agrees with elimination over a large prime.
    CHECK(s.diagonal.size() == oracle::rank_mod_p(m, 1'000'000'007));
  }
}

TEST_CASE("checked arithmetic detects overflow") {
  const Integer big = std::numeric_limits<Integer>::max() / 2 + 1;
  CHECK_THROWS_AS(checked_add(big, big), ArithmeticOverflow);
  CHECK_THROWS_AS(checked_mul(big, 3), ArithmeticOverflow);
  CHECK(checked_mul(-4, 5) == -20);
}

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix(3, 3, {2, 0, 1, 1, 3, 2, 1, 1, 2})) == 6);
  CHECK(determinant(IntMatrix(2, 2, {1, 2, 2, 4})) == 0);
  CHECK(determinant(IntMatrix::identity(4)) == 1);
}

TEST_CASE("homology examples") {
  CHECK(homology(corpus::point()).betti() == std::vector<Integer>{1});
  const auto circle = homology(corpus::hollow_triangle());
  CHECK(circle.betti() == std::vector<Integer>{1, 1});
  CHECK(circle.degrees[1].torsion.empty());

  const auto rp2 = homology(corpus::projective_plane());
  CHECK(rp2.betti() == std::vector<Integer>{1, 0, 0});
  CHECK(rp2.degrees[1].torsion == std::vector<Integer>{2});
  CHECK(rp2.degrees[2].torsion.empty());

  const auto t2 = homology(corpus::torus());
  CHECK(t2.betti() == std::vector<Integer>{1, 2, 1});
  CHECK(homology(corpus::tetrahedron_boundary()).betti() == std::vector<Integer>{1, 0, 1});
  CHECK(homology(corpus::two_edges()).betti() == std::vector<Integer>{2, 0});
  CHECK_THROWS_AS(homology(corpus::point(), -1), InputError);
}

TEST_CASE("homology agrees with independent rank computations") {
  for (const auto& [name, x] : corpus::complexes()) {
    CAPTURE(name);
    const auto c = chain_complex(x);
    const int top = x.dimension();
    for (int k = 1; k <= top; ++k) CHECK((c.boundary(k - 1) * c.boundary(k)).is_zero());
    const auto h = homology(c, top);
    const auto rational = oracle::rational_betti(c, top);
    for (int k = 0; k <= top; ++k) {
      CHECK(h.degrees[static_cast<std::size_t>(k)].betti == rational[static_cast<std::size_t>(k)]);
      // Universal coefficients over Z/2: b_k + t_k + t_{k-1}, t = number of even torsion factors.
      auto even = [&](int d) {
        if (d < 0) return Integer{0};
        Integer n = 0;
        for (auto t : h.degrees[static_cast<std::size_t>(d)].torsion) n += (t % 2 == 0);
        return n;
      };
      CHECK(oracle::mod_p_betti(c, k, 2) == h.degrees[static_cast<std::size_t>(k)].betti + even(k) + even(k - 1));
      for (std::size_t i = 1; i < h.degrees[static_cast<std::size_t>(k)].torsion.size(); ++i) {
        const auto& t = h.degrees[static_cast<std::size_t>(k)].torsion;
        CHECK(t[i] % t[i - 1] == 0);
      }
    }
    CHECK(static_cast<std::size_t>(h.degrees[0].betti) == oracle::component_count(x));
    long long alt = 0;
    for (int k = 0; k <= top; ++k) alt += (k % 2 ? -1 : 1) * h.degrees[static_cast<std::size_t>(k)].betti;
    CHECK(alt == euler_characteristic(x));
  }
}

TEST_CASE("induced maps and isomorphism on homology") {
  for (const auto& [name, x] : corpus::complexes()) {
    CAPTURE(name);
    const auto id = identity_map(x);
    CHECK(is_chain_map(chain_complex(x), chain_complex(x), induced_chain_map(id)));
    CHECK(induces_homology_isomorphism(id));
  }
  const auto circle = corpus::hollow_triangle();
  const auto pt = build_complex({{"p"}});
  const SimplicialMap collapse(circle, pt, {0, 0, 0});
  CHECK(is_chain_map(chain_complex(circle), chain_complex(pt), induced_chain_map(collapse)));
  CHECK_FALSE(induces_homology_isomorphism(collapse));

  // Double wrap of the hexagon onto the triangle is not an isomorphism on H1.
  const auto hex = corpus::cycle(6);
  const auto wrap = SimplicialMap::from_labels(
      hex, circle, {{"v0", "a"}, {"v1", "b"}, {"v2", "c"}, {"v3", "a"}, {"v4", "b"}, {"v5", "c"}});
  CHECK(is_chain_map(chain_complex(hex), chain_complex(circle), induced_chain_map(wrap)));
  CHECK_FALSE(induces_homology_isomorphism(wrap));
  const auto once = SimplicialMap::from_labels(
      hex, circle, {{"v0", "a"}, {"v1", "a"}, {"v2", "b"}, {"v3", "b"}, {"v4", "c"}, {"v5", "c"}});
  CHECK(induces_homology_isomorphism(once));
}

TEST_CASE("class order and cycle bases") {
  const auto rp2 = chain_complex(corpus::projective_plane());
  const auto z1 = cycle_basis(rp2, 1);
  // rank Z1 = edges - rank d1 = 15 - 5.
  CHECK(z1.size() == 10);
  bool foundTorsion = false;
  for (const auto& z : z1) {
    const auto order = class_order(rp2, 1, z);
    CHECK((order == 1 || order == 2));
    foundTorsion |= order == 2;
  }
  CHECK(foundTorsion);

  const auto circle = chain_complex(corpus::hollow_triangle());
  // Edges ab, ac, bc: the loop ab + bc - ac.
  CHECK(class_order(circle, 1, {1, -1, 1}) == 0);
  CHECK_FALSE(is_boundary(circle, 1, {1, -1, 1}));
  CHECK_THROWS_AS(class_order(circle, 1, {1, 0, 0}), InputError);

  const auto tri = chain_complex(corpus::full_triangle());
  CHECK(class_order(tri, 1, {1, -1, 1}) == 1);
  CHECK(is_boundary(tri, 1, {1, -1, 1}));
}
