#pragma once

// Crossed modules and gerbe generators shared by unit and acceptance tests.

#include <random>

#include "htc/gerbe.hpp"

namespace htc::testing {

/// Z/3 inside S3 with the conjugation action.
inline CrossedModule rotations_in_s3() {
  const auto s3 = symmetric_group(3);
  Element r = -1;
  for (Element g = 1; g < 6 && r < 0; ++g) {
    if (s3.mul(g, s3.mul(g, g)) == 0) r = g;
  }
  std::vector<Element> power{0, r, s3.mul(r, r)};
  std::vector<std::vector<Element>> act(6, std::vector<Element>(3));
  for (Element g = 0; g < 6; ++g) {
    for (int k = 0; k < 3; ++k) {
      const Element image = s3.conjugate(g, power[static_cast<std::size_t>(k)]);
      for (int j = 0; j < 3; ++j) {
        if (power[static_cast<std::size_t>(j)] == image) act[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)] = j;
      }
    }
  }
  return validate_crossed_module(s3, cyclic_group(3), power, act);
}

/// Z/4 -> Z/2 reduction mod 2, trivial action.
inline CrossedModule z4_over_z2() {
  std::vector<std::vector<Element>> act(2, std::vector<Element>{0, 1, 2, 3});
  return validate_crossed_module(cyclic_group(2), cyclic_group(4), {0, 1, 0, 1}, act);
}

inline std::vector<CrossedModule> crossed_modules() {
  return {abelian_crossed_module(cyclic_group(2)), abelian_crossed_module(cyclic_group(4)),
          abelian_crossed_module(direct_product(cyclic_group(2), cyclic_group(2))),
          adjoint_crossed_module(symmetric_group(3)), rotations_in_s3(), z4_over_z2()};
}

inline Cochain0 random_lambda(std::mt19937& rng, const GerbeData& d) {
  std::uniform_int_distribution<Element> pick(0, d.module.base().order() - 1);
  Cochain0 out(static_cast<std::size_t>(d.analysis->cover.size()));
  for (auto& x : out) x = pick(rng);
  return out;
}

inline PairValues random_m(std::mt19937& rng, const GerbeData& d) {
  std::uniform_int_distribution<Element> pick(0, d.module.fiber().order() - 1);
  PairValues out;
  for (const auto& [p, g] : d.edges) out[p] = pick(rng);
  return out;
}

/// Trivial gerbe moved by a random coboundary: valid by construction.
inline GerbeData random_valid_gerbe(std::mt19937& rng, std::shared_ptr<const CoverAnalysis> a, const CrossedModule& cm) {
  const auto t = trivial_gerbe(std::move(a), cm);
  return gerbe_coboundary(t, random_lambda(rng, t), random_m(rng, t));
}

/// Changes one witness to a different fiber element.
inline GerbeData perturb_witness(std::mt19937& rng, GerbeData d) {
  if (d.witnesses.empty() || d.module.fiber().order() < 2) return d;
  std::uniform_int_distribution<std::size_t> which(0, d.witnesses.size() - 1);
  auto it = std::next(d.witnesses.begin(), static_cast<std::ptrdiff_t>(which(rng)));
  std::uniform_int_distribution<Element> shift(1, d.module.fiber().order() - 1);
  it->second = d.module.fiber().mul(it->second, shift(rng));
  return d;
}

}  // namespace htc::testing
