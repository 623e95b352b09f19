#pragma once

// Fiberwise isomorphisms between total spaces of cohomologous cocycles.

#include <map>
#include <string>

#include "htc/bundle.hpp"

namespace htc::testing {

/// (a, f) -> (a, lambda_a f) for regular fibers: an isomorphism
/// total_space(c) -> total_space(coboundary_transform(c, lambda)).
inline SimplicialMap gauge_map(const Bundle& from, const Bundle& to, const Cocycle1& c, const Cochain0& lambda) {
  const auto& g = c.group();
  std::map<std::string, std::string> m;
  const auto& nerve = c.nerve();
  for (int v = 0; v < nerve.complex.vertex_count(); ++v) {
    const Element l = lambda[static_cast<std::size_t>(nerve.vertexIndex[static_cast<std::size_t>(v)])];
    for (Element f = 0; f < g.order(); ++f) {
      m[total_label(nerve.complex.label(v), std::to_string(f))] =
          total_label(nerve.complex.label(v), std::to_string(g.mul(l, f)));
    }
  }
  return SimplicialMap::from_labels(from.total(), to.total(), m);
}

}  // namespace htc::testing
