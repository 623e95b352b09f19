#include "htc/gerbe.hpp"

#include <numeric>

namespace htc {

namespace {

Element edge_of(const GerbeData& d, int a, int b) { return d.edges.at({a, b}); }

// A 2-cell with source s in G, labelled by h in H; its target is d(h) s.
struct TwoCell {
  Element source;
  Element label;
};

Element target(const CrossedModule& m, const TwoCell& x) { return m.base().mul(m.boundary(x.label), x.source); }

TwoCell whisker_left(const CrossedModule& m, Element g, const TwoCell& x) {
  return {m.base().mul(g, x.source), m.act(g, x.label)};
}

TwoCell whisker_right(const CrossedModule& m, const TwoCell& x, Element g) {
  return {m.base().mul(x.source, g), x.label};
}

// `first` then `second`; composable when target(first) = source(second).
TwoCell vertical(const CrossedModule& m, const TwoCell& first, const TwoCell& second, bool& composable) {
  composable = composable && target(m, first) == second.source;
  return {first.source, m.fiber().mul(second.label, first.label)};
}

}  // namespace

GerbeReport check_gerbe(const GerbeData& d) {
  if (!d.analysis) throw InputError("missing cover");
  const auto& a = *d.analysis;
  if (!a.goodness.good) {
    throw ValidationError("cover is not good: intersection has " + a.goodness.failures.front().reason,
                          index_names(a.cover, a.goodness.failures.front().tuple));
  }
  const auto& G = d.module.base();
  const auto& H = d.module.fiber();
  for (const auto& [p, g] : d.edges) {
    if (p.first >= p.second || !a.nerve.has_cell({p.first, p.second})) {
      throw InputError("edge value given for a pair whose interiors do not meet");
    }
    if (!G.contains(g)) throw InputError("edge value is not an element of the base group");
  }
  for (const auto& [t, h] : d.witnesses) {
    if (t.size() != 3 || !a.nerve.has_cell(t)) throw InputError("witness given for a triple whose interiors do not meet");
    if (!H.contains(h)) throw InputError("witness is not an element of the fiber group");
  }
  for (const auto& t : a.nerve.tuples(1)) {
    if (!d.edges.count({t[0], t[1]})) throw InputError("missing edge value for " + a.cover.index(t[0]) + "|" + a.cover.index(t[1]));
  }
  for (const auto& t : a.nerve.tuples(2)) {
    if (!d.witnesses.count(t)) {
      throw InputError("missing witness for " + a.cover.index(t[0]) + "|" + a.cover.index(t[1]) + "|" + a.cover.index(t[2]));
    }
  }

  GerbeReport r;
  for (const auto& t : a.nerve.tuples(2)) {
    const Element lhs = G.mul(edge_of(d, t[0], t[1]), edge_of(d, t[1], t[2]));
    const Element rhs = G.mul(d.module.boundary(d.witnesses.at(t)), edge_of(d, t[0], t[2]));
    if (lhs != rhs) {
      r.triangleHolds = false;
      r.violations.push_back({t, "triangle"});
    }
  }
  for (const auto& t : a.nerve.tuples(3)) {
    const Element abc = d.witnesses.at({t[0], t[1], t[2]});
    const Element acd = d.witnesses.at({t[0], t[2], t[3]});
    const Element bcd = d.witnesses.at({t[1], t[2], t[3]});
    const Element abd = d.witnesses.at({t[0], t[1], t[3]});
    const Element lhs = H.mul(abc, acd);
    const Element rhs = H.mul(d.module.act(edge_of(d, t[0], t[1]), bcd), abd);
    if (lhs != rhs) {
      r.tetrahedronHolds = false;
      r.violations.push_back({t, "tetrahedron"});
    }
  }
  return r;
}

GerbeCocycle validate_gerbe_cocycle(GerbeData d) {
  const auto r = check_gerbe(d);
  if (!r.valid()) {
    const auto& v = r.violations.front();
    throw ValidationError(v.law + " law fails", index_names(d.analysis->cover, v.tuple));
  }
  GerbeCocycle out;
  out.data_ = std::move(d);
  return out;
}

GerbeData trivial_gerbe(std::shared_ptr<const CoverAnalysis> analysis, CrossedModule module) {
  GerbeData d{std::move(analysis), std::move(module), {}, {}};
  for (const auto& t : d.analysis->nerve.tuples(1)) d.edges[{t[0], t[1]}] = 0;
  for (const auto& t : d.analysis->nerve.tuples(2)) d.witnesses[t] = 0;
  return d;
}

GerbeData gerbe_coboundary(const GerbeData& d, const Cochain0& lambda, const PairValues& m) {
  const auto& G = d.module.base();
  const auto& H = d.module.fiber();
  if (lambda.size() != static_cast<std::size_t>(d.analysis->cover.size())) {
    throw InputError("lambda size does not match the cover");
  }
  for (Element l : lambda) {
    if (!G.contains(l)) throw InputError("lambda value is not an element of the base group");
  }
  for (const auto& [p, h] : m) {
    if (!d.edges.count(p)) throw InputError("m given for a pair without an edge value");
    if (!H.contains(h)) throw InputError("m value is not an element of the fiber group");
  }
  auto mAt = [&](int a, int b) {
    const auto it = m.find({a, b});
    return it == m.end() ? FiniteGroup::identity() : it->second;
  };
  auto lam = [&](int a) { return lambda[static_cast<std::size_t>(a)]; };
  auto k = [&](int a, int b) { return G.mul(G.mul(lam(a), edge_of(d, a, b)), G.inverse(lam(b))); };

  GerbeData out{d.analysis, d.module, {}, {}};
  for (const auto& [p, g] : d.edges) out.edges[p] = G.mul(d.module.boundary(mAt(p.first, p.second)), k(p.first, p.second));
  for (const auto& [t, c] : d.witnesses) {
    const int a = t[0], b = t[1], cc = t[2];
    Element v = mAt(a, b);
    v = H.mul(v, d.module.act(k(a, b), mAt(b, cc)));
    v = H.mul(v, d.module.act(lam(a), c));
    v = H.mul(v, H.inverse(mAt(a, cc)));
    out.witnesses[t] = v;
  }
  return out;
}

GerbeCocycle gerbe_coboundary(const GerbeCocycle& d, const Cochain0& lambda, const PairValues& m) {
  return validate_gerbe_cocycle(gerbe_coboundary(d.data(), lambda, m));
}

CoherenceReport check_coherence_faces(const GerbeData& d) {
  check_gerbe(d);
  const auto& cm = d.module;
  CoherenceReport r;
  for (const auto& t : d.analysis->nerve.tuples(3)) {
    const int a = t[0], b = t[1], c = t[2], e = t[3];
    auto cell = [&](int x, int y, int z) { return TwoCell{edge_of(d, x, z), d.witnesses.at({x, y, z})}; };
    bool composable = true;
    // g_ad => g_ac g_cd => g_ab g_bc g_cd
    const TwoCell viaC = vertical(cm, cell(a, c, e), whisker_right(cm, cell(a, b, c), edge_of(d, c, e)), composable);
    // g_ad => g_ab g_bd => g_ab g_bc g_cd
    const TwoCell viaB = vertical(cm, cell(a, b, e), whisker_left(cm, edge_of(d, a, b), cell(b, c, e)), composable);
    if (!composable || target(cm, viaC) != target(cm, viaB)) r.illTyped.push_back(t);
    if (viaC.source != viaB.source || viaC.label != viaB.label) r.failures.push_back(t);
  }
  r.coherent = r.failures.empty();
  return r;
}

bool AbelianClass::zero() const {
  for (const auto& c : coordinates) {
    for (auto x : c) {
      if (x != 0) return false;
    }
  }
  return true;
}

AbelianDecomposition abelian_decomposition(const FiniteGroup& h) {
  if (!h.is_abelian()) throw InputError("group is not abelian");
  const auto n = static_cast<std::size_t>(h.order());
  // Relations e_x + e_y - e_xy on the free abelian group over the elements.
  IntMatrix rel(n * n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto row = x * n + y;
      rel(row, x) += 1;
      rel(row, y) += 1;
      rel(row, static_cast<std::size_t>(h.mul(static_cast<Element>(x), static_cast<Element>(y)))) -= 1;
    }
  }
  const auto snf = smith_normal_form(rel);
  // Rows of `right` give coordinates: x -> x * right carries the relation
  // lattice onto the diagonal one.
  AbelianDecomposition out;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer d = i < snf.diagonal.size() ? snf.diagonal[i] : 0;
    if (d == 0) throw InputError("group table does not present a finite group");
    if (d > 1) {
      keep.push_back(i);
      out.factors.push_back(d);
    }
  }
  out.coords.assign(n, {});
  for (std::size_t e = 0; e < n; ++e) {
    for (std::size_t k = 0; k < keep.size(); ++k) {
      const Integer d = out.factors[k];
      out.coords[e].push_back(((snf.right(e, keep[k]) % d) + d) % d);
    }
  }
  return out;
}

AbelianClass abelian_class(const GerbeCocycle& d) {
  const auto& cm = d.module();
  if (cm.base().order() != 1) throw InputError("abelian class needs a trivial base group");
  const auto dec = abelian_decomposition(cm.fiber());
  const auto& nerve = d.data().analysis->nerve;
  const auto chains = chain_complex(nerve.complex);
  // Coboundary C^1 -> C^2 is the transpose of d_2.
  const auto delta = chains.boundary(2).transposed();
  const auto snf = smith_normal_form(delta);

  AbelianClass out;
  out.factors = dec.factors;
  const auto triangles = nerve.complex.simplices(2);
  for (std::size_t f = 0; f < dec.factors.size(); ++f) {
    const Integer mod = dec.factors[f];
    std::vector<Integer> cochain;
    for (const auto& s : triangles) cochain.push_back(dec.coords[static_cast<std::size_t>(d.witness(nerve.tuple_of(s)))][f]);
    const auto y = snf.left.apply(cochain);
    std::vector<Integer> coords;
    std::vector<Integer> moduli;
    for (std::size_t i = 0; i < y.size(); ++i) {
      const Integer s = i < snf.diagonal.size() ? snf.diagonal[i] : 0;
      const Integer q = std::gcd(s, mod);
      if (q == 1) continue;
      coords.push_back(((y[i] % q) + q) % q);
      moduli.push_back(q);
    }
    out.coordinates.push_back(std::move(coords));
    out.moduli.push_back(std::move(moduli));
  }
  return out;
}

GerbeEquivalence gerbes_equivalent(const GerbeCocycle& d1, const GerbeCocycle& d2, SearchBudget budget) {
  if (!(d1.cover() == d2.cover())) throw InputError("gerbes live over different covers");
  if (!(d1.module() == d2.module())) throw InputError("gerbes use different crossed modules");
  const auto& cm = d1.module();
  const auto& G = cm.base();
  const auto& H = cm.fiber();
  const auto& nerve = d1.data().analysis->nerve;
  BudgetMeter meter(budget, "gerbe equivalence");

  std::vector<IndexPair> pairs;
  std::map<IndexPair, std::size_t> position;
  for (const auto& t : nerve.tuples(1)) {
    position.emplace(IndexPair{t[0], t[1]}, pairs.size());
    pairs.emplace_back(t[0], t[1]);
  }
  std::vector<std::vector<IndexTuple>> closedAt(pairs.size());
  for (const auto& t : nerve.tuples(2)) closedAt[position.at({t[1], t[2]})].push_back(t);

  const auto n = static_cast<std::size_t>(d1.cover().size());
  GerbeEquivalence out;
  Cochain0 lambda(n, 0);
  std::vector<Element> m(pairs.size(), 0);

  auto k = [&](int a, int b) {
    return G.mul(G.mul(lambda[static_cast<std::size_t>(a)], d1.edge(a, b)), G.inverse(lambda[static_cast<std::size_t>(b)]));
  };
  auto mAt = [&](int a, int b) { return m[position.at({a, b})]; };
  auto fillM = [&](auto&& self, std::size_t i) -> bool {
    if (i == pairs.size()) return true;
    const auto [a, b] = pairs[i];
    const Element wanted = d2.edge(a, b);
    const Element kab = k(a, b);
    for (Element h = 0; h < H.order(); ++h) {
      meter.charge();
      if (G.mul(cm.boundary(h), kab) != wanted) continue;
      m[i] = h;
      bool ok = true;
      for (const auto& t : closedAt[i]) {
        Element v = mAt(t[0], t[1]);
        v = H.mul(v, cm.act(k(t[0], t[1]), mAt(t[1], t[2])));
        v = H.mul(v, cm.act(lambda[static_cast<std::size_t>(t[0])], d1.witness(t)));
        v = H.mul(v, H.inverse(mAt(t[0], t[2])));
        if (v != d2.witness(t)) {
          ok = false;
          break;
        }
      }
      if (ok && self(self, i + 1)) return true;
    }
    return false;
  };
  auto fillLambda = [&](auto&& self, std::size_t a) -> bool {
    if (a == n) return fillM(fillM, 0);
    for (Element g = 0; g < G.order(); ++g) {
      meter.charge();
      lambda[a] = g;
      if (self(self, a + 1)) return true;
    }
    return false;
  };
  if (fillLambda(fillLambda, 0)) {
    out.equivalent = true;
    out.lambda = lambda;
    for (std::size_t i = 0; i < pairs.size(); ++i) out.m[pairs[i]] = m[i];
  }
  return out;
}

}  // namespace htc
