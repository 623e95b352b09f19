#include "htc/classifying.hpp"

#include <algorithm>

namespace htc {

namespace {

bool has_identity(const BarTuple& t) { return std::find(t.begin(), t.end(), FiniteGroup::identity()) != t.end(); }

// The i-th face of a bar tuple of length k.
BarTuple bar_face(const FiniteGroup& g, const BarTuple& t, std::size_t i) {
  const auto k = t.size();
  BarTuple out;
  if (i == 0) {
    out.assign(t.begin() + 1, t.end());
  } else if (i == k) {
    out.assign(t.begin(), t.end() - 1);
  } else {
    out.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i) - 1);
    out.push_back(g.mul(t[i - 1], t[i]));
    out.insert(out.end(), t.begin() + static_cast<std::ptrdiff_t>(i) + 1, t.end());
  }
  return out;
}

std::vector<BarTuple> normalized_tuples(const FiniteGroup& g, int k) {
  std::vector<BarTuple> out;
  if (g.order() < 2 && k > 0) return out;
  BarTuple t(static_cast<std::size_t>(k), 1);
  while (true) {
    out.push_back(t);
    int i = k - 1;
    while (i >= 0 && t[static_cast<std::size_t>(i)] == g.order() - 1) t[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++t[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

std::size_t BarComplex::index_of(const BarTuple& t) const {
  if (t.size() >= chains.size()) throw InputError("bar tuple beyond the truncation");
  const auto& level = chains[t.size()];
  const auto it = std::lower_bound(level.begin(), level.end(), t);
  if (it == level.end() || *it != t) throw InputError("not a normalized bar tuple");
  return static_cast<std::size_t>(it - level.begin());
}

BarComplex bar_construction(const FiniteGroup& g, int n) {
  if (n < 0) throw InputError("truncation must be nonnegative");
  BarComplex b;
  b.group = g;
  b.truncation = n;
  for (int k = 0; k <= n; ++k) b.chains.push_back(normalized_tuples(g, k));
  for (const auto& level : b.chains) b.complex.ranks.push_back(level.size());
  b.complex.boundaries.emplace_back(0, b.chains[0].size());
  for (int k = 1; k <= n; ++k) {
    const auto& level = b.chains[static_cast<std::size_t>(k)];
    IntMatrix d(b.chains[static_cast<std::size_t>(k - 1)].size(), level.size());
    for (std::size_t j = 0; j < level.size(); ++j) {
      for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i) {
        const auto face = bar_face(g, level[j], i);
        if (has_identity(face)) continue;
        d(b.index_of(face), j) += (i % 2 == 0) ? 1 : -1;
      }
    }
    b.complex.boundaries.push_back(std::move(d));
  }
  return b;
}

HomologyResult bar_homology(const FiniteGroup& g, int maxDegree) {
  if (maxDegree < 0) throw InputError("negative degree");
  return homology(bar_construction(g, maxDegree + 1).complex, maxDegree);
}

std::vector<MilnorViolation> check_milnor_point(const MilnorPoint& p, const FiniteGroup& g) {
  for (const auto& [ij, e] : p.g) {
    if (!g.contains(e)) throw InputError("Milnor coordinate value is not a group element");
  }
  std::vector<MilnorViolation> out;
  const int n = static_cast<int>(p.t.size());

  const Rational zero(0);
  const Rational one(1);
  Rational sum(0);
  int badCoordinate = -1;
  for (int i = 0; i < n; ++i) {
    const auto& ti = p.t[static_cast<std::size_t>(i)];
    sum += ti;
    if ((ti < zero || ti > one) && badCoordinate < 0) badCoordinate = i;
  }
  if (badCoordinate >= 0) {
    out.push_back({1, "coordinate outside [0,1]", {badCoordinate}});
  } else if (sum != one) {
    out.push_back({1, "coordinates sum to " + std::to_string(sum.numerator()) + "/" + std::to_string(sum.denominator()), {}});
  }

  std::vector<int> support;
  for (int i = 0; i < n; ++i) {
    if (p.t[static_cast<std::size_t>(i)] != zero) support.push_back(i);
  }
  for (const auto& [ij, e] : p.g) {
    const auto [i, j] = ij;
    const bool inside = i >= 0 && j >= 0 && i < n && j < n && p.t[static_cast<std::size_t>(i)] != zero &&
                        p.t[static_cast<std::size_t>(j)] != zero;
    if (!inside) {
      out.push_back({2, "value given where t_i t_j = 0", {i, j}});
      break;
    }
  }
  const bool complete = [&] {
    for (int i : support) {
      for (int j : support) {
        if (!p.g.count({i, j})) {
          out.push_back({2, "missing value where t_i t_j != 0", {i, j}});
          return false;
        }
      }
    }
    return true;
  }();

  for (int i : support) {
    const auto it = p.g.find({i, i});
    if (it != p.g.end() && it->second != FiniteGroup::identity()) {
      out.push_back({3, "diagonal value is not the identity", {i, i}});
      break;
    }
  }
  if (complete) {
    bool found = false;
    for (int i : support) {
      for (int j : support) {
        for (int k : support) {
          if (found) break;
          if (g.mul(p.g.at({i, j}), p.g.at({j, k})) != p.g.at({i, k})) {
            out.push_back({4, "g_ij g_jk != g_ik", {i, j, k}});
            found = true;
          }
        }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.condition < b.condition; });
  return out;
}

MilnorPoint validate_milnor_point(MilnorPoint p, const FiniteGroup& g) {
  const auto v = check_milnor_point(p, g);
  if (!v.empty()) {
    std::vector<std::string> witness;
    for (int i : v.front().indices) witness.push_back(std::to_string(i));
    throw ValidationError("condition " + std::to_string(v.front().condition) + ": " + v.front().message, witness);
  }
  return p;
}

BarTuple ClassifyingMap::normalized(const IndexTuple& t) const {
  BarTuple out;
  for (Element e : tuple(t)) {
    if (e != FiniteGroup::identity()) out.push_back(e);
  }
  return out;
}

ClassifyingMap classifying_map(std::shared_ptr<const CoverAnalysis> analysis, FiniteGroup group, const PairValues& values) {
  const auto& nerve = analysis->nerve;
  for (const auto& t : nerve.tuples(1)) {
    const auto it = values.find({t[0], t[1]});
    if (it == values.end()) throw InputError("missing transition value for " + analysis->cover.index(t[0]) + "|" + analysis->cover.index(t[1]));
    if (!group.contains(it->second)) throw InputError("transition value is not a group element");
  }
  ClassifyingMap f;
  for (const auto& [t, cell] : nerve.cells) {
    BarTuple b;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) b.push_back(values.at({t[i], t[i + 1]}));
    f.tuples_.emplace(t, std::move(b));
  }
  // Simplicial identities: the face maps of the nerve and of BG agree.
  for (const auto& [t, b] : f.tuples_) {
    for (std::size_t i = 0; i < t.size() && t.size() > 1; ++i) {
      IndexTuple face = t;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      if (bar_face(group, b, i) != f.tuples_.at(face)) {
        throw ValidationError("classifying map is not simplicial: face " + std::to_string(i) + " disagrees",
                              index_names(analysis->cover, t));
      }
    }
  }
  f.analysis_ = std::move(analysis);
  f.group_ = std::move(group);
  return f;
}

ClassifyingMap classifying_map(const Cocycle1& c) { return classifying_map(c.analysis(), c.group(), c.values()); }

ChainMap bar_chain_map(const ClassifyingMap& f, const BarComplex& bar) {
  const auto& nerve = f.nerve();
  const int top = nerve.complex.dimension();
  if (bar.truncation < top) throw InputError("bar complex is truncated below the nerve dimension");
  ChainMap m;
  for (int k = 0; k <= top; ++k) {
    const auto& simplices = nerve.complex.simplices(k);
    IntMatrix c(bar.chains[static_cast<std::size_t>(k)].size(), simplices.size());
    for (std::size_t j = 0; j < simplices.size(); ++j) {
      const auto& t = f.tuple(nerve.tuple_of(simplices[j]));
      if (has_identity(t)) continue;
      c(bar.index_of(t), j) = 1;
    }
    m.components.push_back(std::move(c));
  }
  return m;
}

Cocycle1 pullback_cocycle(const ClassifyingMap& f) {
  PairValues values;
  for (const auto& t : f.nerve().tuples(1)) {
    const auto& b = f.tuple(t);
    values[{t[0], t[1]}] = b.front();
  }
  return validate_cocycle(f.analysis(), f.group(), std::move(values));
}

std::vector<Element> UniversalBundle::vertices_of(const BarTuple& tuple, Element f) const {
  std::vector<Element> v(tuple.size() + 1);
  v.back() = f;
  for (std::size_t i = tuple.size(); i > 0; --i) v[i - 1] = group().mul(tuple[i - 1], v[i]);
  return v;
}

UniversalBundle universal_bundle(const FiniteGroup& g, int n) {
  if (n < 1) throw InputError("universal bundle needs truncation at least 1");
  UniversalBundle u;
  u.base_ = bar_construction(g, n);
  for (int k = 0; k <= n; ++k) {
    std::vector<std::pair<BarTuple, Element>> level;
    for (const auto& t : u.base_.chains[static_cast<std::size_t>(k)]) {
      for (Element f = 0; f < g.order(); ++f) level.emplace_back(t, f);
    }
    u.chains_.ranks.push_back(level.size());
    u.total_.push_back(std::move(level));
  }
  auto position = [&](const BarTuple& t, Element f) {
    return u.base_.index_of(t) * static_cast<std::size_t>(g.order()) + static_cast<std::size_t>(f);
  };
  u.chains_.boundaries.emplace_back(0, u.total_[0].size());
  for (int k = 1; k <= n; ++k) {
    const auto& level = u.total_[static_cast<std::size_t>(k)];
    IntMatrix d(u.total_[static_cast<std::size_t>(k - 1)].size(), level.size());
    for (std::size_t j = 0; j < level.size(); ++j) {
      const auto& [t, f] = level[j];
      for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i) {
        const auto face = bar_face(g, t, i);
        if (has_identity(face)) continue;
        // Dropping the last vertex moves the fiber point to f_{k-1}.
        const Element ff = i == static_cast<std::size_t>(k) ? g.mul(t.back(), f) : f;
        d(position(face, ff), j) += (i % 2 == 0) ? 1 : -1;
      }
    }
    u.chains_.boundaries.push_back(std::move(d));
  }
  return u;
}

Bundle pullback(const UniversalBundle& u, const ClassifyingMap& f) {
  if (!(u.group() == f.group())) throw InputError("classifying map and universal bundle use different groups");
  const auto& nerve = f.nerve();
  if (nerve.complex.dimension() > u.truncation()) throw InputError("universal bundle is truncated below the nerve dimension");
  const int order = u.group().order();
  std::vector<std::string> labels;
  std::vector<int> proj;
  for (int v = 0; v < nerve.complex.vertex_count(); ++v) {
    for (Element e = 0; e < order; ++e) {
      labels.push_back(total_label(nerve.complex.label(v), std::to_string(e)));
      proj.push_back(v);
    }
  }
  std::vector<Simplex> simplices;
  for (const auto& s : nerve.complex.maximal_simplices()) {
    const auto& t = f.tuple(nerve.tuple_of(s));
    for (Element e = 0; e < order; ++e) {
      const auto vs = u.vertices_of(t, e);
      Simplex lift;
      for (std::size_t i = 0; i < s.size(); ++i) lift.push_back(s[i] * order + vs[i]);
      simplices.push_back(std::move(lift));
    }
  }
  SimplicialComplex total(std::move(labels), simplices);
  return Bundle(SimplicialMap(std::move(total), nerve.complex, std::move(proj)), regular_action(u.group()));
}

bool ClassificationReport::passed() const {
  return cocycleClasses == homClasses && std::all_of(pullbackMatches.begin(), pullbackMatches.end(), [](bool b) { return b; });
}

ClassificationReport classification_check(std::shared_ptr<const CoverAnalysis> analysis, const FiniteGroup& g,
                                          SearchBudget budget) {
  ClassificationReport r;
  auto classes = cocycle_classes(analysis, g, budget);
  r.cocycleCount = classes.cocycleCount;
  r.cocycleClasses = classes.representatives.size();
  const auto homs = enumerate_homs(pi1_presentation(analysis->nerve.complex, 0), g, budget);
  r.homCount = homs.size();
  r.homClasses = hom_conjugacy_classes(homs, g).size();
  const auto universal = universal_bundle(g, std::max(analysis->nerve.complex.dimension(), 1));
  const auto action = regular_action(g);
  for (const auto& c : classes.representatives) {
    const auto pulled = pullback(universal, classifying_map(c));
    r.pullbackMatches.push_back(find_isomorphism(pulled, total_space(c, action), budget).has_value());
  }
  r.representatives = std::move(classes.representatives);
  return r;
}

}  // namespace htc
