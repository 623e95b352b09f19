#include "htc/cocycle.hpp"

#include <algorithm>
#include <deque>

namespace htc {

namespace {

void require_good(const CoverAnalysis& a) {
  if (!a.goodness.good) {
    const auto& f = a.goodness.failures.front();
    throw ValidationError("cover is not good: intersection has " + f.reason, index_names(a.cover, f.tuple));
  }
}

void require_connected_nerve(const CoverAnalysis& a) {
  if (connected_components(a.nerve.complex).size() != 1) throw ValidationError("nerve is not connected");
}

// Enumeration order for all cocycles: pairs ascending, each triple checked
// once its largest pair is assigned.
struct PairLayout {
  std::vector<IndexPair> pairs;
  std::map<IndexPair, std::size_t> position;
  std::vector<std::vector<IndexTuple>> triplesClosedAt;
};

PairLayout pair_layout(const NerveComplex& nerve) {
  PairLayout l;
  for (const auto& t : nerve.tuples(1)) {
    l.position.emplace(IndexPair{t[0], t[1]}, l.pairs.size());
    l.pairs.emplace_back(t[0], t[1]);
  }
  l.triplesClosedAt.resize(l.pairs.size());
  for (const auto& t : nerve.tuples(2)) l.triplesClosedAt[l.position.at({t[1], t[2]})].push_back(t);
  return l;
}

// x_p = left * x_q * right
struct Link {
  std::size_t other;
  Element left;
  Element right;
};

class JointSearch {
 public:
  JointSearch(const Cover& u, const Cover& v) : shift_(u.size()) {
    const auto joint = analyze_cover(disjoint_union_cover(u, v));
    for (const auto& f : joint->goodness.failures) {
      const bool mixed = f.tuple.front() < shift_ && f.tuple.back() >= shift_;
      if (mixed) {
        throw ValidationError("joint cover is not good on a mixed intersection: " + f.reason,
                              index_names(joint->cover, f.tuple));
      }
    }
    for (const auto& t : joint->nerve.tuples(1)) {
      if (t[0] < shift_ && t[1] >= shift_) {
        slot_.emplace(IndexPair{t[0], t[1] - shift_}, unknowns_.size());
        unknowns_.emplace_back(t[0], t[1] - shift_);
      }
    }
    for (const auto& t : joint->nerve.tuples(2)) {
      if (t[2] < shift_ || t[0] >= shift_) continue;
      triples_.push_back(t);
    }
  }

  EquivalenceResult run(const Cocycle1& c1, const Cocycle1& c2, BudgetMeter& meter) const {
    const auto& g = c1.group();
    std::vector<std::vector<Link>> links(unknowns_.size());
    for (const auto& t : triples_) {
      if (t[1] < shift_) {
        // a, b in U and c in V: x_ac = g_ab x_bc
        const auto p = slot_.at({t[0], t[2] - shift_});
        const auto q = slot_.at({t[1], t[2] - shift_});
        const Element gab = c1.value(t[0], t[1]);
        links[p].push_back({q, gab, 0});
        links[q].push_back({p, g.inverse(gab), 0});
      } else {
        // a in U and b, c in V: x_ac = x_ab g'_bc
        const auto p = slot_.at({t[0], t[2] - shift_});
        const auto q = slot_.at({t[0], t[1] - shift_});
        const Element gbc = c2.value(t[1] - shift_, t[2] - shift_);
        links[p].push_back({q, 0, gbc});
        links[q].push_back({p, 0, g.inverse(gbc)});
      }
    }

    EquivalenceResult result;
    std::vector<Element> value(unknowns_.size(), -1);
    for (std::size_t seed = 0; seed < unknowns_.size(); ++seed) {
      if (value[seed] >= 0) continue;
      bool solved = false;
      std::vector<std::size_t> component;
      for (Element start = 0; start < g.order() && !solved; ++start) {
        for (auto id : component) value[id] = -1;
        component.clear();
        solved = propagate(g, links, seed, start, value, component, meter);
      }
      if (!solved) {
        for (auto id : component) value[id] = -1;
        result.conflict.push_back({unknowns_[seed].first, unknowns_[seed].second, -1});
      }
    }
    result.equivalent = result.conflict.empty();
    if (result.equivalent) {
      for (std::size_t i = 0; i < unknowns_.size(); ++i) {
        result.bridge.push_back({unknowns_[i].first, unknowns_[i].second, value[i]});
      }
    }
    return result;
  }

 private:
  static bool propagate(const FiniteGroup& g, const std::vector<std::vector<Link>>& links, std::size_t seed,
                        Element start, std::vector<Element>& value, std::vector<std::size_t>& component,
                        BudgetMeter& meter) {
    value[seed] = start;
    component.push_back(seed);
    std::deque<std::size_t> queue{seed};
    bool ok = true;
    while (!queue.empty()) {
      const auto p = queue.front();
      queue.pop_front();
      for (const auto& l : links[p]) {
        meter.charge();
        // value[p] = left * value[other] * right, so value[other] = left^-1 value[p] right^-1
        const Element want = g.mul(g.mul(g.inverse(l.left), value[p]), g.inverse(l.right));
        if (value[l.other] < 0) {
          value[l.other] = want;
          component.push_back(l.other);
          queue.push_back(l.other);
        } else if (value[l.other] != want) {
          ok = false;
        }
      }
    }
    return ok;
  }

  int shift_;
  std::vector<IndexPair> unknowns_;
  std::map<IndexPair, std::size_t> slot_;
  std::vector<IndexTuple> triples_;
};

}  // namespace

std::vector<std::string> index_names(const Cover& u, const IndexTuple& t) {
  std::vector<std::string> out;
  for (int i : t) out.push_back(u.index(i));
  return out;
}

Element Cocycle1::value(int a, int b) const {
  if (a == b) return FiniteGroup::identity();
  if (a > b) return group_.inverse(value(b, a));
  const auto it = values_.find({a, b});
  if (it == values_.end()) throw InputError("no transition value for disjoint indices");
  return it->second;
}

Cocycle1 validate_cocycle(std::shared_ptr<const CoverAnalysis> analysis, FiniteGroup group, PairValues values) {
  if (!analysis) throw InputError("missing cover");
  const auto& a = *analysis;
  require_good(a);
  for (const auto& [p, g] : values) {
    if (!a.nerve.has_cell({p.first, p.second}) || p.first >= p.second) {
      throw InputError("transition value given for a pair whose interiors do not meet: " + a.cover.index(p.first) +
                       "|" + a.cover.index(p.second));
    }
    if (!group.contains(g)) throw InputError("transition value is not a group element");
  }
  for (const auto& t : a.nerve.tuples(1)) {
    if (!values.count({t[0], t[1]})) {
      throw InputError("missing transition value for " + a.cover.index(t[0]) + "|" + a.cover.index(t[1]));
    }
  }
  for (const auto& t : a.nerve.tuples(2)) {
    const Element lhs = group.mul(values.at({t[0], t[1]}), values.at({t[1], t[2]}));
    if (lhs != values.at({t[0], t[2]})) throw ValidationError("cocycle law fails", index_names(a.cover, t));
  }
  Cocycle1 c;
  c.analysis_ = std::move(analysis);
  c.group_ = std::move(group);
  c.values_ = std::move(values);
  return c;
}

Cocycle1 validate_cocycle(const Cover& cover, FiniteGroup group, PairValues values) {
  return validate_cocycle(analyze_cover(cover), std::move(group), std::move(values));
}

Cocycle1 trivial_cocycle(std::shared_ptr<const CoverAnalysis> analysis, FiniteGroup group) {
  PairValues values;
  for (const auto& t : analysis->nerve.tuples(1)) values[{t[0], t[1]}] = FiniteGroup::identity();
  return validate_cocycle(std::move(analysis), std::move(group), std::move(values));
}

Cocycle1 coboundary_transform(const Cocycle1& c, const Cochain0& lambda) {
  const auto& g = c.group();
  if (lambda.size() != static_cast<std::size_t>(c.cover().size())) {
    throw InputError("cochain size does not match the cover");
  }
  for (Element l : lambda) {
    if (!g.contains(l)) throw InputError("cochain value is not a group element");
  }
  PairValues out;
  for (const auto& [p, v] : c.values()) {
    out[p] = g.mul(g.mul(lambda[static_cast<std::size_t>(p.first)], v),
                   g.inverse(lambda[static_cast<std::size_t>(p.second)]));
  }
  return validate_cocycle(c.analysis(), g, std::move(out));
}

Holonomy holonomy(const Cocycle1& c) {
  const auto& nerve = c.nerve();
  const auto& g = c.group();
  Holonomy h;
  h.presentation = pi1_presentation(nerve.complex, 0);
  const auto& parent = h.presentation.treeParent;
  auto index = [&](int v) { return nerve.vertexIndex[static_cast<std::size_t>(v)]; };

  // Transport h_v from the basepoint along tree edges, in BFS order.
  const int n = nerve.complex.vertex_count();
  std::vector<Element> transport(static_cast<std::size_t>(n), -1);
  transport[static_cast<std::size_t>(h.presentation.basepoint)] = FiniteGroup::identity();
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v = 0; v < n; ++v) {
      const int p = parent[static_cast<std::size_t>(v)];
      if (transport[static_cast<std::size_t>(v)] >= 0 || transport[static_cast<std::size_t>(p)] < 0) continue;
      transport[static_cast<std::size_t>(v)] = g.mul(transport[static_cast<std::size_t>(p)], c.value(index(p), index(v)));
      grew = true;
    }
  }
  for (const auto& e : h.presentation.generatorEdges) {
    const Element hu = transport[static_cast<std::size_t>(e[0])];
    const Element hw = transport[static_cast<std::size_t>(e[1])];
    h.images.push_back(g.mul(g.mul(hu, c.value(index(e[0]), index(e[1]))), g.inverse(hw)));
  }
  return h;
}

Cocycle1 from_homomorphism(std::shared_ptr<const CoverAnalysis> analysis, FiniteGroup group, const Hom& images) {
  const auto& nerve = analysis->nerve;
  const auto p = pi1_presentation(nerve.complex, 0);
  if (images.size() != static_cast<std::size_t>(p.generatorCount)) {
    throw InputError("homomorphism has the wrong number of generator images");
  }
  for (Element e : images) {
    if (!group.contains(e)) throw InputError("generator image is not a group element");
  }
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    if (evaluate_word(group, p.relations[r], images) != FiniteGroup::identity()) {
      throw ValidationError("generator images violate relation " + std::to_string(r));
    }
  }
  PairValues values;
  for (const auto& t : nerve.tuples(1)) values[{t[0], t[1]}] = FiniteGroup::identity();
  for (std::size_t k = 0; k < p.generatorEdges.size(); ++k) {
    const auto& e = p.generatorEdges[k];
    values[{nerve.vertexIndex[static_cast<std::size_t>(e[0])], nerve.vertexIndex[static_cast<std::size_t>(e[1])]}] =
        images[k];
  }
  return validate_cocycle(std::move(analysis), std::move(group), std::move(values));
}

EquivalenceResult are_equivalent(const Cocycle1& c1, const Cocycle1& c2, SearchBudget budget) {
  if (!(c1.cover().base() == c2.cover().base())) throw InputError("cocycles live over different bases");
  if (!(c1.group() == c2.group())) throw InputError("cocycles take values in different groups");
  BudgetMeter meter(budget, "cocycle equivalence");
  return JointSearch(c1.cover(), c2.cover()).run(c1, c2, meter);
}

CocycleClasses cocycle_classes(std::shared_ptr<const CoverAnalysis> analysis, const FiniteGroup& group,
                               SearchBudget budget) {
  require_good(*analysis);
  require_connected_nerve(*analysis);
  BudgetMeter meter(budget, "cocycle enumeration");
  const auto layout = pair_layout(analysis->nerve);
  const JointSearch search(analysis->cover, analysis->cover);
  CocycleClasses out;

  std::vector<Element> assignment(layout.pairs.size(), 0);
  auto at = [&](int a, int b) { return assignment[layout.position.at({a, b})]; };
  auto emit = [&] {
    PairValues values;
    for (std::size_t i = 0; i < layout.pairs.size(); ++i) values[layout.pairs[i]] = assignment[i];
    auto c = validate_cocycle(analysis, group, std::move(values));
    ++out.cocycleCount;
    for (std::size_t k = 0; k < out.representatives.size(); ++k) {
      if (search.run(out.representatives[k], c, meter).equivalent) {
        ++out.classSizes[k];
        return;
      }
    }
    out.representatives.push_back(std::move(c));
    out.classSizes.push_back(1);
  };
  auto fill = [&](auto&& self, std::size_t i) -> void {
    if (i == layout.pairs.size()) {
      emit();
      return;
    }
    for (Element e = 0; e < group.order(); ++e) {
      meter.charge();
      assignment[i] = e;
      bool ok = true;
      for (const auto& t : layout.triplesClosedAt[i]) {
        if (group.mul(at(t[0], t[1]), at(t[1], t[2])) != at(t[0], t[2])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
  };
  fill(fill, 0);
  return out;
}

std::size_t count_equivalence_classes(std::shared_ptr<const CoverAnalysis> analysis, const FiniteGroup& group,
                                      SearchBudget budget) {
  return cocycle_classes(std::move(analysis), group, budget).representatives.size();
}

}  // namespace htc
