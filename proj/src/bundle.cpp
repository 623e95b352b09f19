#include "htc/bundle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace htc {

namespace {

// Base simplex (positions in base) -> total simplices over it.
std::map<Simplex, std::vector<Simplex>> lifts_by_image(const Bundle& b) {
  std::map<Simplex, std::vector<Simplex>> out;
  for (int d = 0; d <= b.total().dimension(); ++d) {
    for (const auto& s : b.total().simplices(d)) out[b.projection().image(s)].push_back(s);
  }
  return out;
}

std::string strip_prefix(const std::string& label, const std::string& prefix) {
  if (label.rfind(prefix, 0) != 0) throw InputError("label '" + label + "' lacks prefix " + prefix);
  return label.substr(prefix.size());
}

std::set<LabelSimplex> labelled_simplices(const SimplicialComplex& x) {
  std::set<LabelSimplex> out;
  for (int d = 0; d <= x.dimension(); ++d) {
    for (const auto& s : x.simplices(d)) {
      auto l = x.labels_of(s);
      std::sort(l.begin(), l.end());
      out.insert(std::move(l));
    }
  }
  return out;
}

}  // namespace

Bundle::Bundle(SimplicialMap projection, GroupAction action)
    : projection_(std::move(projection)), action_(std::move(action)) {
  const auto& total = projection_.source();
  for (const auto& s : total.maximal_simplices()) {
    if (projection_.image(s).size() != s.size()) {
      throw ValidationError("projection collapses a total simplex", total.labels_of(s));
    }
  }
  fibers_.assign(static_cast<std::size_t>(base().vertex_count()), {});
  for (int x = 0; x < total.vertex_count(); ++x) fibers_[static_cast<std::size_t>(projection_(x))].push_back(x);
  for (int v = 0; v < base().vertex_count(); ++v) {
    if (fibers_[static_cast<std::size_t>(v)].size() != static_cast<std::size_t>(action_.fiber_size())) {
      throw ValidationError("base vertex has " + std::to_string(fibers_[static_cast<std::size_t>(v)].size()) +
                                " total vertices over it, expected " + std::to_string(action_.fiber_size()),
                            {base().label(v)});
    }
  }
}

bool operator==(const Bundle& a, const Bundle& b) {
  return a.total() == b.total() && a.base() == b.base() && a.projection().label_map() == b.projection().label_map() &&
         a.action() == b.action();
}

std::string total_label(const std::string& base, const std::string& fiber) { return base + "|" + fiber; }

Bundle product_bundle(const SimplicialComplex& base, const GroupAction& action) {
  const int f = action.fiber_size();
  std::vector<std::string> labels;
  std::vector<int> proj;
  for (int v = 0; v < base.vertex_count(); ++v) {
    for (int k = 0; k < f; ++k) {
      labels.push_back(total_label(base.label(v), action.fiber()[static_cast<std::size_t>(k)]));
      proj.push_back(v);
    }
  }
  std::vector<Simplex> simplices;
  for (const auto& s : base.maximal_simplices()) {
    for (int k = 0; k < f; ++k) {
      Simplex t;
      for (int v : s) t.push_back(v * f + k);
      simplices.push_back(std::move(t));
    }
  }
  SimplicialComplex total(std::move(labels), simplices);
  return Bundle(SimplicialMap(std::move(total), base, std::move(proj)), action);
}

Bundle total_space(const Cocycle1& c, const GroupAction& action) {
  if (!(action.group() == c.group())) throw InputError("action group differs from the cocycle group");
  const auto& nerve = c.nerve();
  const int f = action.fiber_size();
  auto index = [&](int v) { return nerve.vertexIndex[static_cast<std::size_t>(v)]; };
  std::vector<std::string> labels;
  std::vector<int> proj;
  for (int v = 0; v < nerve.complex.vertex_count(); ++v) {
    for (int k = 0; k < f; ++k) {
      labels.push_back(total_label(nerve.complex.label(v), action.fiber()[static_cast<std::size_t>(k)]));
      proj.push_back(v);
    }
  }
  std::vector<Simplex> simplices;
  for (const auto& s : nerve.complex.maximal_simplices()) {
    const int last = s.back();
    for (int k = 0; k < f; ++k) {
      Simplex t;
      for (int v : s) t.push_back(v * f + action.act(c.value(index(v), index(last)), k));
      std::sort(t.begin(), t.end());
      simplices.push_back(std::move(t));
    }
  }
  SimplicialComplex total(std::move(labels), simplices);
  return Bundle(SimplicialMap(std::move(total), nerve.complex, std::move(proj)), action);
}

Bundle skeletal_construction(const Cocycle1& c, const GroupAction& action) {
  if (!(action.group() == c.group())) throw InputError("action group differs from the cocycle group");
  const auto& nerve = c.nerve();
  const int f = action.fiber_size();
  auto index = [&](int v) { return nerve.vertexIndex[static_cast<std::size_t>(v)]; };

  std::vector<std::string> labels;
  std::vector<int> proj;
  // E_0: one copy of the fiber per nerve vertex.
  std::map<std::pair<Simplex, int>, std::vector<int>> cells;
  for (int v = 0; v < nerve.complex.vertex_count(); ++v) {
    for (int k = 0; k < f; ++k) {
      cells[{{v}, k}] = {static_cast<int>(labels.size())};
      labels.push_back(total_label(nerve.complex.label(v), action.fiber()[static_cast<std::size_t>(k)]));
      proj.push_back(v);
    }
  }
  std::vector<Simplex> attached;
  for (int n = 1; n <= nerve.complex.dimension(); ++n) {
    for (const auto& sigma : nerve.complex.simplices(n)) {
      const auto top = static_cast<std::size_t>(n);
      const Element lastEdge = c.value(index(sigma[top - 1]), index(sigma[top]));
      for (int k = 0; k < f; ++k) {
        // Boundary lift assembly: facet i keeps the fiber point at the last
        // vertex, except the last facet which moves it along the last edge.
        std::vector<int> cell(top + 1, -1);
        for (std::size_t i = 0; i <= top; ++i) {
          Simplex facet = sigma;
          facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
          const int coord = i == top ? action.act(lastEdge, k) : k;
          const auto& image = cells.at({facet, coord});
          for (std::size_t j = 0, pos = 0; j <= top; ++j) {
            if (j == i) continue;
            const int vertex = image[pos++];
            if (cell[j] >= 0 && cell[j] != vertex) {
              throw ValidationError("boundary lifts do not assemble", nerve.complex.labels_of(sigma));
            }
            cell[j] = vertex;
          }
        }
        cells[{sigma, k}] = cell;
        Simplex s(cell.begin(), cell.end());
        std::sort(s.begin(), s.end());
        attached.push_back(std::move(s));
      }
    }
  }
  for (const auto& [key, cell] : cells) {
    if (key.first.size() == 1) attached.push_back(cell);
  }
  SimplicialComplex total(std::move(labels), attached);
  return Bundle(SimplicialMap(std::move(total), nerve.complex, std::move(proj)), action);
}

Bundle pullback(const Bundle& b, const SimplicialMap& f) {
  if (!(f.target() == b.base())) throw InputError("map target differs from the bundle base");
  const auto& x = f.source();
  std::vector<int> toBase(static_cast<std::size_t>(f.target().vertex_count()));
  for (int w = 0; w < f.target().vertex_count(); ++w) toBase[static_cast<std::size_t>(w)] = *b.base().find_vertex(f.target().label(w));

  std::vector<std::string> labels;
  std::vector<int> proj;
  std::map<std::pair<int, int>, int> vertexOf;  // (x, total vertex) -> new vertex
  for (int v = 0; v < x.vertex_count(); ++v) {
    for (int e : b.fiber_over(toBase[static_cast<std::size_t>(f(v))])) {
      vertexOf[{v, e}] = static_cast<int>(labels.size());
      labels.push_back(total_label(x.label(v), b.total().label(e)));
      proj.push_back(v);
    }
  }
  const auto lifts = lifts_by_image(b);
  std::vector<Simplex> simplices;
  for (const auto& s : x.maximal_simplices()) {
    Simplex image;
    for (int v : s) image.push_back(toBase[static_cast<std::size_t>(f(v))]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const auto it = lifts.find(image);
    if (it == lifts.end()) continue;
    for (const auto& lift : it->second) {
      std::map<int, int> over;
      for (int e : lift) over[b.projection()(e)] = e;
      Simplex t;
      for (int v : s) t.push_back(vertexOf.at({v, over.at(toBase[static_cast<std::size_t>(f(v))])}));
      std::sort(t.begin(), t.end());
      simplices.push_back(std::move(t));
    }
  }
  SimplicialComplex total(std::move(labels), simplices);
  return Bundle(SimplicialMap(std::move(total), x, std::move(proj)), b.action());
}

Bundle restrict_bundle(const Bundle& b, const SimplicialComplex& sub) {
  std::vector<Simplex> baseSimplices;
  for (const auto& l : sub.maximal_label_simplices()) baseSimplices.push_back(b.base().simplex_of(l));
  const auto base = subcomplex(b.base(), baseSimplices);
  if (!(base == sub)) throw InputError("not a subcomplex of the bundle base");
  std::vector<Simplex> kept;
  std::vector<bool> baseVertex(static_cast<std::size_t>(b.base().vertex_count()), false);
  for (int v = 0; v < sub.vertex_count(); ++v) baseVertex[static_cast<std::size_t>(*b.base().find_vertex(sub.label(v)))] = true;
  for (int v = 0; v < b.base().vertex_count(); ++v) {
    if (!baseVertex[static_cast<std::size_t>(v)]) continue;
    for (int e : b.fiber_over(v)) kept.push_back({e});
  }
  for (int d = 1; d <= b.total().dimension(); ++d) {
    for (const auto& s : b.total().simplices(d)) {
      const auto image = b.projection().image(s);
      const bool over = std::all_of(image.begin(), image.end(), [&](int v) { return baseVertex[static_cast<std::size_t>(v)]; });
      if (over && base.contains(base.simplex_of(b.base().labels_of(image)))) kept.push_back(s);
    }
  }
  auto total = subcomplex(b.total(), kept);
  std::map<std::string, std::string> proj;
  for (int e = 0; e < total.vertex_count(); ++e) {
    const int original = *b.total().find_vertex(total.label(e));
    proj[total.label(e)] = b.base().label(b.projection()(original));
  }
  return Bundle(SimplicialMap::from_labels(std::move(total), base, proj), b.action());
}

std::optional<std::vector<int>> find_isomorphism(const Bundle& a, const Bundle& b, SearchBudget budget) {
  if (!(a.base() == b.base())) throw InputError("bundles live over different bases");
  if (a.fiber_size() != b.fiber_size()) return std::nullopt;
  for (int d = 0; d <= std::max(a.total().dimension(), b.total().dimension()); ++d) {
    if (a.total().count(d) != b.total().count(d)) return std::nullopt;
  }
  BudgetMeter meter(budget, "bundle isomorphism");
  const auto& ta = a.total();
  const auto& tb = b.total();
  const int n = ta.vertex_count();

  // Visit order: breadth first through each component, least vertex first.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& e : ta.simplices(1)) {
    adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  std::vector<int> order;
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  for (int s = 0; s < n; ++s) {
    if (rank[static_cast<std::size_t>(s)] >= 0) continue;
    rank[static_cast<std::size_t>(s)] = static_cast<int>(order.size());
    order.push_back(s);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      for (int w : adj[static_cast<std::size_t>(order[head])]) {
        if (rank[static_cast<std::size_t>(w)] < 0) {
          rank[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
          order.push_back(w);
        }
      }
    }
  }
  // Maximal simplices checked once their last vertex in visit order is placed.
  std::vector<std::vector<Simplex>> closes(static_cast<std::size_t>(n));
  for (const auto& s : ta.maximal_simplices()) {
    int last = s.front();
    for (int v : s) {
      if (rank[static_cast<std::size_t>(v)] > rank[static_cast<std::size_t>(last)]) last = v;
    }
    closes[static_cast<std::size_t>(last)].push_back(s);
  }
  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    const int v = a.projection()(x);
    candidates[static_cast<std::size_t>(x)] = b.fiber_over(*b.base().find_vertex(a.base().label(v)));
  }

  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(tb.vertex_count()), false);
  auto place = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const int x = order[i];
    for (int y : candidates[static_cast<std::size_t>(x)]) {
      meter.charge();
      if (used[static_cast<std::size_t>(y)]) continue;
      image[static_cast<std::size_t>(x)] = y;
      bool ok = true;
      for (int w : adj[static_cast<std::size_t>(x)]) {
        const int iw = image[static_cast<std::size_t>(w)];
        if (iw >= 0 && rank[static_cast<std::size_t>(w)] < rank[static_cast<std::size_t>(x)] &&
            !tb.contains(iw < y ? Simplex{iw, y} : Simplex{y, iw})) {
          ok = false;
          break;
        }
      }
      for (const auto& s : closes[static_cast<std::size_t>(x)]) {
        if (!ok) break;
        Simplex t;
        for (int v : s) t.push_back(image[static_cast<std::size_t>(v)]);
        std::sort(t.begin(), t.end());
        ok = tb.contains(t);
      }
      if (ok) {
        used[static_cast<std::size_t>(y)] = true;
        if (self(self, i + 1)) return true;
        used[static_cast<std::size_t>(y)] = false;
      }
      image[static_cast<std::size_t>(x)] = -1;
    }
    return false;
  };
  if (!place(place, 0)) return std::nullopt;
  return image;
}

bool TrivializationReport::all() const {
  return std::all_of(trivial.begin(), trivial.end(), [](bool t) { return t; });
}

TrivializationReport local_trivialization_check(const Bundle& b, const Cover& u, SearchBudget budget) {
  if (!(u.base() == b.base())) throw InputError("cover and bundle have different bases");
  TrivializationReport r;
  for (int i = 0; i < u.size(); ++i) {
    const auto local = restrict_bundle(b, u.part(i));
    const auto product = product_bundle(local.base(), b.action());
    r.trivial.push_back(find_isomorphism(local, product, budget).has_value());
  }
  return r;
}

Bundle patch_bundles(const Cover& u, const std::vector<Bundle>& locals) {
  if (locals.size() != static_cast<std::size_t>(u.size())) throw InputError("one local bundle per cover index is required");
  if (locals.empty()) throw InputError("nothing to patch");
  for (int i = 0; i < u.size(); ++i) {
    if (!(locals[static_cast<std::size_t>(i)].base() == u.part(i))) {
      throw InputError("local bundle '" + u.index(i) + "' does not live over its part");
    }
  }
  for (int i = 0; i < u.size(); ++i) {
    for (int j = i + 1; j < u.size(); ++j) {
      const auto overlap = closed_intersection(u, {i, j});
      if (overlap.empty()) continue;
      const auto ri = restrict_bundle(locals[static_cast<std::size_t>(i)], overlap);
      const auto rj = restrict_bundle(locals[static_cast<std::size_t>(j)], overlap);
      if (ri == rj) continue;
      const auto si = labelled_simplices(ri.total());
      const auto sj = labelled_simplices(rj.total());
      std::vector<LabelSimplex> diff;
      std::set_symmetric_difference(si.begin(), si.end(), sj.begin(), sj.end(), std::back_inserter(diff));
      throw ValidationError("local bundles '" + u.index(i) + "' and '" + u.index(j) + "' disagree on their overlap",
                            diff.empty() ? LabelSimplex{} : diff.front());
    }
  }
  const auto& action = locals.front().action();
  for (const auto& l : locals) {
    if (!(l.action() == action)) throw InputError("local bundles use different fiber actions");
  }

  std::map<std::string, std::string> proj;
  std::vector<LabelSimplex> simplices;
  for (const auto& l : locals) {
    for (const auto& [e, v] : l.projection().label_map()) proj[e] = v;
    for (auto& s : l.total().maximal_label_simplices()) simplices.push_back(std::move(s));
  }
  const auto& base = u.base();
  std::vector<std::pair<std::pair<int, std::string>, std::string>> keyed;
  for (const auto& [e, v] : proj) keyed.push_back({{*base.find_vertex(v), e}, e});
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::string> order;
  for (const auto& k : keyed) order.push_back(k.second);
  auto total = SimplicialComplex::from_labels(std::move(order), simplices);
  Bundle out(SimplicialMap::from_labels(std::move(total), base, proj), action);
  return out;
}

CylinderBundle mapping_cylinder_bundle(const Bundle& e, const Bundle& e2, const SimplicialMap& phi) {
  if (!(e.base() == e2.base())) throw InputError("bundles live over different bases");
  if (!(phi.source() == e.total()) || !(phi.target() == e2.total())) throw InputError("map does not go between the totals");
  const auto map = SimplicialMap::from_labels(e.total(), e2.total(), phi.label_map());
  const auto& base = e.base();
  auto baseOf2 = [&](int y) { return *base.find_vertex(e2.base().label(e2.projection()(y))); };
  for (int v = 0; v < base.vertex_count(); ++v) {
    std::set<int> images;
    for (int x : e.fiber_over(v)) {
      if (baseOf2(map(x)) != v) throw ValidationError("map does not preserve fibers", {e.total().label(x)});
      images.insert(map(x));
    }
    if (images.size() != e.fiber_over(v).size()) {
      throw ValidationError("map is not bijective on a fiber", {base.label(v)});
    }
  }
  auto prism = mapping_cylinder(identity_map(base));
  std::vector<int> rank(static_cast<std::size_t>(e.total().vertex_count()));
  std::vector<int> byBase(rank.size());
  std::iota(byBase.begin(), byBase.end(), 0);
  std::stable_sort(byBase.begin(), byBase.end(),
                   [&](int x, int y) { return e.projection()(x) < e.projection()(y); });
  for (std::size_t r = 0; r < byBase.size(); ++r) rank[static_cast<std::size_t>(byBase[r])] = static_cast<int>(r);
  auto cyl = mapping_cylinder(map, rank);

  std::map<std::string, std::string> proj;
  for (int x = 0; x < e.total().vertex_count(); ++x) {
    proj["0:" + e.total().label(x)] = "0:" + base.label(e.projection()(x));
  }
  for (int y = 0; y < e2.total().vertex_count(); ++y) {
    proj["1:" + e2.total().label(y)] = "1:" + e2.base().label(e2.projection()(y));
  }
  Bundle b(SimplicialMap::from_labels(std::move(cyl.complex), prism.complex, proj), e2.action());
  return {std::move(b), std::move(prism)};
}

Bundle restrict_to_end(const CylinderBundle& c, int end) {
  if (end != 0 && end != 1) throw InputError("cylinder end must be 0 or 1");
  const std::string prefix = std::to_string(end) + ":";
  const auto& prismBase = c.bundle.base();
  std::vector<Simplex> endSimplices;
  for (const auto& s : prismBase.maximal_simplices()) {
    Simplex t;
    for (int v : s) {
      if (prismBase.label(v).rfind(prefix, 0) == 0) t.push_back(v);
    }
    if (!t.empty()) endSimplices.push_back(std::move(t));
  }
  const auto r = restrict_bundle(c.bundle, subcomplex(prismBase, endSimplices));
  auto strip = [&](const SimplicialComplex& x) {
    std::vector<std::string> labels;
    for (const auto& l : x.vertex_labels()) labels.push_back(strip_prefix(l, prefix));
    std::vector<LabelSimplex> simplices;
    for (auto s : x.maximal_label_simplices()) {
      for (auto& l : s) l = strip_prefix(l, prefix);
      simplices.push_back(std::move(s));
    }
    return SimplicialComplex::from_labels(std::move(labels), simplices);
  };
  std::map<std::string, std::string> proj;
  for (const auto& [x, v] : r.projection().label_map()) proj[strip_prefix(x, prefix)] = strip_prefix(v, prefix);
  return Bundle(SimplicialMap::from_labels(strip(r.total()), strip(r.base()), proj), r.action());
}

}  // namespace htc
