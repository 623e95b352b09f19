#include "htc/simplicial.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "htc/error.hpp"

namespace htc {

namespace {

const std::vector<Simplex> kNoSimplices;

void check_distinct(const Simplex& sorted, const std::vector<std::string>& labels) {
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw ValidationError("repeated vertex inside a simplex", {labels.at(static_cast<std::size_t>(*dup))});
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertexOrder, const std::vector<Simplex>& simplices)
    : labels_(std::move(vertexOrder)) {
  for (int v = 0; v < vertex_count(); ++v) {
    if (!index_.emplace(labels_[static_cast<std::size_t>(v)], v).second) {
      throw InputError("duplicate vertex label '" + labels_[static_cast<std::size_t>(v)] + "'");
    }
  }
  std::vector<std::set<Simplex>> levels;
  auto insert = [&](const Simplex& s) {
    const auto dim = s.size() - 1;
    if (levels.size() <= dim) levels.resize(dim + 1);
    levels[dim].insert(s);
  };
  for (int v = 0; v < vertex_count(); ++v) insert({v});
  for (Simplex s : simplices) {
    if (s.empty()) throw InputError("empty simplex");
    for (int v : s) {
      if (v < 0 || v >= vertex_count()) throw InputError("vertex position out of range");
    }
    std::sort(s.begin(), s.end());
    check_distinct(s, labels_);
    if (levels.size() >= s.size() && levels[s.size() - 1].count(s)) continue;
    for (auto& f : faces_of(s)) insert(f);
  }
  byDim_.reserve(levels.size());
  offsets_.push_back(0);
  for (auto& level : levels) {
    byDim_.emplace_back(level.begin(), level.end());
    offsets_.push_back(offsets_.back() + byDim_.back().size());
  }
}

SimplicialComplex SimplicialComplex::from_labels(std::vector<std::string> vertexOrder,
                                                 const std::vector<LabelSimplex>& simplices) {
  std::map<std::string, int, std::less<>> index;
  for (std::size_t i = 0; i < vertexOrder.size(); ++i) index.emplace(vertexOrder[i], static_cast<int>(i));
  std::vector<Simplex> positional;
  positional.reserve(simplices.size());
  for (const auto& labels : simplices) {
    Simplex s;
    for (const auto& l : labels) {
      auto it = index.find(l);
      if (it == index.end()) throw InputError("unknown vertex label '" + l + "'");
      s.push_back(it->second);
    }
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    check_distinct(sorted, vertexOrder);
    positional.push_back(std::move(s));
  }
  return SimplicialComplex(std::move(vertexOrder), positional);
}

std::optional<int> SimplicialComplex::find_vertex(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LabelSimplex SimplicialComplex::labels_of(const Simplex& s) const {
  LabelSimplex out;
  out.reserve(s.size());
  for (int v : s) out.push_back(label(v));
  return out;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  if (dim < 0 || dim > dimension()) return kNoSimplices;
  return byDim_[static_cast<std::size_t>(dim)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty()) return std::nullopt;
  const auto& level = simplices(static_cast<int>(s.size()) - 1);
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

std::size_t SimplicialComplex::flat_index(const Simplex& s) const {
  auto idx = index_of(s);
  if (!idx) throw InputError("simplex not in complex");
  return offsets_[s.size() - 1] + *idx;
}

const Simplex& SimplicialComplex::flat_simplex(std::size_t id) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
  if (it == offsets_.begin() || it == offsets_.end()) throw InputError("flat simplex id out of range");
  const auto dim = static_cast<std::size_t>(it - offsets_.begin() - 1);
  return byDim_[dim][id - offsets_[dim]];
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  // A simplex is maximal when no simplex one dimension up contains it.
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    std::set<Simplex> covered;
    for (const auto& t : simplices(d + 1)) {
      for (std::size_t i = 0; i < t.size(); ++i) {
        Simplex f = t;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        covered.insert(std::move(f));
      }
    }
    for (const auto& s : simplices(d)) {
      if (!covered.count(s)) out.push_back(s);
    }
  }
  return out;
}

std::vector<LabelSimplex> SimplicialComplex::maximal_label_simplices() const {
  std::vector<LabelSimplex> out;
  for (const auto& s : maximal_simplices()) out.push_back(labels_of(s));
  return out;
}

Simplex SimplicialComplex::simplex_of(const LabelSimplex& labels) const {
  Simplex s;
  s.reserve(labels.size());
  for (const auto& l : labels) {
    auto v = find_vertex(l);
    if (!v) throw InputError("unknown vertex label '" + l + "'");
    s.push_back(*v);
  }
  std::sort(s.begin(), s.end());
  return s;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count() || a.dimension() != b.dimension()) return false;
  for (int d = 0; d <= a.dimension(); ++d) {
    if (a.count(d) != b.count(d)) return false;
  }
  for (int d = 0; d <= a.dimension(); ++d) {
    for (const auto& s : a.simplices(d)) {
      Simplex t;
      for (int v : s) {
        auto w = b.find_vertex(a.label(v));
        if (!w) return false;
        t.push_back(*w);
      }
      std::sort(t.begin(), t.end());
      if (!b.contains(t)) return false;
    }
  }
  return true;
}

SimplicialComplex build_complex(const std::vector<LabelSimplex>& maximalSimplices) {
  std::set<std::string> vertices;
  for (const auto& s : maximalSimplices) {
    if (s.empty()) throw InputError("empty simplex");
    vertices.insert(s.begin(), s.end());
  }
  return SimplicialComplex::from_labels({vertices.begin(), vertices.end()}, maximalSimplices);
}

SimplicialComplex subcomplex(const SimplicialComplex& parent, const std::vector<Simplex>& simplices) {
  std::vector<int> used;
  for (const auto& s : simplices) {
    if (!parent.contains(s)) throw InputError("subcomplex simplex is not a simplex of the parent");
    used.insert(used.end(), s.begin(), s.end());
  }
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<int> position(static_cast<std::size_t>(parent.vertex_count()), -1);
  std::vector<std::string> labels;
  for (int v : used) {
    position[static_cast<std::size_t>(v)] = static_cast<int>(labels.size());
    labels.push_back(parent.label(v));
  }
  std::vector<Simplex> renumbered;
  renumbered.reserve(simplices.size());
  for (const auto& s : simplices) {
    Simplex t;
    for (int v : s) t.push_back(position[static_cast<std::size_t>(v)]);
    renumbered.push_back(std::move(t));
  }
  return SimplicialComplex(std::move(labels), renumbered);
}

std::vector<std::size_t> flat_ids_in(const SimplicialComplex& sub, const SimplicialComplex& parent) {
  std::vector<int> position(static_cast<std::size_t>(sub.vertex_count()));
  for (int v = 0; v < sub.vertex_count(); ++v) {
    auto w = parent.find_vertex(sub.label(v));
    if (!w) throw InputError("vertex '" + sub.label(v) + "' is not in the parent complex");
    position[static_cast<std::size_t>(v)] = *w;
  }
  std::vector<std::size_t> ids;
  ids.reserve(sub.total_count());
  for (int d = 0; d <= sub.dimension(); ++d) {
    for (const auto& s : sub.simplices(d)) {
      Simplex t;
      for (int v : s) t.push_back(position[static_cast<std::size_t>(v)]);
      std::sort(t.begin(), t.end());
      auto idx = parent.index_of(t);
      if (!idx) throw InputError("simplex of the subcomplex is not in the parent complex");
      ids.push_back(parent.flat_index(t));
    }
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& parent) {
  try {
    flat_ids_in(sub, parent);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

std::vector<Simplex> faces_of(const Simplex& s) {
  std::vector<Simplex> out;
  const auto n = s.size();
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) f.push_back(s[i]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

long long euler_characteristic(const SimplicialComplex& x) {
  long long chi = 0;
  for (int d = 0; d <= x.dimension(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(x.count(d));
  }
  return chi;
}

std::vector<std::vector<int>> connected_components(const SimplicialComplex& x) {
  const auto n = static_cast<std::size_t>(x.vertex_count());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& e : x.simplices(1)) {
    int a = find(e[0]);
    int b = find(e[1]);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::map<int, std::vector<int>> groups;
  for (int v = 0; v < x.vertex_count(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

SimplicialMap::SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<int> vertexMap)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(vertexMap)) {
  if (static_cast<int>(map_.size()) != source_.vertex_count()) {
    throw InputError("vertex map size does not match the source complex");
  }
  for (int w : map_) {
    if (w < 0 || w >= target_.vertex_count()) throw InputError("vertex map image out of range");
  }
  for (const auto& s : source_.maximal_simplices()) {
    if (!target_.contains(image(s))) {
      auto witness = source_.labels_of(s);
      throw ValidationError("image of a source simplex is not a target simplex", witness);
    }
  }
}

SimplicialMap SimplicialMap::from_labels(SimplicialComplex source, SimplicialComplex target,
                                         const std::map<std::string, std::string>& vertexMap) {
  std::vector<int> positional(static_cast<std::size_t>(source.vertex_count()), -1);
  for (const auto& [from, to] : vertexMap) {
    auto v = source.find_vertex(from);
    if (!v) throw InputError("vertex map names unknown source vertex '" + from + "'");
    auto w = target.find_vertex(to);
    if (!w) throw InputError("vertex map names unknown target vertex '" + to + "'");
    positional[static_cast<std::size_t>(*v)] = *w;
  }
  for (int v = 0; v < source.vertex_count(); ++v) {
    if (positional[static_cast<std::size_t>(v)] < 0) {
      throw InputError("vertex map misses source vertex '" + source.label(v) + "'");
    }
  }
  return SimplicialMap(std::move(source), std::move(target), std::move(positional));
}

Simplex SimplicialMap::image(const Simplex& s) const {
  Simplex out;
  out.reserve(s.size());
  for (int v : s) out.push_back((*this)(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<std::string, std::string> SimplicialMap::label_map() const {
  std::map<std::string, std::string> out;
  for (int v = 0; v < source_.vertex_count(); ++v) out.emplace(source_.label(v), target_.label((*this)(v)));
  return out;
}

SimplicialMap identity_map(const SimplicialComplex& x) {
  std::vector<int> id(static_cast<std::size_t>(x.vertex_count()));
  std::iota(id.begin(), id.end(), 0);
  return SimplicialMap(x, x, std::move(id));
}

SimplicialMap compose(const SimplicialMap& second, const SimplicialMap& first) {
  if (!(first.target() == second.source())) throw InputError("cannot compose maps: target and source differ");
  std::vector<int> m;
  m.reserve(first.vertex_map().size());
  for (int v = 0; v < first.source().vertex_count(); ++v) {
    auto mid = second.source().find_vertex(first.target().label(first(v)));
    m.push_back(second(*mid));
  }
  return SimplicialMap(first.source(), second.target(), std::move(m));
}

std::string simplex_label(const SimplicialComplex& x, const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += x.label(s[i]);
  }
  out += '}';
  return out;
}

Subdivision barycentric_subdivision(const SimplicialComplex& x) {
  const std::size_t n = x.total_count();
  Subdivision sd;
  std::vector<std::string> labels;
  labels.reserve(n);
  sd.carrier.reserve(n);
  for (std::size_t id = 0; id < n; ++id) {
    sd.carrier.push_back(x.flat_simplex(id));
    labels.push_back(simplex_label(x, sd.carrier.back()));
  }
  // Maximal chains: extend each chain by a cofacet until none exists.
  std::vector<std::vector<int>> cofacets(n);
  for (int d = 1; d <= x.dimension(); ++d) {
    for (const auto& t : x.simplices(d)) {
      const auto tid = static_cast<int>(x.flat_index(t));
      for (std::size_t i = 0; i < t.size(); ++i) {
        Simplex f = t;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        cofacets[x.flat_index(f)].push_back(tid);
      }
    }
  }
  std::vector<Simplex> chains;
  std::vector<int> chain;
  auto extend = [&](auto&& self, int top) -> void {
    chain.push_back(top);
    const auto& up = cofacets[static_cast<std::size_t>(top)];
    if (up.empty()) {
      chains.push_back(chain);
    } else {
      for (int next : up) self(self, next);
    }
    chain.pop_back();
  };
  for (const auto& v : x.simplices(0)) extend(extend, static_cast<int>(x.flat_index(v)));
  sd.complex = SimplicialComplex(std::move(labels), chains);
  return sd;
}

MappingCylinder mapping_cylinder(const SimplicialMap& f) {
  std::vector<int> rank(static_cast<std::size_t>(f.source().vertex_count()));
  std::iota(rank.begin(), rank.end(), 0);
  return mapping_cylinder(f, rank);
}

MappingCylinder mapping_cylinder(const SimplicialMap& f, const std::vector<int>& rank) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  if (static_cast<int>(rank.size()) != src.vertex_count()) throw InputError("rank size does not match source");
  const int ns = src.vertex_count();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(ns + tgt.vertex_count()));
  for (int v = 0; v < ns; ++v) labels.push_back("0:" + src.label(v));
  for (int w = 0; w < tgt.vertex_count(); ++w) labels.push_back("1:" + tgt.label(w));

  std::vector<Simplex> cells;
  for (const auto& t : tgt.maximal_simplices()) {
    Simplex c;
    for (int w : t) c.push_back(ns + w);
    cells.push_back(std::move(c));
  }
  for (const auto& s : src.maximal_simplices()) {
    Simplex ordered = s;
    std::sort(ordered.begin(), ordered.end(), [&](int a, int b) {
      return rank[static_cast<std::size_t>(a)] < rank[static_cast<std::size_t>(b)];
    });
    // Prism cell i: v_0..v_i at end 0, f(v_i)..f(v_k) at end 1 (duplicates collapse).
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      Simplex c;
      for (std::size_t j = 0; j <= i; ++j) c.push_back(ordered[j]);
      for (std::size_t j = i; j < ordered.size(); ++j) c.push_back(ns + f(ordered[j]));
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
      cells.push_back(std::move(c));
    }
  }
  SimplicialComplex m(std::move(labels), cells);
  std::vector<int> end0(static_cast<std::size_t>(ns));
  std::iota(end0.begin(), end0.end(), 0);
  std::vector<int> end1(static_cast<std::size_t>(tgt.vertex_count()));
  std::iota(end1.begin(), end1.end(), ns);
  return MappingCylinder{m, SimplicialMap(src, m, std::move(end0)), SimplicialMap(tgt, m, std::move(end1))};
}

Pi1Presentation pi1_presentation(const SimplicialComplex& x, int basepoint) {
  if (basepoint < 0 || basepoint >= x.vertex_count()) throw InputError("basepoint is not a vertex");
  const auto n = static_cast<std::size_t>(x.vertex_count());
  std::vector<std::vector<int>> adjacent(n);
  for (const auto& e : x.simplices(1)) {
    adjacent[static_cast<std::size_t>(e[0])].push_back(e[1]);
    adjacent[static_cast<std::size_t>(e[1])].push_back(e[0]);
  }
  for (auto& a : adjacent) std::sort(a.begin(), a.end());

  Pi1Presentation p;
  p.basepoint = basepoint;
  p.treeParent.assign(n, -1);
  p.treeParent[static_cast<std::size_t>(basepoint)] = basepoint;
  std::deque<int> queue{basepoint};
  std::set<Simplex> tree;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : adjacent[static_cast<std::size_t>(v)]) {
      if (p.treeParent[static_cast<std::size_t>(w)] >= 0) continue;
      p.treeParent[static_cast<std::size_t>(w)] = v;
      tree.insert({std::min(v, w), std::max(v, w)});
      queue.push_back(w);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (p.treeParent[v] < 0) throw ValidationError("complex is disconnected", {x.label(static_cast<int>(v))});
  }

  std::map<Simplex, int> generatorOf;
  for (const auto& e : x.simplices(1)) {
    if (tree.count(e)) continue;
    generatorOf.emplace(e, p.generatorCount++);
    p.generatorEdges.push_back(e);
  }
  auto letter = [&](int a, int b, std::vector<int>& word) {
    // Edge traversed from a to b.
    Simplex e{std::min(a, b), std::max(a, b)};
    auto it = generatorOf.find(e);
    if (it == generatorOf.end()) return;
    word.push_back(a < b ? it->second + 1 : -(it->second + 1));
  };
  for (const auto& t : x.simplices(2)) {
    std::vector<int> word;
    letter(t[0], t[1], word);
    letter(t[1], t[2], word);
    letter(t[2], t[0], word);
    p.relations.push_back(std::move(word));
  }
  return p;
}

}  // namespace htc
