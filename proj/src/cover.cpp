#include "htc/cover.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "htc/error.hpp"
#include "htc/homology.hpp"

namespace htc {

namespace {

std::vector<std::size_t> intersect(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// cofacets[id] = flat ids of the simplices having simplex `id` as a facet.
std::vector<std::vector<std::size_t>> cofacet_lists(const SimplicialComplex& x) {
  std::vector<std::vector<std::size_t>> up(x.total_count());
  for (int d = 1; d <= x.dimension(); ++d) {
    for (const auto& t : x.simplices(d)) {
      const auto tid = x.flat_index(t);
      for (std::size_t i = 0; i < t.size(); ++i) {
        Simplex f = t;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        up[x.flat_index(f)].push_back(tid);
      }
    }
  }
  return up;
}

// Order complex of an upward-closed family of simplices.
SimplicialComplex order_complex(const SimplicialComplex& x, const std::vector<std::vector<std::size_t>>& up,
                                const std::vector<std::size_t>& family) {
  std::vector<std::string> labels;
  std::map<std::size_t, int> position;
  for (auto id : family) {
    position.emplace(id, static_cast<int>(labels.size()));
    labels.push_back(simplex_label(x, x.flat_simplex(id)));
  }
  std::set<std::size_t> members(family.begin(), family.end());
  std::vector<Simplex> chains;
  Simplex chain;
  auto climb = [&](auto&& self, std::size_t id) -> void {
    chain.push_back(position.at(id));
    bool extended = false;
    for (auto next : up[id]) {
      if (!members.count(next)) continue;
      extended = true;
      self(self, next);
    }
    if (!extended) chains.push_back(chain);
    chain.pop_back();
  };
  for (auto id : family) {
    const auto& s = x.flat_simplex(id);
    bool minimal = true;
    if (s.size() > 1) {
      for (std::size_t i = 0; i < s.size() && minimal; ++i) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        if (members.count(x.flat_index(f))) minimal = false;
      }
    }
    if (minimal) climb(climb, id);
  }
  return SimplicialComplex(std::move(labels), chains);
}

bool is_point_like(const SimplicialComplex& x) {
  if (x.empty()) return false;
  const auto h = homology(x);
  if (h.degrees[0].betti != 1) return false;
  for (std::size_t k = 1; k < h.degrees.size(); ++k) {
    if (h.degrees[k].betti != 0 || !h.degrees[k].torsion.empty()) return false;
  }
  return true;
}

}  // namespace

Cover::Cover(SimplicialComplex base, std::vector<std::string> indices, std::vector<SimplicialComplex> parts)
    : base_(std::move(base)), indices_(std::move(indices)), parts_(std::move(parts)) {
  if (indices_.size() != parts_.size()) throw InputError("cover index and part counts differ");
  if (std::set<std::string>(indices_.begin(), indices_.end()).size() != indices_.size()) {
    throw InputError("cover index names are not distinct");
  }
  const auto total = base_.total_count();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    std::vector<std::size_t> ids;
    try {
      ids = flat_ids_in(parts_[i], base_);
    } catch (const InputError& e) {
      throw InputError("part '" + indices_[i] + "' is not a subcomplex of the base: " + e.what());
    }
    std::vector<bool> inside(total, false);
    for (auto id : ids) inside[id] = true;
    std::vector<bool> interior = inside;
    for (std::size_t id = 0; id < total; ++id) {
      if (inside[id]) continue;
      for (const auto& f : faces_of(base_.flat_simplex(id))) interior[base_.flat_index(f)] = false;
    }
    std::vector<std::size_t> open;
    for (std::size_t id = 0; id < total; ++id) {
      if (interior[id]) open.push_back(id);
    }
    closed_.push_back(std::move(ids));
    interior_.push_back(std::move(open));
  }
}

Cover Cover::from_named_parts(SimplicialComplex base, const std::map<std::string, SimplicialComplex>& parts) {
  std::vector<std::string> names;
  std::vector<SimplicialComplex> complexes;
  for (const auto& [name, part] : parts) {
    names.push_back(name);
    complexes.push_back(part);
  }
  return Cover(std::move(base), std::move(names), std::move(complexes));
}

bool Cover::in_interior(int i, std::size_t flatId) const {
  const auto& open = interior_ids(i);
  return std::binary_search(open.begin(), open.end(), flatId);
}

bool operator==(const Cover& a, const Cover& b) {
  return a.base_ == b.base_ && a.indices_ == b.indices_ && a.parts_ == b.parts_;
}

Simplex NerveComplex::simplex_of(const IndexTuple& t) const {
  Simplex s;
  for (int i : t) {
    const int v = indexVertex.at(static_cast<std::size_t>(i));
    if (v < 0) throw InputError("index has an empty interior and is not a nerve vertex");
    s.push_back(v);
  }
  std::sort(s.begin(), s.end());
  return s;
}

IndexTuple NerveComplex::tuple_of(const Simplex& s) const {
  IndexTuple t;
  for (int v : s) t.push_back(vertexIndex.at(static_cast<std::size_t>(v)));
  std::sort(t.begin(), t.end());
  return t;
}

std::vector<IndexTuple> NerveComplex::tuples(int dim) const {
  std::vector<IndexTuple> out;
  for (const auto& [t, cell] : cells) {
    if (static_cast<int>(t.size()) == dim + 1) out.push_back(t);
  }
  return out;
}

Cover star_cover(const SimplicialComplex& x) {
  std::vector<std::vector<Simplex>> stars(static_cast<std::size_t>(x.vertex_count()));
  for (const auto& s : x.maximal_simplices()) {
    for (int v : s) stars[static_cast<std::size_t>(v)].push_back(s);
  }
  std::vector<SimplicialComplex> parts;
  for (auto& generators : stars) parts.push_back(subcomplex(x, generators));
  return Cover(x, x.vertex_labels(), std::move(parts));
}

NerveComplex cech_nerve(const Cover& u) {
  const auto up = cofacet_lists(u.base());
  NerveComplex nerve;
  nerve.indexVertex.assign(static_cast<std::size_t>(u.size()), -1);
  std::vector<std::string> labels;
  for (int i = 0; i < u.size(); ++i) {
    if (u.interior_ids(i).empty()) continue;
    nerve.indexVertex[static_cast<std::size_t>(i)] = static_cast<int>(labels.size());
    nerve.vertexIndex.push_back(i);
    labels.push_back(u.index(i));
  }
  IndexTuple tuple;
  auto grow = [&](auto&& self, const std::vector<std::size_t>& open) -> void {
    nerve.cells.emplace(tuple, NerveCell{open, order_complex(u.base(), up, open)});
    for (int j = tuple.back() + 1; j < u.size(); ++j) {
      auto next = intersect(open, u.interior_ids(j));
      if (next.empty()) continue;
      tuple.push_back(j);
      self(self, next);
      tuple.pop_back();
    }
  };
  for (int i : nerve.vertexIndex) {
    tuple = {i};
    grow(grow, u.interior_ids(i));
  }
  std::vector<Simplex> simplices;
  for (const auto& [t, cell] : nerve.cells) simplices.push_back(nerve.simplex_of(t));
  nerve.complex = SimplicialComplex(std::move(labels), simplices);
  return nerve;
}

GoodCoverReport is_good_cover(const Cover& u) { return is_good_cover(u, cech_nerve(u)); }

GoodCoverReport is_good_cover(const Cover&, const NerveComplex& nerve) {
  GoodCoverReport report;
  for (const auto& [t, cell] : nerve.cells) {
    const auto components = connected_components(cell.witness);
    if (components.size() != 1) {
      report.failures.push_back({t, std::to_string(components.size()) + " components"});
    } else if (!is_point_like(cell.witness)) {
      report.failures.push_back({t, "not acyclic"});
    }
  }
  report.good = report.failures.empty();
  return report;
}

bool carrier_check(const Cover& u) {
  for (std::size_t id = 0; id < u.base().total_count(); ++id) {
    bool carried = false;
    for (int i = 0; i < u.size() && !carried; ++i) carried = u.in_interior(i, id);
    if (!carried) return false;
  }
  return true;
}

std::vector<std::size_t> uncovered_simplices(const Cover& u) {
  std::vector<bool> covered(u.base().total_count(), false);
  for (int i = 0; i < u.size(); ++i) {
    for (auto id : u.closed_ids(i)) covered[id] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < covered.size(); ++id) {
    if (!covered[id]) out.push_back(id);
  }
  return out;
}

SimplicialMap section_map(const Cover& u) { return section_map(u, cech_nerve(u)); }

SimplicialMap section_map(const Cover& u, const NerveComplex& nerve) {
  const auto sd = barycentric_subdivision(u.base());
  std::vector<int> image;
  image.reserve(sd.carrier.size());
  for (const auto& s : sd.carrier) {
    const auto id = u.base().flat_index(s);
    int target = -1;
    for (int i = 0; i < u.size(); ++i) {
      if (u.in_interior(i, id)) {
        target = nerve.indexVertex[static_cast<std::size_t>(i)];
        break;
      }
    }
    if (target < 0) {
      throw ValidationError("carrier condition fails: simplex lies in no part interior", u.base().labels_of(s));
    }
    image.push_back(target);
  }
  return SimplicialMap(sd.complex, nerve.complex, std::move(image));
}

SimplicialMap forget_map(const Cover& u, const NerveComplex& nerve) {
  const auto stars = star_cover(u.base());
  if (!(stars == u)) throw InputError("forget_map is defined for star covers only");
  std::vector<int> image;
  for (int v = 0; v < nerve.complex.vertex_count(); ++v) {
    image.push_back(*u.base().find_vertex(nerve.complex.label(v)));
  }
  return SimplicialMap(nerve.complex, u.base(), std::move(image));
}

Cover disjoint_union_cover(const Cover& u, const Cover& v) {
  if (!(u.base() == v.base())) throw InputError("covers have different bases");
  std::vector<std::string> names;
  std::vector<SimplicialComplex> parts;
  for (int i = 0; i < u.size(); ++i) {
    names.push_back("1:" + u.index(i));
    parts.push_back(u.part(i));
  }
  for (int i = 0; i < v.size(); ++i) {
    names.push_back("2:" + v.index(i));
    parts.push_back(v.part(i));
  }
  return Cover(u.base(), std::move(names), std::move(parts));
}

std::shared_ptr<const CoverAnalysis> analyze_cover(Cover u) {
  auto nerve = cech_nerve(u);
  auto good = is_good_cover(u, nerve);
  return std::make_shared<const CoverAnalysis>(CoverAnalysis{std::move(u), std::move(nerve), std::move(good)});
}

SimplicialComplex closed_intersection(const Cover& u, const IndexTuple& t) {
  if (t.empty()) return u.base();
  std::vector<std::size_t> ids = u.closed_ids(t.front());
  for (std::size_t k = 1; k < t.size(); ++k) ids = intersect(ids, u.closed_ids(t[k]));
  std::vector<Simplex> simplices;
  for (auto id : ids) simplices.push_back(u.base().flat_simplex(id));
  return subcomplex(u.base(), simplices);
}

}  // namespace htc
