#pragma once

// Finite abstract simplicial complexes and simplicial maps.
//
// Vertices carry opaque string labels and a fixed total order (their
// position).  Simplices are stored as ascending vectors of vertex positions,
// grouped by dimension and sorted lexicographically, so every query and every
// derived construction is deterministic.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace htc {

/// Ascending list of vertex positions.
using Simplex = std::vector<int>;

/// Label list of a maximal simplex as it appears in input documents.
using LabelSimplex = std::vector<std::string>;

class SimplicialComplex {
 public:
  /// The empty complex.
  SimplicialComplex() = default;

  /// Downward closure of `simplices` over the vertex order `vertexOrder`.
  /// Every listed vertex becomes a 0-simplex.  Throws ValidationError on a
  /// repeated vertex inside one simplex, InputError on duplicate labels or
  /// positions out of range.
  SimplicialComplex(std::vector<std::string> vertexOrder, const std::vector<Simplex>& simplices);

  /// Same, with simplices given by label.
  static SimplicialComplex from_labels(std::vector<std::string> vertexOrder,
                                       const std::vector<LabelSimplex>& simplices);

  int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }
  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::optional<int> find_vertex(std::string_view label) const;
  LabelSimplex labels_of(const Simplex& s) const;

  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(byDim_.size()) - 1; }
  bool empty() const noexcept { return labels_.empty(); }

  /// Simplices of dimension `dim` (empty list when out of range).
  const std::vector<Simplex>& simplices(int dim) const;
  std::size_t count(int dim) const { return simplices(dim).size(); }

  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  /// Position of `s` within simplices(dim(s)).
  std::optional<std::size_t> index_of(const Simplex& s) const;

  /// Flat numbering of all simplices: by dimension, then lexicographic.
  std::size_t total_count() const noexcept { return offsets_.empty() ? 0 : offsets_.back(); }
  std::size_t flat_index(const Simplex& s) const;
  const Simplex& flat_simplex(std::size_t id) const;

  std::vector<Simplex> maximal_simplices() const;
  std::vector<LabelSimplex> maximal_label_simplices() const;

  /// Simplex given by labels, positions sorted.  Throws InputError on unknown labels.
  Simplex simplex_of(const LabelSimplex& labels) const;

  /// Equality of labeled simplex sets; the vertex order is not compared.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);

 private:
  std::vector<std::string> labels_;
  std::map<std::string, int, std::less<>> index_;
  std::vector<std::vector<Simplex>> byDim_;
  std::vector<std::size_t> offsets_;
};

/// Downward closure of the given maximal simplices; vertices ordered by label.
SimplicialComplex build_complex(const std::vector<LabelSimplex>& maximalSimplices);

/// Subcomplex of `parent` spanned by the given simplices, inheriting its vertex order.
SimplicialComplex subcomplex(const SimplicialComplex& parent, const std::vector<Simplex>& simplices);

/// True when every simplex of `sub` (by label) is a simplex of `parent`.
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& parent);

/// Positions in `parent` of the simplices of `sub`; throws InputError when
/// `sub` is not a subcomplex.
std::vector<std::size_t> flat_ids_in(const SimplicialComplex& sub, const SimplicialComplex& parent);

/// Every nonempty face of `s`, including `s` itself.
std::vector<Simplex> faces_of(const Simplex& s);

long long euler_characteristic(const SimplicialComplex& x);

/// Connected components as lists of vertex positions (each ascending, ordered by least vertex).
std::vector<std::vector<int>> connected_components(const SimplicialComplex& x);

class SimplicialMap {
 public:
  /// Validates that the image of every source simplex is a target simplex.
  SimplicialMap(SimplicialComplex source, SimplicialComplex target, std::vector<int> vertexMap);

  static SimplicialMap from_labels(SimplicialComplex source, SimplicialComplex target,
                                   const std::map<std::string, std::string>& vertexMap);

  const SimplicialComplex& source() const noexcept { return source_; }
  const SimplicialComplex& target() const noexcept { return target_; }
  const std::vector<int>& vertex_map() const noexcept { return map_; }
  int operator()(int v) const { return map_.at(static_cast<std::size_t>(v)); }

  /// Image vertex set, ascending and deduplicated.
  Simplex image(const Simplex& s) const;

  std::map<std::string, std::string> label_map() const;

 private:
  SimplicialComplex source_;
  SimplicialComplex target_;
  std::vector<int> map_;
};

SimplicialMap identity_map(const SimplicialComplex& x);
SimplicialMap compose(const SimplicialMap& second, const SimplicialMap& first);

struct Subdivision {
  SimplicialComplex complex;
  /// carrier[v] is the simplex of the original complex that vertex v of the
  /// subdivision stands for.
  std::vector<Simplex> carrier;
};

/// Vertices are the simplices of `x` (labelled "{a,b,...}"), simplices are
/// chains under inclusion.
Subdivision barycentric_subdivision(const SimplicialComplex& x);

/// Label used for the subdivision vertex of a simplex.
std::string simplex_label(const SimplicialComplex& x, const Simplex& s);

struct MappingCylinder {
  SimplicialComplex complex;
  SimplicialMap sourceEnd;  // source -> end 0
  SimplicialMap targetEnd;  // target -> end 1
};

/// Order-based prism triangulation of source x [0,1] with end 1 glued along f.
/// Source vertices are relabelled "0:v", target vertices "1:w".  The prism
/// uses the source vertex order.
MappingCylinder mapping_cylinder(const SimplicialMap& f);

/// Same with an explicit ranking of source vertices (rank[v] smaller = earlier).
MappingCylinder mapping_cylinder(const SimplicialMap& f, const std::vector<int>& rank);

/// Edge-path presentation of the fundamental group.
///
/// Generators are the edges outside a breadth-first spanning tree (least
/// vertex first), each oriented from its smaller to its larger vertex.
/// Letters in relations are signed 1-based generator numbers: +k is
/// generator k-1, -k its inverse.
struct Pi1Presentation {
  int generatorCount = 0;
  std::vector<std::vector<int>> relations;
  int basepoint = 0;
  /// Edge of the complex behind each generator.
  std::vector<Simplex> generatorEdges;
  /// BFS parent of each vertex (basepoint maps to itself).
  std::vector<int> treeParent;
};

Pi1Presentation pi1_presentation(const SimplicialComplex& x, int basepoint);

}  // namespace htc
