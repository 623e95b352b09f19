#pragma once

// Covers of a base complex by subcomplexes, and their Čech nerves.
//
// A part P stands for the open set formed by its interior
//   Int(P) = { s : every simplex of the base containing s lies in P },
// an upward-closed family of simplices.  For the star cover of a vertex v
// this is the open star of v.  Multi-intersections, goodness, the carrier
// condition and the section map are computed on interiors; the homotopy
// model of an open family O is its order complex inside the barycentric
// subdivision.  Restricting bundles and patching them use the closed parts.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "htc/simplicial.hpp"

namespace htc {

class Cover {
 public:
  /// Parts must be subcomplexes of the base (InputError otherwise); index
  /// names must be distinct.  The index order is the order of `indices`.
  Cover(SimplicialComplex base, std::vector<std::string> indices, std::vector<SimplicialComplex> parts);

  /// Parts keyed by name; index order is lexicographic on names.
  static Cover from_named_parts(SimplicialComplex base, const std::map<std::string, SimplicialComplex>& parts);

  const SimplicialComplex& base() const noexcept { return base_; }
  int size() const noexcept { return static_cast<int>(indices_.size()); }
  const std::vector<std::string>& indices() const noexcept { return indices_; }
  const std::string& index(int i) const { return indices_.at(static_cast<std::size_t>(i)); }
  const SimplicialComplex& part(int i) const { return parts_.at(static_cast<std::size_t>(i)); }

  /// Flat ids (in the base) of the closed part, ascending.
  const std::vector<std::size_t>& closed_ids(int i) const { return closed_.at(static_cast<std::size_t>(i)); }
  /// Flat ids of the interior, ascending.
  const std::vector<std::size_t>& interior_ids(int i) const { return interior_.at(static_cast<std::size_t>(i)); }
  bool in_interior(int i, std::size_t flatId) const;

  friend bool operator==(const Cover& a, const Cover& b);

 private:
  SimplicialComplex base_;
  std::vector<std::string> indices_;
  std::vector<SimplicialComplex> parts_;
  std::vector<std::vector<std::size_t>> closed_;
  std::vector<std::vector<std::size_t>> interior_;
};

/// Ascending cover indices.
using IndexTuple = std::vector<int>;

struct NerveCell {
  /// Flat ids of the base simplices in the intersection of interiors.
  std::vector<std::size_t> openSimplices;
  /// Order complex of that family: the homotopy model of the intersection.
  SimplicialComplex witness;
};

struct NerveComplex {
  /// Vertices are the indices with nonempty interior, labelled by index
  /// name, in cover order.
  SimplicialComplex complex;
  /// Cover index of each nerve vertex.
  std::vector<int> vertexIndex;
  /// Nerve vertex of each cover index, -1 when the interior is empty.
  std::vector<int> indexVertex;
  std::map<IndexTuple, NerveCell> cells;

  bool has_cell(const IndexTuple& t) const { return cells.count(t) != 0; }
  /// Nerve simplex of an index tuple.
  Simplex simplex_of(const IndexTuple& t) const;
  /// Index tuple of a nerve simplex.
  IndexTuple tuple_of(const Simplex& s) const;
  /// Index tuples of dimension `dim`, lexicographic.
  std::vector<IndexTuple> tuples(int dim) const;
};

/// One part per vertex v: the closure of all simplices containing v.
Cover star_cover(const SimplicialComplex& x);

NerveComplex cech_nerve(const Cover& u);

struct CoverFailure {
  IndexTuple tuple;
  std::string reason;
};

struct GoodCoverReport {
  bool good = true;
  std::vector<CoverFailure> failures;
};

/// Every nonempty multi-intersection must be connected and acyclic.
GoodCoverReport is_good_cover(const Cover& u);
GoodCoverReport is_good_cover(const Cover& u, const NerveComplex& nerve);

/// True when every base simplex lies in the interior of some part.
bool carrier_check(const Cover& u);

/// Base simplices (flat ids) lying in no closed part: violations of the
/// union invariant.
std::vector<std::size_t> uncovered_simplices(const Cover& u);

/// Map from the barycentric subdivision of the base to the nerve, sending
/// the vertex of simplex s to the least index whose interior contains s.
/// Throws ValidationError when the carrier condition fails.
SimplicialMap section_map(const Cover& u);
SimplicialMap section_map(const Cover& u, const NerveComplex& nerve);

/// For a star cover, the isomorphism nerve -> base sending the vertex of
/// U_v to v.  Throws InputError when the cover is not a star cover.
SimplicialMap forget_map(const Cover& u, const NerveComplex& nerve);

/// Tagged disjoint union: indices "1:<name>" for u, then "2:<name>" for v.
Cover disjoint_union_cover(const Cover& u, const Cover& v);

/// Cover plus its nerve and goodness verdict, computed once and shared.
struct CoverAnalysis {
  Cover cover;
  NerveComplex nerve;
  GoodCoverReport goodness;
};

std::shared_ptr<const CoverAnalysis> analyze_cover(Cover u);

/// Closed intersection of parts as a subcomplex of the base (may be empty).
SimplicialComplex closed_intersection(const Cover& u, const IndexTuple& t);

}  // namespace htc
