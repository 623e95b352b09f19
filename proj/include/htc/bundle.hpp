#pragma once

// Combinatorial bundles with discrete fiber: a total complex over a base
// complex whose projection is injective on every simplex and has exactly
// |F| vertices over each base vertex.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "htc/cocycle.hpp"
#include "htc/error.hpp"
#include "htc/group.hpp"
#include "htc/simplicial.hpp"

namespace htc {

class Bundle {
 public:
  /// Validates projection rigidity and the fiber count over every base vertex.
  Bundle(SimplicialMap projection, GroupAction action);

  const SimplicialComplex& total() const noexcept { return projection_.source(); }
  const SimplicialComplex& base() const noexcept { return projection_.target(); }
  const SimplicialMap& projection() const noexcept { return projection_; }
  const GroupAction& action() const noexcept { return action_; }
  int fiber_size() const noexcept { return action_.fiber_size(); }

  /// Total vertices over base vertex v, ascending.
  const std::vector<int>& fiber_over(int v) const { return fibers_.at(static_cast<std::size_t>(v)); }

  /// Same labelled total and base complexes and the same labelled projection.
  friend bool operator==(const Bundle& a, const Bundle& b);

 private:
  SimplicialMap projection_;
  GroupAction action_;
  std::vector<std::vector<int>> fibers_;
};

/// Label of the total vertex over base vertex `base` with fiber point `fiber`.
std::string total_label(const std::string& base, const std::string& fiber);

/// base x F with the given action.
Bundle product_bundle(const SimplicialComplex& base, const GroupAction& action);

/// Vertices (a, f) over the nerve; one simplex {(a_i, f_i)} per nerve simplex
/// and fiber point f at its last vertex, with f_i = g_{a_i a_k} . f.
/// Throws InputError when the action's group differs from the cocycle's.
Bundle total_space(const Cocycle1& c, const GroupAction& action);

/// E_0 is nerve-vertex x F; level n attaches, per n-simplex and fiber point,
/// a cell along the assembly of its boundary lifts.  Isomorphic over the
/// nerve to total_space.
Bundle skeletal_construction(const Cocycle1& c, const GroupAction& action);

/// Pullback along f : X -> base.  Vertices "x|e" for e over f(x).
Bundle pullback(const Bundle& b, const SimplicialMap& f);

/// Restriction to a subcomplex of the base (InputError if it is not one).
Bundle restrict_bundle(const Bundle& b, const SimplicialComplex& sub);

/// Least fiber-preserving isomorphism total(a) -> total(b) over the identity
/// of the base (bases must be equal as labelled complexes).  Vertex images
/// are indexed by total vertex of `a`.
std::optional<std::vector<int>> find_isomorphism(const Bundle& a, const Bundle& b, SearchBudget budget = {});

struct TrivializationReport {
  std::vector<bool> trivial;  // per cover index
  bool all() const;
};

/// Per part: is the restriction isomorphic to part x F?
TrivializationReport local_trivialization_check(const Bundle& b, const Cover& u, SearchBudget budget = {});

/// Unique bundle over the base whose restriction to every part is the given
/// local bundle.  Throws ValidationError (witness: offending simplex labels)
/// when two locals disagree on an overlap, InputError on shape mismatches.
Bundle patch_bundles(const Cover& u, const std::vector<Bundle>& locals);

struct CylinderBundle {
  Bundle bundle;
  /// The prism B x [0,1] with ends labelled "0:v" and "1:v".
  MappingCylinder basePrism;
};

/// Fiberwise mapping cylinder of phi : total(e) -> total(e2) over a common
/// base.  Throws ValidationError when phi does not commute with the
/// projections or is not bijective on some fiber.
CylinderBundle mapping_cylinder_bundle(const Bundle& e, const Bundle& e2, const SimplicialMap& phi);

/// Restriction of a cylinder bundle to end 0 or 1 with the "0:"/"1:" tags removed.
Bundle restrict_to_end(const CylinderBundle& c, int end);

}  // namespace htc
