#pragma once

// Strict group-valued transition cocycles over a good cover.
//
// Values are stored for ascending cover-index pairs (a, b) whose interiors
// meet; g_aa is the identity and g_ba = g_ab^-1.  The lift convention used
// throughout is f_a = g_ab . f_b.

#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "htc/cover.hpp"
#include "htc/error.hpp"
#include "htc/group.hpp"

namespace htc {

/// Ascending pair of cover indices.
using IndexPair = std::pair<int, int>;
using PairValues = std::map<IndexPair, Element>;

class Cocycle1 {
 public:
  const std::shared_ptr<const CoverAnalysis>& analysis() const noexcept { return analysis_; }
  const Cover& cover() const noexcept { return analysis_->cover; }
  const NerveComplex& nerve() const noexcept { return analysis_->nerve; }
  const FiniteGroup& group() const noexcept { return group_; }
  const PairValues& values() const noexcept { return values_; }

  /// Extended value for any two cover indices whose interiors meet.
  Element value(int a, int b) const;

  friend bool operator==(const Cocycle1& x, const Cocycle1& y) {
    return x.cover() == y.cover() && x.group_ == y.group_ && x.values_ == y.values_;
  }

 private:
  friend Cocycle1 validate_cocycle(std::shared_ptr<const CoverAnalysis>, FiniteGroup, PairValues);
  std::shared_ptr<const CoverAnalysis> analysis_;
  FiniteGroup group_;
  PairValues values_;
};

/// Throws ValidationError when the cover is not good or a triple violates
/// g_ab g_bc = g_ac (witness: the three index names), InputError on missing,
/// superfluous or out-of-range values.
Cocycle1 validate_cocycle(std::shared_ptr<const CoverAnalysis> analysis, FiniteGroup group, PairValues values);
Cocycle1 validate_cocycle(const Cover& cover, FiniteGroup group, PairValues values);

/// Every pair value the identity.
Cocycle1 trivial_cocycle(std::shared_ptr<const CoverAnalysis> analysis, FiniteGroup group);

/// lambda[a] for every cover index a.
using Cochain0 = std::vector<Element>;

/// g'_ab = lambda_a g_ab lambda_b^-1.
Cocycle1 coboundary_transform(const Cocycle1& c, const Cochain0& lambda);

struct Holonomy {
  Pi1Presentation presentation;
  Hom images;
};

/// Generator images for the edge-path presentation of the nerve at nerve
/// vertex 0: edge u -> w is sent to h_u g_uw h_w^-1, where h transports along
/// the spanning tree.  Throws ValidationError on a disconnected nerve.
Holonomy holonomy(const Cocycle1& c);

/// Tree edges get the identity, generator edges their image.  Throws
/// ValidationError when `images` violates a relation.
Cocycle1 from_homomorphism(std::shared_ptr<const CoverAnalysis> analysis, FiniteGroup group, const Hom& images);

struct Bridge {
  int first;   // index of the first cover
  int second;  // index of the second cover
  Element value;
  friend bool operator==(const Bridge&, const Bridge&) = default;
};

struct EquivalenceResult {
  bool equivalent = false;
  /// Values on mixed pairs, ordered by (first, second); lexicographically least.
  std::vector<Bridge> bridge;
  /// Mixed pairs with no consistent value, when inequivalent.
  std::vector<Bridge> conflict;
};

/// Decides whether the two cocycles extend jointly to a cocycle on the
/// disjoint union cover.  Throws InputError for different bases or groups,
/// ValidationError when the joint cover is not good on mixed intersections.
EquivalenceResult are_equivalent(const Cocycle1& c1, const Cocycle1& c2, SearchBudget budget = {});

struct CocycleClasses {
  /// Number of valid cocycles on the cover.
  std::size_t cocycleCount = 0;
  /// First cocycle found in each class, in enumeration order.
  std::vector<Cocycle1> representatives;
  std::vector<std::size_t> classSizes;
};

/// Enumerates every valid cocycle on the cover and sorts them into classes
/// with are_equivalent.  Requires a good cover with connected nerve.
CocycleClasses cocycle_classes(std::shared_ptr<const CoverAnalysis> analysis, const FiniteGroup& group,
                               SearchBudget budget = {});
std::size_t count_equivalence_classes(std::shared_ptr<const CoverAnalysis> analysis, const FiniteGroup& group,
                                      SearchBudget budget = {});

/// Names "a", "b", "c" of a tuple of cover indices.
std::vector<std::string> index_names(const Cover& u, const IndexTuple& t);

}  // namespace htc
