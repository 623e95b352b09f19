#pragma once

// Transition data one level up: edge values g_ab in the base group of a
// crossed module and triangle witnesses c_abc in its fiber group, over a
// good cover.  Laws, on ascending index tuples:
//   triangle     g_ab g_bc = d(c_abc) g_ac
//   tetrahedron  c_abc c_acd = (g_ab . c_bcd) c_abd

#include <map>
#include <memory>
#include <vector>

#include "htc/cocycle.hpp"
#include "htc/cover.hpp"
#include "htc/group.hpp"
#include "htc/homology.hpp"

namespace htc {

using TripleValues = std::map<IndexTuple, Element>;

/// Unvalidated gerbe data; shapes are checked by check_gerbe.
struct GerbeData {
  std::shared_ptr<const CoverAnalysis> analysis;
  CrossedModule module;
  PairValues edges;
  TripleValues witnesses;

  friend bool operator==(const GerbeData& a, const GerbeData& b) {
    return a.analysis->cover == b.analysis->cover && a.module == b.module && a.edges == b.edges &&
           a.witnesses == b.witnesses;
  }
};

struct GerbeViolation {
  IndexTuple tuple;
  std::string law;  // "triangle" or "tetrahedron"
};

struct GerbeReport {
  bool triangleHolds = true;
  bool tetrahedronHolds = true;
  std::vector<GerbeViolation> violations;
  bool valid() const noexcept { return triangleHolds && tetrahedronHolds; }
};

/// Checks both laws exhaustively.  Throws InputError on missing, superfluous
/// or out-of-range data and ValidationError on a cover that is not good.
GerbeReport check_gerbe(const GerbeData& d);

/// A GerbeData that passed check_gerbe.
class GerbeCocycle {
 public:
  const GerbeData& data() const noexcept { return data_; }
  const CrossedModule& module() const noexcept { return data_.module; }
  const Cover& cover() const noexcept { return data_.analysis->cover; }
  Element edge(int a, int b) const { return data_.edges.at({a, b}); }
  Element witness(const IndexTuple& t) const { return data_.witnesses.at(t); }

  friend bool operator==(const GerbeCocycle& a, const GerbeCocycle& b) { return a.data_ == b.data_; }

 private:
  friend GerbeCocycle validate_gerbe_cocycle(GerbeData);
  GerbeData data_;
};

/// Throws ValidationError naming the first violated law and tuple.
GerbeCocycle validate_gerbe_cocycle(GerbeData d);

/// Identity edges and witnesses.
GerbeData trivial_gerbe(std::shared_ptr<const CoverAnalysis> analysis, CrossedModule module);

/// g'_ab = d(m_ab) lambda_a g_ab lambda_b^-1 and
/// c'_abc = m_ab (k_ab . m_bc) (lambda_a . c_abc) m_ac^-1 with k_ab = lambda_a g_ab lambda_b^-1.
GerbeCocycle gerbe_coboundary(const GerbeCocycle& d, const Cochain0& lambda, const PairValues& m);

/// Same formula on unvalidated data.
GerbeData gerbe_coboundary(const GerbeData& d, const Cochain0& lambda, const PairValues& m);

/// Pastes the two composites of the square of homotopies over every
/// quadruple as 2-cells of the strict 2-group and compares them.
struct CoherenceReport {
  bool coherent = true;
  /// Quadruples whose pastings differ.
  std::vector<IndexTuple> failures;
  /// Quadruples where a vertical composite is not composable (triangle law fails).
  std::vector<IndexTuple> illTyped;
};
CoherenceReport check_coherence_faces(const GerbeData& d);

/// Class of c in Cech H^2(nerve; H) for G trivial and H abelian.
struct AbelianClass {
  /// Invariant factors d of H with their class coordinates.
  std::vector<Integer> factors;
  std::vector<std::vector<Integer>> coordinates;
  /// Per factor, the moduli of the coordinates.
  std::vector<std::vector<Integer>> moduli;
  bool zero() const;
  friend bool operator==(const AbelianClass& a, const AbelianClass& b) { return a.coordinates == b.coordinates; }
};

/// Throws InputError unless the base group is trivial and the fiber abelian.
AbelianClass abelian_class(const GerbeCocycle& d);

/// Invariant factors of a finite abelian group and the coordinates of each
/// element: element e corresponds to (coords[e][i] mod factors[i]).
struct AbelianDecomposition {
  std::vector<Integer> factors;
  std::vector<std::vector<Integer>> coords;
};
AbelianDecomposition abelian_decomposition(const FiniteGroup& h);

struct GerbeEquivalence {
  bool equivalent = false;
  Cochain0 lambda;
  PairValues m;
};

/// Least (lambda, m), lambda first, with gerbe_coboundary(d1, lambda, m) = d2.
/// Throws InputError for different covers or crossed modules.
GerbeEquivalence gerbes_equivalent(const GerbeCocycle& d1, const GerbeCocycle& d2, SearchBudget budget = {});

}  // namespace htc
