#pragma once

// Finite groups in multiplication-table form, actions on finite fibers,
// crossed modules, and homomorphisms out of finitely presented groups.

#include <string>
#include <vector>

#include "htc/error.hpp"
#include "htc/simplicial.hpp"

namespace htc {

/// Group elements are labels 0..n-1; 0 is the identity.
using Element = int;

class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  int order() const noexcept { return static_cast<int>(table_.size()); }
  static constexpr Element identity() noexcept { return 0; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  Element inverse(Element a) const { return inverse_[static_cast<std::size_t>(a)]; }
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inverse(g)); }
  bool contains(Element a) const noexcept { return a >= 0 && a < order(); }
  bool is_abelian() const;
  const std::vector<std::vector<Element>>& table() const noexcept { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  friend FiniteGroup validate_group(std::vector<std::vector<Element>> table);
  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
};

/// Checks closure, identity 0, inverses and associativity exhaustively.
/// Throws ValidationError naming the failed axiom and a witness.
FiniteGroup validate_group(std::vector<std::vector<Element>> table);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
/// All permutations of {0..n-1}, ordered lexicographically (identity first);
/// product (p*q)(x) = p(q(x)).
FiniteGroup symmetric_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Orbits of conjugation, each ascending, ordered by least element.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

/// Subgroup generated by `generators`, ascending.
std::vector<Element> generated_subgroup(const FiniteGroup& g, const std::vector<Element>& generators);

class GroupAction {
 public:
  /// table[g][f] = g . f, fiber points given by label.  Validated.
  GroupAction(FiniteGroup group, std::vector<std::string> fiber, std::vector<std::vector<int>> table);

  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<std::string>& fiber() const noexcept { return fiber_; }
  int fiber_size() const noexcept { return static_cast<int>(fiber_.size()); }
  int act(Element g, int f) const { return table_[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)]; }
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }

  friend bool operator==(const GroupAction&, const GroupAction&) = default;

 private:
  FiniteGroup group_;
  std::vector<std::string> fiber_;
  std::vector<std::vector<int>> table_;
};

/// Left multiplication on the group itself; fiber labels are "0".."n-1".
GroupAction regular_action(const FiniteGroup& g);
/// Every element fixes every point.
GroupAction trivial_action(const FiniteGroup& g, int fiberSize);

/// Orbits of the subgroup generated by `generators` (all of the group when
/// omitted), each ascending, ordered by least point.
std::vector<std::vector<int>> orbits(const GroupAction& action, const std::vector<Element>& generators);
std::vector<std::vector<int>> orbits(const GroupAction& action);

std::vector<Element> stabilizer(const GroupAction& action, int point);

class CrossedModule {
 public:
  const FiniteGroup& base() const noexcept { return base_; }
  const FiniteGroup& fiber() const noexcept { return fiber_; }
  Element boundary(Element h) const { return boundary_[static_cast<std::size_t>(h)]; }
  /// g . h
  Element act(Element g, Element h) const { return action_[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; }
  const std::vector<Element>& boundary_map() const noexcept { return boundary_; }
  const std::vector<std::vector<Element>>& action_table() const noexcept { return action_; }

  friend bool operator==(const CrossedModule&, const CrossedModule&) = default;

 private:
  friend CrossedModule validate_crossed_module(FiniteGroup, FiniteGroup, std::vector<Element>,
                                               std::vector<std::vector<Element>>);
  FiniteGroup base_;
  FiniteGroup fiber_;
  std::vector<Element> boundary_;
  std::vector<std::vector<Element>> action_;
};

/// Checks that boundary is a homomorphism, that the action is a group action
/// by automorphisms, equivariance d(g.h) = g d(h) g^-1 and the Peiffer
/// identity d(h).h' = h h' h^-1.  Throws ValidationError naming the axiom.
CrossedModule validate_crossed_module(FiniteGroup base, FiniteGroup fiber, std::vector<Element> boundary,
                                      std::vector<std::vector<Element>> action);

/// G = H, identity boundary, conjugation action.
CrossedModule adjoint_crossed_module(const FiniteGroup& g);
/// Trivial base group over an abelian H.
CrossedModule abelian_crossed_module(const FiniteGroup& h);

/// Generator images of a homomorphism, indexed by generator.
using Hom = std::vector<Element>;

/// Value of a word of signed 1-based generator letters.
Element evaluate_word(const FiniteGroup& g, const std::vector<int>& word, const Hom& images);

/// Every tuple of generator images satisfying all relations, in
/// lexicographic order.  Each visited partial assignment costs one budget step.
std::vector<Hom> enumerate_homs(const Pi1Presentation& p, const FiniteGroup& g, SearchBudget budget = {});

/// Classes under simultaneous conjugation, as indices into `homs`; each class
/// ascending, classes ordered by least index.
std::vector<std::vector<std::size_t>> hom_conjugacy_classes(const std::vector<Hom>& homs, const FiniteGroup& g);

}  // namespace htc
