#pragma once

// The normalized bar construction of a finite group, Milnor's coordinate
// model, classifying maps out of a nerve, the universal bundle and the
// classification cross-check.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "htc/bundle.hpp"
#include "htc/cocycle.hpp"
#include "htc/homology.hpp"

namespace htc {

/// (g_1, ..., g_k); the empty tuple is the unique vertex of BG.
using BarTuple = std::vector<Element>;

struct BarComplex {
  FiniteGroup group;
  int truncation = 0;
  /// chains[k]: tuples of length k with no identity entry, lexicographic.
  std::vector<std::vector<BarTuple>> chains;
  /// d(g_1..g_k) = (g_2..g_k) + sum (-1)^i (..g_i g_{i+1}..) + (-1)^k (g_1..g_{k-1}),
  /// tuples containing the identity dropped.
  ChainComplex complex;

  /// Position of a normalized tuple in chains[size]; InputError if absent.
  std::size_t index_of(const BarTuple& t) const;
};

/// Chains through degree n; homology is exact through degree n-1.
BarComplex bar_construction(const FiniteGroup& g, int n);

/// Homology of BG in degrees 0..maxDegree.
HomologyResult bar_homology(const FiniteGroup& g, int maxDegree);

using Rational = boost::rational<long long>;

struct MilnorPoint {
  std::vector<Rational> t;
  std::map<std::pair<int, int>, Element> g;
};

struct MilnorViolation {
  int condition;
  std::string message;
  std::vector<int> indices;
};

/// Conditions: (1) t_i in [0,1] summing to 1; (2) g is given exactly on the
/// pairs with t_i t_j != 0; (3) g_ii is the identity; (4) g_ij g_jk = g_ik
/// whenever t_i t_j t_k != 0.  Lists every violated condition once, with
/// its first witness.  InputError on values outside the group.
std::vector<MilnorViolation> check_milnor_point(const MilnorPoint& p, const FiniteGroup& g);
/// Throws ValidationError("condition N: ...") for the first violation.
MilnorPoint validate_milnor_point(MilnorPoint p, const FiniteGroup& g);

/// Nerve simplex -> (g_{a0 a1}, ..., g_{a(k-1) ak}) as a simplicial-set map
/// into BG.
class ClassifyingMap {
 public:
  const FiniteGroup& group() const noexcept { return group_; }
  const NerveComplex& nerve() const noexcept { return analysis_->nerve; }
  const std::shared_ptr<const CoverAnalysis>& analysis() const noexcept { return analysis_; }
  /// Full tuple of an ascending index tuple (identity entries kept).
  const BarTuple& tuple(const IndexTuple& t) const { return tuples_.at(t); }
  /// Tuple with identity entries removed: the nondegenerate simplex of BG
  /// the nerve simplex lands on.
  BarTuple normalized(const IndexTuple& t) const;

 private:
  friend ClassifyingMap classifying_map(std::shared_ptr<const CoverAnalysis>, FiniteGroup, const PairValues&);
  std::shared_ptr<const CoverAnalysis> analysis_;
  FiniteGroup group_;
  std::map<IndexTuple, BarTuple> tuples_;
};

/// Checks that every face of every nerve simplex goes to the matching face
/// in BG; this is exactly the cocycle law.  ValidationError otherwise.
ClassifyingMap classifying_map(std::shared_ptr<const CoverAnalysis> analysis, FiniteGroup group, const PairValues& values);
ClassifyingMap classifying_map(const Cocycle1& c);

/// Chain map from the nerve's simplicial chains to the bar complex
/// (degenerate images go to 0).  The bar complex must reach the nerve's dimension.
ChainMap bar_chain_map(const ClassifyingMap& f, const BarComplex& bar);

/// Reads the tautological cocycle g_ab = edge label back from the map.
Cocycle1 pullback_cocycle(const ClassifyingMap& f);

/// Nerve of the action groupoid of G acting on itself, truncated at n:
/// simplices (g_1..g_k; f) with vertices f_k = f, f_{i-1} = g_i f_i.
class UniversalBundle {
 public:
  const FiniteGroup& group() const noexcept { return base_.group; }
  int truncation() const noexcept { return base_.truncation; }
  const BarComplex& base() const noexcept { return base_; }
  /// Nondegenerate total simplices of dimension k as (tuple, f).
  const std::vector<std::pair<BarTuple, Element>>& simplices(int k) const {
    return total_.at(static_cast<std::size_t>(k));
  }
  const ChainComplex& total_chains() const noexcept { return chains_; }
  /// Vertices f_0..f_k of (tuple; f).
  std::vector<Element> vertices_of(const BarTuple& tuple, Element f) const;
  /// Total vertices over each base vertex (BG has one).
  int fiber_size() const noexcept { return group().order(); }

 private:
  friend UniversalBundle universal_bundle(const FiniteGroup&, int);
  BarComplex base_;
  std::vector<std::vector<std::pair<BarTuple, Element>>> total_;
  ChainComplex chains_;
};

/// Throws InputError when n < 1.
UniversalBundle universal_bundle(const FiniteGroup& g, int n);

/// Pullback along a classifying map: vertices (a, f) labelled like
/// total_space with the regular action.
Bundle pullback(const UniversalBundle& u, const ClassifyingMap& f);

struct ClassificationReport {
  std::size_t cocycleCount = 0;
  std::size_t cocycleClasses = 0;
  std::size_t homCount = 0;
  std::size_t homClasses = 0;
  std::vector<Cocycle1> representatives;
  /// Per representative: pullback of the universal bundle is isomorphic to
  /// total_space(c, regular action).
  std::vector<bool> pullbackMatches;
  bool passed() const;
};

ClassificationReport classification_check(std::shared_ptr<const CoverAnalysis> analysis, const FiniteGroup& g,
                                          SearchBudget budget = {});

}  // namespace htc
