#pragma once

// Exact integral homology: checked 64-bit integer matrices, Smith normal
// form with unimodular transforms, chain complexes, chain maps and the
// queries built on them (homology groups, isomorphism on homology through
// the mapping cone, order of a homology class, cycle bases).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "htc/simplicial.hpp"

namespace htc {

using Integer = std::int64_t;

/// Overflow-checked arithmetic; throws ArithmeticOverflow.
Integer checked_add(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> rowMajor);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Integer operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntMatrix transposed() const;
  std::vector<Integer> apply(const std::vector<Integer>& x) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// left * M * right = D, D diagonal with nonnegative entries, each dividing
/// the next; `diagonal` lists the nonzero ones.
struct SmithForm {
  std::vector<Integer> diagonal;
  IntMatrix left;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Nonzero invariant factors only; cheaper than smith_normal_form.
std::vector<Integer> smith_diagonal(IntMatrix m);

/// Determinant by fraction-free elimination (Bareiss); square matrices only.
Integer determinant(const IntMatrix& m);

/// boundaries[k] maps C_k to C_{k-1}; boundaries[0] is 0 x ranks[0].
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;

  int top_degree() const noexcept { return static_cast<int>(ranks.size()) - 1; }
  std::size_t rank(int k) const { return k < 0 || k > top_degree() ? 0 : ranks[static_cast<std::size_t>(k)]; }
  /// d_k as a rank(k-1) x rank(k) matrix, zero-sized outside the stored range.
  IntMatrix boundary(int k) const;
};

struct HomologyGroup {
  Integer betti = 0;
  /// Invariant factors > 1, each dividing the next.
  std::vector<Integer> torsion;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologyResult {
  std::vector<HomologyGroup> degrees;

  std::vector<Integer> betti() const;
  friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

/// Oriented simplicial chains, vertices ascending in each simplex.
ChainComplex chain_complex(const SimplicialComplex& x);

/// Homology in degrees 0..maxDegree; throws InputError on negative maxDegree.
HomologyResult homology(const ChainComplex& c, int maxDegree);
HomologyResult homology(const SimplicialComplex& x, int maxDegree);
HomologyResult homology(const SimplicialComplex& x);

/// components[k] maps C_k to D_k.
struct ChainMap {
  std::vector<IntMatrix> components;
};

ChainMap induced_chain_map(const SimplicialMap& f);

/// True when f d = d f in every degree.
bool is_chain_map(const ChainComplex& c, const ChainComplex& d, const ChainMap& f);

ChainComplex mapping_cone(const ChainComplex& c, const ChainComplex& d, const ChainMap& f);

/// True when f induces isomorphisms on homology in every degree (its
/// mapping cone is acyclic).
bool induces_homology_isomorphism(const ChainComplex& c, const ChainComplex& d, const ChainMap& f);
bool induces_homology_isomorphism(const SimplicialMap& f);

/// Least m >= 1 with m * cycle a boundary in degree k; 0 when the class has
/// infinite order.  Throws InputError when `cycle` is not a cycle.
Integer class_order(const ChainComplex& c, int k, const std::vector<Integer>& cycle);

bool is_boundary(const ChainComplex& c, int k, const std::vector<Integer>& chain);

/// Basis of the cycle group Z_k.
std::vector<std::vector<Integer>> cycle_basis(const ChainComplex& c, int k);

}  // namespace htc
