#include "htc/homology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

#include "htc/error.hpp"

namespace htc {

Integer checked_add(Integer a, Integer b) {
  Integer r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
  return r;
}

Integer checked_mul(Integer a, Integer b) {
  Integer r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
  return r;
}

namespace {

Integer checked_sub(Integer a, Integer b) {
  Integer r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
  return r;
}

Integer abs_value(Integer a) {
  if (a == std::numeric_limits<Integer>::min()) throw ArithmeticOverflow("integer overflow in abs");
  return a < 0 ? -a : a;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> rowMajor)
    : rows_(rows), cols_(cols), data_(std::move(rowMajor)) {
  if (data_.size() != rows * cols) throw InputError("matrix data size does not match its shape");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Integer x) { return x == 0; });
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& x) const {
  if (x.size() != cols_) throw InputError("vector length does not match matrix columns");
  std::vector<Integer> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != 0 && x[c] != 0) y[r] = checked_add(y[r], checked_mul((*this)(r, c), x[c]));
    }
  }
  return y;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix shapes do not compose");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
      }
    }
  }
  return out;
}

namespace {

// Row and column operations applied to the working matrix and, when
// tracking, mirrored into the transforms (left collects row ops, right
// collects column ops).
struct SmithWork {
  IntMatrix a;
  IntMatrix* left = nullptr;
  IntMatrix* right = nullptr;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    if (left) {
      for (std::size_t c = 0; c < left->cols(); ++c) std::swap((*left)(i, c), (*left)(j, c));
    }
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    if (right) {
      for (std::size_t r = 0; r < right->rows(); ++r) std::swap((*right)(r, i), (*right)(r, j));
    }
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, Integer q) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(j, c) != 0) a(i, c) = checked_add(a(i, c), checked_mul(q, a(j, c)));
    }
    if (left) {
      for (std::size_t c = 0; c < left->cols(); ++c) {
        if ((*left)(j, c) != 0) (*left)(i, c) = checked_add((*left)(i, c), checked_mul(q, (*left)(j, c)));
      }
    }
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, Integer q) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a(r, j) != 0) a(r, i) = checked_add(a(r, i), checked_mul(q, a(r, j)));
    }
    if (right) {
      for (std::size_t r = 0; r < right->rows(); ++r) {
        if ((*right)(r, j) != 0) (*right)(r, i) = checked_add((*right)(r, i), checked_mul(q, (*right)(r, j)));
      }
    }
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if (left) {
      for (std::size_t c = 0; c < left->cols(); ++c) (*left)(i, c) = -(*left)(i, c);
    }
  }

  std::vector<Integer> run() {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    std::vector<Integer> diagonal;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      Integer best = 0;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          const Integer x = a(i, j);
          if (x != 0 && (best == 0 || abs_value(x) < best)) {
            best = abs_value(x);
            pi = i;
            pj = j;
          }
        }
      }
      if (best == 0) break;
      swap_rows(t, pi);
      swap_cols(t, pj);

      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a(i, t) == 0) continue;
          const Integer q = a(i, t) / a(t, t);
          if (q != 0) add_row(i, t, -q);
          if (a(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a(t, j) == 0) continue;
          const Integer q = a(t, j) / a(t, t);
          if (q != 0) add_col(j, t, -q);
          if (a(t, j) != 0) clean = false;
        }
        if (!clean) {
          // A remainder smaller than the pivot survived; promote it.
          std::size_t bi = t, bj = t;
          Integer b = abs_value(a(t, t));
          for (std::size_t i = t + 1; i < m; ++i) {
            if (a(i, t) != 0 && abs_value(a(i, t)) < b) {
              b = abs_value(a(i, t));
              bi = i;
              bj = t;
            }
          }
          for (std::size_t j = t + 1; j < n; ++j) {
            if (a(t, j) != 0 && abs_value(a(t, j)) < b) {
              b = abs_value(a(t, j));
              bi = t;
              bj = j;
            }
          }
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        // Pivot must divide the whole trailing block.
        bool divides = true;
        for (std::size_t i = t + 1; i < m && divides; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (a(i, j) % a(t, t) != 0) {
              add_row(t, i, 1);
              divides = false;
              break;
            }
          }
        }
        if (divides) break;
      }
      if (a(t, t) < 0) negate_row(t);
      diagonal.push_back(a(t, t));
    }
    return diagonal;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm out;
  out.left = IntMatrix::identity(m.rows());
  out.right = IntMatrix::identity(m.cols());
  SmithWork work{m, &out.left, &out.right};
  out.diagonal = work.run();
  return out;
}

std::vector<Integer> smith_diagonal(IntMatrix m) {
  SmithWork work{std::move(m)};
  return work.run();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Integer num = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j)));
        a(i, j) = num / previous;
      }
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix ChainComplex::boundary(int k) const {
  if (k >= 0 && k <= top_degree()) return boundaries[static_cast<std::size_t>(k)];
  return IntMatrix(rank(k - 1), rank(k));
}

std::vector<Integer> HomologyResult::betti() const {
  std::vector<Integer> out;
  for (const auto& d : degrees) out.push_back(d.betti);
  return out;
}

namespace {

// Sign of the permutation sorting `v` (entries distinct).
int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

ChainComplex chain_complex(const SimplicialComplex& x) {
  ChainComplex c;
  const int top = x.dimension();
  for (int k = 0; k <= top; ++k) c.ranks.push_back(x.count(k));
  for (int k = 0; k <= top; ++k) {
    IntMatrix d(k == 0 ? 0 : x.count(k - 1), x.count(k));
    if (k > 0) {
      const auto& level = x.simplices(k);
      for (std::size_t j = 0; j < level.size(); ++j) {
        for (std::size_t i = 0; i < level[j].size(); ++i) {
          Simplex f = level[j];
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
          d(*x.index_of(f), j) = (i % 2 == 0) ? 1 : -1;
        }
      }
    }
    c.boundaries.push_back(std::move(d));
  }
  return c;
}

HomologyResult homology(const ChainComplex& c, int maxDegree) {
  if (maxDegree < 0) throw InputError("negative maximum degree");
  std::vector<std::vector<Integer>> factors(static_cast<std::size_t>(maxDegree) + 2);
  for (int k = 1; k <= maxDegree + 1; ++k) {
    if (c.rank(k) == 0 || c.rank(k - 1) == 0) continue;
    factors[static_cast<std::size_t>(k)] = smith_diagonal(c.boundary(k));
  }
  HomologyResult out;
  for (int k = 0; k <= maxDegree; ++k) {
    const auto& in = factors[static_cast<std::size_t>(k)];
    const auto& from = factors[static_cast<std::size_t>(k) + 1];
    HomologyGroup g;
    g.betti = static_cast<Integer>(c.rank(k)) - static_cast<Integer>(in.size()) - static_cast<Integer>(from.size());
    for (Integer f : from) {
      if (f > 1) g.torsion.push_back(f);
    }
    out.degrees.push_back(std::move(g));
  }
  return out;
}

HomologyResult homology(const SimplicialComplex& x, int maxDegree) {
  if (maxDegree < 0) throw InputError("negative maximum degree");
  return homology(chain_complex(x), maxDegree);
}

HomologyResult homology(const SimplicialComplex& x) { return homology(x, std::max(x.dimension(), 0)); }

ChainMap induced_chain_map(const SimplicialMap& f) {
  const auto& src = f.source();
  const auto& tgt = f.target();
  ChainMap out;
  for (int k = 0; k <= src.dimension(); ++k) {
    IntMatrix m(tgt.count(k), src.count(k));
    const auto& level = src.simplices(k);
    for (std::size_t j = 0; j < level.size(); ++j) {
      std::vector<int> image;
      for (int v : level[j]) image.push_back(f(v));
      const int sign = sort_sign(image);
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) continue;
      m(*tgt.index_of(image), j) = sign;
    }
    out.components.push_back(std::move(m));
  }
  return out;
}

namespace {

IntMatrix component(const ChainMap& f, int k, std::size_t rows, std::size_t cols) {
  if (k >= 0 && static_cast<std::size_t>(k) < f.components.size()) {
    const auto& m = f.components[static_cast<std::size_t>(k)];
    if (m.rows() != rows || m.cols() != cols) throw InputError("chain map component has the wrong shape");
    return m;
  }
  return IntMatrix(rows, cols);
}

}  // namespace

bool is_chain_map(const ChainComplex& c, const ChainComplex& d, const ChainMap& f) {
  const int top = std::max(c.top_degree(), d.top_degree());
  for (int k = 1; k <= top; ++k) {
    auto lhs = component(f, k - 1, d.rank(k - 1), c.rank(k - 1)) * c.boundary(k);
    auto rhs = d.boundary(k) * component(f, k, d.rank(k), c.rank(k));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

ChainComplex mapping_cone(const ChainComplex& c, const ChainComplex& d, const ChainMap& f) {
  const int top = std::max(c.top_degree() + 1, d.top_degree());
  ChainComplex cone;
  for (int n = 0; n <= top; ++n) cone.ranks.push_back(c.rank(n - 1) + d.rank(n));
  for (int n = 0; n <= top; ++n) {
    const std::size_t rowsC = c.rank(n - 2);
    const std::size_t rowsD = d.rank(n - 1);
    const std::size_t colsC = c.rank(n - 1);
    const std::size_t colsD = d.rank(n);
    IntMatrix m(rowsC + rowsD, colsC + colsD);
    if (n >= 1) {
      const auto dc = c.boundary(n - 1);
      for (std::size_t i = 0; i < rowsC; ++i) {
        for (std::size_t j = 0; j < colsC; ++j) m(i, j) = -dc(i, j);
      }
      const auto fm = component(f, n - 1, rowsD, colsC);
      for (std::size_t i = 0; i < rowsD; ++i) {
        for (std::size_t j = 0; j < colsC; ++j) m(rowsC + i, j) = fm(i, j);
      }
      const auto dd = d.boundary(n);
      for (std::size_t i = 0; i < rowsD; ++i) {
        for (std::size_t j = 0; j < colsD; ++j) m(rowsC + i, colsC + j) = dd(i, j);
      }
    }
    cone.boundaries.push_back(std::move(m));
  }
  return cone;
}

bool induces_homology_isomorphism(const ChainComplex& c, const ChainComplex& d, const ChainMap& f) {
  const auto cone = mapping_cone(c, d, f);
  const auto h = homology(cone, std::max(cone.top_degree(), 0));
  return std::all_of(h.degrees.begin(), h.degrees.end(),
                     [](const HomologyGroup& g) { return g.betti == 0 && g.torsion.empty(); });
}

bool induces_homology_isomorphism(const SimplicialMap& f) {
  return induces_homology_isomorphism(chain_complex(f.source()), chain_complex(f.target()), induced_chain_map(f));
}

Integer class_order(const ChainComplex& c, int k, const std::vector<Integer>& cycle) {
  if (cycle.size() != c.rank(k)) throw InputError("chain length does not match the chain group");
  if (k > 0) {
    const auto image = c.boundary(k).apply(cycle);
    if (!std::all_of(image.begin(), image.end(), [](Integer x) { return x == 0; })) {
      throw InputError("chain is not a cycle");
    }
  }
  if (std::all_of(cycle.begin(), cycle.end(), [](Integer x) { return x == 0; })) return 1;
  const auto b = c.boundary(k + 1);
  const auto snf = smith_normal_form(b);
  const auto y = snf.left.apply(cycle);
  Integer order = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf.diagonal.size()) {
      const Integer di = snf.diagonal[i];
      const Integer need = di / std::gcd(di, abs_value(y[i]));
      order = checked_mul(order / std::gcd(order, need), need);
    } else if (y[i] != 0) {
      return 0;
    }
  }
  return order;
}

bool is_boundary(const ChainComplex& c, int k, const std::vector<Integer>& chain) {
  if (chain.size() != c.rank(k)) throw InputError("chain length does not match the chain group");
  const auto snf = smith_normal_form(c.boundary(k + 1));
  const auto y = snf.left.apply(chain);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf.diagonal.size() ? y[i] % snf.diagonal[i] != 0 : y[i] != 0) return false;
  }
  return true;
}

std::vector<std::vector<Integer>> cycle_basis(const ChainComplex& c, int k) {
  const auto snf = smith_normal_form(c.boundary(k));
  std::vector<std::vector<Integer>> basis;
  for (std::size_t j = snf.diagonal.size(); j < c.rank(k); ++j) {
    std::vector<Integer> col(c.rank(k));
    for (std::size_t i = 0; i < c.rank(k); ++i) col[i] = snf.right(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace htc
