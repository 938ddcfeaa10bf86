#pragma once

// Exact dense linear algebra over a field scalar (Rational in practice).
//
// Every structure map in the library is a dense Eigen matrix with exact
// entries. Tensor products of spaces use the left-factor-major index
// convention: e_i (x) e_j sits at index i * dim(right) + j.

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cotensor/errors.hpp"
#include "cotensor/rational.hpp"

namespace cotensor::linalg {

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using RowMajorMatrixX =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename Scalar>
inline bool is_zero(const Scalar& x) {
  if constexpr (requires { x.is_zero(); }) {
    return x.is_zero();
  } else {
    return x == Scalar(0);
  }
}

template <typename Scalar>
bool is_zero(const MatrixX<Scalar>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!is_zero(m(i, j))) return false;
    }
  }
  return true;
}

/// Shape and entrywise equality (Eigen's operator== asserts on shape).
template <typename Scalar>
bool equal(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && a == b;
}

struct Entry {
  Index row;
  Index col;
};

/// First (column-major) position where two equally shaped matrices differ.
template <typename Scalar>
std::optional<Entry> first_difference(const MatrixX<Scalar>& a,
                                      const MatrixX<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("first_difference: shapes differ");
  }
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != b(i, j)) return Entry{i, j};
    }
  }
  return std::nullopt;
}

template <typename Scalar>
MatrixX<Scalar> identity(Index n) {
  return MatrixX<Scalar>::Identity(n, n);
}

namespace detail {

// Row indices of the nonzero entries of each column.
template <typename Scalar>
std::vector<std::vector<Index>> column_support(const MatrixX<Scalar>& m) {
  std::vector<std::vector<Index>> support(static_cast<std::size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!is_zero(m(i, j))) support[static_cast<std::size_t>(j)].push_back(i);
    }
  }
  return support;
}

}  // namespace detail

/// f * g, skipping zero entries; structure matrices are mostly zero.
template <typename Scalar>
MatrixX<Scalar> compose(const MatrixX<Scalar>& f, const MatrixX<Scalar>& g) {
  if (f.cols() != g.rows()) {
    throw DimensionMismatch("compose: inner dimensions differ");
  }
  const auto support = detail::column_support(f);
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(f.rows(), g.cols());
  Scalar term;
  for (Index j = 0; j < g.cols(); ++j) {
    for (Index t = 0; t < g.rows(); ++t) {
      const Scalar& b = g(t, j);
      if (is_zero(b)) continue;
      for (Index i : support[static_cast<std::size_t>(t)]) {
        term = f(i, t);
        term *= b;
        out(i, j) += term;
      }
    }
  }
  return out;
}

/// Kronecker product with the left factor most significant.
template <typename Scalar>
MatrixX<Scalar> kron(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (Index k = 0; k < b.rows(); ++k) {
        for (Index l = 0; l < b.cols(); ++l) {
          if (is_zero(b(k, l))) continue;
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

/// (a (x) b) * x without materialising the Kronecker product.
template <typename Scalar>
MatrixX<Scalar> kron_apply(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b,
                           const MatrixX<Scalar>& x) {
  if (x.rows() != a.cols() * b.cols()) {
    throw DimensionMismatch("kron_apply: argument has wrong row count");
  }
  const auto sa = detail::column_support(a);
  const auto sb = detail::column_support(b);
  const Index rb = b.rows();
  const Index cb = b.cols();
  MatrixX<Scalar> out = MatrixX<Scalar>::Zero(a.rows() * rb, x.cols());
  Scalar coeff;
  Scalar term;
  for (Index j = 0; j < x.cols(); ++j) {
    for (Index r = 0; r < x.rows(); ++r) {
      const Scalar& xv = x(r, j);
      if (is_zero(xv)) continue;
      const Index u = r / cb;
      const Index v = r % cb;
      for (Index i : sa[static_cast<std::size_t>(u)]) {
        coeff = a(i, u);
        coeff *= xv;
        for (Index k : sb[static_cast<std::size_t>(v)]) {
          term = coeff;
          term *= b(k, v);
          out(i * rb + k, j) += term;
        }
      }
    }
  }
  return out;
}

/// Row-major flattening of a matrix into a single column.
template <typename Scalar>
MatrixX<Scalar> flatten(const MatrixX<Scalar>& m) {
  MatrixX<Scalar> v(m.rows() * m.cols(), 1);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j, 0) = m(i, j);
  }
  return v;
}

template <typename Scalar>
MatrixX<Scalar> unflatten(const MatrixX<Scalar>& v, Index rows, Index cols) {
  if (v.rows() != rows * cols || v.cols() != 1) {
    throw DimensionMismatch("unflatten: length does not match shape");
  }
  MatrixX<Scalar> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j, 0);
  }
  return m;
}

template <typename Scalar>
struct RowEchelon {
  MatrixX<Scalar> reduced;      // reduced row echelon form, same shape as input
  std::vector<Index> pivots;    // pivot column of each nonzero row
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination; the pivot is the first nonzero entry.
template <typename Scalar>
RowEchelon<Scalar> row_echelon(const MatrixX<Scalar>& input) {
  RowMajorMatrixX<Scalar> a = input;
  std::vector<Index> pivots;
  std::vector<Index> row_support;
  Scalar inv;
  Scalar factor;
  Scalar term;
  Index r = 0;
  for (Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Index p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r) a.row(p).swap(a.row(r));
    inv = Scalar(1) / a(r, c);
    row_support.clear();
    for (Index cc = c; cc < a.cols(); ++cc) {
      if (is_zero(a(r, cc))) continue;
      a(r, cc) *= inv;
      row_support.push_back(cc);
    }
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      factor = a(i, c);
      for (Index cc : row_support) {
        term = factor;
        term *= a(r, cc);
        a(i, cc) -= term;
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {MatrixX<Scalar>(a), std::move(pivots)};
}

template <typename Scalar>
Index rank(const MatrixX<Scalar>& m) {
  return row_echelon(m).rank();
}

/// Linearly independent rows spanning the row space of m (in RREF).
template <typename Scalar>
MatrixX<Scalar> row_basis(const MatrixX<Scalar>& m) {
  auto ech = row_echelon(m);
  return ech.reduced.topRows(ech.rank());
}

/// A subspace of K^n held by a basis in reduced column echelon form, which is
/// unique for the subspace: equal subspaces have identical basis matrices.
template <typename Scalar>
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const MatrixX<Scalar>& spanning) {
    auto ech = row_echelon(MatrixX<Scalar>(spanning.transpose()));
    MatrixX<Scalar> basis = ech.reduced.topRows(ech.rank()).transpose();
    return Subspace(spanning.rows(), std::move(basis), std::move(ech.pivots));
  }

  static Subspace zero(Index ambient) {
    return Subspace(ambient, MatrixX<Scalar>(ambient, 0), {});
  }

  static Subspace full(Index ambient) {
    std::vector<Index> pivots(static_cast<std::size_t>(ambient));
    for (Index i = 0; i < ambient; ++i) pivots[static_cast<std::size_t>(i)] = i;
    return Subspace(ambient, identity<Scalar>(ambient), std::move(pivots));
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const MatrixX<Scalar>& basis() const { return basis_; }
  /// Rows at which the basis restricts to the identity matrix.
  const std::vector<Index>& pivot_rows() const { return pivots_; }

  /// Coordinates of the columns of v in this basis, if they all lie inside.
  std::optional<MatrixX<Scalar>> coordinates(const MatrixX<Scalar>& v) const {
    if (v.rows() != ambient_) {
      throw DimensionMismatch("Subspace::coordinates: ambient dimension differs");
    }
    MatrixX<Scalar> coords(dim(), v.cols());
    for (Index k = 0; k < dim(); ++k) coords.row(k) = v.row(pivots_[static_cast<std::size_t>(k)]);
    if (!equal(compose(basis_, coords), v)) return std::nullopt;
    return coords;
  }

  bool contains(const MatrixX<Scalar>& v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& other) const { return contains(other.basis()); }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && equal(a.basis_, b.basis_);
  }

 private:
  Subspace(Index ambient, MatrixX<Scalar> basis, std::vector<Index> pivots)
      : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Index ambient_ = 0;
  MatrixX<Scalar> basis_;
  std::vector<Index> pivots_;
};

/// Coordinates h with (A (x) B) h = g, where A and B are the bases of a and b,
/// or nothing when some column of g leaves a (x) b. Never materialises A (x) B.
template <typename Scalar>
std::optional<MatrixX<Scalar>> tensor_coordinates(const Subspace<Scalar>& a,
                                                  const Subspace<Scalar>& b,
                                                  const MatrixX<Scalar>& g) {
  if (g.rows() != a.ambient_dim() * b.ambient_dim()) {
    throw DimensionMismatch("tensor_coordinates: ambient dimension differs");
  }
  MatrixX<Scalar> h(a.dim() * b.dim(), g.cols());
  for (Index i = 0; i < a.dim(); ++i) {
    for (Index k = 0; k < b.dim(); ++k) {
      const Index row = a.pivot_rows()[static_cast<std::size_t>(i)] * b.ambient_dim() +
                        b.pivot_rows()[static_cast<std::size_t>(k)];
      h.row(i * b.dim() + k) = g.row(row);
    }
  }
  if (!equal(kron_apply(a.basis(), b.basis(), h), g)) return std::nullopt;
  return h;
}

template <typename Scalar>
Subspace<Scalar> image(const MatrixX<Scalar>& f) {
  return Subspace<Scalar>::span(f);
}

template <typename Scalar>
Subspace<Scalar> kernel(const MatrixX<Scalar>& f) {
  const auto ech = row_echelon(f);
  std::vector<bool> is_pivot(static_cast<std::size_t>(f.cols()), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  const Index nullity = f.cols() - ech.rank();
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(f.cols(), nullity);
  Index k = 0;
  for (Index free = 0; free < f.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, k) = Scalar(1);
    for (Index i = 0; i < ech.rank(); ++i) {
      if (!is_zero(ech.reduced(i, free))) {
        basis(ech.pivots[static_cast<std::size_t>(i)], k) = -ech.reduced(i, free);
      }
    }
    ++k;
  }
  return Subspace<Scalar>::span(basis);
}

template <typename Scalar>
struct Cokernel {
  MatrixX<Scalar> proj;  // quotient_dim x rows(f), surjective, proj * f = 0
  Index quotient_dim = 0;
};

/// Canonical cokernel: the rows of proj are the canonical basis of the left
/// nullspace of f, so proj depends only on the image of f.
template <typename Scalar>
Cokernel<Scalar> cokernel(const MatrixX<Scalar>& f) {
  const auto left_null = kernel(MatrixX<Scalar>(f.transpose()));
  return {MatrixX<Scalar>(left_null.basis().transpose()), left_null.dim()};
}

/// Some x with a * x = b, or nothing when the system is inconsistent.
/// Free variables are set to zero, so the answer is deterministic.
template <typename Scalar>
std::optional<MatrixX<Scalar>> solve(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
  MatrixX<Scalar> augmented(a.rows(), a.cols() + b.cols());
  augmented << a, b;
  const auto ech = row_echelon(augmented);
  MatrixX<Scalar> x = MatrixX<Scalar>::Zero(a.cols(), b.cols());
  for (Index i = 0; i < ech.rank(); ++i) {
    const Index p = ech.pivots[static_cast<std::size_t>(i)];
    if (p >= a.cols()) return std::nullopt;
    x.row(p) = ech.reduced.block(i, a.cols(), 1, b.cols());
  }
  return x;
}

/// The unique h with chi * h = g, for injective chi.
/// Throws NotInImage when some column of g lies outside the image of chi.
template <typename Scalar>
MatrixX<Scalar> factor_through(const MatrixX<Scalar>& chi, const MatrixX<Scalar>& g) {
  if (chi.rows() != g.rows()) {
    throw DimensionMismatch("factor_through: row counts differ");
  }
  // Fast path: every column of chi owns a row where it is the only nonzero
  // entry (true for canonical bases and their Kronecker products).
  std::vector<Index> unit_rows;
  unit_rows.reserve(static_cast<std::size_t>(chi.cols()));
  for (Index j = 0; j < chi.cols(); ++j) {
    Index r = 0;
    while (r < chi.rows() && is_zero(chi(r, j))) ++r;
    if (r == chi.rows()) break;
    bool alone = true;
    for (Index jj = 0; jj < chi.cols() && alone; ++jj) {
      if (jj != j && !is_zero(chi(r, jj))) alone = false;
    }
    if (!alone) break;
    unit_rows.push_back(r);
  }
  MatrixX<Scalar> h;
  if (static_cast<Index>(unit_rows.size()) == chi.cols()) {
    h.resize(chi.cols(), g.cols());
    for (Index j = 0; j < chi.cols(); ++j) {
      const Index r = unit_rows[static_cast<std::size_t>(j)];
      const Scalar inv = Scalar(1) / chi(r, j);
      for (Index c = 0; c < g.cols(); ++c) h(j, c) = g(r, c) * inv;
    }
  } else {
    auto x = solve(chi, g);
    if (!x) throw NotInImage("factor_through: target not contained in the image");
    h = std::move(*x);
  }
  if (!equal(compose(chi, h), g)) {
    throw NotInImage("factor_through: target not contained in the image");
  }
  return h;
}

template <typename Scalar>
Subspace<Scalar> subspace_sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspace_sum: ambient dimensions differ");
  }
  MatrixX<Scalar> both(a.ambient_dim(), a.dim() + b.dim());
  both << a.basis(), b.basis();
  return Subspace<Scalar>::span(both);
}

template <typename Scalar>
Subspace<Scalar> subspace_intersect(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspace_intersect: ambient dimensions differ");
  }
  MatrixX<Scalar> pair(a.ambient_dim(), a.dim() + b.dim());
  pair << a.basis(), -b.basis();
  const auto rel = kernel(pair);
  return Subspace<Scalar>::span(compose(a.basis(), MatrixX<Scalar>(rel.basis().topRows(a.dim()))));
}

/// {v : f v in s}.
template <typename Scalar>
Subspace<Scalar> preimage(const MatrixX<Scalar>& f, const Subspace<Scalar>& s) {
  if (f.rows() != s.ambient_dim()) {
    throw DimensionMismatch("preimage: map codomain differs from the subspace ambient");
  }
  return kernel(compose(cokernel(s.basis()).proj, f));
}

template <typename Scalar>
bool subspace_equal(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspace_equal: ambient dimensions differ");
  }
  return a == b;
}

/// Matrix of a linear operator on rows x cols matrices, acting on row-major
/// flattenings. `op` must be linear; it is probed on matrix units.
template <typename Scalar, typename Op>
MatrixX<Scalar> operator_matrix(Index rows, Index cols, Op&& op) {
  MatrixX<Scalar> unit = MatrixX<Scalar>::Zero(rows, cols);
  if (rows * cols == 0) {
    const Index out_rows = flatten<Scalar>(op(static_cast<const MatrixX<Scalar>&>(unit))).rows();
    return MatrixX<Scalar>::Zero(out_rows, 0);
  }
  MatrixX<Scalar> system;
  for (Index k = 0; k < rows * cols; ++k) {
    unit(k / cols, k % cols) = Scalar(1);
    const MatrixX<Scalar> column = flatten<Scalar>(op(static_cast<const MatrixX<Scalar>&>(unit)));
    unit(k / cols, k % cols) = Scalar(0);
    if (k == 0) system = MatrixX<Scalar>::Zero(column.rows(), rows * cols);
    system.col(k) = column;
  }
  return system;
}

/// Some X (rows x cols) with op(X) = rhs for a linear op, or nothing.
template <typename Scalar, typename Op>
std::optional<MatrixX<Scalar>> solve_for_map(Index rows, Index cols, Op&& op,
                                             const MatrixX<Scalar>& rhs) {
  const auto system = operator_matrix<Scalar>(rows, cols, op);
  auto x = solve(system, flatten(rhs));
  if (!x) return std::nullopt;
  return unflatten<Scalar>(*x, rows, cols);
}

/// Basis of {X : op(X) = 0}.
template <typename Scalar, typename Op>
std::vector<MatrixX<Scalar>> solution_space(Index rows, Index cols, Op&& op) {
  const auto null = kernel(operator_matrix<Scalar>(rows, cols, op));
  std::vector<MatrixX<Scalar>> basis;
  for (Index k = 0; k < null.dim(); ++k) {
    basis.push_back(unflatten<Scalar>(MatrixX<Scalar>(null.basis().col(k)), rows, cols));
  }
  return basis;
}

// Rational instantiations live in exactlin.cpp.
extern template RowEchelon<Rational> row_echelon(const MatrixX<Rational>&);
extern template MatrixX<Rational> compose(const MatrixX<Rational>&, const MatrixX<Rational>&);
extern template MatrixX<Rational> kron(const MatrixX<Rational>&, const MatrixX<Rational>&);
extern template MatrixX<Rational> kron_apply(const MatrixX<Rational>&, const MatrixX<Rational>&,
                                             const MatrixX<Rational>&);
extern template Subspace<Rational> kernel(const MatrixX<Rational>&);
extern template Cokernel<Rational> cokernel(const MatrixX<Rational>&);
extern template std::optional<MatrixX<Rational>> solve(const MatrixX<Rational>&,
                                                       const MatrixX<Rational>&);
extern template MatrixX<Rational> factor_through(const MatrixX<Rational>&,
                                                 const MatrixX<Rational>&);
extern template Subspace<Rational> subspace_sum(const Subspace<Rational>&,
                                                const Subspace<Rational>&);
extern template Subspace<Rational> subspace_intersect(const Subspace<Rational>&,
                                                      const Subspace<Rational>&);
extern template Subspace<Rational> preimage(const MatrixX<Rational>&, const Subspace<Rational>&);
extern template class Subspace<Rational>;

}  // namespace cotensor::linalg

namespace cotensor {

using linalg::Index;
using Matrix = linalg::MatrixX<Rational>;
using Subspace = linalg::Subspace<Rational>;

}  // namespace cotensor
