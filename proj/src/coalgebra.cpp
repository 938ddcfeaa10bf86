#include "cotensor/coalgebra.hpp"

#include <sstream>

#include "cotensor/bicomodule.hpp"

namespace cotensor {

using linalg::compose;
using linalg::equal;
using linalg::identity;
using linalg::kron_apply;

Coalgebra::Coalgebra() : Coalgebra(Matrix(0, 0), Matrix(1, 0)) {}

Coalgebra::Coalgebra(Matrix delta, Matrix epsilon) {
  const Index n = epsilon.cols();
  if (epsilon.rows() != 1) throw DimensionMismatch("coalgebra: epsilon must have one row");
  if (delta.rows() != n * n || delta.cols() != n) {
    throw DimensionMismatch("coalgebra: delta must be dim^2 x dim");
  }
  data_ = std::make_shared<const Data>(Data{std::move(delta), std::move(epsilon)});
}

bool operator==(const Coalgebra& a, const Coalgebra& b) {
  return a.data_ == b.data_ ||
         (equal(a.delta(), b.delta()) && equal(a.epsilon(), b.epsilon()));
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const AxiomCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.axiom << ": ";
    if (c.passed) {
      out << "pass\n";
    } else if (c.entry) {
      out << "FAIL at (" << c.entry->row << ", " << c.entry->col << "): " << to_string(c.lhs)
          << " != " << to_string(c.rhs) << '\n';
    } else {
      out << "FAIL (shape)\n";
    }
  }
  return out.str();
}

AxiomCheck check_identity(std::string axiom, const Matrix& lhs, const Matrix& rhs) {
  AxiomCheck check;
  check.axiom = std::move(axiom);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    check.passed = false;
    return check;
  }
  if (auto e = linalg::first_difference(lhs, rhs)) {
    check.passed = false;
    check.entry = e;
    check.lhs = lhs(e->row, e->col);
    check.rhs = rhs(e->row, e->col);
  }
  return check;
}

ValidationReport validate_coalgebra(const Coalgebra& c) {
  const Matrix id = identity<Rational>(c.dim());
  ValidationReport r;
  r.checks.push_back(check_identity("coassociativity", kron_apply(c.delta(), id, c.delta()),
                                    kron_apply(id, c.delta(), c.delta())));
  r.checks.push_back(check_identity("left counit", kron_apply(c.epsilon(), id, c.delta()), id));
  r.checks.push_back(check_identity("right counit", kron_apply(id, c.epsilon(), c.delta()), id));
  return r;
}

Coalgebra grouplike(Index n) {
  if (n < 1) throw DimensionMismatch("grouplike: dimension must be positive");
  Matrix delta = Matrix::Zero(n * n, n);
  Matrix eps = Matrix::Ones(1, n);
  for (Index i = 0; i < n; ++i) delta(i * n + i, i) = 1;
  return {std::move(delta), std::move(eps)};
}

Coalgebra comatrix(Index n) {
  if (n < 1) throw DimensionMismatch("comatrix: size must be positive");
  const Index d = n * n;
  Matrix delta = Matrix::Zero(d * d, d);
  Matrix eps = Matrix::Zero(1, d);
  for (Index i = 0; i < n; ++i) {
    eps(0, i * n + i) = 1;
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) delta((i * n + k) * d + (k * n + j), i * n + j) = 1;
    }
  }
  return {std::move(delta), std::move(eps)};
}

Coalgebra divided_power(Index trunc) {
  if (trunc < 0) throw DimensionMismatch("divided_power: negative truncation");
  const Index d = trunc + 1;
  Matrix delta = Matrix::Zero(d * d, d);
  Matrix eps = Matrix::Zero(1, d);
  eps(0, 0) = 1;
  for (Index k = 0; k < d; ++k) {
    for (Index i = 0; i <= k; ++i) delta(i * d + (k - i), k) = 1;
  }
  return {std::move(delta), std::move(eps)};
}

Matrix iterated_delta(const Coalgebra& c, int n) {
  if (n < 0) throw DimensionMismatch("iterated_delta: negative order");
  const Matrix id = identity<Rational>(c.dim());
  Matrix d = id;
  for (int k = 1; k <= n; ++k) d = kron_apply(d, id, c.delta());
  return d;
}

Algebra dual_algebra(const Coalgebra& c) {
  return {c.dim(), Matrix(c.delta().transpose()), Matrix(c.epsilon().transpose())};
}

ValidationReport validate_algebra(const Algebra& a) {
  const Matrix id = identity<Rational>(a.dim);
  // m (m (x) 1) is the transpose of (m^T (x) 1) m^T, which avoids forming m (x) 1.
  const Matrix mt = a.mult.transpose();
  ValidationReport r;
  r.checks.push_back(check_identity("associativity", Matrix(kron_apply(mt, id, mt).transpose()),
                                    Matrix(kron_apply(id, mt, mt).transpose())));
  r.checks.push_back(
      check_identity("left unit", compose(a.mult, linalg::kron(a.unit, id)), id));
  r.checks.push_back(
      check_identity("right unit", compose(a.mult, linalg::kron(id, a.unit)), id));
  return r;
}

Subspace coradical(const Coalgebra& c) {
  const Index n = c.dim();
  const Matrix& d = c.delta();
  // In C*, e^a e^b = sum_k delta(a n + b, k) e^k, so tr(L_{e^a}) = sum_j delta(a n + j, j).
  Matrix trace(n, 1);
  for (Index a = 0; a < n; ++a) {
    Rational t = 0;
    for (Index j = 0; j < n; ++j) t += d(a * n + j, j);
    trace(a, 0) = t;
  }
  Matrix form(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      Rational t = 0;
      for (Index k = 0; k < n; ++k) {
        if (!linalg::is_zero(d(i * n + j, k))) t += d(i * n + j, k) * trace(k, 0);
      }
      form(i, j) = t;
    }
  }
  const Subspace rad = linalg::kernel(form);
  return linalg::kernel(Matrix(rad.basis().transpose()));
}

bool is_coalgebra_map(const Coalgebra& source, const Coalgebra& target, const Matrix& map) {
  if (map.rows() != target.dim() || map.cols() != source.dim()) return false;
  return equal(compose(target.delta(), map), kron_apply(map, map, source.delta())) &&
         equal(compose(target.epsilon(), map), source.epsilon());
}

CoalgebraMap::CoalgebraMap(Coalgebra source, Coalgebra target, Matrix map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!is_coalgebra_map(source_, target_, map_)) {
    throw NotCoalgebraMap("map does not commute with comultiplication and counit");
  }
}

Subcoalgebra make_subcoalgebra(const Coalgebra& c, const Subspace& d) {
  if (d.ambient_dim() != c.dim()) {
    throw DimensionMismatch("subcoalgebra: ambient dimension differs");
  }
  auto delta = linalg::tensor_coordinates(d, d, compose(c.delta(), d.basis()));
  if (!delta) throw NotSubcoalgebra("Delta(D) is not contained in D (x) D");
  return {d, Coalgebra(std::move(*delta), compose(c.epsilon(), d.basis())), d.basis()};
}

KernelSubcoalgebra kernel_subcoalgebra(const Coalgebra& c, const Matrix& f, const Bicomodule& l) {
  const BicomoduleMap checked(regular(c), l, f);
  const Subspace d = linalg::kernel(f);
  auto delta = linalg::tensor_coordinates(d, d, compose(c.delta(), d.basis()));
  if (!delta) throw InternalCheckFailed("kernel of a bicomodule map is not a subcoalgebra");
  Coalgebra sub(std::move(*delta), compose(c.epsilon(), d.basis()));
  CoalgebraMap inclusion(sub, c, d.basis());
  return {std::move(sub), std::move(inclusion)};
}

Subspace wedge(const Coalgebra& c, const Subspace& x, const Subspace& y) {
  if (x.ambient_dim() != c.dim() || y.ambient_dim() != c.dim()) {
    throw DimensionMismatch("wedge: subspaces must live in the coalgebra");
  }
  const Matrix px = linalg::cokernel(x.basis()).proj;
  const Matrix py = linalg::cokernel(y.basis()).proj;
  return linalg::kernel(kron_apply(px, py, c.delta()));
}

namespace {

// Walks D^{^1}, D^{^2}, ... keeping only a row basis of p^{(x) k} Delta^{k-1}.
// Replacing G by a row basis changes G (x) p by an injective factor on the
// left, so every kernel along the way is unchanged.
class WedgeWalker {
 public:
  WedgeWalker(const Coalgebra& c, const Subspace& d) : c_(c) {
    make_subcoalgebra(c, d);
    p_ = linalg::cokernel(d.basis()).proj;
  }

  Subspace next() {
    if (k_ == 0) {
      g_ = p_;
    } else {
      g_ = linalg::row_basis(kron_apply(g_, p_, c_.delta()));
    }
    ++k_;
    return linalg::kernel(g_);
  }

 private:
  const Coalgebra& c_;
  Matrix p_;
  Matrix g_;
  int k_ = 0;
};

}  // namespace

Subspace wedge_power(const Coalgebra& c, const Subspace& d, int n) {
  if (d.ambient_dim() != c.dim()) {
    throw DimensionMismatch("wedge_power: subspace must live in the coalgebra");
  }
  if (n < 0) throw DimensionMismatch("wedge_power: negative exponent");
  WedgeWalker walker(c, d);
  if (n == 0) return Subspace::zero(c.dim());
  Subspace w;
  for (int k = 1; k <= n; ++k) w = walker.next();
  return w;
}

WedgeFiltration wedge_filtration(const Coalgebra& c, const Subspace& d) {
  if (d.ambient_dim() != c.dim()) {
    throw DimensionMismatch("wedge_filtration: subspace must live in the coalgebra");
  }
  WedgeWalker walker(c, d);
  WedgeFiltration out;
  out.chain.push_back(walker.next());
  // Dimensions grow strictly until the chain stops, so dim(C) + 1 steps suffice.
  for (Index step = 0; step <= c.dim(); ++step) {
    Subspace w = walker.next();
    if (w == out.chain.back()) {
      out.stabilized = out.chain.back();
      out.loewy_length = static_cast<int>(out.chain.size());
      return out;
    }
    if (!w.contains(out.chain.back())) {
      throw InternalCheckFailed("wedge filtration is not increasing");
    }
    out.chain.push_back(std::move(w));
  }
  throw InternalCheckFailed("wedge filtration did not stabilize");
}

}  // namespace cotensor
