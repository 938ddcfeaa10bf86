#include "cotensor/cohomology.hpp"

namespace cotensor {

using linalg::compose;
using linalg::equal;
using linalg::identity;
using linalg::kron_apply;

namespace {

Index power(Index base, int exp) {
  Index r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

void require_over(const Coalgebra& c, const Bicomodule& l) {
  if (!(l.left() == c) || !(l.right() == c)) {
    throw CoalgebraMismatch("bicomodule is not over the given coalgebra");
  }
}

void require_shape(const Coalgebra& c, const Bicomodule& l, const Cochain& f) {
  if (f.degree < 0) throw DimensionMismatch("cochain: negative degree");
  if (f.value.rows() != power(c.dim(), f.degree) || f.value.cols() != l.dim()) {
    throw DimensionMismatch("cochain: value must be dim(C)^n x dim(L)");
  }
}

// (C^{left} (x) Delta (x) C^{right}) f, where f has rows indexed by
// (a, x, b) with a < left_dim, x < dim C, b < right_dim.
Matrix insert_delta(const Matrix& delta, Index n, const Matrix& f, Index left_dim,
                    Index right_dim) {
  const auto support = linalg::detail::column_support(delta);
  Matrix out = Matrix::Zero(left_dim * n * n * right_dim, f.cols());
  Rational term;
  for (Index col = 0; col < f.cols(); ++col) {
    for (Index r = 0; r < f.rows(); ++r) {
      const Rational& v = f(r, col);
      if (linalg::is_zero(v)) continue;
      const Index b = r % right_dim;
      const Index x = (r / right_dim) % n;
      const Index a = r / (right_dim * n);
      for (Index yz : support[static_cast<std::size_t>(x)]) {
        term = delta(yz, x);
        term *= v;
        out((a * n * n + yz) * right_dim + b, col) += term;
      }
    }
  }
  return out;
}

}  // namespace

Cochain zero_cochain(const Coalgebra& c, const Bicomodule& l, int degree) {
  if (degree < 0) throw DimensionMismatch("cochain: negative degree");
  return {degree, Matrix::Zero(power(c.dim(), degree), l.dim())};
}

Matrix face(const Coalgebra& c, const Bicomodule& l, const Cochain& f, int i) {
  require_over(c, l);
  require_shape(c, l, f);
  const int n = f.degree;
  if (i < 0 || i > n + 1) throw DimensionMismatch("face: index out of range");
  const Matrix ic = identity<Rational>(c.dim());
  if (i == 0) return kron_apply(f.value, ic, l.rho_r());
  if (i == n + 1) return kron_apply(ic, f.value, l.rho_l());
  return insert_delta(c.delta(), c.dim(), f.value, power(c.dim(), n - i), power(c.dim(), i - 1));
}

Cochain differential(const Coalgebra& c, const Bicomodule& l, const Cochain& f) {
  Matrix sum = face(c, l, f, 0);
  for (int i = 1; i <= f.degree + 1; ++i) {
    if (i % 2 == 0) {
      sum += face(c, l, f, i);
    } else {
      sum -= face(c, l, f, i);
    }
  }
  return {f.degree + 1, std::move(sum)};
}

Matrix differential_matrix(const Coalgebra& c, const Bicomodule& l, int n) {
  require_over(c, l);
  if (n < 0) throw DimensionMismatch("differential_matrix: negative degree");
  return linalg::operator_matrix<Rational>(
      power(c.dim(), n), l.dim(), [&](const Matrix& f) { return differential(c, l, {n, f}).value; });
}

CohomologyResult cohomology(const Coalgebra& c, const Bicomodule& l, int n) {
  require_over(c, l);
  if (n < 0) throw DimensionMismatch("cohomology: negative degree");
  const Index rows = power(c.dim(), n);
  const Subspace cocycles = linalg::kernel(differential_matrix(c, l, n));
  Subspace span = n == 0 ? Subspace::zero(rows * l.dim())
                         : linalg::image(differential_matrix(c, l, n - 1));
  CohomologyResult out;
  out.degree = n;
  out.cocycle_dim = cocycles.dim();
  out.coboundary_dim = span.dim();
  out.dimension = cocycles.dim() - span.dim();
  for (Index k = 0; k < cocycles.dim() && static_cast<Index>(out.representatives.size()) < out.dimension; ++k) {
    const Matrix z = cocycles.basis().col(k);
    if (span.contains(z)) continue;
    out.representatives.push_back({n, linalg::unflatten<Rational>(z, rows, l.dim())});
    span = linalg::subspace_sum(span, Subspace::span(z));
  }
  return out;
}

std::optional<Cochain> coboundary_preimage(const Coalgebra& c, const Bicomodule& l,
                                           const Cochain& f) {
  require_over(c, l);
  require_shape(c, l, f);
  if (f.degree == 0) throw DimensionMismatch("coboundary_preimage: degree 0 has no coboundaries");
  const int n = f.degree - 1;
  auto h = linalg::solve_for_map<Rational>(
      power(c.dim(), n), l.dim(),
      [&](const Matrix& g) { return differential(c, l, {n, g}).value; }, f.value);
  if (!h) return std::nullopt;
  return Cochain{n, std::move(*h)};
}

Coalgebra twisted_coalgebra(const Coalgebra& c, const Bicomodule& l, const Matrix& zeta) {
  const Index n = c.dim();
  const Index m = l.dim();
  const Index e = n + m;
  Matrix ic = Matrix::Zero(e, n);
  ic.topRows(n) = identity<Rational>(n);
  Matrix il = Matrix::Zero(e, m);
  il.bottomRows(m) = identity<Rational>(m);
  Matrix delta(e * e, e);
  delta.leftCols(n) = kron_apply(ic, ic, c.delta());
  delta.rightCols(m) = kron_apply(il, ic, l.rho_r()) + kron_apply(ic, il, l.rho_l()) -
                       kron_apply(ic, ic, zeta);
  Matrix eps(1, e);
  eps.leftCols(n) = c.epsilon();
  eps.rightCols(m) = kron_apply(c.epsilon(), c.epsilon(), zeta);
  return {std::move(delta), std::move(eps)};
}

ValidationReport validate_extension(const HochschildExtensionData& e) {
  const Coalgebra& t = e.total;
  const Matrix& p = e.proj;
  const Matrix& pi = e.retraction;
  const Matrix& s = e.sigma.map();
  ValidationReport r = validate_coalgebra(t);
  for (auto& check : r.checks) check.axiom = "a) " + check.axiom;
  r.checks.push_back(check_identity("exactness", compose(p, s),
                                    Matrix::Zero(p.rows(), s.cols())));
  r.checks.push_back(check_identity("b) sigma comultiplicative", compose(t.delta(), s),
                                    kron_apply(s, s, e.base.delta())));
  r.checks.push_back(check_identity("b) sigma counital", compose(t.epsilon(), s),
                                    e.base.epsilon()));
  r.checks.push_back(
      check_identity("b) retraction", compose(pi, s), identity<Rational>(e.base.dim())));
  r.checks.push_back(check_identity("c) (p (x) p) Delta = 0", kron_apply(p, p, t.delta()),
                                    Matrix::Zero(p.rows() * p.rows(), t.dim())));
  r.checks.push_back(check_identity("d) rho_l p = (pi (x) p) Delta", compose(e.cok.rho_l(), p),
                                    kron_apply(pi, p, t.delta())));
  r.checks.push_back(check_identity("d) rho_r p = (p (x) pi) Delta", compose(e.cok.rho_r(), p),
                                    kron_apply(p, pi, t.delta())));
  return r;
}

HochschildExtensionData hochschild_extension(const Coalgebra& c, const Bicomodule& l,
                                             const Cochain& zeta) {
  require_over(c, l);
  require_shape(c, l, zeta);
  if (zeta.degree != 2) throw DimensionMismatch("hochschild_extension: cocycle must have degree 2");
  Matrix b2 = differential(c, l, zeta).value;
  if (!linalg::is_zero(b2)) {
    throw NotACocycle("hochschild_extension: b^2(zeta) is nonzero", std::move(b2));
  }
  const Index n = c.dim();
  const Index m = l.dim();
  Coalgebra total = twisted_coalgebra(c, l, zeta.value);
  Matrix ic = Matrix::Zero(n + m, n);
  ic.topRows(n) = identity<Rational>(n);
  Matrix proj = Matrix::Zero(m, n + m);
  proj.rightCols(m) = identity<Rational>(m);
  Matrix retraction = ic.transpose();
  if (!is_coalgebra_map(c, total, ic)) {
    throw InternalCheckFailed("hochschild_extension: inclusion of C is not a coalgebra map");
  }
  HochschildExtensionData e{c, l, zeta, total, CoalgebraMap(c, total, ic), std::move(proj),
                            std::move(retraction)};
  const auto report = validate_extension(e);
  if (!report.ok()) {
    throw InternalCheckFailed("hochschild_extension: extension axioms fail\n" + report.summary());
  }
  return e;
}

std::optional<CoalgebraMap> trivialize_extension(const HochschildExtensionData& e) {
  const auto h = coboundary_preimage(e.base, e.cok, e.cocycle);
  if (!h) return std::nullopt;
  const Matrix correction = compose(h->value, e.proj);
  for (int sign : {1, -1}) {
    Matrix r = e.retraction + Rational(sign) * correction;
    if (is_coalgebra_map(e.total, e.base, r) &&
        equal(compose(r, e.sigma.map()), identity<Rational>(e.base.dim()))) {
      return CoalgebraMap(e.total, e.base, std::move(r));
    }
  }
  throw InternalCheckFailed("trivialize_extension: coboundary gives no retraction");
}

std::vector<Matrix> outer_bicomodule_maps(const Coalgebra& c, const Bicomodule& m) {
  require_over(c, m);
  const Index n = c.dim();
  const Index dm = m.dim();
  const Matrix in = identity<Rational>(n);
  const Matrix delta_c = linalg::kron(c.delta(), in);
  const Matrix c_delta = linalg::kron(in, c.delta());
  return linalg::solution_space<Rational>(dm, n * n, [&](const Matrix& h) {
    Matrix out(2 * n * dm, n * n);
    out.topRows(n * dm) = compose(m.rho_l(), h) - kron_apply(in, h, delta_c);
    out.bottomRows(n * dm) = compose(m.rho_r(), h) - kron_apply(h, in, c_delta);
    return out;
  });
}

std::optional<Matrix> is_coseparable(const Coalgebra& c) {
  const Index n = c.dim();
  const auto maps = outer_bicomodule_maps(c, regular(c));
  Matrix system(n * n, static_cast<Index>(maps.size()));
  for (std::size_t k = 0; k < maps.size(); ++k) {
    system.col(static_cast<Index>(k)) = linalg::flatten(compose(maps[k], c.delta()));
  }
  const auto alpha = linalg::solve(system, linalg::flatten(identity<Rational>(n)));
  if (!alpha) return std::nullopt;
  Matrix pi = Matrix::Zero(n, n * n);
  for (std::size_t k = 0; k < maps.size(); ++k) pi += (*alpha)(static_cast<Index>(k), 0) * maps[k];
  if (!is_bicomodule_map(cofree(c, 1), regular(c), pi) ||
      !equal(compose(pi, c.delta()), identity<Rational>(n))) {
    throw InternalCheckFailed("is_coseparable: witness fails verification");
  }
  return pi;
}

Matrix canonical_embedding(const Bicomodule& m) {
  return kron_apply(identity<Rational>(m.left().dim()), m.rho_r(), m.rho_l());
}

std::optional<Matrix> is_I_injective(const Bicomodule& m) {
  const Coalgebra& c = m.over();
  const Index n = c.dim();
  const Index dm = m.dim();
  const Matrix j = canonical_embedding(m);
  const auto maps = outer_bicomodule_maps(c, m);
  const Index h = static_cast<Index>(maps.size());
  // Unknown r restricted to C (x) e_x (x) C is sum_k alpha(x, k) maps[k].
  Matrix system(dm * dm, dm * h);
  for (Index x = 0; x < dm; ++x) {
    Matrix slice(n * n, dm);
    for (Index a = 0; a < n; ++a) {
      for (Index d = 0; d < n; ++d) slice.row(a * n + d) = j.row((a * dm + x) * n + d);
    }
    for (Index k = 0; k < h; ++k) {
      system.col(x * h + k) = linalg::flatten(compose(maps[static_cast<std::size_t>(k)], slice));
    }
  }
  const auto alpha = linalg::solve(system, linalg::flatten(identity<Rational>(dm)));
  if (!alpha) return std::nullopt;
  Matrix r = Matrix::Zero(dm, n * dm * n);
  for (Index x = 0; x < dm; ++x) {
    Matrix rx = Matrix::Zero(dm, n * n);
    for (Index k = 0; k < h; ++k) rx += (*alpha)(x * h + k, 0) * maps[static_cast<std::size_t>(k)];
    for (Index a = 0; a < n; ++a) {
      for (Index d = 0; d < n; ++d) r.col((a * dm + x) * n + d) = rx.col(a * n + d);
    }
  }
  if (!equal(compose(r, j), identity<Rational>(dm)) || !is_bicomodule_map(cofree(c, dm), m, r)) {
    throw InternalCheckFailed("is_I_injective: witness fails verification");
  }
  return r;
}

SmoothnessReport is_formally_smooth(const Coalgebra& c) {
  const BicomoduleMap delta(regular(c), cofree(c, 1), c.delta());
  SmoothnessReport out;
  out.cokernel = induced_on_cokernel(delta).object;
  out.splitting = is_I_injective(out.cokernel);
  out.h2_dimension = cohomology(c, out.cokernel, 2).dimension;
  out.smooth = out.splitting.has_value();
  if (out.smooth != (out.h2_dimension == 0)) {
    throw InternalCheckFailed("is_formally_smooth: Coker(Delta) criterion and H^2 disagree");
  }
  return out;
}

}  // namespace cotensor
