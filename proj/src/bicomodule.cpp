#include "cotensor/bicomodule.hpp"

namespace cotensor {

using linalg::compose;
using linalg::equal;
using linalg::identity;
using linalg::kron_apply;
using linalg::tensor_coordinates;

Bicomodule::Bicomodule() : Bicomodule(Coalgebra(), Matrix(0, 0), Matrix(0, 0)) {}

Bicomodule::Bicomodule(Coalgebra over, Matrix rho_l, Matrix rho_r)
    : Bicomodule(over, over, std::move(rho_l), std::move(rho_r)) {}

Bicomodule::Bicomodule(Coalgebra left, Coalgebra right, Matrix rho_l, Matrix rho_r) {
  const Index m = rho_l.cols();
  if (rho_r.cols() != m) throw DimensionMismatch("bicomodule: coactions disagree on dim");
  if (rho_l.rows() != left.dim() * m) {
    throw DimensionMismatch("bicomodule: rho_l must be dim(C) * dim(M) x dim(M)");
  }
  if (rho_r.rows() != m * right.dim()) {
    throw DimensionMismatch("bicomodule: rho_r must be dim(M) * dim(D) x dim(M)");
  }
  data_ = std::make_shared<const Data>(
      Data{std::move(left), std::move(right), std::move(rho_l), std::move(rho_r)});
}

const Coalgebra& Bicomodule::over() const {
  if (!(left() == right())) {
    throw CoalgebraMismatch("bicomodule has different left and right coalgebras");
  }
  return left();
}

bool operator==(const Bicomodule& a, const Bicomodule& b) {
  return a.data_ == b.data_ ||
         (a.left() == b.left() && a.right() == b.right() && equal(a.rho_l(), b.rho_l()) &&
          equal(a.rho_r(), b.rho_r()));
}

ValidationReport validate_bicomodule(const Bicomodule& m) {
  const Coalgebra& c = m.left();
  const Coalgebra& d = m.right();
  const Matrix im = identity<Rational>(m.dim());
  const Matrix ic = identity<Rational>(c.dim());
  const Matrix id = identity<Rational>(d.dim());
  ValidationReport r;
  r.checks.push_back(check_identity("left coassociativity", kron_apply(c.delta(), im, m.rho_l()),
                                    kron_apply(ic, m.rho_l(), m.rho_l())));
  r.checks.push_back(check_identity("right coassociativity",
                                    kron_apply(im, d.delta(), m.rho_r()),
                                    kron_apply(m.rho_r(), id, m.rho_r())));
  r.checks.push_back(
      check_identity("left counit", kron_apply(c.epsilon(), im, m.rho_l()), im));
  r.checks.push_back(
      check_identity("right counit", kron_apply(im, d.epsilon(), m.rho_r()), im));
  r.checks.push_back(check_identity("compatibility", kron_apply(ic, m.rho_r(), m.rho_l()),
                                    kron_apply(m.rho_l(), id, m.rho_r())));
  return r;
}

Bicomodule regular(const Coalgebra& c) { return {c, c.delta(), c.delta()}; }

Bicomodule cofree(const Coalgebra& c, Index x_dim) {
  const Index n = c.dim();
  return {c, linalg::kron(c.delta(), identity<Rational>(x_dim * n)),
          linalg::kron(identity<Rational>(n * x_dim), c.delta())};
}

Bicomodule direct_sum(const Bicomodule& a, const Bicomodule& b) {
  if (!(a.left() == b.left()) || !(a.right() == b.right())) {
    throw CoalgebraMismatch("direct_sum: summands over different coalgebras");
  }
  const Index c = a.left().dim();
  const Index d = a.right().dim();
  const Index ma = a.dim();
  const Index mb = b.dim();
  const Index m = ma + mb;
  Matrix rl = Matrix::Zero(c * m, m);
  Matrix rr = Matrix::Zero(m * d, m);
  for (Index i = 0; i < c; ++i) {
    for (Index j = 0; j < ma; ++j) rl.block(i * m + j, 0, 1, ma) = a.rho_l().block(i * ma + j, 0, 1, ma);
    for (Index j = 0; j < mb; ++j) {
      rl.block(i * m + ma + j, ma, 1, mb) = b.rho_l().block(i * mb + j, 0, 1, mb);
    }
  }
  rr.topLeftCorner(ma * d, ma) = a.rho_r();
  rr.bottomRightCorner(mb * d, mb) = b.rho_r();
  return {a.left(), a.right(), std::move(rl), std::move(rr)};
}

Bicomodule change_basis(const Bicomodule& m, const Matrix& basis) {
  if (basis.rows() != m.dim() || basis.cols() != m.dim()) {
    throw DimensionMismatch("change_basis: basis must be square of size dim(M)");
  }
  auto inv = linalg::solve(basis, identity<Rational>(m.dim()));
  if (!inv || !equal(compose(*inv, basis), identity<Rational>(m.dim()))) {
    throw DimensionMismatch("change_basis: basis is not invertible");
  }
  const Matrix ic = identity<Rational>(m.left().dim());
  const Matrix id = identity<Rational>(m.right().dim());
  return {m.left(), m.right(), kron_apply(ic, *inv, compose(m.rho_l(), basis)),
          kron_apply(*inv, id, compose(m.rho_r(), basis))};
}

bool is_bicomodule_map(const Bicomodule& source, const Bicomodule& target, const Matrix& map) {
  if (!(source.left() == target.left()) || !(source.right() == target.right())) return false;
  if (map.rows() != target.dim() || map.cols() != source.dim()) return false;
  const Matrix ic = identity<Rational>(source.left().dim());
  const Matrix id = identity<Rational>(source.right().dim());
  return equal(compose(target.rho_l(), map), kron_apply(ic, map, source.rho_l())) &&
         equal(compose(target.rho_r(), map), kron_apply(map, id, source.rho_r()));
}

BicomoduleMap::BicomoduleMap(Bicomodule source, Bicomodule target, Matrix map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (!is_bicomodule_map(source_, target_, map_)) {
    throw NotBicomoduleMap("map does not commute with the coactions");
  }
}

namespace {

// The sub-bicomodule spanned by `sub`, given the coactions of the ambient
// space already applied to sub.basis(). Throws InternalCheckFailed when sub
// is not stable under them.
Cotensor restrict_to(const Coalgebra& left, const Coalgebra& right, const Matrix& rho_l_sub,
                     const Matrix& rho_r_sub, const Subspace& sub) {
  auto rl = tensor_coordinates(Subspace::full(left.dim()), sub, rho_l_sub);
  auto rr = tensor_coordinates(sub, Subspace::full(right.dim()), rho_r_sub);
  if (!rl || !rr) throw InternalCheckFailed("subspace is not a sub-bicomodule");
  return {Bicomodule(left, right, std::move(*rl), std::move(*rr)), sub.basis()};
}

}  // namespace

Cotensor cotensor(const Bicomodule& v, const Bicomodule& w) {
  if (!(v.right() == w.left())) {
    throw CoalgebraMismatch("cotensor: factors are not over the same coalgebra");
  }
  const Matrix iv = identity<Rational>(v.dim());
  const Matrix iw = identity<Rational>(w.dim());
  const Matrix equalizer = linalg::kron(v.rho_r(), iw) - linalg::kron(iv, w.rho_l());
  const Subspace sub = linalg::kernel(equalizer);
  return restrict_to(v.left(), w.right(), kron_apply(v.rho_l(), iw, sub.basis()),
                     kron_apply(iv, w.rho_r(), sub.basis()), sub);
}

std::vector<Cotensor> cotensor_powers(const Bicomodule& m, int n) {
  if (n < 0) throw DimensionMismatch("cotensor_power: negative exponent");
  const Coalgebra& c = m.over();
  std::vector<Cotensor> out;
  out.push_back({regular(c), identity<Rational>(c.dim())});
  if (n >= 1) out.push_back({m, identity<Rational>(m.dim())});
  const Matrix im = identity<Rational>(m.dim());
  Index rest = m.dim();
  for (int k = 2; k <= n; ++k) {
    const Cotensor& prev = out.back();
    const Cotensor step = cotensor(prev.object, m);
    const Subspace sub = linalg::image(kron_apply(prev.inclusion, im, step.inclusion));
    // Coactions of M^{(x) k} act on the outer tensor factors only.
    const Matrix ir = identity<Rational>(rest);
    out.push_back(restrict_to(c, c, kron_apply(m.rho_l(), ir, sub.basis()),
                              kron_apply(ir, m.rho_r(), sub.basis()), sub));
    rest *= m.dim();
  }
  return out;
}

Cotensor cotensor_power(const Bicomodule& m, int n) { return cotensor_powers(m, n).back(); }

Matrix cotensor_of_maps(const BicomoduleMap& f, const BicomoduleMap& g) {
  const Cotensor from = cotensor(f.source(), g.source());
  const Cotensor to = cotensor(f.target(), g.target());
  try {
    return linalg::factor_through(to.inclusion, kron_apply(f.map(), g.map(), from.inclusion));
  } catch (const NotInImage&) {
    throw InternalCheckFailed("cotensor_of_maps: f (x) g leaves the cotensor product");
  }
}

UnitConstraints unit_constraints(const Bicomodule& m) {
  const Matrix im = identity<Rational>(m.dim());
  UnitConstraints u;
  u.left_object = cotensor(regular(m.left()), m);
  u.right_object = cotensor(m, regular(m.right()));
  try {
    u.left = linalg::factor_through(u.left_object.inclusion, m.rho_l());
    u.right = linalg::factor_through(u.right_object.inclusion, m.rho_r());
  } catch (const NotInImage&) {
    throw InternalCheckFailed("unit_constraints: coaction does not land in the cotensor");
  }
  u.left_inverse = kron_apply(m.left().epsilon(), im, u.left_object.inclusion);
  u.right_inverse = kron_apply(im, m.right().epsilon(), u.right_object.inclusion);
  if (!equal(compose(u.left_inverse, u.left), im) || !equal(compose(u.right_inverse, u.right), im) ||
      u.left_object.object.dim() != m.dim() || u.right_object.object.dim() != m.dim()) {
    throw InternalCheckFailed("unit_constraints: not mutually inverse");
  }
  return u;
}

InducedKernel induced_on_kernel(const BicomoduleMap& f) {
  const Bicomodule& s = f.source();
  const Subspace k = linalg::kernel(f.map());
  Cotensor sub = restrict_to(s.left(), s.right(), compose(s.rho_l(), k.basis()),
                             compose(s.rho_r(), k.basis()), k);
  if (!is_bicomodule_map(sub.object, s, sub.inclusion)) {
    throw InternalCheckFailed("induced_on_kernel: inclusion is not a bicomodule map");
  }
  return {std::move(sub.object), std::move(sub.inclusion)};
}

InducedCokernel induced_on_cokernel(const BicomoduleMap& f) {
  const Bicomodule& t = f.target();
  const auto coker = linalg::cokernel(f.map());
  const Matrix& proj = coker.proj;
  auto section = linalg::solve(proj, identity<Rational>(coker.quotient_dim));
  if (!section) throw InternalCheckFailed("induced_on_cokernel: projection is not surjective");
  const Matrix ic = identity<Rational>(t.left().dim());
  const Matrix id = identity<Rational>(t.right().dim());
  Bicomodule q(t.left(), t.right(), kron_apply(ic, proj, compose(t.rho_l(), *section)),
               kron_apply(proj, id, compose(t.rho_r(), *section)));
  if (!is_bicomodule_map(t, q, proj)) {
    throw InternalCheckFailed("induced_on_cokernel: coactions do not descend");
  }
  return {std::move(q), proj};
}

}  // namespace cotensor
