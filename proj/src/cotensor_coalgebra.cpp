#include "cotensor/cotensor_coalgebra.hpp"

#include <string>

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

// out(:, col_off + j) += (i_a (x) i_b) x(:, j), where x has rows indexed by
// (a, b) with b < dim_b, and i_a, i_b shift into blocks at off_a, off_b of a
// space of dimension total.
void add_pair(Matrix& out, Index col_off, const Matrix& x, Index dim_b, Index off_a, Index off_b,
              Index total) {
  for (Index j = 0; j < x.cols(); ++j) {
    for (Index r = 0; r < x.rows(); ++r) {
      if (linalg::is_zero(x(r, j))) continue;
      out((off_a + r / dim_b) * total + off_b + r % dim_b, col_off + j) += x(r, j);
    }
  }
}

void require_level(int k, int max) {
  if (k < 0 || k > max) {
    throw DimensionMismatch("truncated cotensor coalgebra: degree " + std::to_string(k) +
                            " out of range");
  }
}

std::vector<Index> offsets_of(const CotensorPowers& p) {
  std::vector<Index> off{0};
  for (int k = 0; k <= p.trunc(); ++k) off.push_back(off.back() + p.dim(k));
  return off;
}

// zeta^n and rho-bar_n over C^n(M), whose blocks are the first n of `off`.
GradedCocycle graded_cocycle(const CotensorPowers& p, const std::vector<Index>& off,
                             const Coalgebra& cn, int n) {
  const Index s = off[static_cast<std::size_t>(n)];
  const Index dn = p.dim(n);
  const Index c = p.base().dim();
  Matrix value = Matrix::Zero(s * s, dn);
  for (int t = 1; t <= n - 1; ++t) {
    add_pair(value, 0, p.split(t, n - t), p.dim(n - t), off[static_cast<std::size_t>(t)],
             off[static_cast<std::size_t>(n - t)], s);
  }
  value = -value;
  Matrix rl = Matrix::Zero(s * dn, dn);
  rl.topRows(c * dn) = p.object(n).rho_l();
  Matrix rr = Matrix::Zero(dn * s, dn);
  add_pair(rr, 0, p.object(n).rho_r(), c, 0, 0, s);
  return {n, std::move(value), cn, Bicomodule(cn, std::move(rl), std::move(rr))};
}

}  // namespace

CotensorPowers::CotensorPowers(const Bicomodule& m, int trunc)
    : input_(m), powers_(cotensor_powers(m, trunc)) {
  for (std::size_t k = 0; k < powers_.size(); ++k) {
    spaces_.push_back(k == 0 ? Subspace() : Subspace::span(powers_[k].inclusion));
  }
}

Matrix CotensorPowers::split(int r, int s) const {
  if (r < 0 || s < 0 || r + s > trunc()) throw DimensionMismatch("split: degree out of range");
  if (r == 0 && s == 0) return base().delta();
  if (r == 0) return object(s).rho_l();
  if (s == 0) return object(r).rho_r();
  auto h = linalg::tensor_coordinates(spaces_[static_cast<std::size_t>(r)],
                                      spaces_[static_cast<std::size_t>(s)], inclusion(r + s));
  if (!h) throw InternalCheckFailed("split: M^{box r+s} is not inside M^{box r} (x) M^{box s}");
  return *h;
}

Matrix TruncatedCotensorCoalgebra::inclusion(int k) const {
  require_level(k, trunc);
  Matrix i = Matrix::Zero(total.dim(), grading[static_cast<std::size_t>(k)]);
  i.middleRows(offsets[static_cast<std::size_t>(k)], i.cols()) = identity<Rational>(i.cols());
  return i;
}

Matrix TruncatedCotensorCoalgebra::projection(int k) const { return inclusion(k).transpose(); }

Matrix TruncatedCotensorCoalgebra::slice_inclusion(int n) const {
  require_level(n, trunc + 1);
  const Index s = offsets[static_cast<std::size_t>(n)];
  Matrix i = Matrix::Zero(total.dim(), s);
  i.topRows(s) = identity<Rational>(s);
  return i;
}

Matrix TruncatedCotensorCoalgebra::slice_projection(int n) const {
  return slice_inclusion(n).transpose();
}

Coalgebra TruncatedCotensorCoalgebra::slice_coalgebra(int n) const {
  require_level(n, trunc + 1);
  const Index s = offsets[static_cast<std::size_t>(n)];
  const Index d = total.dim();
  Matrix delta(s * s, s);
  for (Index a = 0; a < s; ++a) delta.middleRows(a * s, s) = total.delta().block(a * d, 0, s, s);
  return {std::move(delta), total.epsilon().leftCols(s)};
}

TruncatedCotensorCoalgebra build_truncated(const Coalgebra& c, const Bicomodule& m, int trunc) {
  if (trunc < 0) throw DimensionMismatch("build_truncated: negative truncation");
  if (!(m.over() == c)) throw CoalgebraMismatch("build_truncated: M is not over C");
  auto p = std::make_shared<const CotensorPowers>(m, trunc);
  const auto off = offsets_of(*p);
  const Index d = off.back();
  Matrix delta = Matrix::Zero(d * d, d);
  add_pair(delta, 0, c.delta(), c.dim(), 0, 0, d);
  for (int k = 1; k <= trunc; ++k) {
    const Index col = off[static_cast<std::size_t>(k)];
    const Index ok = off[static_cast<std::size_t>(k)];
    add_pair(delta, col, p->split(k, 0), c.dim(), ok, 0, d);
    add_pair(delta, col, p->split(0, k), p->dim(k), 0, ok, d);
    for (int r = 1; r <= k - 1; ++r) {
      add_pair(delta, col, p->split(r, k - r), p->dim(k - r), off[static_cast<std::size_t>(r)],
               off[static_cast<std::size_t>(k - r)], d);
    }
  }
  Matrix eps = Matrix::Zero(1, d);
  eps.leftCols(c.dim()) = c.epsilon();
  TruncatedCotensorCoalgebra t;
  t.base = c;
  t.input = m;
  t.trunc = trunc;
  t.total = Coalgebra(std::move(delta), std::move(eps));
  for (int k = 0; k <= trunc; ++k) t.grading.push_back(p->dim(k));
  t.offsets = off;
  t.powers = std::move(p);
  return t;
}

GradedCocycle zeta(const TruncatedCotensorCoalgebra& t, int n) {
  if (n < 1 || n > t.trunc) throw DimensionMismatch("zeta: degree out of range");
  return graded_cocycle(*t.powers, t.offsets, t.slice_coalgebra(n), n);
}

Matrix cocycle_defect(const GradedCocycle& z) {
  return differential(z.coalgebra, z.module, {2, z.value}).value;
}

namespace {

std::vector<HochschildExtensionData> tower_from(const CotensorPowers& p) {
  const auto off = offsets_of(p);
  std::vector<HochschildExtensionData> tower;
  Coalgebra cn = p.base();
  for (int n = 1; n <= p.trunc(); ++n) {
    GradedCocycle z = graded_cocycle(p, off, cn, n);
    tower.push_back(hochschild_extension(cn, z.module, {2, std::move(z.value)}));
    cn = tower.back().total;
  }
  return tower;
}

}  // namespace

std::vector<HochschildExtensionData> extension_tower(const Coalgebra& c, const Bicomodule& m,
                                                     int trunc) {
  if (trunc < 0) throw DimensionMismatch("extension_tower: negative truncation");
  if (!(m.over() == c)) throw CoalgebraMismatch("extension_tower: M is not over C");
  return tower_from(CotensorPowers(m, trunc));
}

TruncatedCotensorCoalgebra build_iterative(const Coalgebra& c, const Bicomodule& m, int trunc) {
  if (trunc < 0) throw DimensionMismatch("build_iterative: negative truncation");
  if (!(m.over() == c)) throw CoalgebraMismatch("build_iterative: M is not over C");
  auto p = std::make_shared<const CotensorPowers>(m, trunc);
  const auto tower = tower_from(*p);
  TruncatedCotensorCoalgebra t;
  t.base = c;
  t.input = m;
  t.trunc = trunc;
  t.total = tower.empty() ? c : tower.back().total;
  for (int k = 0; k <= trunc; ++k) t.grading.push_back(p->dim(k));
  t.offsets = offsets_of(*p);
  t.powers = std::move(p);
  return t;
}

ValidationReport component_identities(const TruncatedCotensorCoalgebra& t) {
  const CotensorPowers& p = *t.powers;
  const Coalgebra& c = t.base;
  const Bicomodule& m = t.input;
  const Matrix& delta = t.total.delta();
  const Matrix ic = identity<Rational>(c.dim());
  const Index d = t.total.dim();
  std::vector<Matrix> proj;
  for (int k = 0; k <= t.trunc; ++k) proj.push_back(t.projection(k));
  ValidationReport r;
  for (int a = 0; a <= t.trunc; ++a) {
    for (int b = 0; b <= t.trunc; ++b) {
      const std::string where = " [m=" + std::to_string(a) + ", n=" + std::to_string(b) + "]";
      const Matrix lhs = kron_apply(proj[static_cast<std::size_t>(a)],
                                    proj[static_cast<std::size_t>(b)], delta);
      if (a == 0 && b == 0) {
        r.checks.push_back(
            check_identity("(p_0 (x) p_0) Delta_T = Delta_C p_0", lhs, compose(c.delta(), proj[0])));
      } else if (b == 0) {
        const Matrix& chi = p.inclusion(a);
        const Matrix rhs = compose(kron_apply(identity<Rational>(power(m.dim(), a - 1)), m.rho_r(), chi),
                                   proj[static_cast<std::size_t>(a)]);
        r.checks.push_back(check_identity("(p_m (x) p_0) Delta_T = (M^{box m-1} box rho^r) p_m" + where,
                                          kron_apply(chi, ic, lhs), rhs));
      } else if (a == 0) {
        const Matrix& chi = p.inclusion(b);
        const Matrix rhs = compose(kron_apply(m.rho_l(), identity<Rational>(power(m.dim(), b - 1)), chi),
                                   proj[static_cast<std::size_t>(b)]);
        r.checks.push_back(check_identity("(p_0 (x) p_n) Delta_T = (rho^l box M^{box n-1}) p_n" + where,
                                          kron_apply(ic, chi, lhs), rhs));
      } else {
        const Matrix pushed = kron_apply(p.inclusion(a), p.inclusion(b), lhs);
        const Matrix rhs = a + b <= t.trunc
                               ? compose(p.inclusion(a + b), proj[static_cast<std::size_t>(a + b)])
                               : Matrix(Matrix::Zero(pushed.rows(), d));
        r.checks.push_back(check_identity(
            "(p_m (x) p_n) Delta_T = (M^{box m-1} box chi box M^{box n-1}) p_{m+n}" + where,
            pushed, rhs));
      }
    }
  }
  return r;
}

bool is_graded(const TruncatedCotensorCoalgebra& t) {
  for (int k = 0; k <= t.trunc; ++k) {
    const Matrix image = compose(t.total.delta(), t.inclusion(k));
    for (int a = 0; a <= t.trunc; ++a) {
      for (int b = 0; b <= t.trunc; ++b) {
        if (a + b == k) continue;
        if (!linalg::is_zero(kron_apply(t.projection(a), t.projection(b), image))) return false;
      }
    }
  }
  return true;
}

bool wedge_recovery_check(const TruncatedCotensorCoalgebra& t, int n) {
  require_level(n, t.trunc + 1);
  const Subspace slice = Subspace::span(t.inclusion(0));
  return wedge_power(t.total, slice, n) == Subspace::span(t.slice_inclusion(n));
}

bool graded_limit_check(const TruncatedCotensorCoalgebra& t) {
  const Matrix p = linalg::cokernel(t.inclusion(0)).proj;
  // As in wedge_power, a row basis of p^{(x) n+1} Delta^n has the same kernel.
  Matrix g = p;
  for (int n = 0; n <= t.trunc; ++n) {
    if (n > 0) g = linalg::row_basis(kron_apply(g, p, t.total.delta()));
    for (int b = 0; b <= n; ++b) {
      if (!linalg::is_zero(compose(g, t.inclusion(b)))) return false;
    }
  }
  return true;
}

bool determination_check(const CoalgebraMap& alpha, const CoalgebraMap& beta,
                         const TruncatedCotensorCoalgebra& t) {
  if (!(alpha.target() == t.total) || !(beta.target() == t.total) ||
      !(alpha.source() == beta.source())) {
    throw CoalgebraMismatch("determination_check: maps must share source and land in T");
  }
  if (t.trunc < 1) return true;
  if (!equal(compose(t.projection(1), alpha.map()), compose(t.projection(1), beta.map()))) {
    return true;
  }
  for (int n = 2; n <= t.trunc; ++n) {
    const Matrix pn = t.projection(n);
    if (!equal(compose(pn, alpha.map()), compose(pn, beta.map()))) return false;
  }
  return true;
}

std::vector<Matrix> tensor_components(const Coalgebra& e, const Matrix& f_c, const Matrix& f_m,
                                      int count) {
  std::vector<Matrix> g;
  if (count > 0) g.push_back(f_c);
  if (count > 1) g.push_back(f_m);
  for (int k = 2; k < count; ++k) g.push_back(kron_apply(g.back(), f_m, e.delta()));
  return g;
}

CoalgebraMap universal_map(const Coalgebra& e, const CoalgebraMap& f_c, const Matrix& f_m,
                           const TruncatedCotensorCoalgebra& t,
                           const std::optional<CoalgebraMap>& competitor) {
  if (!(f_c.source() == e) || !(f_c.target() == t.base)) {
    throw CoalgebraMismatch("universal_map: f_C must map E to the base of T");
  }
  const Index n = t.trunc;
  const Matrix ie = identity<Rational>(e.dim());
  const Bicomodule e_over_c(t.base, kron_apply(f_c.map(), ie, e.delta()),
                            kron_apply(ie, f_c.map(), e.delta()));
  if (!is_bicomodule_map(e_over_c, t.input, f_m)) {
    throw NotBicomoduleMap("universal_map: f_M is not a bicomodule map E -> M");
  }
  if (!linalg::is_zero(compose(f_m, coradical(e).basis()))) {
    throw NicholsViolated("universal_map: f_M does not vanish on Corad(E)");
  }
  auto g = tensor_components(e, f_c.map(), f_m, static_cast<int>(n) + 2);
  if (!linalg::is_zero(g.back())) {
    // Vanishing sets in once k exceeds the Loewy length of E, which is at most dim E.
    Matrix next = g.back();
    for (Index k = n + 2; k <= n + 2 + e.dim(); ++k) {
      next = kron_apply(next, f_m, e.delta());
      if (linalg::is_zero(next)) {
        throw TruncationTooSmall("universal_map: truncation " + std::to_string(n) +
                                     " is too small; the smallest adequate is " +
                                     std::to_string(k - 1),
                                 static_cast<int>(k - 1));
      }
    }
    throw InternalCheckFailed("universal_map: f_M^{(x) k} Delta^{k-1} never vanishes");
  }
  Matrix f = Matrix::Zero(t.total.dim(), e.dim());
  for (int k = 0; k <= n; ++k) {
    Matrix component;
    try {
      component = linalg::factor_through(t.powers->inclusion(k), g[static_cast<std::size_t>(k)]);
    } catch (const NotInImage&) {
      throw InternalCheckFailed("universal_map: corestriction to M^{box k} failed");
    }
    f.middleRows(t.offsets[static_cast<std::size_t>(k)], component.rows()) = component;
  }
  if (!is_coalgebra_map(e, t.total, f)) {
    throw InternalCheckFailed("universal_map: assembled map is not a coalgebra map");
  }
  if (!equal(compose(t.projection(0), f), f_c.map()) ||
      (n >= 1 && !equal(compose(t.projection(1), f), f_m))) {
    throw InternalCheckFailed("universal_map: components p_0 f, p_1 f are wrong");
  }
  CoalgebraMap result(e, t.total, std::move(f));
  if (competitor) {
    if (!determination_check(result, *competitor, t)) {
      throw InternalCheckFailed("universal_map: competitor with equal p_1 differs in degree >= 2");
    }
    const bool same_base = equal(compose(t.projection(0), competitor->map()), f_c.map());
    const bool same_first = n < 1 || equal(compose(t.projection(1), competitor->map()), f_m);
    if (same_base && same_first && !equal(competitor->map(), result.map())) {
      throw InternalCheckFailed("universal_map: two distinct maps with the same p_0, p_1");
    }
  }
  return result;
}

}  // namespace cotensor
