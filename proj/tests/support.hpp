#pragma once

// Helpers shared by the test binaries: literal matrices, seeded random
// instances, and oracles that do not go through the library's constructions.

#include <cmath>
#include <initializer_list>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cotensor/io.hpp"

namespace testing {

using namespace cotensor;

inline Matrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  Matrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline Matrix col(std::initializer_list<int> entries) {
  Matrix m(static_cast<Index>(entries.size()), 1);
  Index i = 0;
  for (int v : entries) m(i++, 0) = v;
  return m;
}

inline Matrix unit_vector(Index n, Index k) {
  Matrix v = Matrix::Zero(n, 1);
  v(k, 0) = 1;
  return v;
}

inline Matrix eye(Index n) { return Matrix::Identity(n, n); }

inline bool same(const Matrix& a, const Matrix& b) { return linalg::equal(a, b); }

/// Small rationals, with zeros mixed in at the given rate.
inline Matrix random_matrix(std::mt19937& rng, Index rows, Index cols, double zero_rate = 0.4) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 2);
  std::bernoulli_distribution zero(zero_rate);
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = zero(rng) ? Rational(0) : Rational(num(rng), den(rng));
  }
  return m;
}

inline Matrix random_invertible(std::mt19937& rng, Index n) {
  for (;;) {
    Matrix p = random_matrix(rng, n, n, 0.3);
    if (linalg::rank(p) == n) return p;
  }
}

/// A surjection together with a right inverse.
struct SplitSurjection {
  Matrix f;
  Matrix section;
};

inline SplitSurjection random_split_surjection(std::mt19937& rng, Index from, Index to) {
  for (;;) {
    Matrix f = random_matrix(rng, to, from, 0.3);
    if (linalg::rank(f) != to) continue;
    auto s = linalg::solve(f, eye(to));
    return {f, *s};
  }
}

inline Matrix inverse(const Matrix& p) { return *linalg::solve(p, eye(p.rows())); }

/// The coalgebra obtained by moving c along the basis change whose columns
/// are the new basis in old coordinates.
inline Coalgebra transport(const Coalgebra& c, const Matrix& basis) {
  const Matrix inv = inverse(basis);
  return Coalgebra(linalg::kron_apply(inv, inv, linalg::compose(c.delta(), basis)),
                   linalg::compose(c.epsilon(), basis));
}

inline Quiver random_quiver(std::mt19937& rng, int max_vertices = 5, int max_arrows = 6) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  Quiver q;
  const int n = nv(rng);
  for (int i = 0; i < n; ++i) q.vertices.push_back("v" + std::to_string(i + 1));
  std::uniform_int_distribution<int> na(0, max_arrows);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  const int m = na(rng);
  for (int a = 0; a < m; ++a) q.arrows.push_back({"a" + std::to_string(a + 1), vertex(rng), vertex(rng)});
  return q;
}

/// Random quivers kept small enough that their truncation at `trunc` stays
/// below `max_dim`; the path count grows fast on dense quivers.
inline Quiver random_small_quiver(std::mt19937& rng, int trunc, Index max_dim, int max_vertices = 5,
                                  int max_arrows = 6) {
  for (;;) {
    Quiver q = random_quiver(rng, max_vertices, max_arrows);
    Index total = 0;
    for (Index c : path_counts(q, trunc)) total += c;
    if (total <= max_dim) return q;
  }
}

/// Named quivers used across the suites.
inline std::vector<std::pair<std::string, Quiver>> named_quivers() {
  return {{"loop", loop_quiver()},
          {"kronecker", kronecker_quiver()},
          {"cycle3", cycle_quiver(3)},
          {"single arrow", single_arrow_quiver()},
          {"two-cycle", Quiver{{"v1", "v2"}, {{"a", 0, 1}, {"b", 1, 0}}}}};
}

/// A bicomodule over grouplike(n): arrows of a random quiver on n vertices,
/// seen in a random basis.
inline Bicomodule random_grouplike_bicomodule(std::mt19937& rng, int n, int max_arrows = 4) {
  std::uniform_int_distribution<int> na(1, max_arrows);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  Quiver q;
  for (int i = 0; i < n; ++i) q.vertices.push_back("v" + std::to_string(i));
  const int m = na(rng);
  for (int a = 0; a < m; ++a) q.arrows.push_back({"a" + std::to_string(a), vertex(rng), vertex(rng)});
  const Bicomodule b = arrow_bicomodule(q);
  return change_basis(b, random_invertible(rng, b.dim()));
}

/// Sums of regular and cofree bicomodules over c in a random basis.
inline Bicomodule random_bicomodule(std::mt19937& rng, const Coalgebra& c) {
  std::uniform_int_distribution<int> pick(0, 2);
  Bicomodule m = regular(c);
  switch (pick(rng)) {
    case 0:
      break;
    case 1:
      m = direct_sum(regular(c), regular(c));
      break;
    default:
      m = cofree(c, 1);
      break;
  }
  if (m.dim() > 8) return m;
  return change_basis(m, random_invertible(rng, m.dim()));
}

/// Unit coalgebra K: Delta = [1], epsilon = [1].
inline Coalgebra unit_coalgebra() { return grouplike(1); }

/// The coalgebras used as a battery in the cohomology and wedge suites.
inline std::vector<std::pair<std::string, Coalgebra>> small_coalgebras() {
  return {{"grouplike(1)", grouplike(1)},     {"grouplike(2)", grouplike(2)},
          {"grouplike(3)", grouplike(3)},     {"comatrix(2)", comatrix(2)},
          {"divided_power(1)", divided_power(1)}, {"divided_power(2)", divided_power(2)},
          {"divided_power(3)", divided_power(3)}};
}

/// Subcoalgebras of a path truncation: spans of path sets closed under taking
/// factors (including the end vertices).
inline std::vector<Index> factor_closure(const PathBasis& basis, const std::vector<Index>& seeds) {
  std::map<std::vector<int>, Index> index;
  std::map<int, Index> vertex;
  std::map<int, std::pair<int, int>> ends;
  for (Index i = 0; i < static_cast<Index>(basis.paths.size()); ++i) {
    const Path& p = basis.paths[static_cast<std::size_t>(i)];
    if (p.length() == 0) {
      vertex[p.source] = i;
    } else {
      index[p.arrows] = i;
      if (p.length() == 1) ends[p.arrows[0]] = {p.source, p.target};
    }
  }
  std::set<Index> out;
  for (Index s : seeds) {
    const Path& p = basis.paths[static_cast<std::size_t>(s)];
    out.insert(vertex.at(p.source));
    out.insert(vertex.at(p.target));
    for (int a : p.arrows) {
      out.insert(vertex.at(ends.at(a).first));
      out.insert(vertex.at(ends.at(a).second));
    }
    for (std::size_t a = 0; a < p.length(); ++a) {
      for (std::size_t b = a + 1; b <= p.length(); ++b) {
        out.insert(index.at({p.arrows.begin() + static_cast<long>(a),
                             p.arrows.begin() + static_cast<long>(b)}));
      }
    }
  }
  return {out.begin(), out.end()};
}

inline Subspace coordinate_span(Index ambient, const std::vector<Index>& coords) {
  Matrix m = Matrix::Zero(ambient, static_cast<Index>(coords.size()));
  for (std::size_t j = 0; j < coords.size(); ++j) m(coords[j], static_cast<Index>(j)) = 1;
  return Subspace::span(m);
}

/// A coalgebra of dimension <= max_dim with a subcoalgebra, both moved into a
/// random basis. Drawn from path truncations and divided powers.
struct CoalgebraWithSub {
  Coalgebra c;
  Subspace d;
};

inline CoalgebraWithSub random_coalgebra_with_sub(std::mt19937& rng, Index max_dim) {
  std::bernoulli_distribution use_quiver(0.7);
  Coalgebra c;
  Subspace d;
  if (use_quiver(rng)) {
    std::uniform_int_distribution<int> tr(1, 3);
    const int trunc = tr(rng);
    const Quiver q = random_small_quiver(rng, trunc, max_dim, 3, 3);
    const PathCoalgebra pc = deconcatenation_oracle(q, trunc);
    c = pc.coalgebra;
    const Index n = c.dim();
    std::uniform_int_distribution<Index> pick(0, n - 1);
    std::uniform_int_distribution<int> count(1, 2);
    std::vector<Index> seeds;
    for (int k = count(rng); k > 0; --k) seeds.push_back(pick(rng));
    d = coordinate_span(n, factor_closure(pc.basis, seeds));
  } else {
    std::uniform_int_distribution<Index> tr(1, max_dim - 1);
    const Index trunc = tr(rng);
    c = divided_power(trunc);
    std::uniform_int_distribution<Index> pick_top(0, trunc);
    const Index top = pick_top(rng);
    std::vector<Index> lower;
    for (Index k = 0; k <= top; ++k) lower.push_back(k);
    d = coordinate_span(c.dim(), lower);
  }
  const Matrix p = random_invertible(rng, c.dim());
  const Matrix inv = inverse(p);
  return {transport(c, p), Subspace::span(linalg::compose(inv, d.basis()))};
}

/// Hand-rolled b^n for the oracle checks: the faces written out with explicit
/// Kronecker products, without the library's differential.
inline Matrix oracle_differential(const Coalgebra& c, const Bicomodule& l, int n, const Matrix& f) {
  using linalg::compose;
  using linalg::kron;
  const Index d = c.dim();
  auto power = [&](int k) { return eye(static_cast<Index>(std::pow(static_cast<double>(d), k))); };
  Matrix total = compose(kron(f, eye(d)), l.rho_r());
  for (int i = 1; i <= n; ++i) {
    const Matrix face = compose(kron(kron(power(n - i), c.delta()), power(i - 1)), f);
    if (i % 2 == 1) {
      total -= face;
    } else {
      total += face;
    }
  }
  const Matrix last = compose(kron(eye(d), f), l.rho_l());
  if ((n + 1) % 2 == 1) {
    total -= last;
  } else {
    total += last;
  }
  return total;
}

}  // namespace testing
