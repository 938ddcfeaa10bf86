#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cotensor/cotensor_coalgebra.hpp"

namespace cotensor {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
};

/// Lines `vertex NAME` and `arrow NAME: SRC -> TGT`; `#` starts a comment.
/// Throws ParseError carrying the 1-based line number.
Quiver parse_quiver(std::string_view text);
std::string format_quiver(const Quiver& q);

/// One vertex with one loop.
Quiver loop_quiver();
/// Two vertices with two parallel arrows 1 -> 2.
Quiver kronecker_quiver();
/// n vertices with arrows i -> i+1 mod n.
Quiver cycle_quiver(int n);
/// a : 1 -> 2.
Quiver single_arrow_quiver();

/// grouplike(|Q_0|).
Coalgebra vertex_coalgebra(const Quiver& q);
/// K Q_1 with rho^l(a) = e_t(a) (x) a and rho^r(a) = a (x) e_s(a).
Bicomodule arrow_bicomodule(const Quiver& q);

/// A path x_1 ... x_k read as the tensor word x_1 (x) ... (x) x_k, so
/// s(x_i) = t(x_{i+1}); a vertex is the path of length 0.
struct Path {
  std::vector<int> arrows;
  int source = 0;
  int target = 0;
  std::size_t length() const { return arrows.size(); }
};

/// Paths of length <= trunc, ordered by length and then lexicographically.
struct PathBasis {
  int trunc = 0;
  std::vector<Path> paths;
};

PathBasis enumerate_paths(const Quiver& q, int trunc);

/// Number of paths of each length 0..trunc, without listing them.
std::vector<Index> path_counts(const Quiver& q, int trunc);

struct PathCoalgebra {
  Coalgebra coalgebra;
  PathBasis basis;
};

/// Deconcatenation on the path basis, built without cotensor products.
PathCoalgebra deconcatenation_oracle(const Quiver& q, int trunc);

class OracleMismatch : public Error {
 public:
  using Error::Error;
};

/// The matrix sending each path to its tensor word inside T = build_truncated(
/// vertex_coalgebra, arrow_bicomodule, trunc), verified to be a coalgebra
/// isomorphism. Throws OracleMismatch naming the first differing constant.
Matrix oracle_compare(const Quiver& q, int trunc, const TruncatedCotensorCoalgebra& t);
Matrix oracle_compare(const Quiver& q, int trunc);

}  // namespace cotensor
