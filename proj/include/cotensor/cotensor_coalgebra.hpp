#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "cotensor/cohomology.hpp"

namespace cotensor {

/// M^{box 0..N} with the maps M^{box r+s} -> M^{box r} (x) M^{box s}.
class CotensorPowers {
 public:
  CotensorPowers(const Bicomodule& m, int trunc);

  int trunc() const { return static_cast<int>(powers_.size()) - 1; }
  const Bicomodule& input() const { return input_; }
  const Coalgebra& base() const { return input_.over(); }
  Index dim(int k) const { return powers_[static_cast<std::size_t>(k)].object.dim(); }
  /// M^{box k} with its C-bicomodule structure.
  const Bicomodule& object(int k) const { return powers_[static_cast<std::size_t>(k)].object; }
  /// chi_k : M^{box k} -> M^{(x) k}; the identity of C for k = 0.
  const Matrix& inclusion(int k) const { return powers_[static_cast<std::size_t>(k)].inclusion; }

  /// M^{box r-1} box chi_M box M^{box s-1} for r, s >= 1; rho^l_s for r = 0,
  /// rho^r_r for s = 0, and Delta_C for r = s = 0.
  Matrix split(int r, int s) const;

 private:
  Bicomodule input_;
  std::vector<Cotensor> powers_;
  std::vector<Subspace> spaces_;
};

/// The truncation C^{N+1}(M) = M^{box 0} (+) ... (+) M^{box N}, graded in
/// consecutive coordinate blocks.
struct TruncatedCotensorCoalgebra {
  Coalgebra base;
  Bicomodule input;
  int trunc = 0;
  Coalgebra total;
  std::vector<Index> grading;  // dim M^{box k}
  std::vector<Index> offsets;  // first coordinate of block k; offsets[N+1] = dim T
  std::shared_ptr<const CotensorPowers> powers;

  Matrix inclusion(int k) const;         // i_k
  Matrix projection(int k) const;        // p_k
  Matrix slice_inclusion(int n) const;   // sigma_n : C^n(M) -> T, 0 <= n <= N+1
  Matrix slice_projection(int n) const;  // pi_n
  /// C^n(M) with the structure induced from T (Delta_T is graded).
  Coalgebra slice_coalgebra(int n) const;
};

TruncatedCotensorCoalgebra build_truncated(const Coalgebra& c, const Bicomodule& m, int trunc);

/// zeta^n : M^{box n} -> C^n(M) (x) C^n(M) together with the C^n(M)-bicomodule
/// structure rho-bar_n on M^{box n} against which it is a cocycle.
struct GradedCocycle {
  int n = 0;
  Matrix value;
  Coalgebra coalgebra;  // C^n(M)
  Bicomodule module;    // M^{box n} over C^n(M)
};

/// Needs n <= t.trunc, since zeta^n lives on M^{box n}.
GradedCocycle zeta(const TruncatedCotensorCoalgebra& t, int n);

/// b^2(zeta^n) over C^n(M), as a matrix that must vanish.
Matrix cocycle_defect(const GradedCocycle& z);

/// C^1 -> C^2 -> ... -> C^{N+1}: step n extends C^n(M) by M^{box n} along zeta^n.
std::vector<HochschildExtensionData> extension_tower(const Coalgebra& c, const Bicomodule& m,
                                                     int trunc);

/// The same coalgebra as build_truncated, assembled through extension_tower.
TruncatedCotensorCoalgebra build_iterative(const Coalgebra& c, const Bicomodule& m, int trunc);

/// The four component identities for (p_m (x) p_n) Delta_T, m, n <= N,
/// checked after pushing both sides into tensor powers of M.
ValidationReport component_identities(const TruncatedCotensorCoalgebra& t);

/// (p_m (x) p_n) Delta_T i_k = 0 whenever m + n != k.
bool is_graded(const TruncatedCotensorCoalgebra& t);

/// C^n(M) equals the n-th wedge power of the C-slice inside T, 0 <= n <= N+1.
bool wedge_recovery_check(const TruncatedCotensorCoalgebra& t, int n);

/// p^{(x) n+1} Delta^n i_b = 0 for 0 <= b <= n <= N, with p the cokernel of i_0.
bool graded_limit_check(const TruncatedCotensorCoalgebra& t);

/// If p_1 alpha = p_1 beta then p_n alpha = p_n beta for 1 <= n <= N.
bool determination_check(const CoalgebraMap& alpha, const CoalgebraMap& beta,
                         const TruncatedCotensorCoalgebra& t);

/// f_M^{(x) k} Delta_E^{k-1} : E -> M^{(x) k} for k = 0 .. count-1 (k = 0 gives f_C).
std::vector<Matrix> tensor_components(const Coalgebra& e, const Matrix& f_c, const Matrix& f_m,
                                      int count);

/// The coalgebra map f : E -> T with p_0 f = f_C and p_1 f = f_M.
/// Throws NotBicomoduleMap, NicholsViolated or TruncationTooSmall when a
/// precondition fails. A competitor, if given, must agree with f degreewise.
CoalgebraMap universal_map(const Coalgebra& e, const CoalgebraMap& f_c, const Matrix& f_m,
                           const TruncatedCotensorCoalgebra& t,
                           const std::optional<CoalgebraMap>& competitor = std::nullopt);

}  // namespace cotensor
