#pragma once

#include <optional>
#include <vector>

#include "cotensor/bicomodule.hpp"

namespace cotensor {

/// An n-cochain f : L -> C^{(x) n}, stored as a dim(C)^n x dim(L) matrix
/// (a single row in degree 0).
struct Cochain {
  int degree = 0;
  Matrix value;
};

class NotACocycle : public Error {
 public:
  NotACocycle(const std::string& what, Matrix witness)
      : Error(what), witness_(std::move(witness)) {}
  /// The nonzero value of b^2 on the rejected cochain.
  const Matrix& witness() const noexcept { return witness_; }

 private:
  Matrix witness_;
};

/// Zero n-cochain for L over C.
Cochain zero_cochain(const Coalgebra& c, const Bicomodule& l, int degree);

/// b_i^n(f): (f (x) C) rho^r for i = 0, (C^{n-i} (x) Delta (x) C^{i-1}) f for
/// 1 <= i <= n and (C (x) f) rho^l for i = n + 1.
Matrix face(const Coalgebra& c, const Bicomodule& l, const Cochain& f, int i);

/// b^n(f) = sum_i (-1)^i b_i^n(f).
Cochain differential(const Coalgebra& c, const Bicomodule& l, const Cochain& f);

/// Matrix of b^n acting on row-major flattened n-cochains.
Matrix differential_matrix(const Coalgebra& c, const Bicomodule& l, int n);

struct CohomologyResult {
  int degree = 0;
  Index dimension = 0;
  Index cocycle_dim = 0;
  Index coboundary_dim = 0;
  /// Cocycles whose classes form a basis of H^n.
  std::vector<Cochain> representatives;
};

CohomologyResult cohomology(const Coalgebra& c, const Bicomodule& l, int n);

/// Some h with b^{n-1}(h) = f, or nothing when f is not a coboundary.
std::optional<Cochain> coboundary_preimage(const Coalgebra& c, const Bicomodule& l,
                                           const Cochain& f);

/// Delta_zeta and eps_zeta on C (+) L, without any cocycle check.
Coalgebra twisted_coalgebra(const Coalgebra& c, const Bicomodule& l, const Matrix& zeta);

struct HochschildExtensionData {
  Coalgebra base;
  Bicomodule cok;
  Cochain cocycle;
  Coalgebra total;
  CoalgebraMap sigma;
  Matrix proj;
  Matrix retraction;  // linear retraction of sigma, the projection onto C
};

/// The conditions a) to d) of a Hochschild extension, as exact identities.
ValidationReport validate_extension(const HochschildExtensionData& e);

/// Throws NotACocycle unless b^2(zeta) = 0.
HochschildExtensionData hochschild_extension(const Coalgebra& c, const Bicomodule& l,
                                             const Cochain& zeta);

/// A coalgebra retraction of sigma when the cocycle is a coboundary.
std::optional<CoalgebraMap> trivialize_extension(const HochschildExtensionData& e);

/// Basis of the bicomodule maps C (x) C -> M, where C (x) C carries the outer
/// coactions Delta (x) C and C (x) Delta.
std::vector<Matrix> outer_bicomodule_maps(const Coalgebra& c, const Bicomodule& m);

/// A bicomodule retraction of Delta, if C is coseparable.
std::optional<Matrix> is_coseparable(const Coalgebra& c);

/// j = (C (x) rho^r) rho^l : M -> C (x) M (x) C.
Matrix canonical_embedding(const Bicomodule& m);

/// A bicomodule retraction of the canonical embedding, if M is I-injective.
/// Bicomodule maps out of C (x) M (x) C split over the basis of M into maps
/// out of C (x) C, so the search runs over outer_bicomodule_maps(C, M).
std::optional<Matrix> is_I_injective(const Bicomodule& m);

struct SmoothnessReport {
  bool smooth = false;
  Bicomodule cokernel;               // Coker(Delta) with its induced structure
  std::optional<Matrix> splitting;   // retraction witnessing I-injectivity
  Index h2_dimension = 0;            // dim H^2(Coker(Delta), C)
};

/// Decides smoothness by I-injectivity of Coker(Delta) and cross-checks it
/// against H^2(Coker(Delta), C) = 0; throws InternalCheckFailed if they differ.
SmoothnessReport is_formally_smooth(const Coalgebra& c);

}  // namespace cotensor
