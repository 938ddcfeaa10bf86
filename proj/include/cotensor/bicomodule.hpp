#pragma once

#include <memory>
#include <vector>

#include "cotensor/coalgebra.hpp"

namespace cotensor {

/// A (C, D)-bicomodule: rho_l : M -> C (x) M and rho_r : M -> M (x) D.
/// Almost everything works with C = D; the two-coalgebra form only appears in
/// induced kernel and cokernel structures.
class Bicomodule {
 public:
  Bicomodule();
  Bicomodule(Coalgebra over, Matrix rho_l, Matrix rho_r);
  Bicomodule(Coalgebra left, Coalgebra right, Matrix rho_l, Matrix rho_r);

  Index dim() const { return data_->rho_l.cols(); }
  const Coalgebra& left() const { return data_->left; }
  const Coalgebra& right() const { return data_->right; }
  /// The coalgebra of a C-bicomodule; throws CoalgebraMismatch when C != D.
  const Coalgebra& over() const;
  const Matrix& rho_l() const { return data_->rho_l; }
  const Matrix& rho_r() const { return data_->rho_r; }

  friend bool operator==(const Bicomodule& a, const Bicomodule& b);

 private:
  struct Data {
    Coalgebra left;
    Coalgebra right;
    Matrix rho_l;
    Matrix rho_r;
  };
  std::shared_ptr<const Data> data_;
};

ValidationReport validate_bicomodule(const Bicomodule& m);

/// C over itself with rho_l = rho_r = Delta.
Bicomodule regular(const Coalgebra& c);
/// C (x) X (x) C with the outer coactions Delta (x) X (x) C and C (x) X (x) Delta.
Bicomodule cofree(const Coalgebra& c, Index x_dim);
Bicomodule direct_sum(const Bicomodule& a, const Bicomodule& b);
/// The same bicomodule in the basis given by the columns of `basis`
/// (invertible, expressed in the old basis).
Bicomodule change_basis(const Bicomodule& m, const Matrix& basis);

bool is_bicomodule_map(const Bicomodule& source, const Bicomodule& target, const Matrix& map);

/// A verified bicomodule morphism.
class BicomoduleMap {
 public:
  /// Throws NotBicomoduleMap when the coaction squares do not commute.
  BicomoduleMap(Bicomodule source, Bicomodule target, Matrix map);

  const Bicomodule& source() const { return source_; }
  const Bicomodule& target() const { return target_; }
  const Matrix& map() const { return map_; }

 private:
  Bicomodule source_;
  Bicomodule target_;
  Matrix map_;
};

/// A sub-bicomodule of a tensor power, held by its inclusion.
struct Cotensor {
  Bicomodule object;
  Matrix inclusion;
};

/// V box_C W = Ker(rho_r (x) W - V (x) rho_l) inside V (x) W, with coactions
/// induced from rho_l (x) W and V (x) rho_r. The inclusion is a canonical basis.
Cotensor cotensor(const Bicomodule& v, const Bicomodule& w);

/// M^{box n}. For n >= 1 the inclusion maps into M^{(x) n} and its columns are
/// the canonical basis of that subspace; n = 0 gives C with the identity.
/// Built as M^{box n-1} box M.
Cotensor cotensor_power(const Bicomodule& m, int n);
/// M^{box 0} ... M^{box n} in one pass.
std::vector<Cotensor> cotensor_powers(const Bicomodule& m, int n);

/// The restriction of f (x) g to V box W -> V' box W'.
Matrix cotensor_of_maps(const BicomoduleMap& f, const BicomoduleMap& g);

/// C box M ~= M ~= M box C. `left` : M -> C box M (coordinates in the
/// canonical basis of the cotensor), `left_inverse` its inverse; same on the right.
struct UnitConstraints {
  Cotensor left_object;
  Matrix left;
  Matrix left_inverse;
  Cotensor right_object;
  Matrix right;
  Matrix right_inverse;
};

UnitConstraints unit_constraints(const Bicomodule& m);

struct InducedKernel {
  Bicomodule object;
  Matrix inclusion;
};

struct InducedCokernel {
  Bicomodule object;
  Matrix projection;
};

InducedKernel induced_on_kernel(const BicomoduleMap& f);
InducedCokernel induced_on_cokernel(const BicomoduleMap& f);

}  // namespace cotensor
