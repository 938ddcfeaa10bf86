#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cotensor/exactlin.hpp"

namespace cotensor {

class Bicomodule;

/// Finite-dimensional coalgebra given by structure matrices:
/// delta is dim^2 x dim, epsilon is 1 x dim. Immutable; copies share storage.
class Coalgebra {
 public:
  /// The zero coalgebra.
  Coalgebra();
  /// Checks shapes only; the axioms are checked by validate_coalgebra.
  Coalgebra(Matrix delta, Matrix epsilon);

  Index dim() const { return data_->epsilon.cols(); }
  const Matrix& delta() const { return data_->delta; }
  const Matrix& epsilon() const { return data_->epsilon; }

  friend bool operator==(const Coalgebra& a, const Coalgebra& b);

 private:
  struct Data {
    Matrix delta;
    Matrix epsilon;
  };
  std::shared_ptr<const Data> data_;
};

/// Outcome of one axiom. On failure `entry` is the first violating position
/// and lhs/rhs are the two sides there.
struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::optional<linalg::Entry> entry;
  Rational lhs;
  Rational rhs;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;

  bool ok() const;
  const AxiomCheck* first_failure() const;
  std::string summary() const;
};

/// Compares two sides of an identity and records the first difference.
AxiomCheck check_identity(std::string axiom, const Matrix& lhs, const Matrix& rhs);

ValidationReport validate_coalgebra(const Coalgebra& c);

/// Delta(e_i) = e_i (x) e_i, epsilon(e_i) = 1.
Coalgebra grouplike(Index n);
/// Dual of the n x n matrix algebra: Delta(e_ij) = sum_k e_ik (x) e_kj.
Coalgebra comatrix(Index n);
/// Span{x_0..x_N} with Delta(x_k) = sum_{i+j=k} x_i (x) x_j; dual to K[t]/(t^{N+1}).
Coalgebra divided_power(Index trunc);

/// Delta^n : C -> C^{(x) n+1}, with Delta^0 = id and Delta^n = (Delta^{n-1} (x) C) Delta.
Matrix iterated_delta(const Coalgebra& c, int n);

/// Finite-dimensional algebra: mult is dim x dim^2, unit is dim x 1.
struct Algebra {
  Index dim = 0;
  Matrix mult;
  Matrix unit;
};

/// The dual algebra C*: mult = delta^T and unit = epsilon^T in the dual basis.
Algebra dual_algebra(const Coalgebra& c);
ValidationReport validate_algebra(const Algebra& a);

/// Corad(C) = (rad C*)^perp, where rad C* is the radical of the trace form
/// tau(a, b) = tr(L_{ab}); valid because the base field has characteristic zero.
Subspace coradical(const Coalgebra& c);

bool is_coalgebra_map(const Coalgebra& source, const Coalgebra& target, const Matrix& map);

/// A verified coalgebra homomorphism.
class CoalgebraMap {
 public:
  /// Throws NotCoalgebraMap unless Delta_t f = (f (x) f) Delta_s and eps_t f = eps_s.
  CoalgebraMap(Coalgebra source, Coalgebra target, Matrix map);

  const Coalgebra& source() const { return source_; }
  const Coalgebra& target() const { return target_; }
  const Matrix& map() const { return map_; }

 private:
  Coalgebra source_;
  Coalgebra target_;
  Matrix map_;
};

/// A subspace closed under Delta, with its induced structure and inclusion.
struct Subcoalgebra {
  Subspace space;
  Coalgebra coalgebra;
  Matrix inclusion;
};

/// Throws NotSubcoalgebra unless Delta(D) lies in D (x) D.
Subcoalgebra make_subcoalgebra(const Coalgebra& c, const Subspace& d);

struct KernelSubcoalgebra {
  Coalgebra coalgebra;
  CoalgebraMap inclusion;
};

/// Ker(f) for a bicomodule map f : C -> L (C regular over itself), with
/// Delta_D = factor_through(delta (x) delta, Delta delta) and eps_D = eps delta.
/// Throws NotBicomoduleMap when f is not a bicomodule map.
KernelSubcoalgebra kernel_subcoalgebra(const Coalgebra& c, const Matrix& f, const Bicomodule& l);

/// X ^ Y = Ker[(p_X (x) p_Y) Delta] with p_X, p_Y the canonical cokernel projections.
Subspace wedge(const Coalgebra& c, const Subspace& x, const Subspace& y);

/// D^{^n} = Ker(p^{(x) n} Delta^{n-1}), D^{^0} = 0. Throws NotSubcoalgebra.
Subspace wedge_power(const Coalgebra& c, const Subspace& d, int n);

struct WedgeFiltration {
  std::vector<Subspace> chain;  // D^{^1} ... D^{^k}
  Subspace stabilized;          // D^{^k}
  int loewy_length = 0;         // first k with D^{^k} = D^{^k+1}
};

WedgeFiltration wedge_filtration(const Coalgebra& c, const Subspace& d);

}  // namespace cotensor
