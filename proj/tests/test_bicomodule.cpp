#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing;
using linalg::compose;
using linalg::kron;

namespace {

Subspace image_in(const Matrix& chi) { return Subspace::span(chi); }

Quiver two_cycle() { return {{"v1", "v2"}, {{"a", 0, 1}, {"b", 1, 0}}}; }

}  // namespace

TEST_CASE("validate_bicomodule", "[bicomodule]") {
  for (const auto& [name, c] : small_coalgebras()) {
    CHECK(validate_bicomodule(regular(c)).ok());
    CHECK(validate_bicomodule(cofree(c, 2)).ok());
  }
  for (const auto& [name, q] : named_quivers()) CHECK(validate_bicomodule(arrow_bicomodule(q)).ok());

  const Bicomodule m = arrow_bicomodule(single_arrow_quiver());
  // a : 1 -> 2 gives rho_l(a) = e2 (x) a and rho_r(a) = a (x) e1
  CHECK(same(m.rho_l(), col({0, 1})));
  CHECK(same(m.rho_r(), col({1, 0})));

  Matrix rho_r = m.rho_r();
  rho_r(1, 0) = 1;
  const auto report = validate_bicomodule(Bicomodule(m.left(), m.rho_l(), rho_r));
  REQUIRE_FALSE(report.ok());

  const Coalgebra c = divided_power(1);
  CHECK_THROWS_AS(Bicomodule(c, Matrix::Zero(3, 2), regular(c).rho_r()), DimensionMismatch);
}

TEST_CASE("quiver bicomodule shapes", "[bicomodule]") {
  const Bicomodule loop = arrow_bicomodule(loop_quiver());
  CHECK(loop.dim() == 1);
  CHECK(loop.over() == grouplike(1));
  const Bicomodule kr = arrow_bicomodule(kronecker_quiver());
  CHECK(kr.dim() == 2);
  // both arrows 1 -> 2: rho_l = e2 (x) -, rho_r = - (x) e1
  CHECK(same(kr.rho_l(), mat({{0, 0}, {0, 0}, {1, 0}, {0, 1}})));
  CHECK(same(kr.rho_r(), mat({{1, 0}, {0, 0}, {0, 1}, {0, 0}})));
}

TEST_CASE("cotensor products", "[bicomodule]") {
  const Bicomodule m = arrow_bicomodule(two_cycle());
  const Cotensor mm = cotensor::cotensor(m, m);
  // a (x) b and b (x) a, indices 1 and 2 of M (x) M
  CHECK(image_in(mm.inclusion) == coordinate_span(4, {1, 2}));
  CHECK(validate_bicomodule(mm.object).ok());

  CHECK(cotensor::cotensor(arrow_bicomodule(loop_quiver()), arrow_bicomodule(loop_quiver())).object.dim() == 1);
  CHECK(cotensor_power(arrow_bicomodule(kronecker_quiver()), 2).object.dim() == 0);

  const Bicomodule g2 = regular(grouplike(2));
  CHECK_THROWS_AS(cotensor::cotensor(g2, regular(grouplike(3))), CoalgebraMismatch);
}

TEST_CASE("cotensor powers", "[bicomodule]") {
  const Bicomodule m = arrow_bicomodule(cycle_quiver(3));
  const Cotensor p0 = cotensor_power(m, 0);
  CHECK(p0.object == regular(m.over()));
  CHECK(same(p0.inclusion, eye(3)));
  const Cotensor p1 = cotensor_power(m, 1);
  CHECK(p1.object == m);
  const auto all = cotensor_powers(m, 4);
  REQUIRE(all.size() == 5);
  for (int k = 0; k <= 4; ++k) {
    CHECK(all[static_cast<std::size_t>(k)].object.dim() == path_counts(cycle_quiver(3), 4)[static_cast<std::size_t>(k)]);
    CHECK(validate_bicomodule(all[static_cast<std::size_t>(k)].object).ok());
    CHECK(same(all[static_cast<std::size_t>(k)].inclusion, cotensor_power(m, k).inclusion));
  }
}

TEST_CASE("bracketing independence", "[bicomodule][property]") {
  std::mt19937 rng(31);
  std::vector<Bicomodule> inputs;
  for (const auto& [name, q] : named_quivers()) inputs.push_back(arrow_bicomodule(q));
  for (int trial = 0; trial < 4; ++trial) inputs.push_back(random_grouplike_bicomodule(rng, 2, 3));
  for (const Bicomodule& m : inputs) {
    const Index d = m.dim();
    const Cotensor two = cotensor_power(m, 2);
    // (M box M) box M and M box (M box M), both pushed into M^{(x) 3}
    const Cotensor left = cotensor::cotensor(two.object, m);
    const Cotensor right = cotensor::cotensor(m, two.object);
    const Matrix left3 = compose(kron(two.inclusion, eye(d)), left.inclusion);
    const Matrix right3 = compose(kron(eye(d), two.inclusion), right.inclusion);
    CHECK(image_in(left3) == image_in(right3));
    CHECK(image_in(left3) == image_in(cotensor_power(m, 3).inclusion));
    // (M box M) box (M box M) against M^{box 4}
    const Cotensor four = cotensor::cotensor(two.object, two.object);
    const Matrix four4 = compose(kron(two.inclusion, two.inclusion), four.inclusion);
    CHECK(image_in(four4) == image_in(cotensor_power(m, 4).inclusion));
  }
}

TEST_CASE("unit constraints", "[bicomodule][property]") {
  std::mt19937 rng(32);
  std::vector<Bicomodule> inputs;
  for (const auto& [name, c] : small_coalgebras()) inputs.push_back(random_bicomodule(rng, c));
  for (int trial = 0; trial < 3; ++trial) inputs.push_back(random_grouplike_bicomodule(rng, 3));
  for (const Bicomodule& m : inputs) {
    const UnitConstraints u = unit_constraints(m);
    CHECK(u.left_object.object.dim() == m.dim());
    CHECK(u.right_object.object.dim() == m.dim());
    CHECK(same(compose(u.left_inverse, u.left), eye(m.dim())));
    CHECK(same(compose(u.left, u.left_inverse), eye(m.dim())));
    CHECK(same(compose(u.right_inverse, u.right), eye(m.dim())));
    CHECK(same(compose(u.right, u.right_inverse), eye(m.dim())));
    CHECK(validate_bicomodule(u.left_object.object).ok());
  }
}

TEST_CASE("cotensor of maps", "[bicomodule][property]") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 5; ++trial) {
    const Bicomodule m = random_grouplike_bicomodule(rng, 2, 3);
    const Bicomodule n = random_grouplike_bicomodule(rng, 2, 3);
    const BicomoduleMap idm(m, m, eye(m.dim()));
    const BicomoduleMap idn(n, n, eye(n.dim()));
    const Cotensor mn = cotensor::cotensor(m, n);
    CHECK(same(cotensor_of_maps(idm, idn), eye(mn.object.dim())));

    // isomorphisms through random bases
    const Matrix p = random_invertible(rng, m.dim()), q = random_invertible(rng, n.dim());
    const Matrix p2 = random_invertible(rng, m.dim()), q2 = random_invertible(rng, n.dim());
    const Bicomodule m1 = change_basis(m, p), n1 = change_basis(n, q);
    const Bicomodule m2 = change_basis(m1, p2), n2 = change_basis(n1, q2);
    const BicomoduleMap f(m, m1, inverse(p)), g(n, n1, inverse(q));
    const BicomoduleMap f2(m1, m2, inverse(p2)), g2(n1, n2, inverse(q2));
    const BicomoduleMap ff(m, m2, compose(f2.map(), f.map())), gg(n, n2, compose(g2.map(), g.map()));
    const Matrix fg = cotensor_of_maps(f, g);
    CHECK(same(compose(cotensor_of_maps(f2, g2), fg), cotensor_of_maps(ff, gg)));
    // the restriction of f (x) g: chi' (f box g) = (f (x) g) chi
    const Cotensor target = cotensor::cotensor(m1, n1);
    CHECK(same(compose(target.inclusion, fg), compose(kron(f.map(), g.map()), mn.inclusion)));
  }
}

TEST_CASE("direct sums and basis changes", "[bicomodule]") {
  std::mt19937 rng(34);
  const Coalgebra c = divided_power(2);
  const Bicomodule s = direct_sum(regular(c), cofree(c, 1));
  CHECK(s.dim() == 3 + 9);
  CHECK(validate_bicomodule(s).ok());
  const Matrix p = random_invertible(rng, 3);
  const Bicomodule moved = change_basis(regular(c), p);
  CHECK(validate_bicomodule(moved).ok());
  CHECK(is_bicomodule_map(moved, regular(c), p));
  CHECK(is_bicomodule_map(regular(c), moved, inverse(p)));
  CHECK_THROWS_AS(change_basis(regular(c), Matrix::Zero(3, 3)), DimensionMismatch);
  CHECK_THROWS_AS(BicomoduleMap(regular(c), regular(c), mat({{1, 0, 0}, {0, 0, 0}, {0, 0, 0}})),
                  NotBicomoduleMap);
}

TEST_CASE("induced kernels and cokernels", "[bicomodule]") {
  for (const auto& [name, c] : small_coalgebras()) {
    const Bicomodule reg = regular(c);
    const Bicomodule outer = cofree(c, 1);
    const Index n = c.dim();

    const BicomoduleMap zero(reg, outer, Matrix::Zero(n * n, n));
    CHECK(induced_on_kernel(zero).object.dim() == n);
    CHECK(induced_on_cokernel(zero).object.dim() == n * n);

    const BicomoduleMap delta(reg, outer, c.delta());
    const InducedKernel k = induced_on_kernel(delta);
    CHECK(k.object.dim() == 0);
    const InducedCokernel q = induced_on_cokernel(delta);
    CHECK(q.object.dim() == n * n - n);
    CHECK(validate_bicomodule(q.object).ok());
    CHECK(is_bicomodule_map(outer, q.object, q.projection));
    CHECK(linalg::is_zero(compose(q.projection, c.delta())));
  }
  // a kernel with content: the coaction-invariant part of a projection
  const Coalgebra c = divided_power(2);
  const Bicomodule s = direct_sum(regular(c), regular(c));
  const BicomoduleMap first(s, regular(c), Matrix((Matrix(3, 6) << eye(3), Matrix::Zero(3, 3)).finished()));
  const InducedKernel k = induced_on_kernel(first);
  CHECK(k.object.dim() == 3);
  CHECK(validate_bicomodule(k.object).ok());
  CHECK(is_bicomodule_map(k.object, s, k.inclusion));
}
