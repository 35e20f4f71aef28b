#include "doctest.h"
#include "triality/lie_triality.hpp"

using namespace triality;

namespace {
QVec vadd(const QVec& a, const QVec& b) {
  QVec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
QVec vneg(const QVec& a) {
  QVec r = a;
  for (auto& x : r) x = -x;
  return r;
}
}  // namespace

TEST_CASE("Cayley-Dickson construction: labeling, conjugation, norm") {
  CHECK_THROWS_AS(build_cayley(Rat(0), Rat(1), Rat(1)), CheckError);
  CayleyAlgebra o = build_cayley(Rat(1), Rat(1), Rat(1));
  CHECK(o.alg.dim == 8);
  // e1*e2 = e3, e1*e4 = e5, e2*e4 = e6, e3*e4 = e7
  CHECK(o.alg.mul_basis(1, 2)[3] == Rat(1));
  CHECK(o.alg.mul_basis(1, 4)[5] == Rat(1));
  CHECK(o.alg.mul_basis(2, 4)[6] == Rat(1));
  CHECK(o.alg.mul_basis(3, 4)[7] == Rat(1));
  CHECK(o.conj * o.conj == QMatrix::identity(8));
  CHECK(o.trace0.dim() == 7);
  // norm is multiplicative beyond the basis pairs checked at construction
  QVec x = zero_vec(8), y = zero_vec(8);
  x[0] = Rat(2); x[3] = Rat(-1); x[6] = Rat(1, 2);
  y[1] = Rat(1); y[4] = Rat(3); y[7] = Rat(-2);
  CHECK(o.norm(o.alg.mul(x, y)) == o.norm(x) * o.norm(y));
  CHECK(o.norm(x) == o.norm_bi(x, x));
}

TEST_CASE("parameters flip the norm signature but keep the identities") {
  CayleyAlgebra split = build_cayley(Rat(1), Rat(1), Rat(1));  // e1^2 = +1
  CHECK(find_isotropic(split).has_value());
  CayleyAlgebra compact = build_cayley(Rat(-1), Rat(-1), Rat(-1));
  CHECK(!find_isotropic(compact).has_value());
  CHECK(check_malcev(compact.o0_commutator()));
}

TEST_CASE("traceless commutator algebra is Malcev and not Lie") {
  CayleyAlgebra o = build_cayley(Rat(1), Rat(1), Rat(1));
  AlgebraSC m = o.o0_commutator();
  CHECK(m.dim == 7);
  CHECK(m.is_anticommutative());
  CHECK(check_malcev(m));
  auto jw = m.jacobi_witness();
  REQUIRE(jw.has_value());
  auto [i, j, k] = *jw;
  CHECK(!is_zero_vec(m.jac(m.basis_vec(i), m.basis_vec(j), m.basis_vec(k))));
  // the whole octonion algebra is its own generalized alternative nucleus
  CHECK(nalt(o.alg).dim() == 8);
}

TEST_CASE("the linearized identity detects a non-Malcev algebra") {
  // [e1,e2] = e2, [e2,e3] = e1: anticommutative, fails at x=w=e2, y=e1, z=e3
  AlgebraSC bad = AlgebraSC::zero(3);
  bad.set_anti(0, 1, 1, Rat(1));
  bad.set_anti(1, 2, 0, Rat(1));
  CHECK(bad.is_anticommutative());
  CHECK(!check_malcev(bad));
  CHECK(malcev_witness(bad).has_value());
}

TEST_CASE("structure-constant JSON: round-trip and antisymmetric completion") {
  AlgebraSC a = two_dim_nonabelian();
  AlgebraSC b = AlgebraSC::from_json(a.to_json());
  CHECK(b.dim == a.dim);
  CHECK(b.c == a.c);
  // one-sided entry is completed to the negated transpose
  nlohmann::json j = {{"dim", 2}, {"bracket", {{1, 2, {{1, "1"}}}}}};
  AlgebraSC c = AlgebraSC::from_json(j);
  CHECK(c.mul_basis(0, 1)[0] == Rat(1));
  CHECK(c.mul_basis(1, 0)[0] == Rat(-1));
  CHECK(c.mul_basis(0, 0) == zero_vec(2));
}

TEST_CASE("orthogonal Lie algebra of the octonion norm") {
  CayleyAlgebra o = build_cayley(Rat(1), Rat(1), Rat(1));
  OrthoLie ol = ortho_lie(o);
  CHECK(ol.der.size() == 14);
  CHECK(ol.dim() == 28);
  CHECK(ol.lie.is_anticommutative());
  CHECK(!ol.lie.jacobi_witness().has_value());
  // round-trip through coordinates
  QMatrix d = ol.der[3];
  CHECK(ol.from_coords(ol.coords.coords(d.flat())) == d);
}

TEST_CASE("Lie algebra attached to the Malcev algebra O0") {
  LieOfMalcev lm = lie_of_malcev(build_cayley(Rat(1), Rat(1), Rat(1)));
  CHECK(lm.lie_minus.dim() == 7);
  CHECK(check_lie_triality(lm.lie));
  CHECK(eigen_one_criterion(lm.lie));
  CHECK(alternating_sum_matches(lm.lie.rho, lm.lie.sigma));

  // T = lambda + rho spans the minus part and sigma negates it
  std::vector<QVec> tv;
  for (int i = 0; i < 7; ++i) tv.push_back(lm.t_coords(i));
  CHECK(Subspace::span(lm.ortho.dim(), tv) == lm.lie_minus);
  for (int i = 0; i < 7; ++i) {
    CHECK(lm.lie.sigma.apply(lm.t_coords(i)) == vneg(lm.t_coords(i)));
    // sigma swaps lambda with -rho; rho maps lambda onto rho
    QVec lam = lm.ortho.coords.coords(lm.lambda_op(i).flat());
    QVec rop = lm.ortho.coords.coords(lm.rho_op(i).flat());
    CHECK(lm.lie.sigma.apply(lam) == vneg(rop));
    CHECK(lm.lie.rho.apply(lam) == rop);
  }

  // D(a,b) is a derivation of the full algebra
  QMatrix d01 = lm.d_op(0, 1);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      QVec bi = lm.o.alg.basis_vec(i), bj = lm.o.alg.basis_vec(j);
      CHECK(d01.apply(lm.o.alg.mul(bi, bj)) ==
            vadd(lm.o.alg.mul(d01.apply(bi), bj), lm.o.alg.mul(bi, d01.apply(bj))));
    }

  // ad_a is the commutator with a
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 8; ++j) {
      QVec a = lm.o.alg.basis_vec(i + 1), x = lm.o.alg.basis_vec(j);
      CHECK(lm.ad_op(i).apply(x) == vadd(lm.o.alg.mul(a, x), vneg(lm.o.alg.mul(x, a))));
    }
}

TEST_CASE("a sign flip on one derivation basis vector breaks both criteria") {
  LieOfMalcev lm = lie_of_malcev(build_cayley(Rat(1), Rat(1), Rat(1)));
  QMatrix broken = lm.lie.sigma;
  for (int r = 0; r < 28; ++r) broken.at(r, 0) = -broken.at(r, 0);
  CHECK(!check_lie_triality(lm.lie.rho, broken));
  CHECK(!eigen_one_criterion(lm.lie.rho, broken));
  auto w = lie_triality_witness(lm.lie.rho, broken);
  REQUIRE(w.has_value());
  CHECK(*w == 0);
  // the two expansions of the alternating sum agree even off the good locus
  CHECK(alternating_sum_matches(lm.lie.rho, broken));
}

TEST_CASE("three-fold sum with shift and swap telescopes for any base") {
  LieWithTriality wr = wreath_lie(two_dim_nonabelian());
  CHECK(wr.bracket.dim == 6);
  CHECK(check_lie_triality(wr));
  CHECK(eigen_one_criterion(wr));

  LieWithTriality sl = wreath_lie(sl2());
  CHECK(sl.bracket.dim == 9);
  CHECK(check_lie_triality(sl));

  // swapping two basis vectors inside one summand is not an automorphism
  QMatrix s = QMatrix::identity(6);
  s.at(0, 0) = Rat(0); s.at(1, 1) = Rat(0);
  s.at(0, 1) = Rat(1); s.at(1, 0) = Rat(1);
  CHECK_THROWS_AS(LieWithTriality::make(wr.bracket, QMatrix::identity(6), s), CheckError);
}

TEST_CASE("Lie-with-triality JSON round-trip") {
  LieWithTriality wr = wreath_lie(two_dim_nonabelian());
  LieWithTriality back = LieWithTriality::from_json(wr.to_json());
  CHECK(back.bracket.c == wr.bracket.c);
  CHECK(back.rho == wr.rho);
  CHECK(back.sigma == wr.sigma);
}
