#include "doctest.h"
#include "triality/qmatrix.hpp"
#include "triality/rational.hpp"
#include "triality/structure_constants.hpp"
#include "triality/subspace.hpp"

using namespace triality;

TEST_CASE("rationals are exact and normalized") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(rat_str(Rat(-4, 6)) == "-2/3");
  CHECK(rat_str(Rat(5)) == "5");
  CHECK(parse_rat("7/2") == Rat(7, 2));
  CHECK(parse_rat("-3") == Rat(-3));
  // the classic float trap stays exact here
  Rat tenth(1, 10), sum = 0;
  for (int i = 0; i < 10; ++i) sum += tenth;
  CHECK(sum == 1);
}

TEST_CASE("matrix algebra in the column-vector convention") {
  QMatrix a(2, 2), b(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 4;
  b.at(0, 1) = 1;
  b.at(1, 0) = 1;
  QVec v{Rat(1), Rat(0)};
  CHECK((a * b).apply(v) == a.apply(b.apply(v)));
  CHECK(commutator(a, b) == a * b - b * a);
  CHECK(QMatrix::identity(2) * a == a);
  CHECK(a.transpose().transpose() == a);
  CHECK(QMatrix::from_flat(2, 2, a.flat()) == a);
}

TEST_CASE("kernel, solve and inverse agree") {
  QMatrix m(2, 3);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  m.at(1, 2) = 6;  // rank 1
  Subspace k = kernel(m);
  CHECK(k.dim() == 2);
  for (const auto& v : k.basis()) CHECK(is_zero_vec(m.apply(v)));

  QMatrix inv2(2, 2);
  inv2.at(0, 0) = 2;
  inv2.at(1, 1) = 3;
  auto mi = inverse(inv2);
  REQUIRE(mi.has_value());
  CHECK((*mi * inv2) == QMatrix::identity(2));
  QMatrix sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(1, 0) = 1;
  CHECK(!inverse(sing).has_value());

  auto sol = solve(inv2, QVec{Rat(4), Rat(9)});
  REQUIRE(sol.has_value());
  CHECK(*sol == QVec{Rat(2), Rat(3)});
}

TEST_CASE("subspace echelon form makes equality literal") {
  QVec e1{Rat(1), Rat(0), Rat(0)}, e2{Rat(0), Rat(1), Rat(0)};
  QVec mix{Rat(2), Rat(3), Rat(0)};
  Subspace s = Subspace::span(3, {e1, mix});
  Subspace t = Subspace::span(3, {mix, e2, e1});
  CHECK(s == t);
  CHECK(s.dim() == 2);
  CHECK(s.contains(QVec{Rat(-1), Rat(7), Rat(0)}));
  CHECK(!s.contains(QVec{Rat(0), Rat(0), Rat(1)}));
  Subspace grow = s;
  CHECK(grow.insert(QVec{Rat(0), Rat(0), Rat(5)}));
  CHECK(grow.dim() == 3);
  CHECK(grow.contains_subspace(s));
  CHECK(!s.contains_subspace(grow));
}

TEST_CASE("basis solver returns exact coordinates") {
  QVec b1{Rat(1), Rat(1)}, b2{Rat(0), Rat(2)};
  BasisSolver bs({b1, b2});
  QVec c = bs.coords(QVec{Rat(3), Rat(7)});
  CHECK(c == QVec{Rat(3), Rat(2)});
  CHECK_THROWS(bs.coords(QVec{Rat(1), Rat(0), Rat(0)}));
}

TEST_CASE("bracket closure of sl2 generators fills sl2") {
  AlgebraSC s = sl2();
  QMatrix e = s.lmat(s.basis_vec(0)), f = s.lmat(s.basis_vec(1));
  ClosureResult cl =
      bracket_closure({e, f}, [](const QMatrix& x, const QMatrix& y) { return commutator(x, y); });
  CHECK(cl.space.dim() == 3);
  CHECK(cl.reps.size() == 3);
}
