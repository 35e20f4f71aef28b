#include "doctest.h"
#include "triality/conv.hpp"
#include "triality/group.hpp"
#include "triality/loop_gen.hpp"

using namespace triality;

TEST_CASE("one-point convolution loop is the loop itself") {
  FiniteLoop q = chein_loop(FiniteGroup::symmetric3());
  CHECK(convolution_loop(1, q) == q);
}

TEST_CASE("two-point convolution loop is the square") {
  FiniteLoop q = chein_loop(FiniteGroup::symmetric3());
  FiniteLoop c = convolution_loop(2, q);
  CHECK(c.order() == 144);
  CHECK(check_moufang(c).pass());
  CHECK(c.associativity_witness().has_value());
  // encoding: f ↦ f(0) + 12·f(1), products pointwise
  CHECK(c.mul(3 + 12 * 5, 2 + 12 * 7) == q.mul(3, 2) + 12 * q.mul(5, 7));

  FiniteLoop g = FiniteGroup::cyclic(4).loop();
  FiniteLoop cg = convolution_loop(2, g);
  CHECK(cg.order() == 16);
  CHECK(!cg.associativity_witness().has_value());
}

TEST_CASE("membership conditions pin group elements to permutation operators") {
  FiniteLoop q = FiniteGroup::cyclic(4).loop();
  PermOp a{{Perm({1, 2, 3, 0}), Perm({0, 2, 1, 3})}};
  ConvOperator m = perms_to_conv(a, q.order());
  GMember g = g_membership(q, m);
  CHECK(g.pass);
  CHECK(g.perms == a);

  // a non-basis column value breaks the grouplike condition
  ConvOperator bad = m;
  bad.at[1].at(0, 2) = Rat(1, 2);
  GMember gb = g_membership(q, bad);
  CHECK(!gb.pass);
  CHECK(gb.witness["point"] == 1);
  CHECK(gb.witness["basis"] == 3);
  CHECK(gb.witness["condition"] == 3);

  // a repeated column kills invertibility
  ConvOperator sing = m;
  for (int r = 0; r < 4; ++r) {
    sing.at[0].at(r, 1) = sing.at[0].at(r, 0);
  }
  GMember gs = g_membership(q, sing);
  CHECK(!gs.pass);
  CHECK(gs.witness["condition"] == 1);
}

TEST_CASE("operator convolution identity laws on random operators") {
  FiniteLoop q = chein_loop(FiniteGroup::symmetric3());
  LoopReport r = conv_algebra_report(2, q, 12, 7);
  CHECK(r.pass());
}

TEST_CASE("canonical triples are members; mismatched slots are rejected") {
  FiniteLoop q = octonion_unit_loop();
  PermOp a{{q.L(3), q.R(5)}};
  LiftedOps o = lifted_ops(q, a);
  ConvTriple t1{o.l, o.u, pm_inv(o.l)};
  ConvTriple t2{o.r, pm_inv(o.r), o.u};
  ConvTriple t3{o.u, o.l, o.r};
  CHECK(atpc_membership(q, t1));
  CHECK(atpc_membership(q, t2));
  CHECK(atpc_membership(q, t3));
  // products stay inside
  CHECK(atpc_membership(q, t1 * t2));

  ConvTriple wrong{o.l, o.u, o.l};  // third slot should be the inverse
  auto w = atpc_witness(q, wrong);
  REQUIRE(w.has_value());
  CHECK(*w == std::array<int, 3>{0, 0, 0});
}

TEST_CASE("rho and sigma act as an S3 on member triples") {
  FiniteLoop q = chein_loop(FiniteGroup::symmetric3());
  PermOp a{{q.L(2), q.U(4)}};
  LiftedOps o = lifted_ops(q, a);
  ConvTriple t{o.u, o.l, o.r};
  ConvTriple r = conv_rho(q, t), s = conv_sigma(q, t);
  CHECK(atpc_membership(q, r));
  CHECK(atpc_membership(q, s));
  CHECK(conv_rho(q, conv_rho(q, r)) == t);
  CHECK(conv_sigma(q, s) == t);
}

TEST_CASE("full triality suite over two points of the Klein-style double") {
  LoopReport r = atpc_triality_checks(2, FiniteGroup::cyclic(4).loop(), 40, 3);
  CHECK(r.pass());
  CHECK(r.counts["exhaustive"] == true);
  CHECK(r.counts["morphisms"] == 16);
}

TEST_CASE("full triality suite over one point of the order-12 loop") {
  LoopReport r = atpc_triality_checks(1, chein_loop(FiniteGroup::symmetric3()), 40, 5);
  CHECK(r.pass());
  CHECK(r.counts["exhaustive"] == true);
  CHECK(r.counts["morphisms"] == 12);
  CHECK(r.counts["pairs"] == 144);
}
