#include "doctest.h"
#include "triality/envelope.hpp"

using namespace triality;

namespace {
PBWElement elem(const PBWMono& m) { return PBWElement{{m, Rat(1)}}; }
}  // namespace

TEST_CASE("sl2 straightening against hand-computed normal forms") {
  PBW u(sl2());  // basis (e, f, h), [e,f] = h, normal order e^a f^b h^c
  PBWElement fe = u.mul(u.gen(1), u.gen(0));
  CHECK(fe == PBWElement{{{1, 1, 0}, Rat(1)}, {{0, 0, 1}, Rat(-1)}});  // ef - h

  PBWElement he = u.mul(u.gen(2), u.gen(0));
  CHECK(he == PBWElement{{{1, 0, 1}, Rat(1)}, {{1, 0, 0}, Rat(2)}});  // eh + 2e

  // f e^2 = e^2 f - 2eh - 2e
  PBWElement fee = u.mul(u.gen(1), u.mul(u.gen(0), u.gen(0)));
  CHECK(fee == PBWElement{{{2, 1, 0}, Rat(1)}, {{1, 0, 1}, Rat(-2)}, {{1, 0, 0}, Rat(-2)}});

  // associativity of the straightened product on a mixed triple
  PBWElement a = add(u.gen(1), u.one()), b = u.mul(u.gen(2), u.gen(2)), c = u.gen(0);
  CHECK(u.mul(u.mul(a, b), c) == u.mul(a, u.mul(b, c)));
}

TEST_CASE("coproduct of a product monomial has the full shuffle expansion") {
  PBW u(sl2());
  TensorElement d = u.coproduct(u.mul(u.gen(0), u.gen(1)));  // ef
  PBWMono one{0, 0, 0}, e{1, 0, 0}, f{0, 1, 0}, ef{1, 1, 0};
  TensorElement expect{{{ef, one}, Rat(1)}, {{e, f}, Rat(1)}, {{f, e}, Rat(1)}, {{one, ef}, Rat(1)}};
  CHECK(d == expect);
}

TEST_CASE("coassociativity: (Delta x id)Delta = (id x Delta)Delta") {
  PBW u(sl2());
  PBWElement x = add(u.mul(u.gen(0), u.mul(u.gen(1), u.gen(2))), u.gen(2));
  Tensor3Element lhs = u.coproduct3(x);
  Tensor3Element rhs;
  for (const auto& [mm, c] : u.coproduct(x))
    for (const auto& [ab, d] : u.coproduct(elem(mm.second))) {
      Rat v = c * d;
      auto key = std::array<PBWMono, 3>{mm.first, ab.first, ab.second};
      rhs[key] += v;
      if (rhs[key] == 0) rhs.erase(key);
    }
  CHECK(lhs == rhs);
}

TEST_CASE("antipode and counit satisfy the Hopf axioms on samples") {
  PBW u(sl2());
  CHECK(u.antipode(u.mul(u.gen(0), u.gen(1))) ==
        PBWElement{{{1, 1, 0}, Rat(1)}, {{0, 0, 1}, Rat(-1)}});  // S(ef) = fe
  CHECK(u.counit(u.one()) == Rat(1));
  CHECK(u.counit(add(u.gen(0), scale(u.one(), Rat(3)))) == Rat(3));

  for (const PBWElement& x :
       {elem({2, 1, 1}), u.mul(add(u.gen(0), u.one()), u.gen(2)), u.one()}) {
    PBWElement conv;  // sum S(x1) x2
    for (const auto& [mm, c] : u.coproduct(x))
      conv = add(conv, scale(u.mul(u.antipode(elem(mm.first)), elem(mm.second)), c));
    CHECK(conv == scale(u.one(), u.counit(x)));
  }
}

TEST_CASE("lifted automorphisms act factorwise; non-automorphisms are rejected") {
  PBW u(sl2());
  QMatrix w(3, 3);  // e <-> f, h -> -h
  w.at(1, 0) = Rat(1);
  w.at(0, 1) = Rat(1);
  w.at(2, 2) = Rat(-1);
  LiftedMap lw = lift_auto(u, w);
  CHECK(lw(u.mul(u.gen(0), u.gen(1))) == PBWElement{{{1, 1, 0}, Rat(1)}, {{0, 0, 1}, Rat(-1)}});
  CHECK(lw(u.one()) == u.one());

  QMatrix bad = w;
  bad.at(2, 2) = Rat(1);  // e <-> f with h fixed breaks [e,f] = h
  CHECK_THROWS_AS(lift_auto(u, bad), CheckError);
}

TEST_CASE("monomial slices") {
  CHECK(monomials_up_to(3, 2).size() == 10);
  MonoIndex idx(3, 2);
  CHECK(idx.size() == 10);
  PBW u(sl2());
  PBWElement x = add(u.mul(u.gen(0), u.gen(1)), scale(u.gen(2), Rat(-5, 3)));
  QVec v = idx.coords(x);
  PBWElement back;
  for (int i = 0; i < idx.size(); ++i)
    if (v[static_cast<std::size_t>(i)] != 0) add_to(back, idx.monos[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]);
  CHECK(back == x);
  CHECK_THROWS_AS(idx.coords(elem({1, 1, 1})), CheckError);
}

TEST_CASE("circle word counts and the ordered filter") {
  PBW u(sl2());
  std::vector<PBWElement> gens = {u.gen(0), u.gen(1)};
  CHECK(circle_words(u, gens, 2, true).size() == 6);   // multisets up to size 2
  CHECK(circle_words(u, gens, 2, false).size() == 7);  // all tuples
  // a circle square doubles the PBW square for commuting generators
  PBWElement sq = u.circle(u.gen(0), u.gen(0));
  CHECK(sq == scale(u.mul(u.gen(0), u.gen(0)), Rat(2)));
}

TEST_CASE("P is counital and acts as sigma minus identity in degree one") {
  LieWithTriality g = wreath_lie(two_dim_nonabelian());
  PBW u(g.bracket);
  LiftedMap sig = lift_auto(u, g.sigma);
  CHECK(p_of(u, sig, u.one()) == u.one());
  QVec v = zero_vec(6);
  v[0] = Rat(1); v[3] = Rat(-2); v[5] = Rat(1, 2);
  PBWElement x = u.from_coords(v);
  CHECK(p_of(u, sig, x) == sub(u.from_coords(g.sigma.apply(v)), x));
}

TEST_CASE("triality identity in the enveloping algebra of the shifted sum") {
  LieWithTriality g = wreath_lie(two_dim_nonabelian());
  SliceCheck c = check_ug_triality(g, 3);
  CHECK(c.pass);
  CHECK(c.checked > 0);
  CHECK(p_span_check(g, 2));
  CHECK(check_action_identity(g, 2).pass);
}

TEST_CASE("a non-triality automorphism pair fails in degree one with a witness") {
  // zero bracket in dimension one, rho = id, sigma = -id: valid S3 action,
  // but the alternating sum is 6·id, not 0
  AlgebraSC z = AlgebraSC::zero(1);
  QMatrix id = QMatrix::identity(1), neg = -QMatrix::identity(1);
  LieWithTriality g = LieWithTriality::make(z, id, neg);
  CHECK(!check_lie_triality(g));
  SliceCheck c = check_ug_triality(g, 1);
  CHECK(!c.pass);
  REQUIRE(c.witness.has_value());
  CHECK(*c.witness == PBWMono{1});
}

TEST_CASE("star relations hold for the true bracket and flag a corrupted one") {
  LieOfMalcev lm = lie_of_malcev(build_cayley(Rat(1), Rat(1), Rat(1)));
  RelationCheck good = envelope_relations_witness(lm, lm.malcev, 1);
  CHECK(good.pass);
  CHECK(good.witness.is_null());

  AlgebraSC bad = lm.malcev;
  bad.set(0, 1, 0, bad.mul_basis(0, 1)[0] + 1);
  bad.set(1, 0, 0, bad.mul_basis(1, 0)[0] - 1);
  RelationCheck r = envelope_relations_witness(lm, bad, 1);
  CHECK(!r.pass);
  CHECK(!r.witness.is_null());
}
