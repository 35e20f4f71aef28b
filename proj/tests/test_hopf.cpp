#include "doctest.h"
#include "triality/hopf.hpp"
#include "triality/loop_gen.hpp"

using namespace triality;

TEST_CASE("group-like arithmetic") {
  FiniteLoop q = chein_loop(FiniteGroup::symmetric3());
  HopfElement a{{2, Rat(1)}, {3, Rat(2)}}, b{{5, Rat(1)}};
  HopfElement ab = hopf_mul(q, a, b);
  CHECK(ab == HopfElement{{q.mul(2, 5), Rat(1)}, {q.mul(3, 5), Rat(2)}});
  CHECK(hopf_counit(ab) == Rat(3));
  CHECK(hopf_antipode(q, b) == HopfElement{{q.inv(5), Rat(1)}});
  // S is an antimorphism on group-likes
  CHECK(hopf_antipode(q, ab) == hopf_mul(q, hopf_antipode(q, b), hopf_antipode(q, a)));
}

TEST_CASE("loop algebra construction accepts Moufang only") {
  MoufangHopfCarrier mh = loop_algebra(chein_loop(FiniteGroup::symmetric3()));
  CHECK(!mh.associative);
  CHECK(!mh.verified.empty());
  CHECK_THROWS_AS(loop_algebra(non_moufang_5()), CheckError);
}

TEST_CASE("P on a group algebra: basis formula and linearity") {
  HopfCarrier h = group_algebra(wreath_s3_cubed());
  for (int b = 0; b < h.basis.order(); b += 13)
    CHECK(p_basis(h, b) == h.basis.mul(h.sigma(b), h.basis.inv(b)));
  HopfElement u{{4, Rat(2)}, {9, Rat(-1, 3)}};
  HopfElement pu = p_map(h, u);
  HopfElement expect;
  for (const auto& [b, c] : u) expect[p_basis(h, b)] += c;
  for (auto it = expect.begin(); it != expect.end();)
    it = it->second == 0 ? expect.erase(it) : std::next(it);
  for (auto it = pu.begin(); it != pu.end();)
    it = it->second == 0 ? pu.erase(it) : std::next(it);
  CHECK(pu == expect);
}

TEST_CASE("Hopf-level triality holds on the wreath group algebra") {
  HopfCarrier h = group_algebra(wreath_s3_cubed());
  HopfTriality r = check_hopf_triality(h);
  CHECK(r.pass);
  CHECK(r.checked == 216);
  GeneratorVariants g = check_generator_independence(h);
  CHECK(g.pass);
  CHECK(g.base);
  CHECK(g.rho2_rhosigma);
  CHECK(g.rho2sigma);
}

TEST_CASE("inversion on C4 fails with the order-4 witness") {
  HopfCarrier h = group_algebra(c4_inversion());
  HopfTriality r = check_hopf_triality(h);
  CHECK(!r.pass);
  CHECK(r.witness["element"] == 2);
  CHECK(r.witness["order"] == 4);
  GeneratorVariants g = check_generator_independence(h);
  CHECK(g.pass);      // all variants agree ...
  CHECK(!g.base);     // ... on failure
}

TEST_CASE("commutation of the twisted multiplications") {
  HopfCarrier h = group_algebra(wreath_s3_cubed());
  HopfElement u{{1, Rat(1)}, {17, Rat(2)}, {100, Rat(-1)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(check_commutation(h, u, i, j));
}

TEST_CASE("MH of the wreath group algebra is the S3 loop algebra") {
  TrialityGroup tg = wreath_s3_cubed();
  HopfCarrier h = group_algebra(tg);
  MHSubalgebra mh = mh_subalgebra(h);
  CHECK(mh.carrier.size() == 6);
  CHECK(mh.p_image.dim() == 6);
  CHECK(!mh.verified.empty());
  CHECK(!mh.star.associativity_witness().has_value());
  CHECK(find_loop_isomorphism(mh.star, FiniteGroup::symmetric3().loop()).has_value());
  MLoopResult ml = moufang_from_triality(tg);
  CHECK(mh_matches_moufang(h, mh, ml));
}

TEST_CASE("multiplication operator identities on a loop algebra") {
  LoopReport r = check_mult_alg_identities(chein_loop(FiniteGroup::symmetric3()));
  CHECK(r.pass());
  CHECK(r.identities.size() >= 12);
}

TEST_CASE("universal relations verified into the autotopy group algebra") {
  FiniteLoop q = FiniteGroup::cyclic(4).loop();
  AtpGroup ag = atp_as_triality_group(q);
  CHECK(ag.tg.g.order() == 32);
  std::vector<int> phi;
  for (int b = 0; b < q.order(); ++b)
    phi.push_back(ag.index_of({q.L(b).inverse(), q.U(b).inverse(), q.L(b)}));
  LoopReport r = verify_doro_target(loop_algebra(q), group_algebra(ag.tg), phi);
  CHECK(r.pass());
}

TEST_CASE("universal relations verified into F[G], and a corrupted map is caught") {
  TrialityGroup tg = wreath_s3_cubed();
  MLoopResult ml = moufang_from_triality(tg);
  HopfCarrier target = group_algebra(tg);
  std::vector<int> phi;
  for (int m : ml.carrier) phi.push_back(tg.g.inv(m));
  MoufangHopfCarrier u = loop_algebra(ml.loop);
  CHECK(verify_doro_target(u, target, phi).pass());

  std::swap(phi[1], phi[2]);
  LoopReport bad = verify_doro_target(u, target, phi);
  CHECK(!bad.pass());
  for (const auto& id : bad.identities)
    if (!id.pass) {
      CHECK(id.name == "phi-multiplicative");
      CHECK(id.witness["m"] == 2);
      CHECK(id.witness["n"] == 3);
      break;
    }
}
