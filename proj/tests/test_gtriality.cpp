#include "doctest.h"
#include "triality/gtriality.hpp"
#include "triality/loop_gen.hpp"

using namespace triality;

TEST_CASE("make validates the S3 relations and automorphism property") {
  FiniteGroup s3 = FiniteGroup::symmetric3();
  Perm id = Perm::identity(s3.order());
  CHECK_NOTHROW(TrialityGroup::make(s3, id, id));
  // inversion is not an automorphism of a nonabelian group
  CHECK_THROWS_AS(TrialityGroup::make(s3, id, s3.inversion_perm()), CheckError);
  // rho must have order dividing 3
  FiniteGroup c4 = FiniteGroup::cyclic(4);
  CHECK_THROWS_AS(TrialityGroup::make(c4, c4.inversion_perm(), id), CheckError);
}

TEST_CASE("wreath fixture satisfies the triality identity everywhere") {
  TrialityGroup tg = wreath_s3_cubed();
  CHECK(tg.g.order() == 216);
  TrialityCheck c = check_triality(tg);
  CHECK(c.pass);
  CHECK(!c.witness.has_value());
}

TEST_CASE("inversion on C4 fails with an order-4 witness") {
  TrialityGroup tg = c4_inversion();
  TrialityCheck c = check_triality(tg);
  CHECK(!c.pass);
  REQUIRE(c.witness.has_value());
  int w = *c.witness;
  CHECK(tg.g.power(w, 4) == 0);
  CHECK(tg.g.power(w, 2) != 0);
}

TEST_CASE("M(G) of the wreath fixture is S3") {
  TrialityGroup tg = wreath_s3_cubed();
  MLoopResult m = moufang_from_triality(tg);
  CHECK(m.loop.order() == 6);
  CHECK(!m.loop.associativity_witness().has_value());
  CHECK(find_loop_isomorphism(m.loop, FiniteGroup::symmetric3().loop()).has_value());
  // every carrier slot's section element maps back onto it
  for (std::size_t i = 0; i < m.carrier.size(); ++i) {
    int g = m.section[i];
    CHECK(tg.g.mul(tg.g.inv(g), tg.sigma(g)) == m.carrier[i]);
  }
}

TEST_CASE("M(G) does not depend on the chosen section") {
  TrialityGroup tg = wreath_s3_cubed();
  MLoopResult a = moufang_from_triality(tg, par::Exec::OpenMP, false);
  MLoopResult b = moufang_from_triality(tg, par::Exec::OpenMP, true);
  CHECK(a.carrier == b.carrier);
  CHECK(a.loop == b.loop);
  CHECK(a.section != b.section);  // reverse scan picks different preimages
}

TEST_CASE("S3-fixed center of the wreath fixture is trivial") {
  TrialityGroup tg = wreath_s3_cubed();
  std::vector<int> z = s3_center(tg);
  CHECK(z == std::vector<int>{0});
}

TEST_CASE("triality group JSON round-trip") {
  TrialityGroup tg = wreath_s3_cubed();
  TrialityGroup back = TrialityGroup::from_json(tg.to_json());
  CHECK(back.g.order() == tg.g.order());
  CHECK(back.rho == tg.rho);
  CHECK(back.sigma == tg.sigma);
  for (int a = 0; a < 20; ++a)
    for (int b = 0; b < 20; ++b) CHECK(back.g.mul(a, b) == tg.g.mul(a, b));
}
