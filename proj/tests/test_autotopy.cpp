#include <algorithm>

#include "doctest.h"
#include "triality/loop_gen.hpp"
#include "triality/wgroup.hpp"

using namespace triality;

TEST_CASE("autotopy enumeration matches the brute-force oracle") {
  FiniteLoop c4 = FiniteGroup::cyclic(4).loop();
  auto fast = autotopy_group(c4);
  auto slow = autotopy_group_bruteforce(c4);
  CHECK(fast.size() == 32);
  CHECK(fast == slow);  // both sorted

  FiniteLoop q5 = non_moufang_5();
  CHECK(autotopy_group(q5) == autotopy_group_bruteforce(q5));
}

TEST_CASE("canonical triples are autotopies and lie in the enumerated group") {
  FiniteLoop q = chein_loop(FiniteGroup::symmetric3());
  auto atp = autotopy_group(q);
  auto canon = canonical_triples(q);
  CHECK(canon.size() == 3 * static_cast<std::size_t>(q.order()));
  for (const auto& t : canon) {
    CHECK(is_autotopy(q, t));
    CHECK(std::binary_search(atp.begin(), atp.end(), t));
  }
}

TEST_CASE("rho and sigma generate an S3 on Atp and preserve the group") {
  FiniteLoop q = chein_loop(FiniteGroup::symmetric3());
  auto atp = autotopy_group(q);
  for (std::size_t k = 0; k < atp.size(); k += 17) {
    const auto& t = atp[k];
    auto r = atp_rho(q, t), s = atp_sigma(q, t);
    CHECK(is_autotopy(q, r));
    CHECK(is_autotopy(q, s));
    CHECK(atp_rho(q, atp_rho(q, r)) == t);
    CHECK(atp_sigma(q, s) == t);
    CHECK(atp_rho(q, atp_sigma(q, atp_rho(q, atp_sigma(q, t)))) == t);  // (σρ)² = 1
  }
}

TEST_CASE("order factorization |Atp| = |PsAut| * |Q|") {
  for (const FiniteLoop& q :
       {chein_loop(FiniteGroup::symmetric3()), FiniteGroup::cyclic(4).loop()}) {
    auto atp = autotopy_group(q);
    auto ps = pseudoautomorphism_group(q);
    CHECK(atp.size() == ps.size() * static_cast<std::size_t>(q.order()));
    CHECK(ps == pseudoautomorphism_group_direct(q));
  }
}

TEST_CASE("triality identity holds inside Atp of a Moufang loop") {
  FiniteLoop q = chein_loop(FiniteGroup::symmetric3());
  auto atp = autotopy_group(q);
  AtpTrialityReport r = check_atp_triality(q, atp);
  CHECK(r.pass);
  CHECK(r.checked == static_cast<std::int64_t>(atp.size()));
  CHECK(r.exhaustive);
}

TEST_CASE("M(Atp(Q)) recovers Q through the canonical slot map") {
  FiniteLoop q = chein_loop(FiniteGroup::symmetric3());
  auto atp = autotopy_group(q);
  MAtpResult m = m_of_atp(q, atp);
  REQUIRE(m.m.loop.order() == q.order());
  std::vector<int> seen(static_cast<std::size_t>(q.order()), 0);
  for (int v : m.to_loop) seen[static_cast<std::size_t>(v)]++;
  for (int c : seen) CHECK(c == 1);
  for (int i = 0; i < q.order(); ++i)
    for (int j = 0; j < q.order(); ++j)
      CHECK(q.mul(m.to_loop[static_cast<std::size_t>(i)], m.to_loop[static_cast<std::size_t>(j)]) ==
            m.to_loop[static_cast<std::size_t>(m.m.loop.mul(i, j))]);
}

TEST_CASE("every autotopy splits as (A',A,A') times a right-translation triple") {
  FiniteLoop q = FiniteGroup::cyclic(4).loop();
  for (const auto& t : autotopy_group(q)) {
    auto [d, r] = decompose_autotopy(q, t);
    CHECK(d * r == t);
    CHECK(d.a1 == d.a3);
    CHECK(d.a2(0) == 0);
    CHECK(is_autotopy(q, d));
    int x = t.a2(0);
    CHECK(r.a1 == q.R(x).inverse());
    CHECK(r.a2 == q.R(x));
    CHECK(r.a3 == q.U(x).inverse());
  }
}

TEST_CASE("conjugation-style embedding into Atp(M(G)) kills exactly the center") {
  TrialityGroup tg = wreath_s3_cubed();
  MLoopResult ml = moufang_from_triality(tg);
  EmbedResult e = embed_into_autotopy(tg, ml);
  CHECK(e.kernel == s3_center(tg));
  for (int g = 0; g < tg.g.order(); g += 7) {
    CHECK(is_autotopy(ml.loop, e.image[static_cast<std::size_t>(g)]));
    for (int h = 0; h < tg.g.order(); h += 11) {
      auto lhs = e.image[static_cast<std::size_t>(tg.g.mul(g, h))];
      auto rhs = e.image[static_cast<std::size_t>(g)] * e.image[static_cast<std::size_t>(h)];
      CHECK(lhs == rhs);
    }
    CHECK(e.image[static_cast<std::size_t>(tg.rho(g))] ==
          atp_rho(ml.loop, e.image[static_cast<std::size_t>(g)]));
    CHECK(e.image[static_cast<std::size_t>(tg.sigma(g))] ==
          atp_sigma(ml.loop, e.image[static_cast<std::size_t>(g)]));
  }
}

TEST_CASE("Mikheev group: associativity and the psi bridge") {
  FiniteLoop c4 = FiniteGroup::cyclic(4).loop();
  WGroup w = WGroup::build(c4);
  CHECK(w.order() == 32);
  SampledReport assoc = check_w_associativity(w);
  CHECK(assoc.pass);
  CHECK(assoc.exhaustive);
  CHECK(check_w_triality(w).pass);
  SampledReport psi = check_psi(w);
  CHECK(psi.pass);
  for (const auto& t : w.atp()) CHECK(w.psi_preimage(w.psi(t)) == t);
}

TEST_CASE("Mikheev group over the order-12 loop, sampled") {
  FiniteLoop q = chein_loop(FiniteGroup::symmetric3());
  WGroup w = WGroup::build(q);
  CHECK(w.order() == static_cast<std::int64_t>(pseudoautomorphism_group(q).size()) * 12);
  CHECK(check_w_associativity(w).pass);
  CHECK(check_w_triality(w).pass);
  CHECK(check_psi(w).pass);
}
