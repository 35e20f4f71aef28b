#include "doctest.h"
#include "triality/gtriality.hpp"
#include "triality/hopf.hpp"
#include "triality/loop_gen.hpp"
#include "triality/parallel.hpp"

using namespace triality;

TEST_CASE("first_violation returns the minimal witness in both modes") {
  auto ok = [](std::int64_t i) { return i != 137 && i != 2000 && i != 9999; };
  for (par::Exec e : {par::Exec::Serial, par::Exec::OpenMP}) {
    CHECK(par::first_violation(10'000, e, ok) == std::optional<std::int64_t>(137));
    CHECK(par::first_violation(10'000, e, [](std::int64_t) { return true; }) == std::nullopt);
    CHECK(par::first_violation(0, e, ok) == std::nullopt);
  }
}

TEST_CASE("collect_hits keeps index order in both modes") {
  auto fn = [](std::int64_t i) -> std::optional<int> {
    if (i % 3 == 0) return static_cast<int>(i * i);
    return std::nullopt;
  };
  auto s = par::collect_hits(1000, par::Exec::Serial, fn);
  auto p = par::collect_hits(1000, par::Exec::OpenMP, fn);
  CHECK(s == p);
  CHECK(s.size() == 334);
  CHECK(s[2] == 36);
}

TEST_CASE("seeded generator is deterministic and in range") {
  par::Rng a(42), b(42), c(43);
  bool same = true, diff = false;
  for (int i = 0; i < 100; ++i) {
    std::uint64_t x = a.next();
    same = same && (x == b.next());
    diff = diff || (x != c.next());
  }
  CHECK(same);
  CHECK(diff);
  par::Rng r(7);
  for (int i = 0; i < 1000; ++i) CHECK(r.below(12) < 12);
  CHECK(par::Rng(1).below(0) == 0);
}

TEST_CASE("kernels agree across execution modes") {
  FiniteLoop o16 = octonion_unit_loop();
  LoopReport ms = check_moufang(o16, par::Exec::Serial);
  LoopReport mp = check_moufang(o16, par::Exec::OpenMP);
  REQUIRE(ms.identities.size() == mp.identities.size());
  for (std::size_t i = 0; i < ms.identities.size(); ++i) {
    CHECK(ms.identities[i].pass == mp.identities[i].pass);
    CHECK(ms.identities[i].witness == mp.identities[i].witness);
  }

  FiniteLoop q5 = non_moufang_5();
  LoopReport fs = check_moufang(q5, par::Exec::Serial);
  LoopReport fp = check_moufang(q5, par::Exec::OpenMP);
  for (std::size_t i = 0; i < fs.identities.size(); ++i)
    CHECK(fs.identities[i].witness == fp.identities[i].witness);

  CHECK(verify_doro_relations(o16, par::Exec::Serial).pass() ==
        verify_doro_relations(o16, par::Exec::OpenMP).pass());

  HopfCarrier h = group_algebra(wreath_s3_cubed());
  HopfTriality hs = check_hopf_triality(h, par::Exec::Serial);
  HopfTriality hp = check_hopf_triality(h, par::Exec::OpenMP);
  CHECK(hs.pass == hp.pass);
  CHECK(hs.checked == hp.checked);

  HopfCarrier bad = group_algebra(c4_inversion());
  CHECK(check_hopf_triality(bad, par::Exec::Serial).witness ==
        check_hopf_triality(bad, par::Exec::OpenMP).witness);
}
