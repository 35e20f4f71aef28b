#include <chrono>
#include <cstdio>

#include "triality/conv.hpp"
#include "triality/envelope.hpp"
#include "triality/hopf.hpp"
#include "triality/loop_gen.hpp"

using namespace triality;

namespace {

template <class F>
double seconds_of(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs the same kernel on both executors, insists on identical verdicts, and
// prints one table row.
template <class F>
void row(const char* name, F&& run) {
  bool rs = false, rp = false;
  double ts = seconds_of([&] { rs = run(par::Exec::Serial); });
  double tp = seconds_of([&] { rp = run(par::Exec::OpenMP); });
  if (rs != rp) {
    std::printf("%-28s DISAGREE serial=%d openmp=%d\n", name, rs, rp);
    std::exit(1);
  }
  std::printf("%-28s serial %8.3fs   openmp %8.3fs   x%.2f   %s\n", name, ts, tp,
              tp > 0 ? ts / tp : 0.0, rs ? "pass" : "fail");
}

}  // namespace

int main() {
  FiniteLoop o16 = octonion_unit_loop();
  FiniteLoop chein12 = chein_loop(FiniteGroup::symmetric3());
  TrialityGroup wreath = wreath_s3_cubed();

  row("moufang o16", [&](par::Exec e) { return check_moufang(o16, e).pass(); });
  row("doro-relations o16", [&](par::Exec e) { return verify_doro_relations(o16, e).pass(); });
  row("multalg chein12", [&](par::Exec e) { return check_mult_alg_identities(chein12, e).pass(); });
  row("group-triality wreath", [&](par::Exec e) { return check_triality(wreath, e).pass; });
  row("hopf-triality wreath", [&](par::Exec e) {
    return check_hopf_triality(group_algebra(wreath), e).pass;
  });

  auto atp = autotopy_group(chein12);
  row("atp-triality chein12", [&](par::Exec e) { return check_atp_triality(chein12, atp, e).pass; });

  LieWithTriality w2 = wreath_lie(two_dim_nonabelian());
  row("ug-triality wreath d=3", [&](par::Exec e) { return check_ug_triality(w2, 3, e).pass; });

  FiniteLoop c4 = FiniteGroup::cyclic(4).loop();
  row("conv-triality c4 |X|=2", [&](par::Exec e) {
    return atpc_triality_checks(2, c4, 60, 5, e).pass();
  });
  return 0;
}
