#include "triality/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "triality/conv.hpp"
#include "triality/corpus.hpp"
#include "triality/envelope.hpp"
#include "triality/hopf.hpp"
#include "triality/loop_gen.hpp"
#include "triality/wgroup.hpp"

namespace triality {

namespace {

struct Args {
  std::filesystem::path input;
  nlohmann::json flags;

  int degree(int dflt) const { return flags.value("degree", dflt); }
  int samples(int dflt) const { return flags.value("samples", dflt); }
  int points(int dflt) const { return flags.value("points", dflt); }
  std::uint64_t seed() const { return flags.value("seed", std::uint64_t{0}); }
  par::Exec exec() const { return flags.value("serial", false) ? par::Exec::Serial : par::Exec::OpenMP; }

  CayleyAlgebra cayley() const {
    std::string p = flags.value("params", "-1,-1,-1");
    std::replace(p.begin(), p.end(), ',', ' ');
    std::istringstream ss(p);
    std::string a, b, c;
    if (!(ss >> a >> b >> c)) throw CheckError("bad-params", {{"params", p}});
    return build_cayley(Rat(a), Rat(b), Rat(c));
  }
};

void push(Report& r, const std::string& name, bool pass, nlohmann::json witness = {}) {
  r.identities.push_back({{"name", name}, {"pass", pass}, {"witness", witness}});
  if (!pass && r.status == "pass") {
    r.status = "fail";
    r.witness = {{"identity", name}, {"at", witness}};
  }
}

void merge_loop_report(Report& r, const LoopReport& lr, const std::string& prefix = "") {
  for (const auto& id : lr.identities) push(r, prefix + id.name, id.pass, id.witness);
}

nlohmann::json mono_json(const PBWMono& m) {
  std::vector<int> v(m.begin(), m.end());
  return v;
}

Report check_moufang_file(const Args& a) {
  FiniteLoop q = load_loop(a.input);
  Report r = Report::from_loop_report(check_moufang(q, a.exec()));
  r.counts["order"] = q.order();
  auto w = q.associativity_witness();
  r.counts["associative"] = !w.has_value();
  return r;
}

Report check_doro_file(const Args& a) {
  FiniteLoop q = load_loop(a.input);
  Report r = Report::from_loop_report(verify_doro_relations(q, a.exec()));
  r.counts["order"] = q.order();
  return r;
}

Report check_multalg_file(const Args& a) {
  FiniteLoop q = load_loop(a.input);
  Report r = Report::from_loop_report(check_mult_alg_identities(q, a.exec()));
  r.counts["order"] = q.order();
  return r;
}

Report check_triality_file(const Args& a) {
  TrialityGroup tg = load_triality_group(a.input);
  TrialityCheck c = check_triality(tg, a.exec());
  Report r;
  r.counts = {{"order", tg.g.order()}};
  push(r, "triality-identity", c.pass,
       c.witness ? nlohmann::json{{"element", *c.witness + 1}} : nlohmann::json{});
  return r;
}

Report check_mloop_file(const Args& a) {
  TrialityGroup tg = load_triality_group(a.input);
  MLoopResult ml = moufang_from_triality(tg, a.exec());
  Report r;
  push(r, "product-formulas-agree", true);  // moufang_from_triality throws otherwise
  merge_loop_report(r, check_moufang(ml.loop, a.exec()), "mloop-");
  merge_loop_report(r, verify_doro_relations(ml.loop, a.exec()), "mloop-");
  MLoopResult rev = moufang_from_triality(tg, a.exec(), true);
  push(r, "section-independence",
       rev.carrier == ml.carrier && rev.loop == ml.loop);
  r.counts = {{"group-order", tg.g.order()}, {"loop-order", ml.loop.order()}};
  return r;
}

Report check_center_file(const Args& a) {
  TrialityGroup tg = load_triality_group(a.input);
  std::vector<int> z = s3_center(tg);
  Report r;
  int expect = a.flags.value("expect-order", 1);
  r.counts = {{"order", tg.g.order()}, {"center-order", z.size()}};
  nlohmann::json elems = nlohmann::json::array();
  for (int g : z) elems.push_back(g + 1);
  push(r, "center-order", static_cast<int>(z.size()) == expect, {{"elements", elems}});
  return r;
}

Report check_embed_file(const Args& a) {
  TrialityGroup tg = load_triality_group(a.input);
  MLoopResult ml = moufang_from_triality(tg, a.exec());
  EmbedResult er = embed_into_autotopy(tg, ml, a.exec());
  std::vector<int> z = s3_center(tg), k = er.kernel;
  std::sort(z.begin(), z.end());
  std::sort(k.begin(), k.end());
  Report r;
  push(r, "autotopy-images", true);  // construction-verified
  push(r, "kernel-is-center", z == k, {{"kernel", k.size()}, {"center", z.size()}});
  r.counts = {{"group-order", tg.g.order()}, {"kernel", k.size()}};
  return r;
}

Report check_atp_file(const Args& a) {
  FiniteLoop q = load_loop(a.input);
  auto atp = autotopy_group(q, a.exec());
  Report r;
  AtpTrialityReport tri = check_atp_triality(q, atp, a.exec());
  push(r, "triality-identity", tri.pass);
  MAtpResult m = m_of_atp(q, atp, a.exec());
  push(r, "matp-isomorphic-to-loop", find_loop_isomorphism(m.m.loop, q).has_value());

  std::vector<AutotopyTriple> fixed;
  for (const auto& t : atp)
    if (atp_rho(q, t) == t && atp_sigma(q, t) == t) fixed.push_back(t);
  int central = 0;
  for (const auto& t : fixed) {
    bool comm = true;
    for (const auto& s : atp)
      if (!(t * s == s * t)) {
        comm = false;
        break;
      }
    if (comm) ++central;
  }
  push(r, "s3-center-trivial", central == 1, {{"central", central}});

  auto psaut = pseudoautomorphism_group(q, a.exec());
  push(r, "order-factorization",
       static_cast<std::int64_t>(atp.size()) ==
           static_cast<std::int64_t>(psaut.size()) * q.order());
  r.counts = {{"loop", q.order()}, {"atp", atp.size()}, {"psaut", psaut.size()},
              {"exhaustive", tri.exhaustive}, {"checked", tri.checked}};
  return r;
}

Report check_atp_mloop_file(const Args& a) {
  FiniteLoop q = load_loop(a.input);
  auto atp = autotopy_group(q, a.exec());
  MAtpResult m = m_of_atp(q, atp, a.exec());
  Report r;
  push(r, "matp-moufang", check_moufang(m.m.loop, a.exec()).pass());
  const int n = m.m.loop.order();
  bool bij = n == q.order(), mult = true;
  std::vector<char> hit(static_cast<std::size_t>(q.order()), 0);
  for (int i = 0; i < n && bij; ++i) {
    if (hit[static_cast<std::size_t>(m.to_loop[static_cast<std::size_t>(i)])]) bij = false;
    hit[static_cast<std::size_t>(m.to_loop[static_cast<std::size_t>(i)])] = 1;
  }
  for (int i = 0; i < n && mult; ++i)
    for (int j = 0; j < n && mult; ++j)
      if (q.mul(m.to_loop[static_cast<std::size_t>(i)], m.to_loop[static_cast<std::size_t>(j)]) !=
          m.to_loop[static_cast<std::size_t>(m.m.loop.mul(i, j))])
        mult = false;
  // (L_b⁻¹, U_b⁻¹, L_b) ↦ b is itself the isomorphism, not merely some iso
  push(r, "canonical-map-isomorphism", bij && mult);
  r.counts = {{"loop", q.order()}, {"atp", atp.size()}, {"matp", n}};
  return r;
}

Report check_doro_verify_file(const Args& a) {
  FiniteLoop q = load_loop(a.input);
  TrialityGroup tg = load_triality_group(a.flags.at("target").get<std::string>());
  MLoopResult ml = moufang_from_triality(tg, a.exec());
  auto iso = find_loop_isomorphism(q, ml.loop);
  if (!iso)
    throw CheckError("no-isomorphism", {{"loop", q.order()}, {"mloop", ml.loop.order()}});
  std::vector<int> phi(static_cast<std::size_t>(q.order()));
  for (int m = 0; m < q.order(); ++m)
    phi[static_cast<std::size_t>(m)] = tg.g.inv(ml.carrier[static_cast<std::size_t>((*iso)(m))]);
  Report r = Report::from_loop_report(
      verify_doro_target(loop_algebra(q, a.exec()), group_algebra(tg), phi, a.exec()));
  r.counts["group-order"] = tg.g.order();
  return r;
}

Report check_psaut_file(const Args& a) {
  FiniteLoop q = load_loop(a.input);
  auto psaut = pseudoautomorphism_group(q, a.exec());
  auto atp = autotopy_group(q, a.exec());
  Report r;
  push(r, "order-factorization",
       static_cast<std::int64_t>(atp.size()) ==
           static_cast<std::int64_t>(psaut.size()) * q.order());
  r.counts = {{"loop", q.order()}, {"atp", atp.size()}, {"psaut", psaut.size()}};
  return r;
}

Report check_psi_file(const Args& a) {
  FiniteLoop q = load_loop(a.input);
  WGroup w = WGroup::build(q, a.exec());
  std::size_t samples = static_cast<std::size_t>(a.samples(10'000));
  std::uint64_t seed = a.flags.value("seed", std::uint64_t{1});
  SampledReport assoc = check_w_associativity(w, a.exec(), 64, samples, seed);
  SampledReport tri = check_w_triality(w, a.exec(), 64, samples, seed);
  SampledReport psi = check_psi(w, a.exec(), 64, samples, seed);
  Report r;
  r.seed = seed;
  push(r, "w-associativity", assoc.pass, assoc.witness);
  push(r, "w-triality", tri.pass, tri.witness);
  push(r, "psi-isomorphism", psi.pass, psi.witness);
  r.counts = {{"w-order", w.order()},
              {"exhaustive", assoc.exhaustive && tri.exhaustive && psi.exhaustive},
              {"checked", assoc.checked + tri.checked + psi.checked}};
  return r;
}

Report check_hopf_file(const Args& a) {
  TrialityGroup tg = load_triality_group(a.input);
  HopfCarrier h = group_algebra(tg);
  HopfTriality t = check_hopf_triality(h, a.exec());
  GeneratorVariants gv = check_generator_independence(h, a.exec());
  Report r;
  push(r, "triality-identity", t.pass, t.witness);
  push(r, "generator-independence", gv.pass,
       {{"base", gv.base}, {"rho2-rhosigma", gv.rho2_rhosigma}, {"rho2sigma", gv.rho2sigma}});
  r.counts = {{"basis", h.basis.order()}, {"checked", t.checked}};
  return r;
}

Report check_mh_file(const Args& a) {
  TrialityGroup tg = load_triality_group(a.input);
  HopfCarrier h = group_algebra(tg);
  MHSubalgebra mh = mh_subalgebra(h);
  MLoopResult ml = moufang_from_triality(tg, a.exec());
  Report r;
  for (const auto& name : mh.verified) push(r, name, true);
  push(r, "matches-mloop", mh_matches_moufang(h, mh, ml));
  r.counts = {{"basis", h.basis.order()},
              {"dimension", mh.carrier.size()},
              {"p-image-dim", mh.p_image.dim()}};
  return r;
}

Report check_doro_target_file(const Args& a) {
  TrialityGroup tg = load_triality_group(a.input);
  MLoopResult ml = moufang_from_triality(tg, a.exec());
  MoufangHopfCarrier u = loop_algebra(ml.loop, a.exec());
  std::vector<int> phi(ml.carrier.size());
  for (std::size_t i = 0; i < ml.carrier.size(); ++i) phi[i] = tg.g.inv(ml.carrier[i]);
  Report r = Report::from_loop_report(verify_doro_target(u, group_algebra(tg), phi, a.exec()));
  r.counts["group-order"] = tg.g.order();
  return r;
}

Report check_doro_atp_file(const Args& a) {
  FiniteLoop q = load_loop(a.input);
  AtpGroup ag = atp_as_triality_group(q, a.exec());
  std::vector<int> phi(static_cast<std::size_t>(q.order()));
  for (int b = 0; b < q.order(); ++b)
    phi[static_cast<std::size_t>(b)] =
        ag.index_of({q.L(b).inverse(), q.U(b).inverse(), q.L(b)});
  Report r =
      Report::from_loop_report(verify_doro_target(loop_algebra(q, a.exec()), group_algebra(ag.tg), phi, a.exec()));
  r.counts["atp-order"] = ag.triples.size();
  return r;
}

Report check_cayley_file(const Args& a) {
  AlgebraSC sc = load_sc(a.input);
  CayleyAlgebra o = a.cayley();
  Report r;
  push(r, "round-trip", o.alg.dim == sc.dim && o.alg.c == sc.c);
  push(r, "alternative-and-composition", true);  // build_cayley throws otherwise
  push(r, "nalt-is-everything", nalt(o.alg).dim() == 8);
  AlgebraSC o0 = o.o0_commutator();
  push(r, "commutator-malcev", check_malcev(o0, a.exec()));
  auto jw = o0.jacobi_witness();
  push(r, "commutator-not-lie", jw.has_value());
  r.counts = {{"dim", sc.dim}};
  return r;
}

Report check_octonion_file(const Args& a) {
  CayleyAlgebra o = a.cayley();
  OrthoLie ol = ortho_lie(o);
  TrialityAutosO autos = triality_autos_o(o, ol);
  Report r;
  push(r, "der-dimension", static_cast<int>(ol.der.size()) == 14,
       {{"dim", ol.der.size()}});
  push(r, "oon-dimension", ol.dim() == 28, {{"dim", ol.dim()}});
  std::vector<QMatrix> seed;
  for (int i = 1; i < 8; ++i) {
    seed.push_back(o.alg.lmat(o.alg.basis_vec(i)));
    seed.push_back(o.alg.rmat(o.alg.basis_vec(i)));
  }
  ClosureResult cl = bracket_closure(seed, [](const QMatrix& x, const QMatrix& y) { return commutator(x, y); });
  push(r, "lr-bracket-closure", cl.space == ol.skew, {{"dim", cl.space.dim()}});
  push(r, "companion-identity", true);   // verified in triality_autos_o
  push(r, "s3-automorphisms", true);     // verified in triality_autos_o
  push(r, "triality-identity", check_lie_triality(autos.rho, autos.sigma));
  push(r, "alternating-sum-form", alternating_sum_matches(autos.rho, autos.sigma));
  push(r, "eigen-one-criterion", eigen_one_criterion(autos.rho, autos.sigma));
  r.counts = {{"der", ol.der.size()}, {"dim", ol.dim()}};
  return r;
}

Report check_malcev_lie_file(const Args& a) {
  LieOfMalcev lm = lie_of_malcev(a.cayley());
  Report r;
  push(r, "operator-relations", true);  // lie_of_malcev throws otherwise
  push(r, "lie-dimension", lm.ortho.dim() == 28);
  push(r, "lie-minus-dimension", lm.lie_minus.dim() == 7);
  bool t_iso = true, sigma_l = true, rho_l = true;
  std::vector<QVec> tc;
  for (int i = 0; i < 7 && t_iso; ++i) {
    tc.push_back(lm.t_coords(i));
    if (!lm.lie_minus.contains(tc.back())) t_iso = false;
  }
  if (t_iso) t_iso = Subspace::span(lm.ortho.dim(), tc).dim() == 7;
  push(r, "t-linear-isomorphism", t_iso);
  for (int i = 0; i < 7 && (sigma_l || rho_l); ++i) {
    QVec l = lm.ortho.coords.coords(lm.lambda_op(i).flat());
    QVec rr = lm.ortho.coords.coords(lm.rho_op(i).flat());
    QVec sl = lm.lie.sigma.apply(l), rl = lm.lie.rho.apply(l);
    QVec neg(rr.size());
    for (std::size_t k = 0; k < rr.size(); ++k) neg[k] = -rr[k];
    if (sl != neg) sigma_l = false;
    if (rl != rr) rho_l = false;
  }
  push(r, "sigma-lambda-is-minus-rho", sigma_l);
  push(r, "rho-lambda-is-rho", rho_l);
  push(r, "triality-identity", check_lie_triality(lm.lie));
  r.counts = {{"dim", lm.ortho.dim()}, {"lie-minus", lm.lie_minus.dim()}};
  return r;
}

Report check_lie_triality_file(const Args& a) {
  LieWithTriality lt = load_lie(a.input);
  Report r;
  push(r, "valid-s3-automorphisms", true);  // from_json validates
  bool eq6 = check_lie_triality(lt);
  push(r, "triality-identity", eq6,
       eq6 ? nlohmann::json{}
           : nlohmann::json{{"basis", *lie_triality_witness(lt.rho, lt.sigma) + 1}});
  push(r, "eigen-one-agrees", eigen_one_criterion(lt) == eq6);
  push(r, "alternating-sum-form", alternating_sum_matches(lt.rho, lt.sigma));
  r.counts = {{"dim", lt.bracket.dim}};
  return r;
}

Report check_ug_triality_file(const Args& a) {
  LieWithTriality lt = load_lie(a.input);
  int d = a.degree(2);
  SliceCheck sc = check_ug_triality(lt, d, a.exec());
  Report r;
  push(r, "ug-triality-identity", sc.pass,
       sc.witness ? nlohmann::json{{"monomial", mono_json(*sc.witness)}} : nlohmann::json{});
  r.counts = {{"dim", lt.bracket.dim}, {"degree", d}, {"checked", sc.checked}};
  return r;
}

Report check_pspan_file(const Args& a) {
  LieWithTriality lt = load_lie(a.input);
  int d = a.degree(2);
  Report r;
  push(r, "p-span-equals-circle-words", p_span_check(lt, d));
  r.counts = {{"dim", lt.bracket.dim}, {"degree", d}};
  return r;
}

Report check_env_action_file(const Args& a) {
  LieWithTriality lt = load_lie(a.input);
  int d = a.degree(2);
  ActionCheck ac = check_action_identity(lt, d, a.exec());
  Report r;
  push(r, "action-identity", ac.pass,
       ac.witness ? nlohmann::json{{"monomial", mono_json(ac.witness->first)},
                                   {"basis", ac.witness->second + 1}}
                  : nlohmann::json{});
  r.counts = {{"dim", lt.bracket.dim}, {"degree", d}, {"checked", ac.checked}};
  return r;
}

Report check_env_mh_label(const Args& a) {
  if (a.input != "o0") throw CheckError("unknown-label", {{"input", a.input.string()}});
  LieOfMalcev lm = lie_of_malcev(a.cayley());
  MHEnvelope me = mh_envelope(lm, a.degree(2), a.exec());
  Report r;
  for (const auto& id : me.identities) push(r, id.name, id.pass, id.witness);
  r.counts = me.counts;
  r.counts["degree"] = me.degree;
  return r;
}

Report check_env_relations_label(const Args& a) {
  if (a.input != "o0") throw CheckError("unknown-label", {{"input", a.input.string()}});
  LieOfMalcev lm = lie_of_malcev(a.cayley());
  RelationCheck rc = envelope_relations_witness(lm, lm.malcev, a.degree(2), a.exec());
  Report r;
  push(r, "generator-relations", rc.pass, rc.witness);
  r.counts = {{"degree", a.degree(2)}};
  return r;
}

Report check_malcev_file(const Args& a) {
  AlgebraSC sc = load_sc(a.input);
  Report r;
  push(r, "anticommutative", sc.is_anticommutative());
  auto w = malcev_witness(sc, a.exec());
  push(r, "malcev-identity", !w.has_value(),
       w ? nlohmann::json{{"tuple", {(*w)[0] + 1, (*w)[1] + 1, (*w)[2] + 1, (*w)[3] + 1}}}
         : nlohmann::json{});
  r.counts = {{"dim", sc.dim}, {"lie", !sc.jacobi_witness().has_value()}};
  return r;
}

Report check_conv_loop_file(const Args& a) {
  FiniteLoop q = load_loop(a.input);
  int pts = a.points(2);
  FiniteLoop conv = convolution_loop(pts, q, a.exec());
  Report r;
  push(r, "moufang", true);  // convolution_loop throws otherwise
  r.counts = {{"loop", q.order()},
              {"points", pts},
              {"order", conv.order()},
              {"associative", !conv.associativity_witness().has_value()}};
  return r;
}

Report check_conv_triality_file(const Args& a) {
  FiniteLoop q = load_loop(a.input);
  int pts = a.points(2);
  int samples = a.samples(100);
  Report r;
  r.seed = a.seed();
  merge_loop_report(r, conv_algebra_report(pts, q, samples, a.seed()));
  LoopReport lr = atpc_triality_checks(pts, q, samples, a.seed(), a.exec());
  merge_loop_report(r, lr);
  r.counts = lr.counts;
  return r;
}

using Handler = Report (*)(const Args&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"moufang", check_moufang_file},
      {"doro", check_doro_file},
      {"multalg", check_multalg_file},
      {"triality", check_triality_file},
      {"mloop", check_mloop_file},
      {"center", check_center_file},
      {"embed", check_embed_file},
      {"atp", check_atp_file},
      {"atp-mloop", check_atp_mloop_file},
      {"doro-verify", check_doro_verify_file},
      {"psaut", check_psaut_file},
      {"psi", check_psi_file},
      {"hopf", check_hopf_file},
      {"mh", check_mh_file},
      {"doro-target", check_doro_target_file},
      {"doro-atp", check_doro_atp_file},
      {"cayley", check_cayley_file},
      {"octonion", check_octonion_file},
      {"malcev-lie", check_malcev_lie_file},
      {"lie-triality", check_lie_triality_file},
      {"ug-triality", check_ug_triality_file},
      {"pspan", check_pspan_file},
      {"env-action", check_env_action_file},
      {"env-mh", check_env_mh_label},
      {"env-relations", check_env_relations_label},
      {"malcev", check_malcev_file},
      {"conv-loop", check_conv_loop_file},
      {"conv-triality", check_conv_triality_file},
  };
  return h;
}

}  // namespace

Report run_check(const std::string& check, const std::filesystem::path& input,
                 const nlohmann::json& flags) {
  auto it = handlers().find(check);
  if (it == handlers().end()) throw CheckError("unknown-check", {{"check", check}});
  Args a{input, flags.is_null() ? nlohmann::json::object() : flags};
  auto t0 = std::chrono::steady_clock::now();
  Report r = it->second(a);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.check = check;
  r.input = input.string();
  r.digest = fnv1a_hex(std::filesystem::exists(input) ? read_file(input) : input.string());
  if (a.flags.contains("seed")) r.seed = a.flags["seed"].get<std::uint64_t>();
  return r;
}

SuiteResult run_suite(const std::filesystem::path& manifest, const std::filesystem::path& outdir) {
  nlohmann::json m = load_json(manifest);
  std::filesystem::path base = manifest.parent_path();
  std::filesystem::create_directories(outdir);

  SuiteResult result;
  result.ok = true;
  nlohmann::json entries = nlohmann::json::array();
  int idx = 0;
  for (const auto& entry : m.value("checks", nlohmann::json::array())) {
    std::string check = entry.at("check").get<std::string>();
    std::string input = entry.at("input").get<std::string>();
    std::string expect = entry.value("expect", "pass");
    std::filesystem::path path = input;
    if (path.is_relative() && std::filesystem::exists(base / path)) path = base / path;

    Report rep;
    try {
      rep = run_check(check, path, entry);
    } catch (const CheckError& e) {
      rep.check = check;
      rep.input = input;
      rep.status = "error";
      rep.witness = {{"kind", e.kind}, {"detail", e.detail}};
    }
    bool matched = rep.status == expect;
    result.ok = result.ok && matched;

    char name[64];
    std::snprintf(name, sizeof name, "report-%03d-%s.json", idx, check.c_str());
    std::ofstream f(outdir / name, std::ios::binary);
    f << rep.to_json().dump(2) << "\n";

    entries.push_back({{"check", check},
                       {"input", input},
                       {"status", rep.status},
                       {"expect", expect},
                       {"matched", matched},
                       {"seconds", rep.seconds},
                       {"report", name}});
    result.reports.push_back(std::move(rep));
    ++idx;
  }
  result.summary = {{"manifest", manifest.string()},
                    {"total", idx},
                    {"ok", result.ok},
                    {"entries", entries}};
  std::ofstream f(outdir / "summary.json", std::ios::binary);
  f << result.summary.dump(2) << "\n";
  return result;
}

}  // namespace triality
