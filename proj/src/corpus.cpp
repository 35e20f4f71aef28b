#include "triality/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "triality/loop_gen.hpp"

namespace triality {

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json bundled_manifest() {
  auto e = [](const char* check, const char* input, nlohmann::json extra = {}) {
    nlohmann::json j = {{"check", check}, {"input", input}};
    if (!extra.is_null())
      for (auto& [k, v] : extra.items()) j[k] = v;
    return j;
  };
  nlohmann::json checks = nlohmann::json::array();
  for (const char* f : {"c2.loop.txt", "c3.loop.txt", "c4.loop.txt", "c5.loop.txt", "c6.loop.txt",
                        "c7.loop.txt", "c8.loop.txt", "s3.loop.txt", "chein12.loop.txt",
                        "o16.loop.txt"}) {
    checks.push_back(e("moufang", f));
    checks.push_back(e("doro", f));
  }
  checks.push_back(e("multalg", "chein12.loop.txt"));
  checks.push_back(e("multalg", "o16.loop.txt"));
  checks.push_back(e("triality", "wreath-s3.tg.json"));
  checks.push_back(e("mloop", "wreath-s3.tg.json"));
  checks.push_back(e("center", "wreath-s3.tg.json"));
  checks.push_back(e("embed", "wreath-s3.tg.json"));
  checks.push_back(e("hopf", "wreath-s3.tg.json"));
  checks.push_back(e("mh", "wreath-s3.tg.json"));
  checks.push_back(e("doro-target", "wreath-s3.tg.json"));
  checks.push_back(e("doro-atp", "c4.loop.txt"));
  checks.push_back(e("atp", "c4.loop.txt"));
  checks.push_back(e("atp", "chein12.loop.txt"));
  checks.push_back(e("psaut", "chein12.loop.txt"));
  checks.push_back(e("psi", "c4.loop.txt"));
  checks.push_back(e("psi", "chein12.loop.txt"));
  checks.push_back(e("cayley", "cayley-111.sc.json"));
  checks.push_back(e("octonion", "cayley-111.sc.json"));
  checks.push_back(e("malcev-lie", "cayley-111.sc.json"));
  for (const char* f : {"oon.lie.json", "wreath-2dim.lie.json", "wreath-sl2.lie.json"})
    checks.push_back(e("lie-triality", f));
  checks.push_back(e("ug-triality", "wreath-2dim.lie.json", {{"degree", 3}}));
  checks.push_back(e("ug-triality", "wreath-sl2.lie.json", {{"degree", 3}}));
  checks.push_back(e("ug-triality", "oon.lie.json", {{"degree", 2}}));
  checks.push_back(e("pspan", "wreath-2dim.lie.json", {{"degree", 2}}));
  checks.push_back(e("pspan", "oon.lie.json", {{"degree", 2}}));
  checks.push_back(e("env-action", "wreath-2dim.lie.json", {{"degree", 3}}));
  checks.push_back(e("env-action", "oon.lie.json", {{"degree", 2}}));
  checks.push_back(e("env-mh", "o0", {{"degree", 3}}));
  checks.push_back(e("env-relations", "o0", {{"degree", 2}}));
  checks.push_back(e("conv-loop", "chein12.loop.txt", {{"points", 2}}));
  checks.push_back(e("conv-triality", "c4.loop.txt", {{"points", 2}, {"samples", 40}}));
  checks.push_back(e("conv-triality", "chein12.loop.txt", {{"points", 1}, {"samples", 40}}));
  return {{"checks", checks}};
}

}  // namespace

std::map<std::string, std::string> corpus_files() {
  std::map<std::string, std::string> out;
  for (int n = 2; n <= 8; ++n)
    out["c" + std::to_string(n) + ".loop.txt"] = loop_to_text(FiniteGroup::cyclic(n).loop());
  out["s3.loop.txt"] = loop_to_text(FiniteGroup::symmetric3().loop());
  out["chein12.loop.txt"] = loop_to_text(chein_loop(FiniteGroup::symmetric3()));
  out["o16.loop.txt"] = loop_to_text(octonion_unit_loop());
  out["nonmoufang5.loop.txt"] = loop_to_text(non_moufang_5());
  out["wreath-s3.tg.json"] = dump(wreath_s3_cubed().to_json());
  out["c4-inversion.tg.json"] = dump(c4_inversion().to_json());

  CayleyAlgebra o = build_cayley(-1, -1, -1);
  out["cayley-111.sc.json"] = dump(o.alg.to_json());
  OrthoLie ol = ortho_lie(o);
  TrialityAutosO autos = triality_autos_o(o, ol);
  out["oon.lie.json"] = dump(LieWithTriality::make(ol.lie, autos.rho, autos.sigma).to_json());
  out["wreath-2dim.lie.json"] = dump(wreath_lie(two_dim_nonabelian()).to_json());
  out["wreath-sl2.lie.json"] = dump(wreath_lie(sl2()).to_json());

  out["manifest.json"] = dump(bundled_manifest());
  out["broken.manifest.json"] = dump(nlohmann::json{
      {"checks", {{{"check", "triality"}, {"input", "c4-inversion.tg.json"}, {"expect", "fail"}}}}});
  return out;
}

void write_corpus(const std::filesystem::path& outdir) {
  std::filesystem::create_directories(outdir);
  for (const auto& [name, text] : corpus_files()) {
    std::ofstream f(outdir / name, std::ios::binary);
    if (!f) throw CheckError("io", {{"path", (outdir / name).string()}});
    f << text;
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CheckError("io", {{"path", path.string()}});
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

nlohmann::json load_json(const std::filesystem::path& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    // e.what() carries the line/column position
    throw CheckError("format", {{"path", path.string()}, {"error", e.what()}});
  }
}

FiniteLoop load_loop(const std::filesystem::path& path) { return parse_loop_text(read_file(path)); }

TrialityGroup load_triality_group(const std::filesystem::path& path) {
  return TrialityGroup::from_json(load_json(path));
}

LieWithTriality load_lie(const std::filesystem::path& path) {
  return LieWithTriality::from_json(load_json(path));
}

AlgebraSC load_sc(const std::filesystem::path& path) { return AlgebraSC::from_json(load_json(path)); }

std::filesystem::path corpus_dir() {
  if (const char* env = std::getenv("TRIALITY_CORPUS")) return env;
  return "corpus";
}

}  // namespace triality
