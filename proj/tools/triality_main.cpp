#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "triality/conv.hpp"
#include "triality/corpus.hpp"
#include "triality/envelope.hpp"
#include "triality/hopf.hpp"
#include "triality/loop_gen.hpp"
#include "triality/suite.hpp"

namespace {

using namespace triality;

std::filesystem::path resolve_input(const std::filesystem::path& p) {
  if (std::filesystem::exists(p)) return p;
  std::filesystem::path alt = corpus_dir() / p;
  if (std::filesystem::exists(alt)) return alt;
  return p;
}

int emit(const Report& r, bool json) {
  if (json) {
    std::cout << r.to_json().dump(2) << "\n";
  } else {
    std::printf("%s: %s (%.2fs)\n", r.check.c_str(), r.status.c_str(), r.seconds);
    for (const auto& id : r.identities)
      if (!id.value("pass", true))
        std::printf("  FAIL %s  %s\n", id.value("name", "?").c_str(),
                    id.value("witness", nlohmann::json{}).dump().c_str());
    if (!r.counts.empty()) std::printf("  counts: %s\n", r.counts.dump().c_str());
  }
  return r.pass() ? 0 : 1;
}

void write_or_print(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw CheckError("io", {{"path", out}});
  f << text;
}

struct Cli {
  bool json = false;
  std::uint64_t seed = 0;
  int degree = -1;
  int samples = -1;
  int points = -1;
  int max_order = -1;
  std::function<int()> action;

  nlohmann::json flags(nlohmann::json extra = nlohmann::json::object()) const {
    nlohmann::json f = std::move(extra);
    f["seed"] = seed;
    if (degree >= 0) f["degree"] = degree;
    if (samples >= 0) f["samples"] = samples;
    if (points >= 0 && !f.contains("points")) f["points"] = points;
    if (max_order >= 0) f["max-order"] = max_order;
    return f;
  }

  void check(CLI::App* cmd, const char* name, const std::shared_ptr<std::string>& file,
             nlohmann::json extra = nlohmann::json::object()) {
    cmd->callback([this, name, file, extra] {
      action = [this, name, file, extra] {
        return emit(run_check(name, resolve_input(*file), flags(extra)), json);
      };
    });
  }
};

Report describe(const std::filesystem::path& path) {
  Report r;
  r.check = "describe";
  r.input = path.string();
  std::string text = read_file(path);
  r.digest = fnv1a_hex(text);

  auto applies = [&](const char* type, nlohmann::json counts, std::vector<const char*> checks) {
    r.counts = std::move(counts);
    r.counts["type"] = type;
    r.counts["applies"] = checks;
  };
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && std::isdigit(static_cast<unsigned char>(text[first]))) {
    FiniteLoop q = parse_loop_text(text);
    bool moufang = check_moufang(q).pass();
    applies("loop", {{"order", q.order()}, {"moufang", moufang},
                     {"associative", !q.associativity_witness().has_value()}},
            {"moufang", "doro", "multalg", "atp", "psaut", "psi", "doro-atp", "conv-loop",
             "conv-triality"});
    return r;
  }
  nlohmann::json j = load_json(path);
  if (j.contains("table") && j.contains("rho")) {
    TrialityGroup tg = load_triality_group(path);
    applies("triality-group", {{"order", tg.g.order()}},
            {"triality", "mloop", "center", "embed", "hopf", "mh", "doro-target"});
  } else if (j.contains("bracket") && j.contains("rho")) {
    LieWithTriality lt = load_lie(path);
    applies("lie-with-triality", {{"dim", lt.bracket.dim}},
            {"lie-triality", "ug-triality", "pspan", "env-action"});
  } else if (j.contains("bracket")) {
    AlgebraSC sc = load_sc(path);
    if (sc.is_anticommutative())
      applies("structure-constants", {{"dim", sc.dim}}, {"malcev"});
    else
      applies("algebra", {{"dim", sc.dim}}, {"cayley", "octonion", "malcev-lie"});
  } else if (j.contains("checks")) {
    applies("manifest", {{"total", j["checks"].size()}}, {"run_suite"});
  } else {
    throw CheckError("format", {{"path", path.string()}, {"error", "unrecognized key set"}});
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for Moufang loops, groups with triality and their Hopf envelopes"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();

  Cli cli;
  app.add_flag("--json", cli.json, "machine-readable report on stdout");
  app.add_option("--seed", cli.seed, "seed for sampled checks");
  app.add_option("--degree", cli.degree, "slice degree for envelope checks");
  app.add_option("--samples", cli.samples, "sample count for sampled checks");
  app.add_option("--max-order", cli.max_order, "size cap for enumerations");

  auto add_check = [&cli](CLI::App* parent, const char* sub, const char* desc, const char* check,
                          const char* argdesc) {
    CLI::App* cmd = parent->add_subcommand(sub, desc);
    auto file = std::make_shared<std::string>();
    cmd->add_option("file", *file, argdesc)->required();
    cli.check(cmd, check, file);
  };

  // loop
  auto* loop = app.add_subcommand("loop", "finite loop checks and generators");
  loop->require_subcommand(1);
  add_check(loop, "check", "Moufang identities", "moufang", "loop table");
  add_check(loop, "doro", "operator relation families", "doro", "loop table");
  {
    auto* gen = loop->add_subcommand("gen", "emit bundled loop tables");
    gen->require_subcommand(1);
    auto* chein = gen->add_subcommand("chein", "Chein double of a group");
    auto gfile = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    chein->add_option("--group", *gfile, "group table")->required();
    chein->add_option("-o,--out", *out, "output file (default stdout)");
    chein->callback([&cli, gfile, out] {
      cli.action = [gfile, out] {
        FiniteGroup g = FiniteGroup::from_loop(load_loop(resolve_input(*gfile)));
        write_or_print(loop_to_text(chein_loop(g)), *out);
        return 0;
      };
    });
    auto* o16 = gen->add_subcommand("o16", "octonion unit loop");
    auto out2 = std::make_shared<std::string>();
    o16->add_option("-o,--out", *out2, "output file (default stdout)");
    o16->callback([&cli, out2] {
      cli.action = [out2] {
        write_or_print(loop_to_text(octonion_unit_loop()), *out2);
        return 0;
      };
    });
  }

  // group
  auto* group = app.add_subcommand("group", "groups with triality");
  group->require_subcommand(1);
  add_check(group, "check", "triality identity", "triality", "triality-group JSON");
  add_check(group, "mloop", "Moufang loop on the anti-fixed elements", "mloop",
            "triality-group JSON");
  add_check(group, "center", "S3-fixed center", "center", "triality-group JSON");
  add_check(group, "embed", "embedding into Atp(M(G))", "embed", "triality-group JSON");

  // atp
  auto* atp = app.add_subcommand("atp", "autotopy groups");
  atp->require_subcommand(1);
  add_check(atp, "compute", "enumerate Atp(Q) and run the triality suite", "atp", "loop table");
  add_check(atp, "mloop", "M(Atp(Q)) and its isomorphism onto Q", "atp-mloop", "loop table");
  add_check(atp, "psi", "wreath model W(Q) and psi", "psi", "loop table");
  add_check(atp, "psaut", "pseudoautomorphism group", "psaut", "loop table");

  // cayley
  auto* cayley = app.add_subcommand("cayley", "Cayley algebras");
  cayley->require_subcommand(1);
  {
    auto* build = cayley->add_subcommand("build", "structure constants for parameters a,b,c");
    auto params = std::make_shared<std::string>("-1,-1,-1");
    auto out = std::make_shared<std::string>();
    build->add_option("--params", *params, "three nonzero rationals, comma separated");
    build->add_option("-o,--out", *out, "output file (default stdout)");
    build->callback([&cli, params, out] {
      cli.action = [&cli, params, out] {
        nlohmann::json f = cli.flags({{"params", *params}});
        std::string p = *params;
        std::replace(p.begin(), p.end(), ',', ' ');
        std::istringstream ss(p);
        std::string a, b, c;
        if (!(ss >> a >> b >> c)) throw CheckError("bad-params", {{"params", *params}});
        write_or_print(build_cayley(Rat(a), Rat(b), Rat(c)).alg.to_json().dump(2) + "\n", *out);
        return 0;
      };
    });
  }

  // lie / malcev
  auto* lie = app.add_subcommand("lie", "Lie algebras with triality");
  lie->require_subcommand(1);
  add_check(lie, "triality-check", "alternating-sum identity and eigenspace lemma", "lie-triality",
            "Lie JSON");

  auto* malcev = app.add_subcommand("malcev", "Malcev algebras");
  malcev->require_subcommand(1);
  add_check(malcev, "check", "Malcev identity", "malcev", "structure-constants JSON");
  {
    auto* liefy = malcev->add_subcommand("liefy", "operator Lie algebra of O₀ with triality");
    auto params = std::make_shared<std::string>("-1,-1,-1");
    auto out = std::make_shared<std::string>();
    liefy->add_option("--params", *params, "Cayley parameters");
    liefy->add_option("-o,--out", *out, "output file (default stdout)");
    liefy->callback([&cli, params, out] {
      cli.action = [params, out] {
        std::string p = *params;
        std::replace(p.begin(), p.end(), ',', ' ');
        std::istringstream ss(p);
        std::string a, b, c;
        if (!(ss >> a >> b >> c)) throw CheckError("bad-params", {{"params", *params}});
        LieOfMalcev lm = lie_of_malcev(build_cayley(Rat(a), Rat(b), Rat(c)));
        write_or_print(lm.lie.to_json().dump(2) + "\n", *out);
        return 0;
      };
    });
  }

  // hopf
  auto* hopf = app.add_subcommand("hopf", "Hopf algebras with triality");
  hopf->require_subcommand(1);
  add_check(hopf, "check", "triality identity on the group algebra", "hopf",
            "triality-group JSON");
  add_check(hopf, "mh", "Moufang-Hopf subalgebra MH(F[G])", "mh", "triality-group JSON");
  add_check(hopf, "multalg", "multiplication-operator identities on F[Q]", "multalg",
            "loop table");
  {
    auto* dv = hopf->add_subcommand("doro-verify", "universal relations in a Hopf target");
    auto lfile = std::make_shared<std::string>();
    auto gfile = std::make_shared<std::string>();
    dv->add_option("loop", *lfile, "loop table")->required();
    dv->add_option("group", *gfile, "triality-group JSON")->required();
    dv->callback([&cli, lfile, gfile] {
      cli.action = [&cli, lfile, gfile] {
        return emit(run_check("doro-verify", resolve_input(*lfile),
                              cli.flags({{"target", resolve_input(*gfile).string()}})),
                    cli.json);
      };
    });
  }

  // env
  auto* env = app.add_subcommand("env", "universal envelope slices");
  env->require_subcommand(1);
  add_check(env, "triality-check", "Hopf triality identity on PBW monomials", "ug-triality",
            "Lie JSON");
  add_check(env, "action-check", "adjoint-action form of the identity", "env-action", "Lie JSON");
  {
    auto* mh = env->add_subcommand("mh", "Moufang-Hopf slice of U(Lie(m))");
    auto label = std::make_shared<std::string>("o0");
    mh->add_option("--malcev", *label, "Malcev input label (o0)");
    mh->callback([&cli, label] {
      cli.action = [&cli, label] {
        return emit(run_check("env-mh", *label, cli.flags()), cli.json);
      };
    });
  }

  // conv
  auto* conv = app.add_subcommand("conv", "coalgebra-morphism convolution");
  conv->require_subcommand(1);
  {
    auto* cl = conv->add_subcommand("loop", "Mor(C,FQ) as a Moufang loop");
    auto lfile = std::make_shared<std::string>();
    cl->add_option("--loop", *lfile, "loop table")->required();
    cl->add_option("--points", cli.points, "coalgebra point count");
    cl->callback([&cli, lfile] {
      cli.action = [&cli, lfile] {
        return emit(run_check("conv-loop", resolve_input(*lfile), cli.flags()), cli.json);
      };
    });
    auto* ct = conv->add_subcommand("triality", "Atp_C membership and triality equalities");
    auto tfile = std::make_shared<std::string>();
    ct->add_option("--loop", *tfile, "loop table")->required();
    ct->add_option("--points", cli.points, "coalgebra point count");
    ct->callback([&cli, tfile] {
      cli.action = [&cli, tfile] {
        return emit(run_check("conv-triality", resolve_input(*tfile), cli.flags()), cli.json);
      };
    });
  }

  // suite / corpus / describe
  {
    auto* rs = app.add_subcommand("run_suite", "execute a check manifest");
    auto mfile = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>("reports");
    rs->add_option("manifest", *mfile, "manifest JSON")->required();
    rs->add_option("-o,--out", *out, "report directory");
    rs->callback([&cli, mfile, out] {
      cli.action = [&cli, mfile, out] {
        SuiteResult sr = run_suite(resolve_input(*mfile), *out);
        if (cli.json) {
          std::cout << sr.summary.dump(2) << "\n";
        } else {
          for (const auto& e : sr.summary["entries"])
            std::printf("%-14s %-24s %s%s\n", e["check"].get<std::string>().c_str(),
                        e["input"].get<std::string>().c_str(),
                        e["status"].get<std::string>().c_str(),
                        e["matched"].get<bool>() ? "" : "  [unexpected]");
          std::printf("suite: %s (%d checks)\n", sr.ok ? "ok" : "FAILED",
                      sr.summary["total"].get<int>());
        }
        return sr.ok ? 0 : 1;
      };
    });

    auto* gc = app.add_subcommand("gen_corpus", "write the bundled corpus");
    auto dir = std::make_shared<std::string>();
    gc->add_option("outdir", *dir, "output directory")->required();
    gc->callback([&cli, dir] {
      cli.action = [dir] {
        write_corpus(*dir);
        std::printf("wrote %zu files to %s\n", corpus_files().size(), dir->c_str());
        return 0;
      };
    });

    auto* ds = app.add_subcommand("describe", "identify a corpus file");
    auto dfile = std::make_shared<std::string>();
    ds->add_option("file", *dfile, "input file")->required();
    ds->callback([&cli, dfile] {
      cli.action = [&cli, dfile] { return emit(describe(resolve_input(*dfile)), cli.json); };
    });
  }

  try {
    app.parse(argc, argv);
    return cli.action ? cli.action() : 2;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const CheckError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
