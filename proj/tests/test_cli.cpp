#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
  int rc = -1;
  std::string out;
};

struct CliEnv {
  std::string bin;
  fs::path work, corpus;
  bool ok = false;

  RunResult run(const std::string& args) const {
    fs::path log = work / "run.log";
    std::string cmd = "\"" + bin + "\" " + args + " > \"" + log.string() + "\" 2>&1";
    int st = std::system(cmd.c_str());
    RunResult r;
    r.rc = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
  }

  std::string file(const std::string& name) const { return (corpus / name).string(); }

  CliEnv() {
    const char* b = std::getenv("TRIALITY_BIN");
    if (!b) return;
    bin = b;
    work = fs::temp_directory_path() / ("triality-cli-" + std::to_string(::getpid()));
    fs::remove_all(work);
    fs::create_directories(work);
    corpus = work / "corpus";
    ok = run("gen_corpus \"" + corpus.string() + "\"").rc == 0;
  }
};

const CliEnv& env() {
  static CliEnv e;
  return e;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// the required-key/type contract of schema/report.schema.json
void check_report_shape(const json& r) {
  REQUIRE(r.is_object());
  const char* strings[] = {"check", "status", "version", "input", "digest"};
  for (const char* k : strings) {
    REQUIRE(r.contains(k));
    CHECK(r[k].is_string());
  }
  REQUIRE(r.contains("status"));
  std::string st = r["status"];
  CHECK((st == "pass" || st == "fail" || st == "error"));
  REQUIRE(r.contains("counts"));
  CHECK(r["counts"].is_object());
  REQUIRE(r.contains("identities"));
  CHECK(r["identities"].is_array());
  for (const auto& id : r["identities"]) {
    CHECK(id.contains("name"));
    CHECK(id.contains("pass"));
  }
  REQUIRE(r.contains("seconds"));
  CHECK(r["seconds"].is_number());
  REQUIRE(r.contains("seed"));
  CHECK(r["seed"].is_number_integer());
  REQUIRE(r.contains("witness"));
  std::string dg = r["digest"];
  REQUIRE(dg.size() == 16);
  for (char c : dg) CHECK(((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f')));
  CHECK(r.size() == 10);  // additionalProperties: false
  if (st == "fail") CHECK(!r["witness"].is_null());
}

}  // namespace

TEST_CASE("corpus generation is byte-stable") {
  REQUIRE(env().ok);
  fs::path again = env().work / "corpus2";
  REQUIRE(env().run("gen_corpus \"" + again.string() + "\"").rc == 0);
  int files = 0;
  for (const auto& e : fs::directory_iterator(env().corpus)) {
    ++files;
    CHECK(slurp(e.path()) == slurp(again / e.path().filename()));
  }
  CHECK(files == 19);
}

TEST_CASE("pass and fail exit codes on loop checks") {
  REQUIRE(env().ok);
  CHECK(env().run("loop check " + env().file("chein12.loop.txt")).rc == 0);
  CHECK(env().run("loop doro " + env().file("o16.loop.txt")).rc == 0);
  RunResult bad = env().run("loop check " + env().file("nonmoufang5.loop.txt"));
  CHECK(bad.rc == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("machine-readable reports match the schema contract") {
  REQUIRE(env().ok);
  RunResult ok = env().run("--json loop check " + env().file("chein12.loop.txt"));
  REQUIRE(ok.rc == 0);
  json r = json::parse(ok.out);
  check_report_shape(r);
  CHECK(r["check"] == "moufang");
  CHECK(r["status"] == "pass");
  CHECK(r["witness"].is_null());

  RunResult fail = env().run("--json group check " + env().file("c4-inversion.tg.json"));
  REQUIRE(fail.rc == 1);
  json f = json::parse(fail.out);
  check_report_shape(f);
  CHECK(f["status"] == "fail");
  CHECK(f["witness"]["order"] == 4);
}

TEST_CASE("the seed flag is echoed into the report") {
  REQUIRE(env().ok);
  RunResult r = env().run("--json --seed 9 --samples 16 conv triality --loop " +
                          env().file("c4.loop.txt") + " --points 2");
  REQUIRE(r.rc == 0);
  json j = json::parse(r.out);
  CHECK(j["seed"] == 9);
  CHECK(j["counts"]["points"] == 2);
}

TEST_CASE("describe identifies every corpus format") {
  REQUIRE(env().ok);
  struct Case {
    const char* file;
    const char* needle;
  } cases[] = {
      {"chein12.loop.txt", "loop"},
      {"wreath-s3.tg.json", "triality-group"},
      {"oon.lie.json", "lie-with-triality"},
      {"cayley-111.sc.json", "algebra"},
      {"manifest.json", "manifest"},
  };
  for (const auto& c : cases) {
    RunResult r = env().run("--json describe " + env().file(c.file));
    REQUIRE(r.rc == 0);
    json j = json::parse(r.out);
    CHECK(j["counts"]["type"] == c.needle);
    CHECK(!j["counts"]["applies"].empty());
  }
}

TEST_CASE("usage, missing files and parse errors exit with code 2") {
  REQUIRE(env().ok);
  CHECK(env().run("").rc == 2);
  CHECK(env().run("loop check /nonexistent/file.txt").rc == 2);
  CHECK(env().run("frobnicate x").rc == 2);

  fs::path garbage = env().work / "garbage.tg.json";
  std::ofstream(garbage) << "{ not json";
  RunResult r = env().run("group check \"" + garbage.string() + "\"");
  CHECK(r.rc == 2);
  CHECK(r.out.find("line") != std::string::npos);

  fs::path shortloop = env().work / "short.loop.txt";
  std::ofstream(shortloop) << "3\n1 2 3\n2 3 1\n";
  CHECK(env().run("loop check \"" + shortloop.string() + "\"").rc == 2);
}

TEST_CASE("generators write loadable tables") {
  REQUIRE(env().ok);
  fs::path out = env().work / "gen-o16.txt";
  REQUIRE(env().run("loop gen o16 -o \"" + out.string() + "\"").rc == 0);
  CHECK(slurp(out) == slurp(env().corpus / "o16.loop.txt"));
  CHECK(env().run("loop check \"" + out.string() + "\"").rc == 0);

  fs::path cay = env().work / "cayley.sc.json";
  REQUIRE(env().run("cayley build -o \"" + cay.string() + "\"").rc == 0);
  CHECK(slurp(cay) == slurp(env().corpus / "cayley-111.sc.json"));
  fs::path split = env().work / "split.sc.json";
  REQUIRE(env().run("cayley build --params 1,2,3 -o \"" + split.string() + "\"").rc == 0);
  RunResult d = env().run("--json describe \"" + split.string() + "\"");
  REQUIRE(d.rc == 0);
  CHECK(json::parse(d.out)["counts"]["dim"] == 8);
}

TEST_CASE("suite runner: expected failures count as matches") {
  REQUIRE(env().ok);
  fs::path out = env().work / "reports-broken";
  RunResult r = env().run("run_suite " + env().file("broken.manifest.json") + " -o \"" +
                          out.string() + "\" --json");
  REQUIRE(r.rc == 0);
  json s = json::parse(r.out);
  CHECK(s["total"] == 1);
  CHECK(s["entries"][0]["status"] == "fail");
  CHECK(s["entries"][0]["matched"] == true);
  json rep = json::parse(slurp(out / s["entries"][0]["report"].get<std::string>()));
  check_report_shape(rep);
  CHECK(rep["status"] == "fail");
  CHECK(json::parse(slurp(out / "summary.json")) == s);
}

TEST_CASE("suite runner: unexpected outcomes fail the run") {
  REQUIRE(env().ok);
  fs::path bad = env().work / "bad.manifest.json";
  std::ofstream(bad) << R"({"checks":[{"check":"nope","input":"c2.loop.txt"}]})";
  fs::path out = env().work / "reports-bad";
  RunResult r = env().run("run_suite \"" + bad.string() + "\" -o \"" + out.string() + "\" --json");
  CHECK(r.rc == 1);
  json s = json::parse(r.out);
  CHECK(s["entries"][0]["status"] == "error");
  CHECK(s["entries"][0]["matched"] == false);
}

TEST_CASE("the bundled manifest passes end to end") {
  REQUIRE(env().ok);
  fs::path out = env().work / "reports-bundled";
  RunResult r = env().run("run_suite " + env().file("manifest.json") + " -o \"" + out.string() +
                          "\" --json");
  REQUIRE(r.rc == 0);
  json s = json::parse(r.out);
  CHECK(s["total"].get<int>() >= 40);
  for (const auto& e : s["entries"]) {
    CHECK(e["matched"] == true);
    json rep = json::parse(slurp(out / e["report"].get<std::string>()));
    check_report_shape(rep);
  }
}
