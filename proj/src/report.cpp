#include "triality/report.hpp"

#include <cstdio>

namespace triality {

nlohmann::json Report::to_json() const {
  return {{"check", check},   {"status", status},     {"witness", witness},
          {"counts", counts}, {"identities", identities}, {"seconds", seconds},
          {"seed", seed},     {"version", kToolVersion},  {"input", input},
          {"digest", digest}};
}

Report Report::from_loop_report(const LoopReport& r) {
  Report rep;
  rep.check = r.check;
  rep.counts = r.counts;
  for (const auto& id : r.identities) {
    rep.identities.push_back({{"name", id.name}, {"pass", id.pass}, {"witness", id.witness}});
    if (!id.pass && rep.status == "pass") {
      rep.status = "fail";
      rep.witness = {{"identity", id.name}, {"at", id.witness}};
    }
  }
  return rep;
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace triality
