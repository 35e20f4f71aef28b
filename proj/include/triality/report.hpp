#pragma once
#include <string>

#include "triality/loop.hpp"

namespace triality {

inline constexpr const char* kToolVersion = "1.0.0";

// Uniform verification record. Every check the tool runs is condensed into one
// of these; the JSON layout is published in schema/report.schema.json.
struct Report {
  std::string check;
  std::string status = "pass";  // pass | fail | error
  nlohmann::json witness;       // check-specific payload, non-null unless passing
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json identities = nlohmann::json::array();  // per-identity breakdown
  double seconds = 0;
  std::uint64_t seed = 0;
  std::string input;   // file path or generator label
  std::string digest;  // fnv1a-64 of the input bytes, hex

  bool pass() const { return status == "pass"; }
  nlohmann::json to_json() const;

  // folds a per-identity report: status from the conjunction, witness from the
  // first failing identity
  static Report from_loop_report(const LoopReport& r);
};

std::string fnv1a_hex(const std::string& bytes);

}  // namespace triality
