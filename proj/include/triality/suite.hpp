#pragma once
#include <filesystem>
#include <vector>

#include "triality/report.hpp"

namespace triality {

// Runs one named check against an input path (or generator label such as
// "o0"), honoring the flags degree/samples/seed/points/params/expect-order.
// Throws CheckError for unknown check names or unreadable inputs.
Report run_check(const std::string& check, const std::filesystem::path& input,
                 const nlohmann::json& flags);

struct SuiteResult {
  std::vector<Report> reports;
  nlohmann::json summary;
  bool ok = false;  // every entry matched its expected status
};

// Manifest: {"checks": [{"check": .., "input": .., "expect": "pass"|"fail",
// ...flags}]}. Inputs resolve relative to the manifest directory. One report
// file per entry is written to outdir; summary order follows the manifest.
SuiteResult run_suite(const std::filesystem::path& manifest, const std::filesystem::path& outdir);

}  // namespace triality
