#pragma once
#include "json.hpp"
#include <stdexcept>
#include <string>

namespace triality {

// validation failure with a machine-readable kind + detail payload
class CheckError : public std::runtime_error {
 public:
  CheckError(std::string kind_, nlohmann::json detail_)
      : std::runtime_error(kind_ + ": " + detail_.dump()), kind(std::move(kind_)), detail(std::move(detail_)) {}
  const std::string kind;
  const nlohmann::json detail;
};

}  // namespace triality
