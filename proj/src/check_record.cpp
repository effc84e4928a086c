#include "uniformize/check_record.hpp"

#include "uniformize/error.hpp"

namespace uniformize {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kSkipped: return "SKIPPED";
    case CheckStatus::kInfo: return "INFO";
  }
  return "?";
}

double CheckRecord::value(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw Error("check '" + name + "' has no value '" + key + "'");
  return it->second;
}

}  // namespace uniformize
