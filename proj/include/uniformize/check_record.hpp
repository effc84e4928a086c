#pragma once

#include <map>
#include <string>
#include <vector>

#include "uniformize/graph.hpp"

namespace uniformize {

enum class CheckStatus { kPass, kFail, kSkipped, kInfo };

const char* to_string(CheckStatus status);

/// Outcome of one empirical check: status, measured constants and the
/// witnesses that attain them.
struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  bool vacuous = false;
  std::string note;
  std::map<std::string, double> values;
  std::map<std::string, std::vector<NodeId>> witnesses;

  bool passed() const { return status == CheckStatus::kPass || status == CheckStatus::kInfo; }
  double value(const std::string& key) const;
  void require(bool ok) {
    if (!ok && status != CheckStatus::kSkipped) status = CheckStatus::kFail;
  }
};

/// Tracks the smallest slack seen and where it occurred.
struct MinSlack {
  double slack = 0.0;
  std::vector<NodeId> witness;
  bool seen = false;

  void update(double value, std::vector<NodeId> where) {
    if (!seen || value < slack) {
      slack = value;
      witness = std::move(where);
      seen = true;
    }
  }
};

/// Tracks the largest ratio seen and where it occurred.
struct MaxRatio {
  double value = 0.0;
  std::vector<NodeId> witness;
  bool seen = false;

  void update(double v, std::vector<NodeId> where) {
    if (!seen || v > value) {
      value = v;
      witness = std::move(where);
      seen = true;
    }
  }
};

}  // namespace uniformize
