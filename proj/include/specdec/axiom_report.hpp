#pragma once

#include <string>
#include <utility>
#include <vector>

#include "specdec/group.hpp"

namespace specdec {

enum class CheckStatus { kPass, kFail, kSkipped };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

// Outcome of one axiom or identity check. On failure `witness` holds the
// named sets that make up the counterexample, e.g. {"I", ...}, {"J", ...}.
struct AxiomReport {
  std::string tag;
  CheckStatus status = CheckStatus::kPass;
  std::vector<std::pair<std::string, std::vector<Element>>> witness;
  std::string detail;

  bool passed() const { return status != CheckStatus::kFail; }
};

}  // namespace specdec
