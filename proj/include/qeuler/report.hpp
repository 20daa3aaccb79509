#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qeuler {

enum class IdentityId { Thm21, Thm22, Thm24, Prop23, Eq13, Eq17, Eq5, Limit };
enum class CheckMode { Symbolic, Numeric };

inline const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::Thm21: return "thm21";
    case IdentityId::Thm22: return "thm22";
    case IdentityId::Thm24: return "thm24";
    case IdentityId::Prop23: return "prop23";
    case IdentityId::Eq13: return "eq13";
    case IdentityId::Eq17: return "eq17";
    case IdentityId::Eq5: return "eq5";
    case IdentityId::Limit: return "limit";
  }
  return "?";
}

/// First failing term of a symbolic difference.
struct Witness {
  int e_x = 0;
  int e_y = 0;
  std::string coefficient;
};

/// Outcome of one identity check. Symbolic mode: passed iff the difference
/// Laurent polynomial is structurally zero. Numeric mode: passed iff
/// |deviation| <= the certified bound recorded in params.
struct VerificationReport {
  IdentityId id = IdentityId::Thm22;
  CheckMode mode = CheckMode::Symbolic;
  bool passed = false;
  std::string deviation;  // "exact-zero", "nonzero", or a decimal magnitude
  std::vector<std::pair<std::string, std::string>> params;
  std::optional<Witness> witness;

  void param(std::string key, std::string value) {
    params.emplace_back(std::move(key), std::move(value));
  }
};

inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = identity_name(r.id);
  j["mode"] = r.mode == CheckMode::Symbolic ? "symbolic" : "numeric";
  j["passed"] = r.passed;
  j["deviation"] = r.deviation;
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) p[k] = v;
  j["params"] = p;
  if (r.witness) {
    nlohmann::ordered_json w;
    w["e_x"] = r.witness->e_x;
    w["e_y"] = r.witness->e_y;
    w["coefficient"] = r.witness->coefficient;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

}  // namespace qeuler
