#include "tensorideals/report.hpp"

namespace tid {

void VerificationReport::add_pass_fail(const std::string& name, bool ok,
                                       nlohmann::ordered_json lhs, nlohmann::ordered_json rhs,
                                       const std::string& note) {
  checks.push_back({name, ok ? "pass" : "fail", std::move(lhs), std::move(rhs), note});
}

void VerificationReport::add_inconclusive(const std::string& name, const std::string& note) {
  checks.push_back({name, "inconclusive", {}, {}, note});
}

std::string VerificationReport::overall() const {
  bool inconclusive = false;
  for (const auto& c : checks) {
    if (c.status == "fail") return "fail";
    if (c.status == "inconclusive") inconclusive = true;
  }
  return inconclusive ? "inconclusive" : "pass";
}

int VerificationReport::exit_code() const {
  const std::string o = overall();
  if (o == "pass") return 0;
  if (o == "fail") return 1;
  return 2;
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["theorem"] = theorem;
  j["profile"] = profile;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = c.status;
    if (!c.lhs.is_null()) cj["lhs"] = c.lhs;
    if (!c.rhs.is_null()) cj["rhs"] = c.rhs;
    if (!c.note.empty()) cj["note"] = c.note;
    arr.push_back(std::move(cj));
  }
  j["checks"] = std::move(arr);
  j["overall"] = overall();
  j["field"] = field;
  j["seed"] = seed;
  if (!reseed_trail.empty()) j["reseed_trail"] = reseed_trail;
  return j;
}

std::string VerificationReport::to_text() const {
  std::string out = "theorem: " + theorem + "\n";
  out += "profile: " + profile.dump() + "\n";
  out += "field: " + field + "  seed: " + std::to_string(seed) + "\n";
  if (!reseed_trail.empty()) {
    out += "reseeds:";
    for (auto s : reseed_trail) out += " " + std::to_string(s);
    out += "\n";
  }
  for (const auto& c : checks) {
    out += "  [" + c.status + "] " + c.name;
    if (!c.lhs.is_null() || !c.rhs.is_null()) {
      out += "  (lhs=" + c.lhs.dump() + " rhs=" + c.rhs.dump() + ")";
    }
    if (!c.note.empty()) out += "  -- " + c.note;
    out += "\n";
  }
  out += "overall: " + overall() + "\n";
  return out;
}

VerificationReport run_with_prime_retry(const Field& field,
                                        const std::function<VerificationReport(Field)>& run) {
  VerificationReport rep = run(field);
  if (field.is_rationals() || rep.overall() != "fail") return rep;
  std::string discarded = std::to_string(field.modulus());
  for (std::uint64_t p : Field::kFallbackPrimes) {
    if (p == field.modulus()) continue;
    VerificationReport retry = run(Field::prime(p));
    retry.checks.push_back({"prime-retry", retry.overall() == "fail" ? "fail" : "pass",
                            nlohmann::ordered_json(discarded), nlohmann::ordered_json(p),
                            "re-run after failure mod " + discarded});
    return retry;
  }
  return rep;
}

}  // namespace tid
