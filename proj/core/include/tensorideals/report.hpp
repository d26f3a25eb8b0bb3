#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tensorideals/groebner.hpp"
#include "tensorideals/scalar.hpp"

namespace tid {

enum class VerifyMode { LinearAlgebra, Groebner };

struct VerifyOptions {
  Field field = Field::rationals();
  GroebnerBudget budget;
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "inconclusive"
  nlohmann::ordered_json lhs;
  nlohmann::ordered_json rhs;
  std::string note;
};

// One verification run. JSON rendering is byte-stable for a fixed
// configuration; the text form is a plain rendering of the same object.
struct VerificationReport {
  std::string theorem;
  nlohmann::ordered_json profile;
  std::vector<CheckResult> checks;
  std::string field;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> reseed_trail;  // seeds rejected by genericity checks

  void add_pass_fail(const std::string& name, bool ok, nlohmann::ordered_json lhs = {},
                     nlohmann::ordered_json rhs = {}, const std::string& note = "");
  void add_inconclusive(const std::string& name, const std::string& note);

  // "pass" when every check passes, "fail" when any check fails,
  // "inconclusive" otherwise.
  std::string overall() const;
  int exit_code() const;  // 0 pass, 1 fail, 2 inconclusive

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

// Runs the verification at the requested field. A failing prime-field run is
// retried automatically with fallback primes before reporting; the retried
// report carries a note naming the discarded primes.
VerificationReport run_with_prime_retry(const Field& field,
                                        const std::function<VerificationReport(Field)>& run);

}  // namespace tid
