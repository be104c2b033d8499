#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace wfs {

enum class Verdict { Pass, Fail, Inconclusive };

const char* verdict_name(Verdict v);

// Structured pass/fail result carrying explicit witnesses. Suites aggregate
// sub-reports; Fail dominates Inconclusive dominates Pass.
struct Report {
  Verdict verdict = Verdict::Pass;
  std::string check_name;
  nlohmann::json witness;  // lift, factorization, counterexample square, ...
  std::vector<std::string> notes;
  std::vector<Report> subreports;

  static Report pass(std::string name);
  static Report fail(std::string name, nlohmann::json witness);
  static Report inconclusive(std::string name, nlohmann::json witness);

  bool passed() const { return verdict == Verdict::Pass; }
  bool failed() const { return verdict == Verdict::Fail; }

  void note(std::string n) { notes.push_back(std::move(n)); }
  // Append a sub-report and escalate this verdict accordingly.
  void absorb(Report sub);

  nlohmann::json to_json() const;
  std::string to_text(int indent = 0) const;
};

int exit_code_for(Verdict v);

}  // namespace wfs
