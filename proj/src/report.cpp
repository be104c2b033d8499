#include "wfs/report.hpp"

#include <sstream>

namespace wfs {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Report Report::pass(std::string name) {
  Report r;
  r.verdict = Verdict::Pass;
  r.check_name = std::move(name);
  return r;
}

Report Report::fail(std::string name, nlohmann::json witness) {
  Report r;
  r.verdict = Verdict::Fail;
  r.check_name = std::move(name);
  r.witness = std::move(witness);
  return r;
}

Report Report::inconclusive(std::string name, nlohmann::json witness) {
  Report r;
  r.verdict = Verdict::Inconclusive;
  r.check_name = std::move(name);
  r.witness = std::move(witness);
  return r;
}

void Report::absorb(Report sub) {
  if (sub.verdict == Verdict::Fail) {
    verdict = Verdict::Fail;
  } else if (sub.verdict == Verdict::Inconclusive && verdict != Verdict::Fail) {
    verdict = Verdict::Inconclusive;
  }
  subreports.push_back(std::move(sub));
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["check"] = check_name;
  j["verdict"] = verdict_name(verdict);
  if (!witness.is_null()) j["witness"] = witness;
  if (!notes.empty()) j["notes"] = notes;
  if (!subreports.empty()) {
    nlohmann::json subs = nlohmann::json::array();
    for (const auto& s : subreports) subs.push_back(s.to_json());
    j["subreports"] = subs;
  }
  return j;
}

std::string Report::to_text(int indent) const {
  std::ostringstream os;
  std::string pad(indent, ' ');
  os << pad << "[" << verdict_name(verdict) << "] " << check_name << "\n";
  for (const auto& n : notes) os << pad << "  note: " << n << "\n";
  if (!witness.is_null()) os << pad << "  witness: " << witness.dump() << "\n";
  for (const auto& s : subreports) os << s.to_text(indent + 2);
  return os.str();
}

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return 3;
}

}  // namespace wfs
