#include "dupont/report.hpp"

#include <algorithm>
#include <sstream>

namespace dupont {

void Report::merge(const Report& other, const std::string& prefix) {
  for (Check c : other.checks) {
    c.name = prefix + c.name;
    checks.push_back(std::move(c));
  }
}

bool Report::theorems_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.kind != CheckKind::Theorem || c.passed; });
}

bool Report::claims_failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.kind == CheckKind::Claim && !c.passed; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::vector<const Check*> sorted_checks(const Report& r) {
  std::vector<const Check*> out;
  for (const auto& c : r.checks) out.push_back(&c);
  std::stable_sort(out.begin(), out.end(), [](const Check* a, const Check* b) { return a->name < b->name; });
  return out;
}

}  // namespace

nlohmann::json to_json(const Report& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["params"] = r.params;
  j["checks"] = nlohmann::json::array();
  for (const Check* c : sorted_checks(r)) {
    nlohmann::json e;
    e["name"] = c->name;
    e["kind"] = c->kind == CheckKind::Theorem ? "theorem" : "claim";
    e["status"] = c->passed ? "pass" : "fail";
    e["cases"] = c->cases;
    if (c->counterexample)
      e["counterexample"] = {{"input", c->counterexample->input},
                             {"lhs", c->counterexample->lhs},
                             {"rhs", c->counterexample->rhs}};
    if (!c->note.empty()) e["note"] = c->note;
    j["checks"].push_back(std::move(e));
  }
  j["theorems_passed"] = r.theorems_passed();
  j["claims_failed"] = r.claims_failed();
  if (r.elapsed_ms) {
    j["elapsed_ms"] = *r.elapsed_ms;
  } else {
    j["elapsed_ms"] = nullptr;
  }
  return j;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "suite " << r.suite << " " << r.params.dump() << "\n";
  for (const Check* c : sorted_checks(r)) {
    out << (c->passed ? "  pass " : "  FAIL ") << (c->kind == CheckKind::Theorem ? "theorem " : "claim   ")
        << c->name << " (" << c->cases << " cases)";
    if (!c->note.empty()) out << " -- " << c->note;
    out << "\n";
    if (c->counterexample) {
      out << "      input: " << c->counterexample->input << "\n"
          << "      lhs:   " << c->counterexample->lhs << "\n"
          << "      rhs:   " << c->counterexample->rhs << "\n";
    }
  }
  out << (r.theorems_passed() ? "theorems: pass" : "theorems: FAIL")
      << (r.claims_failed() ? ", claims: some failed" : ", claims: pass") << "\n";
  if (r.elapsed_ms) out << "elapsed_ms: " << *r.elapsed_ms << "\n";
  return out.str();
}

Check from_identity(const IdentityCheck& c, const std::string& prefix, CheckKind kind) {
  Check out;
  out.name = prefix + c.name;
  out.kind = kind;
  out.passed = c.passed;
  out.cases = 1;
  if (!c.passed) out.counterexample = Counterexample{c.input, c.lhs, c.rhs};
  return out;
}

void add_dr_report(Report& out, const DrReport& rep, const std::string& prefix, CheckKind kind) {
  for (const auto& c : rep.identities) out.add(from_identity(c, prefix, kind));
}

}  // namespace dupont
