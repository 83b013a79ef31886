#pragma once

#include "dupont/complexes.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dupont {

enum class CheckKind { Theorem, Claim };

struct Counterexample {
  std::string input, lhs, rhs;
};

struct Check {
  std::string name;
  CheckKind kind = CheckKind::Theorem;
  bool passed = true;
  std::optional<Counterexample> counterexample;
  std::string note;
  int cases = 0;  // inputs examined
};

struct Report {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Check> checks;
  std::optional<double> elapsed_ms;

  void add(Check c) { checks.push_back(std::move(c)); }
  // Appends checks of another report, prefixing their names.
  void merge(const Report& other, const std::string& prefix);
  bool theorems_passed() const;
  bool claims_failed() const;
  const Check* find(const std::string& name) const;
};

nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

Check from_identity(const IdentityCheck& c, const std::string& prefix = "",
                    CheckKind kind = CheckKind::Theorem);
void add_dr_report(Report& out, const DrReport& rep, const std::string& prefix,
                   CheckKind kind = CheckKind::Theorem);

// Accumulates one named equality over many inputs, keeping the first failure.
class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name, CheckKind kind = CheckKind::Theorem) {
    check_.name = std::move(name);
    check_.kind = kind;
  }

  template <class In, class L, class R>
  bool expect_equal(const In& input, const L& lhs, const R& rhs) {
    ++check_.cases;
    if (lhs == rhs) return true;
    fail(describe(input), describe(lhs), describe(rhs));
    return false;
  }

  void fail(std::string input, std::string lhs, std::string rhs) {
    if (check_.passed) {
      check_.passed = false;
      check_.counterexample = Counterexample{std::move(input), std::move(lhs), std::move(rhs)};
    }
  }
  void count() { ++check_.cases; }
  void note(std::string n) { check_.note = std::move(n); }
  bool passed() const { return check_.passed; }
  Check done() const { return check_; }

 private:
  template <class T>
  static std::string describe(const T& x) {
    if constexpr (std::is_convertible_v<T, std::string>) {
      return std::string(x);
    } else {
      return to_string(x);
    }
  }

  Check check_;
};

}  // namespace dupont
