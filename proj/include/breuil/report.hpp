#ifndef BREUIL_REPORT_HPP
#define BREUIL_REPORT_HPP

// Named pass/fail records produced by the axiom, morphism and lemma checkers.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace breuil {

struct Check {
  std::string name;
  std::optional<int> index;
  bool pass = true;
  std::string witness;
};

class Report {
 public:
  void add(std::string name, std::optional<int> index, bool pass, std::string witness) {
    checks_.push_back(Check{std::move(name), index, pass, pass ? std::string{} : std::move(witness)});
  }
  void add(std::string name, bool pass, std::string witness = {}) {
    add(std::move(name), std::nullopt, pass, std::move(witness));
  }
  /// Appends another report, prefixing each check name.
  void merge(const std::string& prefix, const Report& other) {
    for (const auto& c : other.checks_) {
      checks_.push_back(Check{prefix.empty() ? c.name : prefix + "." + c.name, c.index, c.pass, c.witness});
    }
  }

  bool all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
  }
  const Check* first_failure() const {
    for (const auto& c : checks_)
      if (!c.pass) return &c;
    return nullptr;
  }
  std::size_t count_failed() const {
    return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
  }
  const std::vector<Check>& checks() const { return checks_; }
  bool empty() const { return checks_.empty(); }

 private:
  std::vector<Check> checks_;
};

}  // namespace breuil

#endif  // BREUIL_REPORT_HPP
