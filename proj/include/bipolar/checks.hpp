#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace bipolar::checks {

// Collects assertions; keeps the first failure message.
class Probe {
 public:
  template <class Msg>
  bool expect(bool ok, Msg&& msg) {
    ++count_;
    if (!ok && failure_.empty()) {
      if constexpr (std::is_invocable_v<Msg>) {
        failure_ = msg();
      } else {
        failure_ = std::string(msg);
      }
    }
    return ok;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  long long count() const { return count_; }

 private:
  std::string failure_;
  long long count_ = 0;
};

struct Check {
  std::string name;
  std::function<void(Probe&)> run;
  double seconds_limit = 0;  // 0 means unlimited
};

struct Result {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  long long assertions = 0;
};

std::vector<Check> acceptance_criteria();
// "core" runs the module property suites; "all" adds the acceptance criteria.
// Throws Malformed for other names.
std::vector<Check> suite(std::string_view name);

Result run_check(const Check& c);
std::vector<Result> run_checks(const std::vector<Check>& checks, bool parallel);
// "PASS <name> <assertions> <seconds>s" or "FAIL <name> <seconds>s: <detail>"
std::string format(const Result& r);
// Prints one line per result and returns true when everything passed.
bool report(const std::vector<Result>& results, std::ostream& out);

}  // namespace bipolar::checks
