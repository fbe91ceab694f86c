#include <chrono>
#include <cstdio>
#include <future>

#include "bipolar/checks.hpp"
#include "bipolar/error.hpp"

namespace bipolar::checks {

Result run_check(const Check& c) {
  Result r;
  r.name = c.name;
  Probe p;
  auto start = std::chrono::steady_clock::now();
  try {
    c.run(p);
  } catch (const std::exception& e) {
    p.expect(false, std::string("uncaught error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.assertions = p.count();
  r.pass = p.ok();
  r.detail = p.failure();
  if (r.pass && c.seconds_limit > 0 && r.seconds > c.seconds_limit) {
    r.pass = false;
    char buf[64];
    std::snprintf(buf, sizeof buf, "took %.2fs, limit %.0fs", r.seconds, c.seconds_limit);
    r.detail = buf;
  }
  return r;
}

std::vector<Result> run_checks(const std::vector<Check>& checks, bool parallel) {
  std::vector<Result> out;
  if (!parallel) {
    for (const auto& c : checks) out.push_back(run_check(c));
    return out;
  }
  std::vector<std::future<Result>> pending;
  for (const auto& c : checks) pending.push_back(std::async(std::launch::async, [&c] { return run_check(c); }));
  for (auto& f : pending) out.push_back(f.get());
  return out;
}

std::string format(const Result& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.3fs", r.seconds);
  if (r.pass) return "PASS " + r.name + " " + std::to_string(r.assertions) + " " + time;
  return "FAIL " + r.name + " " + time + ": " + r.detail;
}

bool report(const std::vector<Result>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    out << format(r) << "\n";
    all = all && r.pass;
  }
  return all;
}

}  // namespace bipolar::checks
