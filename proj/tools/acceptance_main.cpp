#include <iostream>

#include "bipolar/checks.hpp"

int main() {
  bool all = true;
  for (const auto& c : bipolar::checks::acceptance_criteria()) {
    auto r = bipolar::checks::run_check(c);
    std::cout << bipolar::checks::format(r) << std::endl;
    all = all && r.pass;
  }
  return all ? 0 : 1;
}
