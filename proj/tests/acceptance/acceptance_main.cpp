// Runs every reproduction criterion and prints one line per criterion.
//
//   twist8_acceptance [--allow-fail ID]...
//
// The exit status is nonzero when a criterion fails that was not listed
// with --allow-fail. Listed criteria still print their real PASS/FAIL line.

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "twist8/acceptance/criteria.hpp"

int main(int argc, char** argv) {
  std::set<int> allowed;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--allow-fail" && i + 1 < argc) {
      allowed.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: " << argv[0] << " [--allow-fail ID]...\n";
      return 2;
    }
  }
  int blocking = 0, passed = 0;
  const auto results = twist8::acceptance::run_suite("all");
  for (const auto& r : results) {
    std::cout << twist8::acceptance::summary_line(r) << "  (" << r.seconds << " s)\n";
    for (const auto& d : r.details) std::cout << "    " << d << "\n";
    if (r.pass) {
      ++passed;
    } else if (!allowed.count(r.id)) {
      ++blocking;
    }
  }
  std::cout << passed << "/" << results.size() << " criteria passed";
  if (passed != static_cast<int>(results.size())) {
    std::cout << "; failures outside the allow list: " << blocking;
  }
  std::cout << "\n";
  return blocking ? 1 : 0;
}
