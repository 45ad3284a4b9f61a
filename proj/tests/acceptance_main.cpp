// Runs the numbered verification suite; one line per check.

#include <cstdlib>
#include <cstring>
#include <iostream>

#include "iam/acceptance.hpp"

int main(int argc, char** argv) {
  iam::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      options.quick = true;
    } else {
      options.only.push_back(std::atoi(argv[i]));
    }
  }
  bool ok = true;
  iam::run_acceptance(options, [&](const iam::CriterionResult& r) {
    std::cout << iam::format_result(r) << std::endl;
    ok = ok && r.pass;
  });
  return ok ? 0 : 1;
}
