#include <cstdio>

#include "charq/acceptance.hpp"

int main() {
  charq::AcceptanceOptions opts;
  opts.on_result = [](const charq::CriterionResult& r) {
    std::printf("%s\n", r.line().c_str());
    std::fflush(stdout);
  };
  auto results = charq::run_acceptance(opts);
  int failed = 0;
  for (const auto& r : results) failed += !r.pass();
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed ? 1 : 0;
}
