#include <cstdio>

#include "suites.hpp"

int main() {
  using namespace torhom::suites;
  int failed = 0;
  for (int id = 1; id <= 11; ++id) {
    const Result r = run_criterion(id);
    std::printf("%s  %2d  %-26s %6.1fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("%d of 11 criteria passed\n", 11 - failed);
  return failed == 0 ? 0 : 1;
}
