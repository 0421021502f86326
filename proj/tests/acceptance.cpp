// Runs the acceptance criteria and prints one line per criterion.
// Exit status is non-zero when any criterion fails.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "dirichlet/acceptance.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
  std::size_t failed = 0;
  const auto rows = dirichlet::acceptance::run_acceptance(seed, [&](const dirichlet::acceptance::CriterionResult& r) {
    std::printf("[%s] %2d %s: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.detail.c_str(),
                r.seconds);
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  });
  std::printf("%zu/%zu criteria passed\n", rows.size() - failed, rows.size());
  return failed == 0 ? 0 : 1;
}
