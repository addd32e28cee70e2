#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "trilie/verify.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 42;
  bool ok = true;
  for (const auto& r : trilie::run_verify("all", seed)) {
    std::cout << trilie::format_result(r) << std::endl;
    ok = ok && r.pass;
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
