#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace trilie {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Suites: all, bracket (1-4), group (5-7, 9-13), decompose (8), dsl (14).
/// Throws DomainError for an unknown suite name.
std::vector<CriterionResult> run_verify(const std::string& suite, std::uint64_t seed);

/// "PASS  3 centre is K d_n (n = 2, 3, 4)"
std::string format_result(const CriterionResult& r);

}  // namespace trilie
