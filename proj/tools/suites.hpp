#pragma once

#include <string>
#include <vector>

namespace torhom::suites {

// Pinned tolerances.
inline constexpr int kParityGrid = 256;
inline constexpr double kParityBudgetSeconds = 60.0;
inline constexpr double kRawResidual = 0.1;
inline constexpr double kSymmetryTolerance = 1e-8;
inline constexpr int kJumpGrid = 512;
inline constexpr double kOrbitDefect = 1e-9;
inline constexpr std::size_t kOrbitSamples = 10000;
inline constexpr std::size_t kWitnessSamples = 10000;

struct Result {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct Suite {
  std::string name;
  std::vector<int> criteria;
};

// parity, concatenation, doubling, weierstrass, physics, jumps, rank-n,
// signature, equivariance, cross-oracle, all
const std::vector<Suite>& catalog();
bool known_suite(const std::string& name);
std::vector<Result> run_suite(const std::string& name);
Result run_criterion(int id);

}  // namespace torhom::suites
