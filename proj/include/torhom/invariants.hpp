#pragma once

#include <optional>
#include <string>
#include <vector>

namespace torhom {

// <d0|d|d1>: fixed-point degree on C0, total degree, fixed-point degree on C1.
struct DegreeTriple {
  int d0 = 0;
  int d = 0;
  int d1 = 0;
  bool operator==(const DegreeTriple&) const = default;
};

// <dC|d>: fixed-point degree on the diagonal circle, total degree.
struct DegreePair {
  int dC = 0;
  int d = 0;
  bool operator==(const DegreePair&) const = default;
};

std::string to_string(const DegreeTriple& t);
std::string to_string(const DegreePair& p);

bool realizable_triple(const DegreeTriple& t);
bool realizable_pair(const DegreePair& p);
// Rank > 2 targets only allow fixed-point signatures 0 or 1.
bool realizable_signature_triple(const DegreeTriple& t);

// Throws Incompatible unless a.d1 == b.d0.
DegreeTriple concat_triples(const DegreeTriple& a, const DegreeTriple& b);
DegreeTriple concat_all(const std::vector<DegreeTriple>& parts);

// Staircase decomposition into normal-form building blocks.
// Throws NotRealizable on a parity violation.
std::vector<DegreeTriple> decompose_triple(const DegreeTriple& t);

// True for <a|+-(a-b)|b> with |a-b| <= 1.
bool is_elementary(const DegreeTriple& t);

}  // namespace torhom
