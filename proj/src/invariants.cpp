#include "torhom/invariants.hpp"

#include <cstdlib>

#include "torhom/errors.hpp"

namespace torhom {

namespace {

bool even(int v) { return v % 2 == 0; }
int sign(int v) { return (v > 0) - (v < 0); }

}  // namespace

std::string to_string(const DegreeTriple& t) {
  return "<" + std::to_string(t.d0) + "|" + std::to_string(t.d) + "|" + std::to_string(t.d1) + ">";
}

std::string to_string(const DegreePair& p) {
  return "<" + std::to_string(p.dC) + "|" + std::to_string(p.d) + ">";
}

bool realizable_triple(const DegreeTriple& t) { return even(t.d - t.d0 - t.d1); }

bool realizable_pair(const DegreePair& p) { return even(p.d - p.dC); }

bool realizable_signature_triple(const DegreeTriple& t) {
  auto bit = [](int v) { return v == 0 || v == 1; };
  return bit(t.d0) && bit(t.d1) && realizable_triple(t);
}

DegreeTriple concat_triples(const DegreeTriple& a, const DegreeTriple& b) {
  if (a.d1 != b.d0) {
    fail(ErrorKind::Incompatible, "cannot concatenate " + to_string(a) + " with " + to_string(b) +
                                      ": middle fixed-point degrees differ");
  }
  return {a.d0, a.d + b.d, b.d1};
}

DegreeTriple concat_all(const std::vector<DegreeTriple>& parts) {
  if (parts.empty()) fail(ErrorKind::InvalidArgument, "empty concatenation");
  DegreeTriple acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = concat_triples(acc, parts[i]);
  return acc;
}

std::vector<DegreeTriple> decompose_triple(const DegreeTriple& t) {
  if (!realizable_triple(t)) {
    fail(ErrorKind::NotRealizable, to_string(t) + " violates d = d0 + d1 (mod 2)");
  }
  std::vector<DegreeTriple> out;
  const int s0 = sign(t.d0);
  for (int k = std::abs(t.d0); k >= 1; --k) out.push_back({k * s0, s0, (k - 1) * s0});

  const int core = (t.d - t.d0 - t.d1) / 2;
  const int cs = sign(core);
  for (int k = 0; k < std::abs(core); ++k) {
    out.push_back({0, cs, 1});
    out.push_back({1, cs, 0});
  }

  const int s1 = sign(t.d1);
  for (int k = 1; k <= std::abs(t.d1); ++k) out.push_back({(k - 1) * s1, s1, k * s1});

  if (out.empty()) out.push_back({0, 0, 0});
  return out;
}

bool is_elementary(const DegreeTriple& t) {
  const int diff = t.d0 - t.d1;
  if (std::abs(diff) > 1) return false;
  return t.d == diff || t.d == -diff;
}

}  // namespace torhom
