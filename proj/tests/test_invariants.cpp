#include <doctest.h>

#include "torhom/errors.hpp"
#include "torhom/invariants.hpp"

using namespace torhom;

TEST_CASE("triple parity decides realizability on [-4,4]^3") {
  for (int d0 = -4; d0 <= 4; ++d0) {
    for (int d1 = -4; d1 <= 4; ++d1) {
      for (int d = -4; d <= 4; ++d) {
        const DegreeTriple t{d0, d, d1};
        const bool even = (d - d0 - d1) % 2 == 0;
        CHECK(realizable_triple(t) == even);
        if (!even) {
          CHECK_THROWS_AS(decompose_triple(t), Error);
          continue;
        }
        const auto parts = decompose_triple(t);
        CHECK(concat_all(parts) == t);
        if (!(t == DegreeTriple{0, 0, 0})) {
          for (const auto& p : parts) CHECK(is_elementary(p));
        }
      }
    }
  }
}

TEST_CASE("pair parity") {
  for (int dC = -4; dC <= 4; ++dC) {
    for (int d = -4; d <= 4; ++d) CHECK(realizable_pair({dC, d}) == ((d - dC) % 2 == 0));
  }
}

TEST_CASE("concatenation adds total degrees and checks the seam") {
  CHECK(concat_triples({1, 1, 0}, {0, 2, 0}) == DegreeTriple{1, 3, 0});
  CHECK(concat_triples({2, -1, 3}, {3, 1, 2}) == DegreeTriple{2, 0, 2});
  try {
    concat_triples({1, 1, 0}, {1, 0, 1});
    FAIL("expected Incompatible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Incompatible);
  }
}

TEST_CASE("elementary blocks") {
  CHECK(is_elementary({1, 1, 0}));
  CHECK(is_elementary({1, -1, 0}));
  CHECK(is_elementary({2, 0, 2}));
  CHECK_FALSE(is_elementary({2, 2, 0}));
  CHECK_FALSE(is_elementary({1, 3, 0}));
}

TEST_CASE("signature triples only allow fixed degrees 0 and 1") {
  CHECK(realizable_signature_triple({0, 2, 0}));
  CHECK(realizable_signature_triple({1, 1, 0}));
  CHECK_FALSE(realizable_signature_triple({2, 0, 0}));
  CHECK_FALSE(realizable_signature_triple({1, 0, 0}));
}

TEST_CASE("formatting") {
  CHECK(to_string(DegreeTriple{-1, 3, 0}) == "<-1|3|0>");
  CHECK(to_string(DegreePair{1, 3}) == "<1|3>");
}
