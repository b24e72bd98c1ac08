#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "torhom/degree.hpp"
#include "torhom/errors.hpp"
#include "torhom/maps.hpp"

using namespace torhom;

TEST_CASE("winding of z^d loops") {
  for (int d = -5; d <= 5; ++d) {
    const auto w = winding_number([d](double s) { return equator_loop(d, s); });
    CHECK(w.winding == d);
    CHECK(w.raw == doctest::Approx(d).epsilon(1e-12));
  }
}

TEST_CASE("winding rejects loops off the equator or with large steps") {
  try {
    winding_number([](double s) { return Vec3{std::cos(2 * std::numbers::pi * s), 0.0, 0.5}; });
    FAIL("expected OffCircle");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OffCircle);
  }
  try {
    winding_number([](double s) { return equator_loop(7, s); }, 16);
    FAIL("expected StepTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::StepTooLarge);
  }
}

TEST_CASE("constant maps have degree zero under both oracles") {
  const Grid g(32);
  for (auto kind : {Involution::TypeI, Involution::TypeII}) {
    const TorusMap f = constant_map(kind);
    CHECK(total_degree_simplicial(f, g).degree == 0);
    CHECK(total_degree_preimage(f, g) == 0);
  }
}

TEST_CASE("simplicial and preimage degrees agree on constructed maps") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> small(-3, 3);
  const Grid g(128);
  int seen = 0;
  while (seen < 12) {
    const DegreeTriple t{small(rng), small(rng), small(rng)};
    if (!realizable_triple(t)) continue;
    const TorusMap f = realize_triple(t);
    CHECK(total_degree_simplicial(f, g).degree == t.d);
    CHECK(total_degree_preimage(f, g, 5) == t.d);
    ++seen;
  }
}

TEST_CASE("a non-equivariant map is refused") {
  TorusMap f;
  f.kernel = [](const TorusPoint&) { return Vec3{0, 0, 1}; };
  f.kind = Involution::TypeI;
  try {
    degree_triple(f, 32);
    FAIL("expected NotEquivariant");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEquivariant);
  }
}

TEST_CASE("sample-based invariants match map-based ones") {
  const int n = 128;
  const Grid g(n);
  for (const DegreeTriple& t : {DegreeTriple{0, 2, 0}, {1, 3, 0}, {-1, 0, 1}}) {
    const TorusMap f = realize_triple(t);
    CHECK(degree_triple_from_samples(sample_unit(f, g), n).triple == t);
  }
  for (const DegreePair& p : {DegreePair{0, 2}, {1, -1}}) {
    const TorusMap f = realize_pair(p);
    CHECK(degree_pair_from_samples(sample_unit(f, g), n).pair == p);
  }
}

TEST_CASE("matrix maps classify through their sphere shadow") {
  const TorusMap f = realize_triple({1, 1, 0});
  const MatrixReport r2 = classify_matrix_map(embed_map(f, 1, 1), 64);
  CHECK(r2.signature == Signature{1, 1});
  CHECK(r2.triple->triple == DegreeTriple{1, 1, 0});
  const MatrixReport r3 = classify_matrix_map(embed_map(f, 2, 1), 64);
  CHECK(r3.signature == Signature{2, 1});
  CHECK(r3.triple->triple.d == 1);
  REQUIRE(r3.fixed_signature.size() == 2);
  CHECK(r3.fixed_signature[0] == 1);
  CHECK(r3.fixed_signature[1] == 0);
}
