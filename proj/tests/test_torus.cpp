#include <doctest.h>

#include <random>

#include "torhom/errors.hpp"
#include "torhom/torus.hpp"

using namespace torhom;

TEST_CASE("points reduce into the unit square") {
  const TorusPoint p(1.25, -0.25);
  CHECK(p.x == 0.25);
  CHECK(p.y == 0.75);
  CHECK(TorusPoint(-1e-300, 0).x == 0.0);
  CHECK(torus_distance(TorusPoint(0.99, 0.0), TorusPoint(0.01, 0.0)) == doctest::Approx(0.02));
}

TEST_CASE("involutions are exactly involutive") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 20000; ++k) {
    const TorusPoint p(u(rng), u(rng));
    for (auto kind : {Involution::TypeI, Involution::TypeII}) {
      CHECK(apply_involution(kind, apply_involution(kind, p)) == p);
    }
  }
}

TEST_CASE("fixed circles are fixed") {
  for (auto kind : {Involution::TypeI, Involution::TypeII}) {
    const FixedSet fs = fixed_set(kind);
    CHECK(fs.circles.size() == (kind == Involution::TypeI ? 2u : 1u));
    for (const auto& c : fs.circles) {
      for (int k = 0; k < 64; ++k) {
        const TorusPoint p = c.at(k / 64.0);
        CHECK(apply_involution(kind, p) == p);
      }
    }
  }
}

TEST_CASE("grid triangulation covers the torus once") {
  for (int n : {16, 64, 256}) {
    const Grid g(n);
    CHECK(g.triangles().size() == 2u * g.vertex_count());
    CHECK(g.total_signed_area() == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(Grid(1), Error);
}

TEST_CASE("equivariant extension rejects a broken seam") {
  // Constant (0,0,1) is not fixed by the reflection on C0.
  auto bad = [](double, double) { return Vec3{0, 0, 1}; };
  try {
    equivariant_extend(Involution::TypeI, bad);
    FAIL("expected BoundaryMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundaryMismatch);
  }
  auto good = [](double, double) { return kBasePoint; };
  const TorusMap f = equivariant_extend(Involution::TypeII, good);
  CHECK(max_orbit_defect(f, 1000) == 0.0);
}
