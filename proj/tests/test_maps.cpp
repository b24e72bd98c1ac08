#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "torhom/degree.hpp"
#include "torhom/errors.hpp"
#include "torhom/maps.hpp"

using namespace torhom;
using cd = std::complex<double>;

namespace {

// Direct lattice sum over the square |m|, |n| <= N, extrapolated in N to
// remove the leading 1/N^2 tail.
cd lattice_sum_p(cd z, int N) {
  auto partial = [z](int n) {
    cd s = 1.0 / (z * z);
    for (int a = -n; a <= n; ++a) {
      for (int b = -n; b <= n; ++b) {
        if (a == 0 && b == 0) continue;
        const cd w(a, b);
        s += 1.0 / ((z - w) * (z - w)) - 1.0 / (w * w);
      }
    }
    return s;
  };
  return (4.0 * partial(2 * N) - partial(N)) / 3.0;
}

bool same_triple(const TorusMap& f, const DegreeTriple& t, int n = 128) {
  return degree_triple(f, n).triple == t;
}

}  // namespace

TEST_CASE("Weierstrass p agrees with the direct lattice sum") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.1, 0.9);
  for (int k = 0; k < 6; ++k) {
    const cd z(u(rng), u(rng));
    const cd want = lattice_sum_p(z, 150);
    CHECK(std::abs(weierstrass_p(z) - want) / std::max(1.0, std::abs(want)) < 1e-6);
  }
  CHECK(std::abs(weierstrass_p(cd(0.5, 0.5))) < 1e-10);  // e2 = 0 on the square lattice
  CHECK(std::abs(weierstrass_p_prime(cd(0.5, 0.0))) < 1e-9);
  try {
    weierstrass_p(cd(1.0, 0.0));
    FAIL("expected PoleHit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleHit);
  }
}

TEST_CASE("Riemann sphere charts agree") {
  for (cd w : {cd(0.3, -2.0), cd(5.0, 1.0), cd(-0.7, 0.1)}) {
    CHECK(distance(riemann_sphere(w), riemann_sphere_at_infinity(1.0 / w)) < 1e-14);
    CHECK(distance(riemann_sphere(std::conj(w)), sphere_involution(riemann_sphere(w))) < 1e-15);
  }
  CHECK(riemann_sphere(cd(2.0, 0.0)).z == 0.0);
}

TEST_CASE("normal forms realize <d0|d0-d1|d1>, mirrored forms the opposite") {
  for (auto [a, b] : {std::pair{1, 0}, {2, -1}, {0, 0}, {-1, 2}}) {
    CHECK(same_triple(normal_form(a, b, false), {a, a - b, b}));
    CHECK(same_triple(normal_form(a, b, true), {a, b - a, b}));
    CHECK(same_triple(modified_normal_form(a, b, false), {a, a - b, b}));
  }
}

TEST_CASE("mirror negates the total degree, swap exchanges the circles") {
  const TorusMap f = realize_triple({2, -1, 1});
  CHECK(same_triple(mirror(f), {2, 1, 1}));
  CHECK(same_triple(swap_circles(f), {1, -1, 2}));
  const TorusMap g = realize_pair({1, 3});
  CHECK(degree_pair(mirror(g), 128).pair == DegreePair{1, -3});
}

TEST_CASE("realization rejects parity violations") {
  try {
    realize_triple({0, 1, 0});
    FAIL("expected NotRealizable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRealizable);
  }
  CHECK_THROWS_AS(realize_pair({1, 2}), Error);
}

TEST_CASE("stacking checks loop compatibility") {
  const CylinderMap a = elementary_cylinder({1, 1, 0});
  const CylinderMap b = elementary_cylinder({1, 0, 1});
  try {
    stack_cylinders({a, b});
    FAIL("expected Incompatible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Incompatible);
  }
  const TorusMap f = concat_cylinder({elementary_cylinder({1, 1, 0}), elementary_cylinder({0, -1, 1})});
  CHECK(same_triple(f, {1, 0, 1}));
}

TEST_CASE("seam quotient is invertible away from the base point") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(0.02, 0.98);
  for (int k = 0; k < 500; ++k) {
    double x = u(rng), y = u(rng);
    const TorusPoint p(x, y);
    const TorusPoint back = seam_quotient_inverse(seam_quotient(p));
    CHECK(torus_distance(p, back) < 1e-9);
    // Intertwines the type II involution with the reflection.
    CHECK(distance(seam_quotient(apply_involution(Involution::TypeII, p)), sphere_involution(seam_quotient(p))) < 1e-12);
  }
}

TEST_CASE("physics family") {
  CHECK(distance(physics_vector(1.0, 1, TorusPoint(0.25, 0.0)), Vec3{0.0, 1.0, 0.0}) < 1e-15);
  CHECK(same_triple(physics_map(1.0, 1), {-1, 1, 0}));
  CHECK(same_triple(physics_map(-1.0, 2), {0, -2, 0}));
  CHECK_THROWS_AS(physics_map(2.0, 1)(TorusPoint(0.0, 0.0)), Error);
}
