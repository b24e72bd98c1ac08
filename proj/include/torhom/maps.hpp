#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "torhom/hermitian.hpp"
#include "torhom/invariants.hpp"
#include "torhom/torus.hpp"
#include "torhom/vec3.hpp"

namespace torhom {

// Sign of the z-coordinate that normal forms use on the open cylinder
// 0 < y < 1/2. With this choice the normal form for (d0, d1) has total
// degree d0 - d1.
inline constexpr double kNormalFormHemisphere = 1.0;

// Map on the cylinder [0,1] x S^1 with x the circle coordinate and s running
// from C0 (s = 0) to C1 (s = 1). Boundary loops are normalized, z -> z^d.
struct CylinderMap {
  std::function<Vec3(double x, double s)> kernel;
  DegreeTriple triple;

  Vec3 operator()(double x, double s) const { return kernel(x, s); }
};

// Unit loop z^d on the equator, x in [0,1).
Vec3 equator_loop(int d, double x);

CylinderMap normal_form_cylinder(int d0, int d1, bool mirror);
CylinderMap modified_normal_form_cylinder(int d0, int d1, bool mirror);
// Normal form realizing an elementary triple <a|+-(a-b)|b>, |a-b| <= 1.
CylinderMap elementary_cylinder(const DegreeTriple& t);
// Stacks pieces in equal heights. Throws Incompatible on mismatched loops.
CylinderMap stack_cylinders(const std::vector<CylinderMap>& pieces);

// Type I extension from the cylinder y in [0, 1/2], s = 2y.
TorusMap extend_cylinder(const CylinderMap& c);

TorusMap constant_map(Involution kind, const Vec3& value = kBasePoint);
TorusMap normal_form(int d0, int d1, bool mirror);
TorusMap modified_normal_form(int d0, int d1, bool mirror);
TorusMap concat_cylinder(const std::vector<CylinderMap>& pieces);

// Throws NotRealizable on a parity violation.
TorusMap realize_triple(const DegreeTriple& t);
TorusMap realize_pair(const DegreePair& p);

// Composition with the sphere reflection: negates the total degree.
TorusMap mirror(const TorusMap& f);
// Precomposition with [z] -> [z + i/2]: swaps the fixed-point degrees.
TorusMap swap_circles(const TorusMap& f);

// Collapse of the type II seam A1 u A2 onto (1,0,0). The diagonal goes
// to the equator with degree one; T becomes the sphere reflection.
Vec3 seam_quotient(const TorusPoint& p);
// Inverse of seam_quotient away from (1,0,0).
TorusPoint seam_quotient_inverse(const Vec3& v);
// Cylinder coordinates (x, y) in [0,1) x [0,1] of a sphere point; the
// poles go to y = 0 and y = 1.
std::pair<double, double> sphere_to_cylinder(const Vec3& v);
Vec3 cylinder_to_sphere(double x, double y);

// Weierstrass functions of the lattice <1, i>. Throw PoleHit on lattice points.
std::complex<double> weierstrass_p(std::complex<double> z);
std::complex<double> weierstrass_p_prime(std::complex<double> z);

// Projective line to sphere: real line onto the equator, infinity to
// (1,0,0), conjugation to the reflection.
Vec3 riemann_sphere(std::complex<double> w);
// Same map written in the chart zeta = 1/w around infinity.
Vec3 riemann_sphere_at_infinity(std::complex<double> zeta);

struct WeierstrassMaps {
  TorusMap p;                // type I
  TorusMap p_prime;          // type I
  TorusMap i_p;              // type II
  TorusMap rotated_p_prime;  // exp(3 pi i / 4) p', type II
};

WeierstrassMaps weierstrass_maps();

// (t - cos q - cos mp, sin q, -sin mp) with q = 2 pi x, p = 2 pi y.
Su2Vector physics_vector(double t, int m, const TorusPoint& pt);
TorusMap physics_field(double t, int m);
// Normalized onto the sphere; evaluation throws NormalizationUndefined at zeros.
TorusMap physics_map(double t, int m);
MatrixMap physics_matrix_map(double t, int m);

}  // namespace torhom
