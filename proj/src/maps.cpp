#include "torhom/maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "torhom/errors.hpp"

namespace torhom {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Sign of z on the half of the type II region y <= x.
constexpr double kQuotientHemisphere = -1.0;

double clamp01(double s) { return std::clamp(s, 0.0, 1.0); }

double hemisphere(bool mirror) { return mirror ? -kNormalFormHemisphere : kNormalFormHemisphere; }


DegreeTriple normal_triple(int d0, int d1, bool mirror) {
  return mirror ? DegreeTriple{d0, d1 - d0, d1} : DegreeTriple{d0, d0 - d1, d1};
}

double unit_phase(int d, double x) {
  double phase = static_cast<double>(d) * x;
  return phase - std::floor(phase);
}

// Point a e^{2 pi i phase} + b with a + b = 1, a, b >= 0, lifted to the
// hemisphere. The height sqrt(1 - |w|^2) = 2 sqrt(ab) |sin(pi phase)| is
// evaluated in product form so that it vanishes exactly on the boundary.
Vec3 lift_convex(double a, double b, double phase, double sign) {
  const cd w = a * std::polar(1.0, kTwoPi * phase) + b;
  const double h = 2.0 * std::sqrt(std::max(0.0, a * b)) * std::fabs(std::sin(kPi * phase));
  return {w.real(), w.imag(), sign * h};
}

// Point r e^{2 pi i phase}, r = |1 - 2s|, lifted with height 2 sqrt(s - s^2).
Vec3 lift_radial(double s, double phase, double sign) {
  const cd w = std::fabs(1.0 - 2.0 * s) * std::polar(1.0, kTwoPi * phase);
  return {w.real(), w.imag(), sign * 2.0 * std::sqrt(std::max(0.0, s - s * s))};
}

}  // namespace

Vec3 equator_loop(int d, double x) {
  const cd u = std::polar(1.0, kTwoPi * unit_phase(d, x));
  return {u.real(), u.imag(), 0.0};
}

CylinderMap normal_form_cylinder(int d0, int d1, bool mirror) {
  const double sign = hemisphere(mirror);
  CylinderMap c;
  c.triple = normal_triple(d0, d1, mirror);
  c.kernel = [d0, d1, sign](double x, double s) {
    s = clamp01(s);
    return lift_radial(s, unit_phase(s <= 0.5 ? d0 : d1, x), sign);
  };
  return c;
}

CylinderMap modified_normal_form_cylinder(int d0, int d1, bool mirror) {
  const double sign = hemisphere(mirror);
  CylinderMap c;
  c.triple = normal_triple(d0, d1, mirror);
  c.kernel = [d0, d1, sign](double x, double s) {
    s = clamp01(s);
    if (s <= 0.5) return lift_convex(1.0 - 2.0 * s, 2.0 * s, unit_phase(d0, x), sign);
    return lift_convex(2.0 * s - 1.0, 2.0 * (1.0 - s), unit_phase(d1, x), sign);
  };
  return c;
}

CylinderMap elementary_cylinder(const DegreeTriple& t) {
  if (!is_elementary(t)) fail(ErrorKind::InvalidArgument, to_string(t) + " is not elementary");
  const bool mirror = t.d0 != t.d1 && t.d != t.d0 - t.d1;
  return normal_form_cylinder(t.d0, t.d1, mirror);
}

CylinderMap stack_cylinders(const std::vector<CylinderMap>& pieces) {
  if (pieces.empty()) fail(ErrorKind::InvalidArgument, "nothing to stack");
  std::vector<DegreeTriple> triples;
  for (const auto& p : pieces) triples.push_back(p.triple);
  CylinderMap c;
  c.triple = concat_all(triples);
  if (pieces.size() == 1) return pieces.front();
  c.kernel = [pieces](double x, double s) {
    const int m = static_cast<int>(pieces.size());
    const double scaled = clamp01(s) * m;
    const int k = std::min(static_cast<int>(scaled), m - 1);
    return pieces[k](x, scaled - k);
  };
  return c;
}

TorusMap extend_cylinder(const CylinderMap& c) {
  auto kernel = c.kernel;
  TorusMap g = equivariant_extend(Involution::TypeI,
                                  [kernel](double x, double y) { return kernel(x, 2.0 * y); });
  g.declared_triple = c.triple;
  return g;
}

TorusMap constant_map(Involution kind, const Vec3& value) {
  TorusMap g;
  g.kind = kind;
  g.name = "constant";
  g.kernel = [value](const TorusPoint&) { return value; };
  if (value.z == 0.0) {
    if (kind == Involution::TypeI) g.declared_triple = DegreeTriple{0, 0, 0};
    else g.declared_pair = DegreePair{0, 0};
  }
  return g;
}

TorusMap normal_form(int d0, int d1, bool mirror) {
  TorusMap g = extend_cylinder(normal_form_cylinder(d0, d1, mirror));
  g.name = "normal-form";
  return g;
}

TorusMap modified_normal_form(int d0, int d1, bool mirror) {
  TorusMap g = extend_cylinder(modified_normal_form_cylinder(d0, d1, mirror));
  g.name = "modified-normal-form";
  return g;
}

TorusMap concat_cylinder(const std::vector<CylinderMap>& pieces) {
  TorusMap g = extend_cylinder(stack_cylinders(pieces));
  g.name = "concatenation";
  return g;
}

TorusMap realize_triple(const DegreeTriple& t) {
  if (!realizable_triple(t)) {
    fail(ErrorKind::NotRealizable, to_string(t) + " is not realizable: the total degree must satisfy "
                                                  "d = d0 + d1 (mod 2)");
  }
  if (t == DegreeTriple{0, 0, 0}) return constant_map(Involution::TypeI);
  std::vector<CylinderMap> pieces;
  for (const auto& e : decompose_triple(t)) pieces.push_back(elementary_cylinder(e));
  TorusMap g = concat_cylinder(pieces);
  g.name = "realization " + to_string(t);
  return g;
}

Vec3 cylinder_to_sphere(double x, double y) {
  const double z = 2.0 * y - 1.0;
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  const cd u = std::polar(1.0, kTwoPi * x);
  return {r * u.real(), r * u.imag(), z};
}

std::pair<double, double> sphere_to_cylinder(const Vec3& v) {
  const double n = norm(v);
  if (n == 0.0) fail(ErrorKind::NormalizationUndefined, "zero vector has no cylinder coordinates");
  double x = std::atan2(v.y, v.x) / kTwoPi;
  if (x < 0) x += 1.0;
  if (x >= 1.0) x = 0.0;
  const double y = 0.5 * (std::clamp(v.z / n, -1.0, 1.0) + 1.0);
  return {x, y};
}

Vec3 seam_quotient(const TorusPoint& p) {
  if (p.y > p.x) return sphere_involution(seam_quotient(TorusPoint(p.y, p.x)));
  const double u = p.x - p.y;
  const double tau = p.y / (1.0 - u);
  return lift_convex(1.0 - u, u, tau, kQuotientHemisphere);
}

TorusPoint seam_quotient_inverse(const Vec3& v) {
  if (v.z * kQuotientHemisphere < 0.0) {
    const TorusPoint q = seam_quotient_inverse(sphere_involution(v));
    return TorusPoint(q.y, q.x);
  }
  const cd w(v.x, v.y);
  const double gap = 1.0 - w.real();
  if (gap <= 1e-15) return TorusPoint(0.0, 0.0);
  const double u = std::clamp((1.0 - std::norm(w)) / (2.0 * gap), 0.0, 1.0);
  double tau = std::arg(w - u) / kTwoPi;
  if (tau < 0) tau += 1.0;
  const double y = tau * (1.0 - u);
  return TorusPoint(u + y, y);
}

TorusMap realize_pair(const DegreePair& p) {
  if (!realizable_pair(p)) {
    fail(ErrorKind::NotRealizable, to_string(p) + " is not realizable: the total degree must satisfy "
                                                  "d = dC (mod 2)");
  }
  if (p == DegreePair{0, 0}) return constant_map(Involution::TypeII);
  const TorusMap g = realize_triple({0, p.d, p.dC});
  TorusMap f;
  f.kind = Involution::TypeII;
  f.name = "realization " + to_string(p);
  f.declared_pair = p;
  f.kernel = [g](const TorusPoint& pt) {
    const auto [x, y] = sphere_to_cylinder(seam_quotient(pt));
    return g(TorusPoint(x, y));
  };
  return f;
}

TorusMap mirror(const TorusMap& f) {
  TorusMap g = f;
  auto k = f.kernel;
  g.kernel = [k](const TorusPoint& p) { return sphere_involution(k(p)); };
  if (g.declared_triple) g.declared_triple->d = -g.declared_triple->d;
  if (g.declared_pair) g.declared_pair->d = -g.declared_pair->d;
  g.name = "mirror of " + f.name;
  return g;
}

TorusMap swap_circles(const TorusMap& f) {
  if (f.kind != Involution::TypeI) fail(ErrorKind::InvalidArgument, "circle swap needs a type I map");
  TorusMap g = f;
  auto k = f.kernel;
  g.kernel = [k](const TorusPoint& p) { return k(TorusPoint(p.x, p.y + 0.5)); };
  if (g.declared_triple) std::swap(g.declared_triple->d0, g.declared_triple->d1);
  g.name = "swap of " + f.name;
  return g;
}

// ---------------------------------------------------------------------------
// Weierstrass functions. Rows of the lattice are summed in closed form with
// sum_n (z+n)^-2 = pi^2 / sin^2(pi z); rows decay like exp(-2 pi |m|).

namespace {

constexpr int kRows = 8;
constexpr double kSeriesRadius = 1e-2;

cd centered(cd z) {
  return {z.real() - std::nearbyint(z.real()), z.imag() - std::nearbyint(z.imag())};
}

// p(z) - 1/z^2 for centered z.
cd p_regular(cd z) {
  const double pi2 = kPi * kPi;
  cd row0;
  if (std::abs(z) < kSeriesRadius) {
    const cd z2 = z * z;
    const double p4 = pi2 * pi2, p6 = p4 * pi2, p8 = p6 * pi2, p10 = p8 * pi2;
    row0 = pi2 / 3.0 + z2 * (p4 / 15.0 + z2 * (2.0 * p6 / 189.0 + z2 * (p8 / 675.0 + z2 * (2.0 * p10 / 10395.0))));
  } else {
    const cd s = std::sin(kPi * z);
    row0 = pi2 / (s * s) - 1.0 / (z * z);
  }
  cd sum = row0 - pi2 / 3.0;
  for (int m = -kRows; m <= kRows; ++m) {
    if (m == 0) continue;
    const cd s = std::sin(kPi * (z + cd(0.0, m)));
    const double sh = std::sinh(kPi * m);
    sum += pi2 / (s * s) + pi2 / (sh * sh);
  }
  return sum;
}

// p'(z) + 2/z^3 for centered z.
cd p_prime_regular(cd z) {
  const double pi3 = kPi * kPi * kPi;
  cd row0;
  if (std::abs(z) < kSeriesRadius) {
    const double p4 = std::pow(kPi, 4), p6 = std::pow(kPi, 6), p8 = std::pow(kPi, 8), p10 = std::pow(kPi, 10);
    const cd z2 = z * z;
    row0 = z * (2.0 * p4 / 15.0 + z2 * (8.0 * p6 / 189.0 + z2 * (6.0 * p8 / 675.0 + z2 * (16.0 * p10 / 10395.0))));
  } else {
    const cd s = std::sin(kPi * z), c = std::cos(kPi * z);
    row0 = -2.0 * pi3 * c / (s * s * s) + 2.0 / (z * z * z);
  }
  cd sum = row0;
  for (int m = -kRows; m <= kRows; ++m) {
    if (m == 0) continue;
    const cd w = kPi * (z + cd(0.0, m));
    const cd s = std::sin(w), c = std::cos(w);
    sum += -2.0 * pi3 * c / (s * s * s);
  }
  return sum;
}

// Value of a meromorphic function with one pole of order k at the origin,
// written as scale * (principal z^-k + regular), returned on the sphere.
Vec3 meromorphic_to_sphere(cd z, int order, double principal, cd regular, cd scale) {
  const cd zk = std::pow(z, order);
  if (std::abs(z) < 0.3) {
    const cd zeta = zk / (principal + zk * regular) / scale;
    return riemann_sphere_at_infinity(zeta);
  }
  return riemann_sphere(scale * (principal / zk + regular));
}

}  // namespace

std::complex<double> weierstrass_p(std::complex<double> z) {
  const cd c = centered(z);
  if (c == cd(0.0, 0.0)) fail(ErrorKind::PoleHit, "p has a pole at lattice points");
  return 1.0 / (c * c) + p_regular(c);
}

std::complex<double> weierstrass_p_prime(std::complex<double> z) {
  const cd c = centered(z);
  if (c == cd(0.0, 0.0)) fail(ErrorKind::PoleHit, "p' has a pole at lattice points");
  return -2.0 / (c * c * c) + p_prime_regular(c);
}

Vec3 riemann_sphere(std::complex<double> w) {
  const double n2 = std::norm(w);
  if (n2 > 1.0) return riemann_sphere_at_infinity(1.0 / w);
  const double den = n2 + 1.0;
  return {(n2 - 1.0) / den, -2.0 * w.real() / den, 2.0 * w.imag() / den};
}

Vec3 riemann_sphere_at_infinity(std::complex<double> zeta) {
  const double n2 = std::norm(zeta);
  const double den = 1.0 + n2;
  return {(1.0 - n2) / den, -2.0 * zeta.real() / den, -2.0 * zeta.imag() / den};
}

WeierstrassMaps weierstrass_maps() {
  auto make = [](Involution kind, bool derivative, cd scale, const char* name) {
    TorusMap f;
    f.kind = kind;
    f.name = name;
    f.kernel = [derivative, scale](const TorusPoint& p) {
      const cd z = centered(cd(p.x, p.y));
      if (derivative) {
        return meromorphic_to_sphere(z, 3, -2.0, z == cd(0, 0) ? cd(0, 0) : p_prime_regular(z), scale);
      }
      return meromorphic_to_sphere(z, 2, 1.0, z == cd(0, 0) ? cd(0, 0) : p_regular(z), scale);
    };
    return f;
  };
  WeierstrassMaps w;
  w.p = make(Involution::TypeI, false, 1.0, "weierstrass-p");
  w.p_prime = make(Involution::TypeI, true, 1.0, "weierstrass-p-prime");
  w.i_p = make(Involution::TypeII, false, cd(0.0, 1.0), "i-weierstrass-p");
  w.rotated_p_prime = make(Involution::TypeII, true, std::polar(1.0, 0.75 * kPi), "rotated-weierstrass-p-prime");
  return w;
}

// ---------------------------------------------------------------------------

Su2Vector physics_vector(double t, int m, const TorusPoint& pt) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "cover degree m must be positive");
  const double q = kTwoPi * pt.x;
  double mp = static_cast<double>(m) * pt.y;
  mp = kTwoPi * (mp - std::floor(mp));
  return {t - std::cos(q) - std::cos(mp), std::sin(q), -std::sin(mp)};
}

TorusMap physics_field(double t, int m) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "cover degree m must be positive");
  TorusMap f;
  f.kind = Involution::TypeI;
  f.name = "physics-field";
  f.kernel = [t, m](const TorusPoint& p) { return physics_vector(t, m, p); };
  return f;
}

TorusMap physics_map(double t, int m) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "cover degree m must be positive");
  TorusMap f;
  f.kind = Involution::TypeI;
  f.name = "physics";
  f.kernel = [t, m](const TorusPoint& p) {
    const Vec3 v = physics_vector(t, m, p);
    const double n = norm(v);
    if (n <= 1e-12) fail(ErrorKind::NormalizationUndefined, "physics family vanishes at this point");
    return v * (1.0 / n);
  };
  return f;
}

MatrixMap physics_matrix_map(double t, int m) {
  if (m < 1) fail(ErrorKind::InvalidArgument, "cover degree m must be positive");
  MatrixMap f;
  f.kind = Involution::TypeI;
  f.p = 1;
  f.q = 1;
  f.name = "physics";
  f.kernel = [t, m](const TorusPoint& p) { return psi_inv(physics_vector(t, m, p)); };
  return f;
}

}  // namespace torhom
