#include "torhom/torus.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "torhom/errors.hpp"

namespace torhom {

namespace {

// Coordinates live on the 2^-52 lattice so that y -> 1 - y is exact.
constexpr double kQuantum = 4503599627370496.0;  // 2^52

}  // namespace

double reduce_unit(double v) {
  if (!std::isfinite(v)) fail(ErrorKind::InvalidArgument, "non-finite torus coordinate");
  double r = v - std::floor(v);
  r = std::nearbyint(r * kQuantum) / kQuantum;
  if (r >= 1.0 || r == 0.0) r = 0.0;
  return r;
}

TorusPoint::TorusPoint(double x_, double y_) : x(reduce_unit(x_)), y(reduce_unit(y_)) {}

double torus_distance(const TorusPoint& a, const TorusPoint& b) {
  double dx = std::fabs(a.x - b.x);
  double dy = std::fabs(a.y - b.y);
  dx = std::min(dx, 1.0 - dx);
  dy = std::min(dy, 1.0 - dy);
  return std::hypot(dx, dy);
}

const char* involution_name(Involution kind) {
  return kind == Involution::TypeI ? "type-i" : "type-ii";
}

TorusPoint apply_involution(Involution kind, const TorusPoint& p) {
  if (kind == Involution::TypeI) return TorusPoint(p.x, -p.y);
  return TorusPoint(p.y, p.x);
}

FixedSet fixed_set(Involution kind) {
  FixedSet fs;
  if (kind == Involution::TypeI) {
    fs.circles.push_back({"C0", [](double s) { return TorusPoint(s, 0.0); }});
    fs.circles.push_back({"C1", [](double s) { return TorusPoint(s, 0.5); }});
  } else {
    fs.circles.push_back({"C", [](double s) { return TorusPoint(s, s); }});
  }
  return fs;
}

bool in_fundamental_region(Involution kind, const TorusPoint& p) {
  if (kind == Involution::TypeI) return p.y <= 0.5;
  return p.y <= p.x;
}

Grid::Grid(int n) : n_(n) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "grid needs at least 2 samples per axis");
}

std::size_t Grid::index(int i, int j) const {
  const int ii = ((i % n_) + n_) % n_;
  const int jj = ((j % n_) + n_) % n_;
  return static_cast<std::size_t>(jj) * n_ + ii;
}

TorusPoint Grid::vertex(int i, int j) const {
  return TorusPoint(static_cast<double>(i) / n_, static_cast<double>(j) / n_);
}

std::vector<Grid::Triangle> Grid::triangles() const {
  std::vector<Triangle> out;
  out.reserve(2 * vertex_count());
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) {
      const std::size_t v00 = index(i, j), v10 = index(i + 1, j);
      const std::size_t v11 = index(i + 1, j + 1), v01 = index(i, j + 1);
      out.push_back({v00, v10, v11});
      out.push_back({v00, v11, v01});
    }
  }
  return out;
}

double Grid::total_signed_area() const {
  auto wrap = [](double d) { return d - std::nearbyint(d); };
  auto coord = [this](std::size_t idx) {
    return TorusPoint(static_cast<double>(idx % n_) / n_, static_cast<double>(idx / n_) / n_);
  };
  double total = 0.0;
  for (const Triangle& t : triangles()) {
    const TorusPoint a = coord(t.a), b = coord(t.b), c = coord(t.c);
    const double ux = wrap(b.x - a.x), uy = wrap(b.y - a.y);
    const double vx = wrap(c.x - a.x), vy = wrap(c.y - a.y);
    total += 0.5 * (ux * vy - vx * uy);
  }
  return total;
}

TorusMap equivariant_extend(Involution kind, RegionKernel f, TargetInvolution target,
                            double tolerance) {
  constexpr int kChecks = 256;
  auto check = [&](const Vec3& a, const Vec3& b, const char* where) {
    if (distance(a, b) > tolerance) {
      fail(ErrorKind::BoundaryMismatch, std::string("region map breaks the gluing condition on ") + where);
    }
  };
  for (int i = 0; i < kChecks; ++i) {
    const double s = static_cast<double>(i) / kChecks;
    if (kind == Involution::TypeI) {
      const Vec3 a = f(s, 0.0), b = f(s, 0.5);
      check(a, target(a), "C0");
      check(b, target(b), "C1");
    } else {
      const Vec3 c = f(s, s);
      check(c, target(c), "the diagonal");
      check(f(s, 0.0), target(f(1.0, s)), "the seam A1/A2");
    }
  }

  TorusMap g;
  g.kind = kind;
  if (kind == Involution::TypeI) {
    g.kernel = [f, target](const TorusPoint& p) {
      if (p.y <= 0.5) return f(p.x, p.y);
      return target(f(p.x, 1.0 - p.y));
    };
  } else {
    g.kernel = [f, target](const TorusPoint& p) {
      if (p.y <= p.x) return f(p.x, p.y);
      return target(f(p.y, p.x));
    };
  }
  return g;
}

double max_orbit_defect(const TorusMap& f, std::size_t samples, std::uint64_t seed,
                        TargetInvolution target) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    const TorusPoint p(u(rng), u(rng));
    const Vec3 lhs = f(apply_involution(f.kind, p));
    const Vec3 rhs = target(f(p));
    worst = std::max(worst, distance(lhs, rhs));
  }
  return worst;
}

}  // namespace torhom
