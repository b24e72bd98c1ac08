#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "torhom/invariants.hpp"
#include "torhom/vec3.hpp"

namespace torhom {

// Point of C / <1, i> in lattice coordinates, both reduced to [0,1).
struct TorusPoint {
  double x = 0.0;
  double y = 0.0;

  TorusPoint() = default;
  TorusPoint(double x_, double y_);
  bool operator==(const TorusPoint&) const = default;
};

double reduce_unit(double v);
// Shortest periodic displacement between two torus points.
double torus_distance(const TorusPoint& a, const TorusPoint& b);

enum class Involution { TypeI, TypeII };

const char* involution_name(Involution kind);

TorusPoint apply_involution(Involution kind, const TorusPoint& p);

struct FixedCircle {
  std::string name;
  // Degree-one parametrization of the circle, s in [0,1).
  std::function<TorusPoint(double)> at;
};

struct FixedSet {
  std::vector<FixedCircle> circles;
};

FixedSet fixed_set(Involution kind);

// Type I: closed cylinder 0 <= y <= 1/2. Type II: 0 <= y <= x.
bool in_fundamental_region(Involution kind, const TorusPoint& p);

class Grid {
 public:
  explicit Grid(int n);

  int n() const { return n_; }
  double step() const { return 1.0 / n_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(n_) * n_; }
  std::size_t index(int i, int j) const;
  TorusPoint vertex(int i, int j) const;

  struct Triangle {
    std::size_t a, b, c;
  };
  // Two counter-clockwise triangles per cell, 2 n^2 in total.
  std::vector<Triangle> triangles() const;
  // Sum of signed lattice areas; equals 1 for a valid triangulation.
  double total_signed_area() const;

 private:
  int n_;
};

using SphereKernel = std::function<Vec3(const TorusPoint&)>;

// Equivariant map from the torus into R^3 (usually the unit sphere).
struct TorusMap {
  SphereKernel kernel;
  Involution kind = Involution::TypeI;
  std::string name;
  std::optional<DegreeTriple> declared_triple;
  std::optional<DegreePair> declared_pair;

  Vec3 operator()(const TorusPoint& p) const { return kernel(p); }
  Vec3 operator()(double x, double y) const { return kernel(TorusPoint(x, y)); }
};

// Map on the closed fundamental region, in unreduced coordinates:
// Type I gets (x, y) with y in [0, 1/2]; type II gets 0 <= y <= x <= 1.
using RegionKernel = std::function<Vec3(double x, double y)>;
using TargetInvolution = std::function<Vec3(const Vec3&)>;

inline constexpr double kSeamTolerance = 1e-9;

// Extends f from the fundamental region by g(p) = T(f(T p)). Throws
// BoundaryMismatch if sampled boundary values break the gluing condition.
TorusMap equivariant_extend(Involution kind, RegionKernel f,
                            TargetInvolution target = sphere_involution,
                            double tolerance = kSeamTolerance);

// Largest |g(T p) - T(g(p))| over deterministic pseudo-random samples.
double max_orbit_defect(const TorusMap& f, std::size_t samples,
                        std::uint64_t seed = 0x5eed,
                        TargetInvolution target = sphere_involution);

}  // namespace torhom
