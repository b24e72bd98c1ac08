#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "torhom/hermitian.hpp"
#include "torhom/invariants.hpp"
#include "torhom/torus.hpp"

namespace torhom {

inline constexpr int kDefaultGrid = 256;
inline constexpr int kWindingSamples = 4096;
inline constexpr std::size_t kEquivarianceOrbits = 1000;
inline constexpr double kEquivarianceTolerance = 1e-6;

struct DegreeResult {
  int degree = 0;
  double raw = 0.0;
  int grid = 0;
};

// Sum of signed solid angles of the image triangles divided by 4 pi.
// Throws ResolutionTooCoarse on near-antipodal edges or a non-integral sum.
DegreeResult total_degree_simplicial(const TorusMap& f, const Grid& grid);
DegreeResult total_degree_simplicial(const std::vector<Vec3>& samples, const Grid& grid);

// Signed count of image triangles covering q. Throws IrregularValue when q
// sits on an image edge.
int total_degree_preimage(const TorusMap& f, const Vec3& q, const Grid& grid);
int total_degree_preimage(const std::vector<Vec3>& samples, const Vec3& q, const Grid& grid);
// Retries with pseudo-random regular values.
int total_degree_preimage(const TorusMap& f, const Grid& grid, std::uint64_t seed = 7);

std::vector<Vec3> sample_unit(const TorusMap& f, const Grid& grid);

struct WindingResult {
  int winding = 0;
  double raw = 0.0;
};

// Loop s -> v(s), s in [0,1), around the z-axis inside the equator.
// Throws OffCircle or StepTooLarge.
WindingResult winding_number(const std::function<Vec3(double)>& loop, int samples = kWindingSamples);

// Throws NotEquivariant when the worst orbit defect exceeds the tolerance.
double check_equivariance(const TorusMap& f, std::size_t orbits = kEquivarianceOrbits,
                          double tolerance = kEquivarianceTolerance);

struct TripleReport {
  DegreeTriple triple;
  double raw_d0 = 0, raw_d = 0, raw_d1 = 0;
  int grid = 0;
  double orbit_defect = 0;
};

struct PairReport {
  DegreePair pair;
  double raw_dC = 0, raw_d = 0;
  int grid = 0;
  double orbit_defect = 0;
};

TripleReport degree_triple(const TorusMap& f, int grid = kDefaultGrid);
PairReport degree_pair(const TorusMap& f, int grid = kDefaultGrid);

// Sphere-valued shadow of a matrix map: retraction for rank 2, the central
// block for larger ranks.
TorusMap sphere_reduction(const MatrixMap& f);

struct MatrixReport {
  Signature signature;
  std::optional<TripleReport> triple;  // type I
  std::optional<PairReport> pair;      // type II
  // Rank > 2: fixed-point windings reduced mod 2, one per fixed circle.
  std::vector<int> fixed_signature;
  double projection_distance = 0;
};

MatrixReport classify_matrix_map(const MatrixMap& f, int grid = kDefaultGrid);

}  // namespace torhom

namespace torhom {

// Invariants of a map given only by unit vectors on an n x n grid (row-major,
// y outer). Equivariance is checked on grid orbits with tolerance 2/n.
TripleReport degree_triple_from_samples(const std::vector<Vec3>& samples, int n);
PairReport degree_pair_from_samples(const std::vector<Vec3>& samples, int n);

}  // namespace torhom
