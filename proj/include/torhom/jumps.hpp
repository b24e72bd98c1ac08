#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "torhom/hermitian.hpp"
#include "torhom/invariants.hpp"
#include "torhom/torus.hpp"

namespace torhom {

using SphereFamily = std::function<Vec3(double t, const TorusPoint& p)>;

enum class CircleSide { C0, C1 };

// One-parameter family over t in [-1,1]. Values are vectors in R^3 = isu2;
// with p + q > 2 the family is read through embed_isu2.
struct JumpCurve {
  SphereFamily family;
  Involution kind = Involution::TypeI;
  int p = 1;
  int q = 1;
  std::string name;

  std::optional<DegreeTriple> triple_minus, triple_plus;
  std::optional<DegreePair> pair_minus, pair_plus;

  std::vector<TorusPoint> predicted_points;
  std::vector<CircleSide> predicted_circles;  // whole circles singular at t = 0
  int predicted_count = 0;                    // isolated singular points
  int signed_count = 0;                       // count formula in the requested direction
  bool reversed = false;                      // built backwards and run in reverse time

  int rank() const { return p + q; }
  bool matrix_valued() const { return p + q > 2; }
  Vec3 operator()(double t, const TorusPoint& pt) const { return family(t, pt); }
  HermitianMatrix matrix(double t, const TorusPoint& pt) const;
  TorusMap slice(double t) const;
  MatrixMap matrix_slice(double t) const;
};

// |t|-scaled (x, y) components of two normal forms; C0 and C1 are singular.
JumpCurve naive_jump(int d0_minus, int d1_minus, int d0_plus, int d1_plus);
// <d0|d0-d1|d1> at t = -1 to <d0|d1-d0|d1> at t = +1 through 2(|d0|+|d1|) points.
JumpCurve degree_flip_jump(int d0, int d1);
// <d-|d-|0> to <d+|d+|0> through |d+ - d-| points on C0, or
// <0|d-|d-> to <0|d+|d+> on C1.
JumpCurve fixedpoint_jump(int d_minus, int d_plus, CircleSide side);

// |d0+ - d0-| + |d1+ - d1-| + d+ - (d0+ + d1+) - [d- - (d0- + d1-)]
int jump_count_formula(const DegreeTriple& minus, const DegreeTriple& plus);
// |dC+ - dC-| + d+ - d- + dC- - dC+
int jump_count_formula(const DegreePair& minus, const DegreePair& plus);

JumpCurve general_jump_type1(const DegreeTriple& minus, const DegreeTriple& plus);
JumpCurve general_jump_type2(const DegreePair& minus, const DegreePair& plus);
// Fixed-point entries must be 0 or 1.
JumpCurve rank_n_jump(const DegreeTriple& minus, const DegreeTriple& plus, int p, int q);
JumpCurve rank_n_jump(const DegreePair& minus, const DegreePair& plus, int p, int q);

struct DetectOptions {
  double t_window = 0.05;
  int t_samples = 101;
  double eps_rel = 1e-6;
};

struct DetectedCluster {
  double x = 0, y = 0;
  double t_star = 0;
  double residual = 0;  // |H| for vectors, smallest |eigenvalue| for matrices
  int members = 0;
  double extent = 0;    // largest distance of a member from the centroid
};

struct Detection {
  std::vector<DetectedCluster> clusters;
  int grid = 0;
  double scale = 1;
  double eps = 0;
  std::size_t singular_vertices = 0;  // window minimum below eps before refinement
  std::size_t seeds = 0;
  // Against the curve's prediction:
  int matched = 0;
  int missed = 0;
  int false_clusters = 0;
  int extended_clusters = 0;
};

// Grid scan of min over the t-window, local-minimum seeds, pattern-search
// refinement and periodic clustering. Throws ResolutionTooCoarse when two
// predicted points share a cluster.
Detection detect_singular(const JumpCurve& curve, int grid, const DetectOptions& opt = {});

struct NonsingularReport {
  double min_value = 0;
  double worst_t = 0;
  bool ok = false;
  double max_orbit_defect = 0;
};

// |t| in {0.01, ..., 1} (25 values) with both signs on every grid vertex.
NonsingularReport check_nonsingular(const JumpCurve& curve, int grid, double eps_rel = 1e-6);

enum class SignatureVerdict { SameComponent, ImpossibleWithDiscreteSingularSet };

struct SignatureJumpReport {
  SignatureVerdict verdict = SignatureVerdict::SameComponent;
  Signature minus, plus;
  std::size_t sampled = 0;
  std::size_t witnessed = 0;  // points whose affine interpolation hits det = 0
  double max_residual = 0;    // smallest |eigenvalue| at the located crossing
};

SignatureJumpReport signature_jump_check(const MatrixMap& minus, const MatrixMap& plus,
                                         std::size_t samples = 10000, std::uint64_t seed = 11);

const char* verdict_name(SignatureVerdict v);

}  // namespace torhom
