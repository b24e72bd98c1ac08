#include "torhom/degree.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "torhom/errors.hpp"

namespace torhom {

namespace {

constexpr double kFourPi = 4.0 * std::numbers::pi;
constexpr double kAntipodalSlack = 1e-6;
constexpr double kIntegerSlack = 0.1;
constexpr double kEdgeTolerance = 1e-12;

int sgn(double v) { return (v > 0) - (v < 0); }

}  // namespace

std::vector<Vec3> sample_unit(const TorusMap& f, const Grid& grid) {
  std::vector<Vec3> out(grid.vertex_count());
  for (int j = 0; j < grid.n(); ++j) {
    for (int i = 0; i < grid.n(); ++i) {
      const Vec3 v = f(grid.vertex(i, j));
      const double n = norm(v);
      if (!(n > 0.0) || !std::isfinite(n)) {
        fail(ErrorKind::NormalizationUndefined, "map vanishes on a grid vertex");
      }
      out[grid.index(i, j)] = v * (1.0 / n);
    }
  }
  return out;
}

DegreeResult total_degree_simplicial(const std::vector<Vec3>& v, const Grid& grid) {
  double total = 0.0;
  for (const auto& t : grid.triangles()) {
    const Vec3 &a = v[t.a], &b = v[t.b], &c = v[t.c];
    const double ab = dot(a, b), bc = dot(b, c), ca = dot(c, a);
    if (std::min({ab, bc, ca}) <= -1.0 + kAntipodalSlack) {
      fail(ErrorKind::ResolutionTooCoarse, "adjacent samples are nearly antipodal; refine the grid");
    }
    total += 2.0 * std::atan2(triple(a, b, c), 1.0 + ab + bc + ca);
  }
  const double raw = total / kFourPi;
  const double rounded = std::nearbyint(raw);
  if (std::fabs(raw - rounded) >= kIntegerSlack) {
    fail(ErrorKind::ResolutionTooCoarse, "solid-angle sum is not close to an integer; refine the grid");
  }
  return {static_cast<int>(rounded), raw, grid.n()};
}

DegreeResult total_degree_simplicial(const TorusMap& f, const Grid& grid) {
  return total_degree_simplicial(sample_unit(f, grid), grid);
}

int total_degree_preimage(const std::vector<Vec3>& v, const Vec3& q, const Grid& grid) {
  int count = 0;
  for (const auto& t : grid.triangles()) {
    const Vec3 &a = v[t.a], &b = v[t.b], &c = v[t.c];
    if (std::min({dot(a, b), dot(b, c), dot(c, a)}) <= -1.0 + kAntipodalSlack) {
      fail(ErrorKind::ResolutionTooCoarse, "adjacent samples are nearly antipodal; refine the grid");
    }
    const double o = triple(a, b, c);
    const double e1 = triple(a, b, q), e2 = triple(b, c, q), e3 = triple(c, a, q);
    const int s = sgn(o);
    const bool near_edge = std::min({std::fabs(e1), std::fabs(e2), std::fabs(e3)}) < kEdgeTolerance;
    if (near_edge) {
      // Only an issue if q could lie in this triangle.
      const int pos = (e1 > -kEdgeTolerance) + (e2 > -kEdgeTolerance) + (e3 > -kEdgeTolerance);
      const int neg = (e1 < kEdgeTolerance) + (e2 < kEdgeTolerance) + (e3 < kEdgeTolerance);
      if ((pos == 3 || neg == 3) && dot(q, a + b + c) > 0) {
        fail(ErrorKind::IrregularValue, "value lies on an image edge; perturb it");
      }
      continue;
    }
    if (s == 0) continue;
    if (sgn(e1) == s && sgn(e2) == s && sgn(e3) == s) count += s;
  }
  return count;
}

int total_degree_preimage(const TorusMap& f, const Vec3& q, const Grid& grid) {
  return total_degree_preimage(sample_unit(f, grid), q * (1.0 / norm(q)), grid);
}

int total_degree_preimage(const TorusMap& f, const Grid& grid, std::uint64_t seed) {
  const auto samples = sample_unit(f, grid);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vec3 q{g(rng), g(rng), g(rng)};
    q = q * (1.0 / norm(q));
    try {
      return total_degree_preimage(samples, q, grid);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IrregularValue) throw;
    }
  }
  fail(ErrorKind::IrregularValue, "no regular value found after 16 attempts");
}

WindingResult winding_number(const std::function<Vec3(double)>& loop, int samples) {
  if (samples < 4) fail(ErrorKind::InvalidArgument, "winding number needs at least 4 samples");
  auto angle_at = [&](int k) {
    const Vec3 v = loop(static_cast<double>(k % samples) / samples);
    const double n = norm(v);
    if (!(n > 0.0) || std::fabs(v.z) > 1e-6 * n) {
      fail(ErrorKind::OffCircle, "loop leaves the equator");
    }
    return std::atan2(v.y, v.x);
  };
  double total = 0.0;
  double prev = angle_at(0);
  for (int k = 1; k <= samples; ++k) {
    const double cur = angle_at(k);
    double step = cur - prev;
    step -= 2.0 * std::numbers::pi * std::nearbyint(step / (2.0 * std::numbers::pi));
    if (std::fabs(step) > std::numbers::pi / 2) {
      fail(ErrorKind::StepTooLarge, "loop jumps by more than a quarter turn between samples");
    }
    total += step;
    prev = cur;
  }
  const double raw = total / (2.0 * std::numbers::pi);
  const double rounded = std::nearbyint(raw);
  if (std::fabs(raw - rounded) >= 0.05) fail(ErrorKind::ResolutionTooCoarse, "loop does not close");
  return {static_cast<int>(rounded), raw};
}

double check_equivariance(const TorusMap& f, std::size_t orbits, double tolerance) {
  const double defect = max_orbit_defect(f, orbits);
  if (!(defect < tolerance)) {
    fail(ErrorKind::NotEquivariant, "orbit defect " + std::to_string(defect) + " exceeds tolerance");
  }
  return defect;
}

namespace {

WindingResult circle_winding(const TorusMap& f, const FixedCircle& c) {
  return winding_number([&](double s) { return f(c.at(s)); });
}

}  // namespace

TripleReport degree_triple(const TorusMap& f, int grid) {
  if (f.kind != Involution::TypeI) fail(ErrorKind::InvalidArgument, "degree triple needs a type I map");
  TripleReport r;
  r.orbit_defect = check_equivariance(f);
  const FixedSet fs = fixed_set(Involution::TypeI);
  const auto w0 = circle_winding(f, fs.circles[0]);
  const auto w1 = circle_winding(f, fs.circles[1]);
  const auto d = total_degree_simplicial(f, Grid(grid));
  r.triple = {w0.winding, d.degree, w1.winding};
  r.raw_d0 = w0.raw;
  r.raw_d = d.raw;
  r.raw_d1 = w1.raw;
  r.grid = grid;
  return r;
}

PairReport degree_pair(const TorusMap& f, int grid) {
  if (f.kind != Involution::TypeII) fail(ErrorKind::InvalidArgument, "degree pair needs a type II map");
  PairReport r;
  r.orbit_defect = check_equivariance(f);
  const auto wc = circle_winding(f, fixed_set(Involution::TypeII).circles[0]);
  const auto d = total_degree_simplicial(f, Grid(grid));
  r.pair = {wc.winding, d.degree};
  r.raw_dC = wc.raw;
  r.raw_d = d.raw;
  r.grid = grid;
  return r;
}

TorusMap sphere_reduction(const MatrixMap& f) {
  TorusMap g;
  g.kind = f.kind;
  g.name = f.name;
  const int p = f.p, q = f.q;
  if (p + q == 2) {
    g.kernel = [f](const TorusPoint& pt) { return retract_11_endpoint(f(pt)); };
  } else {
    g.kernel = [f, p, q](const TorusPoint& pt) {
      const Vec3 v = schubert_projection(f(pt), p, q).block;
      const double n = norm(v);
      if (!(n > 0.0)) fail(ErrorKind::NormalizationUndefined, "central block vanishes");
      return v * (1.0 / n);
    };
  }
  return g;
}

MatrixReport classify_matrix_map(const MatrixMap& f, int grid) {
  MatrixReport r;
  const Grid coarse(16);
  bool first = true;
  for (int j = 0; j < coarse.n(); ++j) {
    for (int i = 0; i < coarse.n(); ++i) {
      const TorusPoint pt = coarse.vertex(i, j);
      const HermitianMatrix h = f(pt);
      const Signature s = signature(h);
      if (first) r.signature = s;
      else if (!(s == r.signature)) fail(ErrorKind::SingularMatrix, "signature changes across the torus");
      first = false;
      if (h.n() > 2) {
        r.projection_distance = std::max(r.projection_distance, schubert_projection(h, f.p, f.q).distance);
      }
    }
  }
  if (!(r.signature == Signature{f.p, f.q})) {
    fail(ErrorKind::WrongSignature, "map signature differs from its declared block");
  }
  const TorusMap g = sphere_reduction(f);
  if (f.kind == Involution::TypeI) r.triple = degree_triple(g, grid);
  else r.pair = degree_pair(g, grid);
  if (f.p + f.q > 2) {
    auto bit = [](int w) { return ((w % 2) + 2) % 2; };
    if (r.triple) r.fixed_signature = {bit(r.triple->triple.d0), bit(r.triple->triple.d1)};
    else r.fixed_signature = {bit(r.pair->pair.dC)};
  }
  return r;
}

}  // namespace torhom

namespace torhom {

namespace {

std::vector<Vec3> normalized_samples(const std::vector<Vec3>& samples, int n) {
  if (n < 4 || samples.size() != static_cast<std::size_t>(n) * n) {
    fail(ErrorKind::InvalidArgument, "sample count does not match the grid size");
  }
  std::vector<Vec3> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double len = norm(samples[i]);
    if (!(len > 0.0)) fail(ErrorKind::NormalizationUndefined, "sampled map vanishes on a vertex");
    out[i] = samples[i] * (1.0 / len);
  }
  return out;
}

double sampled_orbit_defect(const std::vector<Vec3>& v, const Grid& g, Involution kind) {
  double worst = 0.0;
  const int n = g.n();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::size_t img = kind == Involution::TypeI ? g.index(i, -j) : g.index(j, i);
      worst = std::max(worst, distance(v[img], sphere_involution(v[g.index(i, j)])));
    }
  }
  return worst;
}

WindingResult sampled_winding(const std::vector<Vec3>& v, const Grid& g, int row, bool diagonal) {
  const int n = g.n();
  return winding_number(
      [&](double s) {
        const int i = std::min(static_cast<int>(std::lround(s * n)), n - 1);
        return diagonal ? v[g.index(i, i)] : v[g.index(i, row)];
      },
      n);
}

void check_sampled_equivariance(const std::vector<Vec3>& v, const Grid& g, Involution kind, double& out) {
  out = sampled_orbit_defect(v, g, kind);
  if (!(out <= 2.0 / g.n())) fail(ErrorKind::NotEquivariant, "sampled map is not equivariant within 2/n");
}

}  // namespace

TripleReport degree_triple_from_samples(const std::vector<Vec3>& samples, int n) {
  if (n % 2 != 0) fail(ErrorKind::InvalidArgument, "type I samples need an even grid");
  const Grid g(n);
  const auto v = normalized_samples(samples, n);
  TripleReport r;
  check_sampled_equivariance(v, g, Involution::TypeI, r.orbit_defect);
  const auto w0 = sampled_winding(v, g, 0, false);
  const auto w1 = sampled_winding(v, g, n / 2, false);
  const auto d = total_degree_simplicial(v, g);
  r.triple = {w0.winding, d.degree, w1.winding};
  r.raw_d0 = w0.raw;
  r.raw_d = d.raw;
  r.raw_d1 = w1.raw;
  r.grid = n;
  return r;
}

PairReport degree_pair_from_samples(const std::vector<Vec3>& samples, int n) {
  const Grid g(n);
  const auto v = normalized_samples(samples, n);
  PairReport r;
  check_sampled_equivariance(v, g, Involution::TypeII, r.orbit_defect);
  const auto wc = sampled_winding(v, g, 0, true);
  const auto d = total_degree_simplicial(v, g);
  r.pair = {wc.winding, d.degree};
  r.raw_dC = wc.raw;
  r.raw_d = d.raw;
  r.grid = n;
  return r;
}

}  // namespace torhom
