#include "torhom/jumps.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <random>

#include "torhom/errors.hpp"
#include "torhom/maps.hpp"

namespace torhom {

namespace {

using cd = std::complex<double>;
using CylFamily = std::function<Vec3(double t, double x, double s)>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kPieces = 5;

double phase_of(int d, double u) {
  const double p = static_cast<double>(d) * u;
  return p - std::floor(p);
}

cd loop(int d, double u) { return std::polar(1.0, kTwoPi * phase_of(d, u)); }

// Normal-form shape driven by arbitrary loops: radius |1-2s| times the C0
// loop on the lower half, times the C1 loop on the upper half.
Vec3 loop_form(cd a, cd b, double s, double sign) {
  s = std::clamp(s, 0.0, 1.0);
  const cd w = s <= 0.5 ? (1.0 - 2.0 * s) * a : (2.0 * s - 1.0) * b;
  return {w.real(), w.imag(), sign * 2.0 * std::sqrt(std::max(0.0, s - s * s))};
}

// gamma_d, gamma_k and the null-homotopy ((1-t) z^-k + t + 1)/2 of gamma_{-k}
// run on consecutive thirds of the circle.
cd three_arc(int d, int k, double t, double u) {
  const double v = 3.0 * u;
  const int j = std::min(static_cast<int>(v), 2);
  const double r = v - j;
  if (j == 0) return loop(d, r);
  if (j == 1) return loop(k, r);
  return 0.5 * ((1.0 - t) * loop(-k, r) + t + 1.0);
}

SphereFamily extend_family(CylFamily f) {
  return [f](double t, const TorusPoint& p) {
    if (p.y <= 0.5) return f(t, p.x, 2.0 * p.y);
    return sphere_involution(f(t, p.x, 2.0 * (1.0 - p.y)));
  };
}

CylFamily stack(std::vector<CylFamily> pieces) {
  return [pieces](double t, double x, double s) {
    const int m = static_cast<int>(pieces.size());
    const double scaled = std::clamp(s, 0.0, 1.0) * m;
    const int k = std::min(static_cast<int>(scaled), m - 1);
    return pieces[k](t, x, scaled - k);
  };
}

CylFamily static_piece(const CylinderMap& c) {
  return [c](double, double x, double s) { return c(x, s); };
}

CylFamily fixedpoint_piece(int dm, int dp, CircleSide side) {
  const int k = dp - dm;
  if (side == CircleSide::C0) {
    return [dm, k](double t, double x, double s) {
      return loop_form(three_arc(dm, k, t, x), 1.0, s, kNormalFormHemisphere);
    };
  }
  return [dm, k](double t, double x, double s) {
    return loop_form(1.0, three_arc(dm, k, t, x), s, -kNormalFormHemisphere);
  };
}

// Modified normal form with its height scaled by |t|; the sign picks which
// end carries the mirrored form.
CylFamily flip_piece(int d0, int d1, bool unmirrored_at_plus) {
  const CylinderMap base = modified_normal_form_cylinder(d0, d1, false);
  return [base, unmirrored_at_plus](double t, double x, double s) {
    Vec3 v = base(x, s);
    const bool mirrored = (t < 0) == unmirrored_at_plus;
    v.z *= std::fabs(t) * (mirrored ? -1.0 : 1.0);
    return v;
  };
}

std::vector<double> half_turn_phases(int k) {
  std::vector<double> out;
  const int a = std::abs(k);
  for (int j = 0; j < a; ++j) out.push_back((2.0 * j + 1.0) / (2.0 * a));
  return out;
}

// Torus points where the fixedpoint piece vanishes at t = 0.
void push_circle_zeros(std::vector<TorusPoint>& out, int k, double y) {
  for (double u : half_turn_phases(k)) out.emplace_back((2.0 + u) / 3.0, y);
}

// Torus points where a modified normal form on the sub-cylinder
// y in [y_lo, y_lo + height] hits the poles, plus their mirror images.
void push_pole_zeros(std::vector<TorusPoint>& out, int d0, int d1, double y_lo, double height) {
  for (double u : half_turn_phases(d0)) {
    out.emplace_back(u, y_lo + 0.25 * height);
    out.emplace_back(u, 1.0 - (y_lo + 0.25 * height));
  }
  for (double u : half_turn_phases(d1)) {
    out.emplace_back(u, y_lo + 0.75 * height);
    out.emplace_back(u, 1.0 - (y_lo + 0.75 * height));
  }
}

DegreeTriple flip_triple(int d0, int d1, bool mirrored) {
  return mirrored ? DegreeTriple{d0, d1 - d0, d1} : DegreeTriple{d0, d0 - d1, d1};
}

void require_realizable(const DegreeTriple& t) {
  if (!realizable_triple(t)) {
    fail(ErrorKind::NotRealizable, to_string(t) + " is not realizable: d must equal d0 + d1 (mod 2)");
  }
}

void require_realizable(const DegreePair& p) {
  if (!realizable_pair(p)) {
    fail(ErrorKind::NotRealizable, to_string(p) + " is not realizable: d must equal dC (mod 2)");
  }
}

int excess(const DegreeTriple& t) { return t.d - t.d0 - t.d1; }

// Assumes k >= 0.
JumpCurve build_type1(const DegreeTriple& a, const DegreeTriple& b) {
  const int k = (excess(b) - excess(a)) / 2;
  const int rest = excess(a);

  CylinderMap middle;
  if (rest == 0) {
    middle.kernel = [](double, double) { return kBasePoint; };
    middle.triple = {0, 0, 0};
  } else {
    std::vector<CylinderMap> parts;
    for (const auto& e : decompose_triple({0, rest, 0})) parts.push_back(elementary_cylinder(e));
    middle = stack_cylinders(parts);
  }

  std::vector<CylFamily> pieces = {
      fixedpoint_piece(a.d0, b.d0, CircleSide::C0),
      static_piece(normal_form_cylinder(0, k, true)),
      flip_piece(k, 0, true),
      static_piece(middle),
      fixedpoint_piece(a.d1, b.d1, CircleSide::C1),
  };

  JumpCurve c;
  c.kind = Involution::TypeI;
  c.family = extend_family(stack(pieces));
  c.triple_minus = a;
  c.triple_plus = b;
  const double height = 0.5 / kPieces;
  push_circle_zeros(c.predicted_points, b.d0 - a.d0, 0.0);
  push_pole_zeros(c.predicted_points, k, 0, 2 * height, height);
  push_circle_zeros(c.predicted_points, b.d1 - a.d1, 0.5);
  c.predicted_count = static_cast<int>(c.predicted_points.size());
  return c;
}

JumpCurve time_reversed(JumpCurve c) {
  auto f = c.family;
  c.family = [f](double t, const TorusPoint& p) { return f(-t, p); };
  std::swap(c.triple_minus, c.triple_plus);
  std::swap(c.pair_minus, c.pair_plus);
  c.reversed = !c.reversed;
  return c;
}

void require_block(int p, int q) {
  if (p < 1 || q < 1 || p + q <= 2) fail(ErrorKind::BadBlock, "rank-n jumps need p, q >= 1 and p + q > 2");
}

}  // namespace

HermitianMatrix JumpCurve::matrix(double t, const TorusPoint& pt) const {
  const Vec3 v = family(t, pt);
  if (rank() == 2) return psi_inv(v);
  return embed_isu2(v, p, q);
}

TorusMap JumpCurve::slice(double t) const {
  TorusMap m;
  m.kind = kind;
  m.name = name;
  auto f = family;
  m.kernel = [f, t](const TorusPoint& pt) { return f(t, pt); };
  if (t == -1.0) {
    m.declared_triple = triple_minus;
    m.declared_pair = pair_minus;
  } else if (t == 1.0) {
    m.declared_triple = triple_plus;
    m.declared_pair = pair_plus;
  }
  return m;
}

MatrixMap JumpCurve::matrix_slice(double t) const {
  MatrixMap m;
  m.kind = kind;
  m.p = rank() == 2 ? 1 : p;
  m.q = rank() == 2 ? 1 : q;
  m.name = name;
  JumpCurve self = *this;
  m.kernel = [self, t](const TorusPoint& pt) { return self.matrix(t, pt); };
  return m;
}

JumpCurve naive_jump(int d0m, int d1m, int d0p, int d1p) {
  const CylinderMap minus = normal_form_cylinder(d0m, d1m, false);
  const CylinderMap plus = normal_form_cylinder(d0p, d1p, false);
  JumpCurve c;
  c.name = "naive";
  c.family = extend_family([minus, plus](double t, double x, double s) {
    Vec3 v = t < 0 ? minus(x, s) : plus(x, s);
    v.x *= std::fabs(t);
    v.y *= std::fabs(t);
    return v;
  });
  c.triple_minus = minus.triple;
  c.triple_plus = plus.triple;
  c.predicted_circles = {CircleSide::C0, CircleSide::C1};
  return c;
}

JumpCurve degree_flip_jump(int d0, int d1) {
  JumpCurve c;
  c.name = "degree-flip";
  c.family = extend_family(flip_piece(d0, d1, false));
  c.triple_minus = flip_triple(d0, d1, false);
  c.triple_plus = flip_triple(d0, d1, true);
  push_pole_zeros(c.predicted_points, d0, d1, 0.0, 0.5);
  c.predicted_count = static_cast<int>(c.predicted_points.size());
  c.signed_count = c.predicted_count;
  return c;
}

JumpCurve fixedpoint_jump(int dm, int dp, CircleSide side) {
  JumpCurve c;
  c.name = side == CircleSide::C0 ? "fixedpoint-c0" : "fixedpoint-c1";
  c.family = extend_family(fixedpoint_piece(dm, dp, side));
  if (side == CircleSide::C0) {
    c.triple_minus = DegreeTriple{dm, dm, 0};
    c.triple_plus = DegreeTriple{dp, dp, 0};
  } else {
    c.triple_minus = DegreeTriple{0, dm, dm};
    c.triple_plus = DegreeTriple{0, dp, dp};
  }
  push_circle_zeros(c.predicted_points, dp - dm, side == CircleSide::C0 ? 0.0 : 0.5);
  c.predicted_count = static_cast<int>(c.predicted_points.size());
  c.signed_count = c.predicted_count;
  return c;
}

int jump_count_formula(const DegreeTriple& m, const DegreeTriple& p) {
  return std::abs(p.d0 - m.d0) + std::abs(p.d1 - m.d1) + excess(p) - excess(m);
}

int jump_count_formula(const DegreePair& m, const DegreePair& p) {
  return std::abs(p.dC - m.dC) + p.d - m.d + m.dC - p.dC;
}

JumpCurve general_jump_type1(const DegreeTriple& minus, const DegreeTriple& plus) {
  require_realizable(minus);
  require_realizable(plus);
  const bool backwards = excess(plus) < excess(minus);
  JumpCurve c = backwards ? time_reversed(build_type1(plus, minus)) : build_type1(minus, plus);
  c.name = "general-type-i";
  c.signed_count = jump_count_formula(minus, plus);
  return c;
}

JumpCurve general_jump_type2(const DegreePair& minus, const DegreePair& plus) {
  require_realizable(minus);
  require_realizable(plus);
  const JumpCurve inner = general_jump_type1({0, minus.d, minus.dC}, {0, plus.d, plus.dC});
  JumpCurve c;
  c.name = "general-type-ii";
  c.kind = Involution::TypeII;
  c.reversed = inner.reversed;
  auto f = inner.family;
  c.family = [f](double t, const TorusPoint& p) {
    const auto [x, y] = sphere_to_cylinder(seam_quotient(p));
    return f(t, TorusPoint(x, y));
  };
  c.pair_minus = minus;
  c.pair_plus = plus;
  for (const auto& pt : inner.predicted_points) {
    c.predicted_points.push_back(seam_quotient_inverse(cylinder_to_sphere(pt.x, pt.y)));
  }
  c.predicted_count = static_cast<int>(c.predicted_points.size());
  c.signed_count = jump_count_formula(minus, plus);
  return c;
}

JumpCurve rank_n_jump(const DegreeTriple& minus, const DegreeTriple& plus, int p, int q) {
  require_block(p, q);
  for (const auto& t : {minus, plus}) {
    if (!realizable_signature_triple(t)) {
      fail(ErrorKind::NotRealizable, to_string(t) + " needs fixed-point signatures in {0,1} and d = m0 + m1 (mod 2)");
    }
  }
  JumpCurve c = general_jump_type1(minus, plus);
  c.p = p;
  c.q = q;
  c.name = "rank-n-type-i";
  return c;
}

JumpCurve rank_n_jump(const DegreePair& minus, const DegreePair& plus, int p, int q) {
  require_block(p, q);
  for (const auto& s : {minus, plus}) {
    if (!(s.dC == 0 || s.dC == 1) || !realizable_pair(s)) {
      fail(ErrorKind::NotRealizable, to_string(s) + " needs a fixed-point signature in {0,1} and d = m (mod 2)");
    }
  }
  JumpCurve c = general_jump_type2(minus, plus);
  c.p = p;
  c.q = q;
  c.name = "rank-n-type-ii";
  return c;
}

// ---------------------------------------------------------------------------
// Detector

namespace {

double wrap_half(double d) { return d - std::nearbyint(d); }

struct Functional {
  const JumpCurve& c;
  // Scan and search functional: |H| or |det H|.
  double operator()(double t, const TorusPoint& p) const {
    if (c.matrix_valued()) return std::fabs(determinant(c.matrix(t, p)));
    return norm(c(t, p));
  }
  // Reported residual: |H| or the smallest |eigenvalue|.
  double residual(double t, const TorusPoint& p) const {
    if (c.matrix_valued()) return min_abs_eigenvalue(c.matrix(t, p));
    return norm(c(t, p));
  }
};

struct Probe {
  double t, x, y, value;
};

Probe pattern_search(const Functional& f, Probe start, double step_x, double step_t) {
  Probe best = start;
  int evaluations = 0;
  while ((step_x > 1e-14 || step_t > 1e-14) && best.value > 0.0 && evaluations < 20000) {
    Probe next = best;
    // Diagonal moves follow valleys along the type II fixed circle.
    const double moves[10][3] = {{step_t, 0, 0},       {-step_t, 0, 0},      {0, step_x, 0},
                                 {0, -step_x, 0},      {0, 0, step_x},       {0, 0, -step_x},
                                 {0, step_x, step_x},  {0, -step_x, -step_x}, {0, step_x, -step_x},
                                 {0, -step_x, step_x}};
    for (const auto& mv : moves) {
      const double t = std::clamp(best.t + mv[0], -1.0, 1.0);
      const TorusPoint p(best.x + mv[1], best.y + mv[2]);
      const double v = f(t, p);
      ++evaluations;
      if (v < next.value) next = {t, p.x, p.y, v};
    }
    if (next.value < best.value) {
      best = next;
    } else {
      step_x *= 0.5;
      step_t *= 0.5;
    }
  }
  return best;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

double endpoint_scale(const JumpCurve& c, const Functional& f) {
  const Grid g(32);
  double sum = 0;
  int count = 0;
  for (double t : {-1.0, 1.0}) {
    for (int j = 0; j < g.n(); ++j) {
      for (int i = 0; i < g.n(); ++i) {
        const double r = f.residual(t, g.vertex(i, j));
        sum += r * r;
        ++count;
      }
    }
  }
  (void)c;
  return std::max(std::sqrt(sum / count), 1e-300);
}

}  // namespace

Detection detect_singular(const JumpCurve& c, int n, const DetectOptions& opt) {
  if (opt.t_samples < 2 || !(opt.t_window > 0)) fail(ErrorKind::InvalidArgument, "bad t-window");
  const Grid grid(n);
  const double h = grid.step();
  const Functional f{c};

  Detection out;
  out.grid = n;
  out.scale = endpoint_scale(c, f);
  out.eps = opt.eps_rel * out.scale;
  // |det| of an embedded family is |H|^2 in the underlying vector.
  const double scan_eps = c.matrix_valued() ? out.eps * out.eps : out.eps;

  std::vector<double> ts(opt.t_samples);
  for (int i = 0; i < opt.t_samples; ++i) {
    ts[i] = opt.t_window * (2.0 * i / (opt.t_samples - 1) - 1.0);
  }

  const std::size_t nv = grid.vertex_count();
  std::vector<double> m(nv, INFINITY), tbest(nv, 0.0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const TorusPoint p = grid.vertex(i, j);
      const std::size_t idx = grid.index(i, j);
      for (double t : ts) {
        const double v = f(t, p);
        if (v < m[idx]) {
          m[idx] = v;
          tbest[idx] = t;
        }
      }
      if (m[idx] < scan_eps) ++out.singular_vertices;
    }
  }

  // A vertex next to a zero is at most one grid step of variation above it.
  double variation = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double v = m[grid.index(i, j)];
      variation = std::max({variation, std::fabs(v - m[grid.index(i + 1, j)]),
                            std::fabs(v - m[grid.index(i, j + 1)]), std::fabs(v - m[grid.index(i + 1, j + 1)]),
                            std::fabs(v - m[grid.index(i + 1, j - 1)])});
    }
  }
  const double threshold = variation + scan_eps;

  std::vector<Probe> zeros;
  const double step_t = 2.0 * opt.t_window / (opt.t_samples - 1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::size_t idx = grid.index(i, j);
      const double v = m[idx];
      if (!(v < threshold)) continue;
      bool local_min = true;
      for (int dj = -1; dj <= 1 && local_min; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if ((di || dj) && m[grid.index(i + di, j + dj)] < v) {
            local_min = false;
            break;
          }
        }
      }
      if (!local_min) continue;
      ++out.seeds;
      const TorusPoint p = grid.vertex(i, j);
      const Probe z = pattern_search(f, {tbest[idx], p.x, p.y, v}, h, step_t);
      const double r = f.residual(z.t, TorusPoint(z.x, z.y));
      if (r < out.eps) zeros.push_back({z.t, z.x, z.y, r});
    }
  }

  UnionFind uf(zeros.size());
  for (std::size_t a = 0; a < zeros.size(); ++a) {
    for (std::size_t b = a + 1; b < zeros.size(); ++b) {
      if (torus_distance(TorusPoint(zeros[a].x, zeros[a].y), TorusPoint(zeros[b].x, zeros[b].y)) <= 2.0 * h) {
        uf.unite(a, b);
      }
    }
  }
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> slot(zeros.size(), -1);
  for (std::size_t a = 0; a < zeros.size(); ++a) {
    const std::size_t r = uf.find(a);
    if (slot[r] < 0) {
      slot[r] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[slot[r]].push_back(a);
  }
  for (const auto& g : groups) {
    const Probe& anchor = zeros[g.front()];
    double sx = 0, sy = 0;
    std::size_t best = g.front();
    for (std::size_t a : g) {
      sx += wrap_half(zeros[a].x - anchor.x);
      sy += wrap_half(zeros[a].y - anchor.y);
      if (zeros[a].value < zeros[best].value) best = a;
    }
    const TorusPoint centroid(anchor.x + sx / g.size(), anchor.y + sy / g.size());
    DetectedCluster cl;
    cl.x = centroid.x;
    cl.y = centroid.y;
    cl.t_star = zeros[best].t;
    cl.residual = zeros[best].value;
    cl.members = static_cast<int>(g.size());
    for (std::size_t a : g) {
      cl.extent = std::max(cl.extent, torus_distance(centroid, TorusPoint(zeros[a].x, zeros[a].y)));
    }
    out.clusters.push_back(cl);
  }
  std::sort(out.clusters.begin(), out.clusters.end(), [](const auto& a, const auto& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });

  // Compare with the prediction.
  const double radius = 3.0 * h;
  std::vector<int> hits(out.clusters.size(), 0);
  for (const auto& pt : c.predicted_points) {
    double best = INFINITY;
    long which = -1;
    for (std::size_t k = 0; k < out.clusters.size(); ++k) {
      const double d = torus_distance(pt, TorusPoint(out.clusters[k].x, out.clusters[k].y));
      if (d < best) {
        best = d;
        which = static_cast<long>(k);
      }
    }
    if (which >= 0 && best <= radius) ++hits[which];
    else ++out.missed;
  }
  auto on_predicted_circle = [&](const DetectedCluster& cl) {
    for (CircleSide side : c.predicted_circles) {
      const double y0 = side == CircleSide::C0 ? 0.0 : 0.5;
      if (std::fabs(wrap_half(cl.y - y0)) <= radius) return true;
    }
    return false;
  };
  for (std::size_t k = 0; k < out.clusters.size(); ++k) {
    if (hits[k] >= 2) {
      fail(ErrorKind::ResolutionTooCoarse, "two predicted singular points fall into one cluster; refine the grid");
    }
    if (out.clusters[k].extent > 4.0 * h) ++out.extended_clusters;
    if (hits[k] == 1) ++out.matched;
    else if (!on_predicted_circle(out.clusters[k])) ++out.false_clusters;
  }
  return out;
}

NonsingularReport check_nonsingular(const JumpCurve& c, int n, double eps_rel) {
  const Grid grid(n);
  const Functional f{c};
  const double eps = eps_rel * endpoint_scale(c, f);
  NonsingularReport r;
  r.min_value = INFINITY;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 25; ++k) {
    const double a = 0.01 + (1.0 - 0.01) * k / 24.0;
    for (double t : {-a, a}) {
      for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
          const double v = f.residual(t, grid.vertex(i, j));
          if (v < r.min_value) {
            r.min_value = v;
            r.worst_t = t;
          }
        }
      }
      for (int s = 0; s < 200; ++s) {
        const TorusPoint p(u(rng), u(rng));
        const double d = distance(c(t, apply_involution(c.kind, p)), sphere_involution(c(t, p)));
        r.max_orbit_defect = std::max(r.max_orbit_defect, d);
      }
    }
  }
  r.ok = r.min_value > eps;
  return r;
}

const char* verdict_name(SignatureVerdict v) {
  return v == SignatureVerdict::SameComponent ? "SameComponent" : "ImpossibleWithDiscreteSingularSet";
}

SignatureJumpReport signature_jump_check(const MatrixMap& minus, const MatrixMap& plus,
                                         std::size_t samples, std::uint64_t seed) {
  SignatureJumpReport r;
  const TorusPoint origin(0.0, 0.0);
  r.minus = signature(minus(origin));
  r.plus = signature(plus(origin));
  if (r.minus == r.plus) return r;
  r.verdict = SignatureVerdict::ImpossibleWithDiscreteSingularSet;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t k = 0; k < samples; ++k) {
    const TorusPoint p(u(rng), u(rng));
    const HermitianMatrix a = minus(p), b = plus(p);
    auto mix = [&](double s) { return a * (1.0 - s) + b * s; };
    auto sig_or_zero = [&](double s, bool& singular) {
      singular = false;
      try {
        return signature(mix(s));
      } catch (const Error&) {
        singular = true;
        return Signature{};
      }
    };
    bool sing = false;
    const Signature s0 = sig_or_zero(0.0, sing);
    const Signature s1 = sig_or_zero(1.0, sing);
    ++r.sampled;
    if (s0 == s1) continue;
    double lo = 0.0, hi = 1.0;
    double hit = -1.0;
    for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      const Signature sm = sig_or_zero(mid, sing);
      if (sing) {
        hit = mid;
        break;
      }
      (sm == s0 ? lo : hi) = mid;
    }
    if (hit < 0) hit = 0.5 * (lo + hi);
    if (hit > 0.0 && hit < 1.0) {
      const HermitianMatrix at = mix(hit);
      const double resid = min_abs_eigenvalue(at) / std::max(1.0, spectral_norm(at));
      if (resid < 1e-8) {
        ++r.witnessed;
        r.max_residual = std::max(r.max_residual, resid);
      }
    }
  }
  return r;
}

}  // namespace torhom
