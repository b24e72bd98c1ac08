#include "suites.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <sstream>

#include "torhom/degree.hpp"
#include "torhom/errors.hpp"
#include "torhom/hermitian.hpp"
#include "torhom/invariants.hpp"
#include "torhom/jumps.hpp"
#include "torhom/maps.hpp"
#include "torhom/torus.hpp"

namespace torhom::suites {

namespace {

using cd = std::complex<double>;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail_with(const std::string& what) {
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << what;
  }
};

bool same(const DegreeTriple& a, const DegreeTriple& b) { return a.d0 == b.d0 && a.d == b.d && a.d1 == b.d1; }
bool same(const DegreePair& a, const DegreePair& b) { return a.dC == b.dC && a.d == b.d; }

bool integral(double raw) { return std::fabs(raw - std::nearbyint(raw)) < kRawResidual; }

void parity_triples(Outcome& o) {
  int realized = 0, rejected = 0;
  for (int d0 = -3; d0 <= 3; ++d0) {
    for (int d1 = -3; d1 <= 3; ++d1) {
      for (int d = -3; d <= 3; ++d) {
        const DegreeTriple t{d0, d, d1};
        const bool expect = ((d - d0 - d1) % 2 + 2) % 2 == 0;
        try {
          const TorusMap f = realize_triple(t);
          if (!expect) {
            o.fail_with("realized unrealizable " + to_string(t));
            continue;
          }
          const TripleReport r = degree_triple(f, kParityGrid);
          if (!same(r.triple, t)) o.fail_with(to_string(t) + " measured " + to_string(r.triple));
          ++realized;
        } catch (const Error& e) {
          if (expect || e.kind() != ErrorKind::NotRealizable) o.fail_with(to_string(t) + ": " + e.what());
          else ++rejected;
        }
      }
    }
  }
  if (o.pass) o.detail << realized << " realized exactly, " << rejected << " rejected";
}

void parity_pairs(Outcome& o) {
  int realized = 0, rejected = 0;
  for (int dC = -3; dC <= 3; ++dC) {
    for (int d = -3; d <= 3; ++d) {
      const DegreePair p{dC, d};
      const bool expect = ((d - dC) % 2 + 2) % 2 == 0;
      try {
        const TorusMap f = realize_pair(p);
        if (!expect) {
          o.fail_with("realized unrealizable " + to_string(p));
          continue;
        }
        const PairReport r = degree_pair(f, kParityGrid);
        if (!same(r.pair, p)) o.fail_with(to_string(p) + " measured " + to_string(r.pair));
        ++realized;
      } catch (const Error& e) {
        if (expect || e.kind() != ErrorKind::NotRealizable) o.fail_with(to_string(p) + ": " + e.what());
        else ++rejected;
      }
    }
  }
  if (o.pass) o.detail << realized << " realized exactly, " << rejected << " rejected";
}

std::vector<DegreeTriple> elementary_triples(int range) {
  std::vector<DegreeTriple> out;
  for (int a = -range; a <= range; ++a) {
    for (int b = a - 1; b <= a + 1; ++b) {
      if (b < -range || b > range) continue;
      out.push_back({a, a - b, b});
      if (a != b) out.push_back({a, b - a, b});
    }
  }
  return out;
}

void concatenation(Outcome& o) {
  const auto pool = elementary_triples(3);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  double worst = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const DegreeTriple a = pool[pick(rng)];
    std::vector<DegreeTriple> next;
    for (const auto& b : pool) {
      if (b.d0 == a.d1) next.push_back(b);
    }
    const DegreeTriple b = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
    const CylinderMap ca = elementary_cylinder(a), cb = elementary_cylinder(b);
    const Grid g(kParityGrid);
    const DegreeResult da = total_degree_simplicial(extend_cylinder(ca), g);
    const DegreeResult db = total_degree_simplicial(extend_cylinder(cb), g);
    const DegreeResult dab = total_degree_simplicial(extend_cylinder(stack_cylinders({ca, cb})), g);
    for (double raw : {da.raw, db.raw, dab.raw}) worst = std::max(worst, std::fabs(raw - std::nearbyint(raw)));
    if (dab.degree != da.degree + db.degree || !integral(dab.raw)) {
      o.fail_with(to_string(a) + " then " + to_string(b) + ": " + std::to_string(dab.degree) + " != " +
                  std::to_string(da.degree) + " + " + std::to_string(db.degree));
    }
  }
  if (o.pass) o.detail << "20 pairs additive, worst raw residual " << worst;
}

void doubling(Outcome& o) {
  const std::vector<DegreeTriple> bases = {{0, 0, 0},  {0, 2, 0},  {1, 1, 0},  {1, -1, 0}, {0, 1, 1},
                                           {2, -1, 1}, {-1, 3, 0}, {1, 2, 1},  {-2, 1, 1}, {1, 5, 0}};
  const Grid g(kParityGrid);
  for (const auto& t : bases) {
    const TorusMap base = realize_triple(t);
    // Pulls back along (x, y) -> (x, 2y); C0 and C1 then see the same loop.
    TorusMap f = base;
    f.kernel = [base](const TorusPoint& p) { return base(TorusPoint(p.x, 2.0 * p.y)); };
    f.name = "doubled " + to_string(t);
    const DegreeResult df = total_degree_simplicial(f, g);
    const DegreeResult dbase = total_degree_simplicial(base, g);
    double loop_gap = 0;
    for (int k = 0; k < 256; ++k) {
      const double x = k / 256.0;
      loop_gap = std::max(loop_gap, distance(f(TorusPoint(x, 0.0)), f(TorusPoint(x, 0.5))));
    }
    if (loop_gap > 1e-12) o.fail_with(f.name + " has different fixed loops");
    if (df.degree % 2 != 0 || df.degree != 2 * dbase.degree) {
      o.fail_with(f.name + ": degree " + std::to_string(df.degree) + " vs base " + std::to_string(dbase.degree));
    }
  }
  if (o.pass) o.detail << "10 doubled maps, degree = 2 x base";
}

double symmetry_defect() {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  double worst = 0;
  auto rel = [](cd a, cd b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };
  for (int k = 0; k < 200; ++k) {
    const cd z(u(rng), u(rng));
    const cd p = weierstrass_p(z), dp = weierstrass_p_prime(z);
    worst = std::max({worst, rel(weierstrass_p(-z), p), rel(weierstrass_p(std::conj(z)), std::conj(p)),
                      rel(weierstrass_p(cd(0, 1) * z), -p), rel(weierstrass_p(z + 1.0), p),
                      rel(weierstrass_p(z + cd(0, 1)), p), rel(weierstrass_p_prime(-z), -dp),
                      rel(weierstrass_p_prime(std::conj(z)), std::conj(dp)),
                      rel(weierstrass_p_prime(cd(0, 1) * z), cd(0, 1) * dp)});
  }
  return worst;
}

void weierstrass(Outcome& o) {
  const WeierstrassMaps w = weierstrass_maps();
  for (int n : {256, 512}) {
    const auto tp = degree_triple(w.p, n).triple;
    const auto tpp = degree_triple(w.p_prime, n).triple;
    const auto pip = degree_pair(w.i_p, n).pair;
    const auto prot = degree_pair(w.rotated_p_prime, n).pair;
    if (!same(tp, {0, 2, 0})) o.fail_with("p at " + std::to_string(n) + ": " + to_string(tp));
    if (!same(tpp, {1, 3, 0})) o.fail_with("p' at " + std::to_string(n) + ": " + to_string(tpp));
    if (!same(pip, {0, 2})) o.fail_with("i p at " + std::to_string(n) + ": " + to_string(pip));
    if (!same(prot, {1, 3})) o.fail_with("rotated p' at " + std::to_string(n) + ": " + to_string(prot));
  }
  const double sym = symmetry_defect();
  if (!(sym < kSymmetryTolerance)) o.fail_with("symmetry defect " + std::to_string(sym));
  if (o.pass) o.detail << "<0|2|0> <1|3|0> <0|2> <1|3> at 256 and 512, symmetry defect " << sym;
}

void physics(Outcome& o) {
  struct Row {
    double t;
    int m;
    DegreeTriple expect;
  };
  const std::vector<Row> rows = {
      {-3, 1, {0, 0, 0}}, {-1, 1, {0, -1, -1}}, {1, 1, {-1, 1, 0}},  {3, 1, {0, 0, 0}},
      {-3, 2, {0, 0, 0}}, {-1, 2, {0, -2, 0}},  {1, 2, {-1, 2, -1}}, {3, 2, {0, 0, 0}},
  };
  for (const auto& r : rows) {
    const auto got = degree_triple(physics_map(r.t, r.m), kParityGrid).triple;
    if (!same(got, r.expect)) {
      std::ostringstream s;
      s << "t=" << r.t << " m=" << r.m << ": " << to_string(got) << " expected " << to_string(r.expect);
      o.fail_with(s.str());
    }
  }
  if (o.pass) o.detail << "8 table rows matched";
}

std::string describe(const std::string& label, const JumpCurve& c, const Detection& d) {
  std::ostringstream s;
  s << label << ' ' << d.clusters.size() << '/' << c.predicted_count;
  if (c.signed_count != c.predicted_count) s << " [signed " << c.signed_count << ']';
  if (d.false_clusters) s << " (" << d.false_clusters << " false)";
  if (d.missed) s << " (" << d.missed << " missed)";
  return s.str();
}

void check_jump(Outcome& o, std::ostringstream& summary, const std::string& label, const JumpCurve& c,
                int expected) {
  try {
    const Detection d = detect_singular(c, kJumpGrid);
    const bool ok = c.predicted_count == expected && static_cast<int>(d.clusters.size()) == expected &&
                    d.matched == expected && d.missed == 0 && d.false_clusters == 0;
    if (!ok) o.fail_with(describe(label, c, d) + " expected " + std::to_string(expected));
    summary << describe(label, c, d) << ", ";
  } catch (const Error& e) {
    o.fail_with(label + ": " + e.what());
  }
}

void jumps(Outcome& o) {
  std::ostringstream summary;
  for (auto [d0, d1] : {std::pair{1, 0}, {2, 1}, {0, 2}}) {
    check_jump(o, summary, "flip(" + std::to_string(d0) + "," + std::to_string(d1) + ")",
               degree_flip_jump(d0, d1), 2 * (std::abs(d0) + std::abs(d1)));
  }
  struct Fp {
    int dm, dp;
    CircleSide side;
  };
  for (const Fp& f : {Fp{-1, 2, CircleSide::C0}, Fp{0, 1, CircleSide::C1}, Fp{2, 0, CircleSide::C1}}) {
    check_jump(o, summary, "fixed(" + std::to_string(f.dm) + "," + std::to_string(f.dp) + ")",
               fixedpoint_jump(f.dm, f.dp, f.side), std::abs(f.dp - f.dm));
  }
  const std::vector<std::pair<DegreeTriple, DegreeTriple>> triples = {
      {{1, 1, 0}, {1, 3, 0}}, {{0, 2, 0}, {1, 1, 0}}, {{-2, 1, 3}, {1, -2, 1}},
      {{0, 0, 0}, {0, 2, 0}}, {{1, 0, -1}, {0, 1, 1}}};
  for (const auto& [a, b] : triples) {
    // Counted in the direction where the excess grows.
    check_jump(o, summary, to_string(a) + "->" + to_string(b), general_jump_type1(a, b),
               std::max(jump_count_formula(a, b), jump_count_formula(b, a)));
  }
  const std::vector<std::pair<DegreePair, DegreePair>> pairs = {
      {{0, 0}, {0, 2}}, {{1, 1}, {0, 2}}, {{1, 3}, {1, 1}}, {{0, 0}, {2, 0}}, {{-1, 1}, {1, 1}}};
  for (const auto& [a, b] : pairs) {
    check_jump(o, summary, to_string(a) + "->" + to_string(b), general_jump_type2(a, b),
               std::max(jump_count_formula(a, b), jump_count_formula(b, a)));
  }
  if (o.pass) o.detail << summary.str() << "no false clusters";
}

bool constant_signature(const MatrixMap& f, const Signature& want) {
  const Grid g(16);
  for (int j = 0; j < g.n(); ++j) {
    for (int i = 0; i < g.n(); ++i) {
      const Signature s = signature(f(g.vertex(i, j)));
      if (s.p != want.p || s.q != want.q) return false;
    }
  }
  return true;
}

void rank_n(Outcome& o) {
  const DegreeTriple from{0, 0, 0}, to{0, 2, 0};
  const JumpCurve base = general_jump_type1(from, to);
  const Detection db = detect_singular(base, kJumpGrid);
  for (auto [p, q] : {std::pair{2, 1}, {2, 2}, {3, 1}}) {
    const std::string label = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    try {
      const JumpCurve c = rank_n_jump(from, to, p, q);
      if (!constant_signature(c.matrix_slice(-1.0), {p, q}) || !constant_signature(c.matrix_slice(1.0), {p, q})) {
        o.fail_with(label + " endpoint signature");
      }
      const Detection d = detect_singular(c, kJumpGrid);
      if (d.clusters.size() != db.clusters.size() || d.false_clusters != 0 || d.missed != 0) {
        o.fail_with(label + " count " + std::to_string(d.clusters.size()) + " vs " +
                    std::to_string(db.clusters.size()));
      }
      const NonsingularReport ns = check_nonsingular(c, 64);
      if (!ns.ok) o.fail_with(label + " singular at t=" + std::to_string(ns.worst_t));
      o.detail << label << ' ' << d.clusters.size() << ' ';
    } catch (const Error& e) {
      o.fail_with(label + ": " + e.what());
    }
  }
  if (o.pass) o.detail << "points, 2x2 count " << db.clusters.size();
}

MatrixMap constant_matrix(const HermitianMatrix& h, const std::string& name) {
  MatrixMap m;
  m.kernel = [h](const TorusPoint&) { return h; };
  m.kind = Involution::TypeI;
  const Signature s = signature(h);
  m.p = s.p;
  m.q = s.q;
  m.name = name;
  return m;
}

void signature_witness(Outcome& o) {
  const auto id = constant_matrix(HermitianMatrix::identity(2), "identity");
  const auto diag = constant_matrix(HermitianMatrix::diagonal({1.0, -1.0}), "diag(1,-1)");
  const SignatureJumpReport r = signature_jump_check(id, diag, kWitnessSamples);
  if (r.sampled != kWitnessSamples || r.witnessed != r.sampled ||
      r.verdict != SignatureVerdict::ImpossibleWithDiscreteSingularSet) {
    o.fail_with(std::to_string(r.witnessed) + " of " + std::to_string(r.sampled) + " witnessed");
  } else {
    o.detail << r.witnessed << " of " << r.sampled << " points cross det = 0, worst residual " << r.max_residual;
  }
}

std::vector<TorusMap> constructor_outputs() {
  std::vector<TorusMap> out;
  for (auto [a, b] : {std::pair{1, 0}, {2, -1}, {0, 3}}) {
    out.push_back(normal_form(a, b, false));
    out.push_back(normal_form(a, b, true));
    out.push_back(modified_normal_form(a, b, false));
    out.push_back(modified_normal_form(a, b, true));
  }
  for (const DegreeTriple& t : {DegreeTriple{0, 2, 0}, {1, 5, 0}, {2, -4, 0}, {-1, 0, 3}}) out.push_back(realize_triple(t));
  for (const DegreePair& p : {DegreePair{0, 2}, {1, 3}, {-1, 1}, {2, -2}}) out.push_back(realize_pair(p));
  out.push_back(swap_circles(realize_triple({1, 2, -1})));
  out.push_back(mirror(realize_pair({1, 1})));
  const WeierstrassMaps w = weierstrass_maps();
  for (const auto& f : {w.p, w.p_prime, w.i_p, w.rotated_p_prime}) out.push_back(f);
  for (double t : {-1.0, 1.0, 3.0}) out.push_back(physics_map(t, 2));
  const auto jumps = {degree_flip_jump(2, 1), general_jump_type1({0, 2, 0}, {1, 1, 0}),
                      general_jump_type2({1, 1}, {0, 2}), fixedpoint_jump(-1, 2, CircleSide::C0)};
  for (const auto& c : jumps) {
    for (double t : {-1.0, -0.3, 0.4, 1.0}) out.push_back(c.slice(t));
  }
  return out;
}

void equivariance(Outcome& o) {
  std::size_t count = 0;
  double worst = 0;
  for (const TorusMap& f : constructor_outputs()) {
    const double d = max_orbit_defect(f, kOrbitSamples);
    worst = std::max(worst, d);
    if (!(d < kOrbitDefect)) o.fail_with(f.name + " orbit defect " + std::to_string(d));
    ++count;
  }
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (std::size_t k = 0; k < kOrbitSamples; ++k) {
    const TorusPoint p(u(rng), u(rng));
    for (Involution kind : {Involution::TypeI, Involution::TypeII}) {
      const TorusPoint back = apply_involution(kind, apply_involution(kind, p));
      if (back.x != p.x || back.y != p.y) {
        o.fail_with(std::string(involution_name(kind)) + " not involutive");
        break;
      }
    }
    if (!o.pass) break;
  }
  if (o.pass) o.detail << count << " maps, worst defect " << worst << ", involutions exact";
}

void cross_oracle(Outcome& o) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> small(-3, 3);
  const Grid g(kParityGrid);
  int checked = 0;
  while (checked < 20) {
    const bool type_one = checked % 2 == 0;
    TorusMap f;
    if (type_one) {
      const DegreeTriple t{small(rng), small(rng), small(rng)};
      if (!realizable_triple(t)) continue;
      f = realize_triple(t);
    } else {
      const DegreePair p{small(rng), small(rng)};
      if (!realizable_pair(p)) continue;
      f = realize_pair(p);
    }
    const DegreeResult s = total_degree_simplicial(f, g);
    const int pre = total_degree_preimage(f, g, 100 + checked);
    if (s.degree != pre) {
      o.fail_with(f.name + ": simplicial " + std::to_string(s.degree) + " preimage " + std::to_string(pre));
    }
    ++checked;
  }
  if (o.pass) o.detail << "20 maps agree";
}

struct Entry {
  int id;
  const char* title;
  std::function<void(Outcome&)> body;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {1, "type I parity law", parity_triples},
      {2, "type II parity law", parity_pairs},
      {3, "concatenation additivity", concatenation},
      {4, "doubling", doubling},
      {5, "Weierstrass invariants", weierstrass},
      {6, "physics tables", physics},
      {7, "jump singular counts", jumps},
      {8, "rank-n lift", rank_n},
      {9, "signature-jump witness", signature_witness},
      {10, "equivariance", equivariance},
      {11, "degree cross-oracle", cross_oracle},
  };
  return list;
}

}  // namespace

const std::vector<Suite>& catalog() {
  static const std::vector<Suite> list = {
      {"parity", {1, 2}},      {"concatenation", {3}}, {"doubling", {4}},  {"weierstrass", {5}},
      {"physics", {6}},        {"jumps", {7}},         {"rank-n", {8}},    {"signature", {9}},
      {"equivariance", {10}},  {"cross-oracle", {11}}, {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
  };
  return list;
}

bool known_suite(const std::string& name) {
  for (const auto& s : catalog()) {
    if (s.name == name) return true;
  }
  return false;
}

Result run_criterion(int id) {
  for (const auto& e : entries()) {
    if (e.id != id) continue;
    Result r;
    r.id = id;
    r.title = e.title;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.body(o);
    } catch (const std::exception& ex) {
      o.fail_with(std::string("unexpected error: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (id == 1 && r.seconds > kParityBudgetSeconds) o.fail_with("over the time budget");
    r.pass = o.pass;
    r.detail = o.detail.str();
    return r;
  }
  fail(ErrorKind::InvalidArgument, "no criterion " + std::to_string(id));
}

std::vector<Result> run_suite(const std::string& name) {
  for (const auto& s : catalog()) {
    if (s.name != name) continue;
    std::vector<Result> out;
    for (int id : s.criteria) out.push_back(run_criterion(id));
    return out;
  }
  fail(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace torhom::suites
