#include "torhom/report.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "torhom/errors.hpp"

namespace torhom {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json to_json(const DegreeTriple& t) { return json{{"d0", t.d0}, {"d", t.d}, {"d1", t.d1}}; }
json to_json(const DegreePair& p) { return json{{"dC", p.dC}, {"d", p.d}}; }
json to_json(const Signature& s) { return json{{"p", s.p}, {"q", s.q}}; }

json matrix_to_json(const HermitianMatrix& h) {
  json re = json::array(), im = json::array();
  for (int i = 0; i < h.n(); ++i) {
    json rr = json::array(), ir = json::array();
    for (int k = 0; k < h.n(); ++k) {
      rr.push_back(h(i, k).real());
      ir.push_back(h(i, k).imag());
    }
    re.push_back(rr);
    im.push_back(ir);
  }
  return json{{"n", h.n()}, {"re", re}, {"im", im}};
}

HermitianMatrix matrix_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  Eigen::MatrixXcd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      m(i, k) = Complex(j.at("re").at(i).at(k).get<double>(), j.at("im").at(i).at(k).get<double>());
    }
  }
  return HermitianMatrix(m);
}

json invariant_report(const TripleReport& r) {
  return json{{"involution", involution_name(Involution::TypeI)},
              {"triple", to_json(r.triple)},
              {"raw", {{"d0", r.raw_d0}, {"d", r.raw_d}, {"d1", r.raw_d1}}},
              {"grid", r.grid},
              {"orbit_defect", r.orbit_defect}};
}

json invariant_report(const PairReport& r) {
  return json{{"involution", involution_name(Involution::TypeII)},
              {"pair", to_json(r.pair)},
              {"raw", {{"dC", r.raw_dC}, {"d", r.raw_d}}},
              {"grid", r.grid},
              {"orbit_defect", r.orbit_defect}};
}

json invariant_report(const MatrixReport& r) {
  json j = r.triple ? invariant_report(*r.triple) : invariant_report(*r.pair);
  j["signature"] = to_json(r.signature);
  if (!r.fixed_signature.empty()) {
    j["fixed_signature"] = r.fixed_signature;
    j["projection_distance"] = r.projection_distance;
  }
  return j;
}

json jump_report(const JumpCurve& c, const Detection& d) {
  json endpoints;
  endpoints["involution"] = involution_name(c.kind);
  if (c.triple_minus) {
    endpoints["minus"] = to_json(*c.triple_minus);
    endpoints["plus"] = to_json(*c.triple_plus);
  } else {
    endpoints["minus"] = to_json(*c.pair_minus);
    endpoints["plus"] = to_json(*c.pair_plus);
  }
  if (c.matrix_valued()) {
    // Measured on a coarse grid; every vertex must agree.
    auto measured = [&](double t) {
      const MatrixMap m = c.matrix_slice(t);
      const Grid g(16);
      const Signature first = signature(m(g.vertex(0, 0)));
      for (int j = 0; j < g.n(); ++j) {
        for (int i = 0; i < g.n(); ++i) {
          const Signature s = signature(m(g.vertex(i, j)));
          if (s.p != first.p || s.q != first.q) fail(ErrorKind::WrongSignature, "endpoint signature is not constant");
        }
      }
      return first;
    };
    endpoints["signature_minus"] = to_json(measured(-1.0));
    endpoints["signature_plus"] = to_json(measured(1.0));
  }

  json detected = json::array();
  for (const auto& cl : d.clusters) {
    detected.push_back(json{{"x", cl.x}, {"y", cl.y}, {"t_star", cl.t_star}, {"residual", cl.residual}});
  }
  const bool circles = !c.predicted_circles.empty();
  bool ok = d.missed == 0 && d.false_clusters == 0;
  if (circles) ok = ok && d.extended_clusters == static_cast<int>(c.predicted_circles.size());
  else ok = ok && static_cast<int>(d.clusters.size()) == c.predicted_count;

  json j{{"construction", c.name},
         {"endpoints", endpoints},
         {"predicted_count", c.predicted_count},
         {"signed_count", c.signed_count},
         {"reversed", c.reversed},
         {"grid", d.grid},
         {"detected", detected},
         {"verdict", ok ? "match" : "mismatch"}};
  if (circles) {
    json names = json::array();
    for (auto side : c.predicted_circles) names.push_back(side == CircleSide::C0 ? "C0" : "C1");
    j["singular_circles"] = names;
    j["singular_vertices"] = d.singular_vertices;
  }
  return j;
}

json export_samples_json(const TorusMap& f, int n) {
  const Grid g(n);
  json samples = json::array();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const TorusPoint p = g.vertex(i, j);
      const Vec3 v = f(p);
      samples.push_back(json{{"x", p.x}, {"y", p.y}, {"fx", v.x}, {"fy", v.y}, {"fz", v.z}});
    }
  }
  return json{{"kind", involution_name(f.kind)}, {"n", n}, {"samples", samples}};
}

std::string export_samples_csv(const TorusMap& f, int n) {
  const Grid g(n);
  std::ostringstream out;
  out << "x,y,fx,fy,fz\n";
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const TorusPoint p = g.vertex(i, j);
      const Vec3 v = f(p);
      out << format_double(p.x) << ',' << format_double(p.y) << ',' << format_double(v.x) << ','
          << format_double(v.y) << ',' << format_double(v.z) << '\n';
    }
  }
  return out.str();
}

std::string export_matrix_samples_csv(const MatrixMap& f, int n) {
  const Grid g(n);
  const int dim = f.p + f.q;
  std::ostringstream out;
  out << "x,y";
  for (int a = 1; a <= dim; ++a) {
    for (int b = 1; b <= dim; ++b) out << ",re_" << a << b << ",im_" << a << b;
  }
  out << '\n';
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const TorusPoint p = g.vertex(i, j);
      const HermitianMatrix h = f(p);
      out << format_double(p.x) << ',' << format_double(p.y);
      for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) out << ',' << format_double(h(a, b).real()) << ',' << format_double(h(a, b).imag());
      }
      out << '\n';
    }
  }
  return out.str();
}

json export_matrix_samples_json(const MatrixMap& f, int n) {
  const Grid g(n);
  json samples = json::array();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const TorusPoint p = g.vertex(i, j);
      json s = matrix_to_json(f(p));
      s["x"] = p.x;
      s["y"] = p.y;
      samples.push_back(s);
    }
  }
  return json{{"kind", involution_name(f.kind)}, {"n", n}, {"signature", to_json(Signature{f.p, f.q})}, {"samples", samples}};
}

namespace {

Involution parse_kind(const std::string& s) {
  if (s == "type-i") return Involution::TypeI;
  if (s == "type-ii") return Involution::TypeII;
  fail(ErrorKind::InvalidArgument, "unknown involution '" + s + "'");
}

// Places samples on the grid by their coordinates.
SampleSet place(Involution kind, const std::vector<std::pair<TorusPoint, Vec3>>& rows) {
  const double root = std::sqrt(static_cast<double>(rows.size()));
  const int n = static_cast<int>(std::lround(root));
  if (n < 4 || static_cast<std::size_t>(n) * n != rows.size()) {
    fail(ErrorKind::InvalidArgument, "sample count is not a square grid");
  }
  SampleSet s;
  s.kind = kind;
  s.n = n;
  s.values.assign(rows.size(), Vec3{});
  std::vector<bool> seen(rows.size(), false);
  const Grid g(n);
  for (const auto& [p, v] : rows) {
    const double fi = p.x * n, fj = p.y * n;
    const long i = std::lround(fi), j = std::lround(fj);
    if (std::fabs(fi - i) > 1e-6 || std::fabs(fj - j) > 1e-6) {
      fail(ErrorKind::InvalidArgument, "sample is not on the uniform grid");
    }
    const std::size_t idx = g.index(static_cast<int>(i), static_cast<int>(j));
    if (seen[idx]) fail(ErrorKind::InvalidArgument, "duplicate sample");
    seen[idx] = true;
    s.values[idx] = v;
  }
  return s;
}

}  // namespace

SampleSet import_samples_json(const json& j) {
  const Involution kind = parse_kind(j.at("kind").get<std::string>());
  std::vector<std::pair<TorusPoint, Vec3>> rows;
  for (const auto& s : j.at("samples")) {
    rows.push_back({TorusPoint(s.at("x").get<double>(), s.at("y").get<double>()),
                    Vec3{s.at("fx").get<double>(), s.at("fy").get<double>(), s.at("fz").get<double>()}});
  }
  SampleSet out = place(kind, rows);
  if (j.contains("n") && j.at("n").get<int>() != out.n) fail(ErrorKind::InvalidArgument, "grid size mismatch");
  return out;
}

SampleSet import_samples_csv(const std::string& text, Involution kind) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail(ErrorKind::InvalidArgument, "empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,y,fx,fy,fz") fail(ErrorKind::InvalidArgument, "CSV header must be x,y,fx,fy,fz");
  std::vector<std::pair<TorusPoint, Vec3>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    double v[5];
    std::size_t pos = 0;
    for (int k = 0; k < 5; ++k) {
      const std::size_t end = k < 4 ? line.find(',', pos) : line.size();
      if (end == std::string::npos) fail(ErrorKind::InvalidArgument, "CSV row needs five columns");
      std::string cell = line.substr(pos, end - pos);
      while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v[k]);
      if (res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        fail(ErrorKind::InvalidArgument, "bad number '" + cell + "' in CSV");
      }
      pos = end + 1;
    }
    rows.push_back({TorusPoint(v[0], v[1]), Vec3{v[2], v[3], v[4]}});
  }
  return place(kind, rows);
}

}  // namespace torhom
