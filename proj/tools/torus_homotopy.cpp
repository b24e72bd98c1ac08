#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "suites.hpp"
#include "torhom/degree.hpp"
#include "torhom/errors.hpp"
#include "torhom/jumps.hpp"
#include "torhom/maps.hpp"
#include "torhom/report.hpp"

using namespace torhom;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;
constexpr int kExitNumerical = 70;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  bool type_i = false;
  bool type_ii = false;
  std::string triple, pair, builtin, input, from, to, construction = "general", format = "json", output, suite;
  double t = 1.0;
  int m = 1;
  int grid = 0;
  int rank = 0, p = 0, q = 0;
  int samples = 64;
};

std::vector<int> parse_ints(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw Usage(std::string("bad integer list for ") + what + ": '" + text + "'");
    }
  }
  return out;
}

DegreeTriple as_triple(const std::vector<int>& v, const char* what) {
  if (v.size() != 3) throw Usage(std::string(what) + " needs three entries d0,d,d1");
  return {v[0], v[1], v[2]};
}

DegreePair as_pair(const std::vector<int>& v, const char* what) {
  if (v.size() != 2) throw Usage(std::string(what) + " needs two entries dC,d");
  return {v[0], v[1]};
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int default_grid() {
  if (const char* env = std::getenv("TORUS_HOMOTOPY_GRID")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Usage(std::string("TORUS_HOMOTOPY_GRID is not an integer: '") + env + "'");
    }
  }
  return kDefaultGrid;
}

int resolve_grid(const Config& c) {
  const int n = c.grid > 0 ? c.grid : default_grid();
  if (n < 16 || !power_of_two(n)) throw Usage("grid must be a power of two and at least 16");
  return n;
}

Involution involution_of(const Config& c, Involution fallback) {
  if (c.type_i && c.type_ii) throw Usage("choose one of --type-i and --type-ii");
  if (c.type_i) return Involution::TypeI;
  if (c.type_ii) return Involution::TypeII;
  return fallback;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Usage("cannot write '" + path + "'");
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void export_samples(const Config& c, const TorusMap& f) {
  if (c.output.empty()) return;
  if (c.samples < 4) throw Usage("--samples must be at least 4");
  if (c.format == "csv") write_text(c.output, export_samples_csv(f, c.samples));
  else write_text(c.output, export_samples_json(f, c.samples).dump(2) + "\n");
}

// Runs body at the resolved grid, and once more at twice that grid when
// the first attempt is too coarse.
template <class Body>
int with_refinement(int grid, Body body) {
  try {
    return body(grid);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ResolutionTooCoarse) throw;
    std::cerr << "note: " << e.what() << "; retrying at grid " << 2 * grid << '\n';
  }
  return body(2 * grid);
}

int cmd_realize(const Config& c) {
  const int grid = resolve_grid(c);
  if (!c.triple.empty() && !c.pair.empty()) throw Usage("give either --triple or --pair");
  const Involution kind = involution_of(c, c.pair.empty() ? Involution::TypeI : Involution::TypeII);
  if (kind == Involution::TypeI) {
    if (c.triple.empty()) throw Usage("type I realization needs --triple d0,d,d1");
    const DegreeTriple want = as_triple(parse_ints(c.triple, "--triple"), "--triple");
    const TorusMap f = realize_triple(want);
    return with_refinement(grid, [&](int n) {
      const TripleReport r = degree_triple(f, n);
      const bool match = r.triple.d0 == want.d0 && r.triple.d == want.d && r.triple.d1 == want.d1;
      export_samples(c, f);
      emit(json{{"command", "realize"}, {"requested", to_json(want)}, {"report", invariant_report(r)}, {"match", match}});
      return match ? kExitOk : kExitNumerical;
    });
  }
  if (c.pair.empty()) throw Usage("type II realization needs --pair dC,d");
  const DegreePair want = as_pair(parse_ints(c.pair, "--pair"), "--pair");
  const TorusMap f = realize_pair(want);
  return with_refinement(grid, [&](int n) {
    const PairReport r = degree_pair(f, n);
    const bool match = r.pair.dC == want.dC && r.pair.d == want.d;
    export_samples(c, f);
    emit(json{{"command", "realize"}, {"requested", to_json(want)}, {"report", invariant_report(r)}, {"match", match}});
    return match ? kExitOk : kExitNumerical;
  });
}

std::optional<TorusMap> builtin_map(const Config& c) {
  if (c.builtin.empty()) return std::nullopt;
  const WeierstrassMaps w = weierstrass_maps();
  if (c.builtin == "weierstrass-p") return w.p;
  if (c.builtin == "weierstrass-p-prime") return w.p_prime;
  if (c.builtin == "i-weierstrass-p") return w.i_p;
  if (c.builtin == "rotated-weierstrass-p-prime") return w.rotated_p_prime;
  if (c.builtin == "physics") {
    if (c.m < 1) throw Usage("--m must be a positive integer");
    return physics_map(c.t, c.m);
  }
  throw Usage("unknown builtin '" + c.builtin + "'");
}

json report_for(const TorusMap& f, int n) {
  return f.kind == Involution::TypeI ? invariant_report(degree_triple(f, n)) : invariant_report(degree_pair(f, n));
}

int cmd_classify(const Config& c) {
  const int grid = resolve_grid(c);
  if (c.builtin.empty() == c.input.empty()) throw Usage("classify needs exactly one of --builtin and --input");
  if (const auto f = builtin_map(c)) {
    if ((c.type_i && f->kind != Involution::TypeI) || (c.type_ii && f->kind != Involution::TypeII)) {
      throw Usage("builtin '" + c.builtin + "' is " + involution_name(f->kind));
    }
    return with_refinement(grid, [&](int n) {
      json j{{"command", "classify"}, {"source", c.builtin}};
      if (c.builtin == "physics") j["parameters"] = {{"t", c.t}, {"m", c.m}};
      j["report"] = report_for(*f, n);
      emit(j);
      return kExitOk;
    });
  }
  const std::string text = read_text(c.input);
  const bool csv = c.input.size() >= 4 && c.input.compare(c.input.size() - 4, 4, ".csv") == 0;
  SampleSet s;
  try {
    s = csv ? import_samples_csv(text, involution_of(c, Involution::TypeI)) : import_samples_json(json::parse(text));
  } catch (const json::exception& e) {
    throw Usage(std::string("cannot parse '") + c.input + "': " + e.what());
  } catch (const Error& e) {
    throw Usage(e.what());
  }
  if (!csv && (c.type_i || c.type_ii) && involution_of(c, s.kind) != s.kind) {
    throw Usage("sample file declares " + std::string(involution_name(s.kind)));
  }
  const json report = s.kind == Involution::TypeI ? invariant_report(degree_triple_from_samples(s.values, s.n))
                                                  : invariant_report(degree_pair_from_samples(s.values, s.n));
  emit(json{{"command", "classify"}, {"source", c.input}, {"report", report}});
  return kExitOk;
}

JumpCurve build_jump(const Config& c) {
  if (c.from.empty() || c.to.empty()) throw Usage("jump needs --from and --to");
  const auto a = parse_ints(c.from, "--from"), b = parse_ints(c.to, "--to");
  const bool rank_given = c.rank != 0 || c.p != 0 || c.q != 0;
  if (rank_given) {
    if (c.construction != "general") throw Usage("--rank only applies to the general construction");
    if (c.p < 1 || c.q < 1) throw Usage("--rank needs --p and --q, both at least 1");
    if (c.rank != 0 && c.rank != c.p + c.q) throw Usage("--rank must equal p + q");
  }
  const int p = rank_given ? c.p : 1, q = rank_given ? c.q : 1;
  if (c.construction == "general") {
    const Involution kind = involution_of(c, a.size() == 2 ? Involution::TypeII : Involution::TypeI);
    if (kind == Involution::TypeI) {
      const DegreeTriple lo = as_triple(a, "--from"), hi = as_triple(b, "--to");
      return p + q > 2 ? rank_n_jump(lo, hi, p, q) : general_jump_type1(lo, hi);
    }
    const DegreePair lo = as_pair(a, "--from"), hi = as_pair(b, "--to");
    return p + q > 2 ? rank_n_jump(lo, hi, p, q) : general_jump_type2(lo, hi);
  }
  if (c.type_ii) throw Usage("construction '" + c.construction + "' is type I only");
  if (c.construction == "flip") {
    if (a.size() != 2 || b.size() != 2 || a != b) throw Usage("flip takes --from d0,d1 --to d0,d1 (same degrees)");
    return degree_flip_jump(a[0], a[1]);
  }
  if (c.construction == "fixedpoint-c0" || c.construction == "fixedpoint-c1") {
    if (a.size() != 1 || b.size() != 1) throw Usage("fixed-point jumps take single degrees --from d --to d");
    return fixedpoint_jump(a[0], b[0], c.construction == "fixedpoint-c0" ? CircleSide::C0 : CircleSide::C1);
  }
  if (c.construction == "naive") {
    if (a.size() != 2 || b.size() != 2) throw Usage("naive takes --from d0,d1 --to d0,d1");
    return naive_jump(a[0], a[1], b[0], b[1]);
  }
  throw Usage("unknown construction '" + c.construction + "'");
}

int cmd_jump(const Config& c) {
  const int grid = resolve_grid(c);
  const JumpCurve curve = build_jump(c);
  return with_refinement(grid, [&](int n) {
    const Detection d = detect_singular(curve, n);
    json j{{"command", "jump"}};
    j.update(jump_report(curve, d));
    emit(j);
    return j["verdict"] == "match" ? kExitOk : kExitNumerical;
  });
}

int cmd_verify(const Config& c) {
  if (!suites::known_suite(c.suite)) throw Usage("unknown suite '" + c.suite + "'");
  const auto results = suites::run_suite(c.suite);
  bool all = true;
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& r : results) {
      rows.push_back(json{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
      all = all && r.pass;
    }
    emit(json{{"command", "verify"}, {"suite", c.suite}, {"results", rows}, {"pass", all}});
  } else {
    for (const auto& r : results) {
      std::printf("%s  %2d  %-26s %s\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), r.detail.c_str());
      all = all && r.pass;
    }
  }
  return all ? kExitOk : kExitNumerical;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::ResolutionTooCoarse:
    case ErrorKind::IrregularValue:
    case ErrorKind::StepTooLarge:
    case ErrorKind::OffCircle:
    case ErrorKind::PoleHit:
      return kExitNumerical;
    case ErrorKind::InvalidArgument:
      return kExitUsage;
    default:
      return kExitDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivariant maps on the torus: realization, invariants and jump curves"};
  app.require_subcommand(1);
  Config c;

  auto kind_flags = [&](CLI::App* s) {
    s->add_flag("--type-i", c.type_i, "Use the involution [z] -> [conj z]");
    s->add_flag("--type-ii", c.type_ii, "Use the involution [z] -> [i conj z]");
    s->add_option("--grid", c.grid, "Grid size (power of two, >= 16); default from TORUS_HOMOTOPY_GRID or 256");
  };

  auto* realize = app.add_subcommand("realize", "Build a map with the given invariants and measure it");
  kind_flags(realize);
  realize->add_option("--triple", c.triple, "Degree triple d0,d,d1");
  realize->add_option("--pair", c.pair, "Degree pair dC,d");
  realize->add_option("--output", c.output, "Write grid samples to this file");
  realize->add_option("--format", c.format, "Sample format")->check(CLI::IsMember({"json", "csv"}));
  realize->add_option("--samples", c.samples, "Samples per side of the exported grid");

  auto* classify = app.add_subcommand("classify", "Compute the invariants of a builtin map or a sample file");
  kind_flags(classify);
  classify->add_option("--builtin", c.builtin, "weierstrass-p, weierstrass-p-prime, i-weierstrass-p, "
                                               "rotated-weierstrass-p-prime or physics");
  classify->add_option("--input", c.input, "Sample file (.json or .csv)");
  classify->add_option("--t", c.t, "Physics parameter t");
  classify->add_option("--m", c.m, "Physics cover degree m");

  auto* jump = app.add_subcommand("jump", "Build a jump curve and locate its singular points");
  kind_flags(jump);
  jump->add_option("--from", c.from, "Invariant at t = -1");
  jump->add_option("--to", c.to, "Invariant at t = +1");
  jump->add_option("--construction", c.construction, "general, flip, fixedpoint-c0, fixedpoint-c1 or naive")
      ->check(CLI::IsMember({"general", "flip", "fixedpoint-c0", "fixedpoint-c1", "naive"}));
  jump->add_option("--rank", c.rank, "Matrix size p + q");
  jump->add_option("--p", c.p, "Positive eigenvalues");
  jump->add_option("--q", c.q, "Negative eigenvalues");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", c.suite, "parity, concatenation, doubling, weierstrass, physics, jumps, rank-n, "
                                       "signature, equivariance, cross-oracle or all")
      ->required();
  verify->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  verify->callback([&] {
    if (c.format == "json" && verify->count("--format") == 0) c.format = "text";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*realize) return cmd_realize(c);
    if (*classify) return cmd_classify(c);
    if (*jump) return cmd_jump(c);
    return cmd_verify(c);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << error_kind_name(e.kind()) << "): " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}
