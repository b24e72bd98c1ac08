#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "torhom/degree.hpp"
#include "torhom/hermitian.hpp"
#include "torhom/jumps.hpp"
#include "torhom/torus.hpp"

namespace torhom {

using json = nlohmann::ordered_json;

json to_json(const DegreeTriple& t);
json to_json(const DegreePair& p);
json to_json(const Signature& s);

// {n, re:[[...]], im:[[...]]}
json matrix_to_json(const HermitianMatrix& h);
HermitianMatrix matrix_from_json(const json& j);

// {involution, triple:{d0,d,d1}, raw:{...}, grid, orbit_defect}
json invariant_report(const TripleReport& r);
// {involution, pair:{dC,d}, raw:{...}, grid, orbit_defect}
json invariant_report(const PairReport& r);
json invariant_report(const MatrixReport& r);

json jump_report(const JumpCurve& c, const Detection& d);

// {kind, n, samples:[{x,y,fx,fy,fz}]}, row-major with y outer.
json export_samples_json(const TorusMap& f, int n);
// Header x,y,fx,fy,fz.
std::string export_samples_csv(const TorusMap& f, int n);
// Header x,y,re_11,im_11,re_12,...
std::string export_matrix_samples_csv(const MatrixMap& f, int n);
json export_matrix_samples_json(const MatrixMap& f, int n);

struct SampleSet {
  Involution kind = Involution::TypeI;
  int n = 0;
  std::vector<Vec3> values;  // row-major, y outer
};

SampleSet import_samples_json(const json& j);
SampleSet import_samples_csv(const std::string& text, Involution kind);

// Shortest round-trip formatting, locale independent.
std::string format_double(double v);

}  // namespace torhom
