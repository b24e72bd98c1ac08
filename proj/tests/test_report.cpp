#include <doctest.h>

#include "torhom/degree.hpp"
#include "torhom/errors.hpp"
#include "torhom/maps.hpp"
#include "torhom/report.hpp"

using namespace torhom;

TEST_CASE("sample export round-trips through JSON and CSV") {
  const TorusMap f = realize_triple({1, 3, 0});
  const json j = export_samples_json(f, 32);
  CHECK(j["kind"] == "type-i");
  CHECK(j["samples"].size() == 32u * 32u);
  const SampleSet a = import_samples_json(json::parse(j.dump()));
  const SampleSet b = import_samples_csv(export_samples_csv(f, 32), Involution::TypeI);
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t k = 0; k < a.values.size(); ++k) CHECK(distance(a.values[k], b.values[k]) == 0.0);
  CHECK(degree_triple_from_samples(a.values, a.n).triple == DegreeTriple{1, 3, 0});
}

TEST_CASE("exports are byte-identical across runs") {
  const TorusMap f = realize_pair({1, 3});
  CHECK(export_samples_csv(f, 16) == export_samples_csv(f, 16));
  CHECK(export_samples_json(f, 16).dump() == export_samples_json(realize_pair({1, 3}), 16).dump());
}

TEST_CASE("malformed sample files are rejected") {
  CHECK_THROWS_AS(import_samples_csv("a,b,c\n", Involution::TypeI), Error);
  CHECK_THROWS_AS(import_samples_csv("x,y,fx,fy,fz\n0,0,1,0\n", Involution::TypeI), Error);
  CHECK_THROWS_AS(import_samples_csv("x,y,fx,fy,fz\n0,0,1,0,0\n0.5,0,1,0,0\n", Involution::TypeI), Error);
}

TEST_CASE("matrix JSON round trip") {
  const HermitianMatrix h = embed_isu2({0.1, 0.2, 0.3}, 2, 1);
  const HermitianMatrix back = matrix_from_json(matrix_to_json(h));
  CHECK((back.data() - h.data()).norm() == 0.0);
  const std::string csv = export_matrix_samples_csv(embed_map(realize_triple({0, 0, 0}), 1, 1), 4);
  CHECK(csv.rfind("x,y,re_11,im_11,re_12,im_12,re_21,im_21,re_22,im_22\n", 0) == 0);
}

TEST_CASE("float formatting is shortest round-trip") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-2.5e-300) == "-2.5e-300");
}
