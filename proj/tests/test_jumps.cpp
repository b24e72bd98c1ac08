#include <doctest.h>

#include "torhom/degree.hpp"
#include "torhom/errors.hpp"
#include "torhom/jumps.hpp"

using namespace torhom;

namespace {

void check_detected(const JumpCurve& c, int grid = 256) {
  const Detection d = detect_singular(c, grid);
  CHECK(static_cast<int>(d.clusters.size()) == c.predicted_count);
  CHECK(d.matched == c.predicted_count);
  CHECK(d.missed == 0);
  CHECK(d.false_clusters == 0);
}

}  // namespace

TEST_CASE("count formula and its swap convention") {
  CHECK(jump_count_formula(DegreeTriple{1, 1, 0}, DegreeTriple{1, 3, 0}) == 2);
  CHECK(jump_count_formula(DegreeTriple{0, 2, 0}, DegreeTriple{1, 1, 0}) == -1);
  CHECK(jump_count_formula(DegreeTriple{1, 1, 0}, DegreeTriple{0, 2, 0}) == 3);
  CHECK(jump_count_formula(DegreePair{0, 0}, DegreePair{0, 2}) == 2);

  const JumpCurve c = general_jump_type1({0, 2, 0}, {1, 1, 0});
  CHECK(c.predicted_count == 3);
  CHECK(c.signed_count == -1);
  CHECK(c.reversed);
}

TEST_CASE("endpoints carry the requested invariants") {
  const JumpCurve c = general_jump_type1({-1, 2, 1}, {1, 0, -1});
  CHECK(degree_triple(c.slice(-1.0), 128).triple == DegreeTriple{-1, 2, 1});
  CHECK(degree_triple(c.slice(1.0), 128).triple == DegreeTriple{1, 0, -1});
  const JumpCurve e = general_jump_type2({1, 1}, {-1, 3});
  CHECK(degree_pair(e.slice(-1.0), 128).pair == DegreePair{1, 1});
  CHECK(degree_pair(e.slice(1.0), 128).pair == DegreePair{-1, 3});
}

TEST_CASE("flip and fixed-point jumps hit their predicted points") {
  check_detected(degree_flip_jump(1, 0));
  check_detected(degree_flip_jump(1, 1));
  check_detected(fixedpoint_jump(0, 2, CircleSide::C0));
  // Decreasing fixed-point degree.
  check_detected(fixedpoint_jump(1, -1, CircleSide::C1));
}

TEST_CASE("general jumps in both directions") {
  check_detected(general_jump_type1({1, 1, 0}, {1, 3, 0}));
  check_detected(general_jump_type1({1, 3, 0}, {1, 1, 0}));
  check_detected(general_jump_type1({0, 0, 0}, {0, 0, 0}));
  check_detected(general_jump_type2({0, 0}, {0, 2}));
}

TEST_CASE("jump curves are nonsingular away from t = 0") {
  for (const JumpCurve& c : {degree_flip_jump(2, 1), general_jump_type1({0, 2, 0}, {1, 1, 0}),
                             general_jump_type2({1, 1}, {0, 2})}) {
    const NonsingularReport r = check_nonsingular(c, 64);
    CHECK(r.ok);
    CHECK(r.max_orbit_defect < 1e-9);
  }
}

TEST_CASE("naive jump degenerates along whole circles") {
  const JumpCurve c = naive_jump(1, 0, 0, 1);
  const Detection d = detect_singular(c, 128);
  CHECK(d.extended_clusters == 2);
  CHECK(d.false_clusters == 0);
  CHECK(d.singular_vertices >= 2u * 128u);
}

TEST_CASE("rank-n lifts keep the signature and reject bad blocks") {
  const JumpCurve c = rank_n_jump(DegreeTriple{0, 0, 0}, DegreeTriple{0, 2, 0}, 2, 1);
  CHECK(c.matrix_valued());
  CHECK(signature(c.matrix(-1.0, TorusPoint(0.3, 0.1))) == Signature{2, 1});
  CHECK(signature(c.matrix(0.5, TorusPoint(0.7, 0.9))) == Signature{2, 1});
  try {
    rank_n_jump(DegreeTriple{0, 0, 0}, DegreeTriple{0, 2, 0}, 0, 3);
    FAIL("expected BadBlock");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadBlock);
  }
  try {
    rank_n_jump(DegreeTriple{2, 0, 0}, DegreeTriple{0, 2, 0}, 2, 1);
    FAIL("expected NotRealizable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRealizable);
  }
}

TEST_CASE("signature changes force singular points everywhere") {
  MatrixMap a, b;
  a.kernel = [](const TorusPoint&) { return HermitianMatrix::identity(2); };
  b.kernel = [](const TorusPoint&) { return HermitianMatrix::diagonal({1.0, -1.0}); };
  a.p = 2;
  a.q = 0;
  const SignatureJumpReport r = signature_jump_check(a, b, 500);
  CHECK(r.verdict == SignatureVerdict::ImpossibleWithDiscreteSingularSet);
  CHECK(r.witnessed == 500);

  const SignatureJumpReport same = signature_jump_check(b, b, 100);
  CHECK(same.verdict == SignatureVerdict::SameComponent);
  CHECK(same.witnessed == 0);
}
