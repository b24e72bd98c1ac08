#include <doctest.h>

#include <algorithm>
#include <random>

#include "torhom/errors.hpp"
#include "torhom/hermitian.hpp"

using namespace torhom;

namespace {

Eigen::MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  return Eigen::HouseholderQR<Eigen::MatrixXcd>(a).householderQ();
}

HermitianMatrix with_spectrum(const std::vector<double>& lambda, std::mt19937_64& rng) {
  const int n = static_cast<int>(lambda.size());
  const Eigen::MatrixXcd u = random_unitary(n, rng);
  Eigen::VectorXcd d(n);
  for (int i = 0; i < n; ++i) d(i) = lambda[i];
  Eigen::MatrixXcd m = u * d.asDiagonal() * u.adjoint();
  m = 0.5 * (m + m.adjoint()).eval();
  return HermitianMatrix(m);
}

}  // namespace

TEST_CASE("signature of matrices built from a known spectrum") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> mag(0.1, 3.0);
  std::uniform_int_distribution<int> size(2, 6);
  for (int k = 0; k < 50; ++k) {
    const int n = size(rng);
    std::uniform_int_distribution<int> pos(0, n);
    const int p = pos(rng);
    std::vector<double> lambda;
    for (int i = 0; i < n; ++i) lambda.push_back(i < p ? mag(rng) : -mag(rng));
    const HermitianMatrix h = with_spectrum(lambda, rng);
    CHECK(signature(h) == Signature{p, n - p});
    std::sort(lambda.begin(), lambda.end());
    const auto ev = eigenvalues(h);
    for (int i = 0; i < n; ++i) CHECK(ev[i] == doctest::Approx(lambda[i]).epsilon(1e-10));
  }
}

TEST_CASE("singular and non-hermitian inputs are rejected") {
  std::mt19937_64 rng(1);
  try {
    signature(with_spectrum({1.0, 0.0, -2.0}, rng));
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SingularMatrix);
  }
  Eigen::MatrixXcd m(2, 2);
  m << 1, Complex(0, 1), Complex(0, 1), 1;
  CHECK_THROWS_AS(HermitianMatrix{m}, Error);
}

TEST_CASE("psi is inverse to psi_inv") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  for (int k = 0; k < 100; ++k) {
    const Su2Vector v{g(rng), g(rng), g(rng)};
    const Su2Vector w = psi(psi_inv(v));
    CHECK(distance(v, w) < 1e-15);
    const auto ev = eigenvalues(psi_inv(v));
    CHECK(ev[0] == doctest::Approx(-norm(v)).epsilon(1e-12));
    CHECK(ev[1] == doctest::Approx(norm(v)).epsilon(1e-12));
  }
  try {
    psi(HermitianMatrix::diagonal({1.0, 0.5}));
    FAIL("expected NonTraceless");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonTraceless);
  }
}

TEST_CASE("block embedding keeps the signature and spectrum") {
  const Su2Vector v{0.3, -0.4, 1.2};
  for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}, {1, 4}}) {
    const HermitianMatrix h = embed_isu2(v, p, q);
    CHECK(h.n() == p + q);
    CHECK(signature(h) == Signature{p, q});
    const auto ev = eigenvalues(h);
    CHECK(std::count_if(ev.begin(), ev.end(), [](double x) { return std::abs(x - 1.0) < 1e-12; }) == p - 1);
    CHECK(std::count_if(ev.begin(), ev.end(), [](double x) { return std::abs(x + 1.0) < 1e-12; }) == q - 1);
    CHECK(std::count_if(ev.begin(), ev.end(), [&](double x) { return std::abs(std::abs(x) - norm(v)) < 1e-12; }) == 2);
  }
  CHECK_THROWS_AS(embed_isu2(v, 0, 2), Error);
}

TEST_CASE("retraction of a (1,1) matrix stays nonsingular") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> mag(0.2, 4.0);
  for (int k = 0; k < 30; ++k) {
    const HermitianMatrix h = with_spectrum({mag(rng), -mag(rng)}, rng);
    const Retraction r = retract_11(h);
    for (double d : r.det) CHECK(d < 0.0);
    CHECK(norm(r.endpoint) == doctest::Approx(1.0).epsilon(1e-14));
    // The endpoint is the direction of the traceless part.
    const Complex tr = h(0, 0) + h(1, 1);
    const HermitianMatrix traceless = h + HermitianMatrix::identity(2) * (-0.5 * tr.real());
    const Su2Vector dir = psi(traceless);
    CHECK(distance(r.endpoint, dir * (1.0 / norm(dir))) < 1e-12);
  }
  try {
    retract_11(HermitianMatrix::identity(2));
    FAIL("expected WrongSignature");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WrongSignature);
  }
}

TEST_CASE("target involution conjugates entries") {
  const HermitianMatrix h = psi_inv({0.5, 0.25, -2.0});
  const HermitianMatrix c = target_involution(h);
  CHECK(psi(c).z == doctest::Approx(2.0));
  CHECK(psi(c).x == doctest::Approx(0.5));
}

TEST_CASE("Schubert projection recovers the central block") {
  const Su2Vector v{0.6, 0.0, -0.8};
  const SchubertProjection s = schubert_projection(embed_isu2(v, 2, 2), 2, 2);
  CHECK(distance(s.block, v) < 1e-14);
  CHECK(s.distance < 1e-14);
}
