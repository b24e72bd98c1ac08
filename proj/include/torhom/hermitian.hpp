#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "torhom/torus.hpp"
#include "torhom/vec3.hpp"

namespace torhom {

using Complex = std::complex<double>;

class HermitianMatrix {
 public:
  // Rejects inputs that are not hermitian within 1e-12 (relative to the
  // largest entry), then symmetrizes exactly.
  explicit HermitianMatrix(const Eigen::MatrixXcd& m);

  static HermitianMatrix identity(int n);
  static HermitianMatrix diagonal(const std::vector<double>& d);

  int n() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& data() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  HermitianMatrix operator+(const HermitianMatrix& o) const;
  HermitianMatrix operator*(double s) const;

 private:
  Eigen::MatrixXcd m_;
};

struct Signature {
  int p = 0;
  int q = 0;
  bool operator==(const Signature&) const = default;
};

// Ascending. Closed form for n <= 2, self-adjoint solver otherwise.
std::vector<double> eigenvalues(const HermitianMatrix& h);
double spectral_norm(const HermitianMatrix& h);
double min_abs_eigenvalue(const HermitianMatrix& h);
double determinant(const HermitianMatrix& h);

inline constexpr double kSingularRelTol = 1e-10;

// Throws SingularMatrix if some |eigenvalue| <= 1e-10 * ||H||.
Signature signature(const HermitianMatrix& h);

// [[a, b], [conj b, -a]] <-> (a, Re b, Im b).
Su2Vector psi(const HermitianMatrix& m);
HermitianMatrix psi_inv(const Su2Vector& v);

struct Retraction {
  std::vector<HermitianMatrix> path;  // H - t c I for t on a uniform grid in [0,1]
  std::vector<double> det;
  Su2Vector endpoint;                 // unit vector
};

// Deformation of a (1,1) matrix onto the unit sphere in isu2.
// Throws WrongSignature for any other signature.
Retraction retract_11(const HermitianMatrix& h, int steps = 100);
Su2Vector retract_11_endpoint(const HermitianMatrix& h);

// Diag(I_{p-1}, psi_inv(v), -I_{q-1}). Throws BadBlock if p < 1 or q < 1.
HermitianMatrix embed_isu2(const Su2Vector& v, int p, int q);

// Entrywise conjugation.
HermitianMatrix target_involution(const HermitianMatrix& h);

struct SchubertProjection {
  Su2Vector block;  // psi of the traceless part of the central 2x2 block
  double distance;  // Frobenius distance to embed_isu2(block, p, q)
};

SchubertProjection schubert_projection(const HermitianMatrix& h, int p, int q);

using MatrixKernel = std::function<HermitianMatrix(const TorusPoint&)>;

struct MatrixMap {
  MatrixKernel kernel;
  Involution kind = Involution::TypeI;
  int p = 1;
  int q = 1;
  std::string name;

  HermitianMatrix operator()(const TorusPoint& pt) const { return kernel(pt); }
};

// Lifts a sphere-valued map through embed_isu2.
MatrixMap embed_map(const TorusMap& f, int p, int q);

}  // namespace torhom
