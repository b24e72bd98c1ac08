#include "torhom/hermitian.hpp"

#include <algorithm>
#include <cmath>

#include "torhom/errors.hpp"

namespace torhom {

HermitianMatrix::HermitianMatrix(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    fail(ErrorKind::NotHermitian, "matrix must be square and non-empty");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (!(defect <= 1e-12 * scale)) fail(ErrorKind::NotHermitian, "matrix is not hermitian");
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::identity(int n) {
  return HermitianMatrix(Eigen::MatrixXcd::Identity(n, n));
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& o) const {
  return HermitianMatrix(m_ + o.m_);
}

HermitianMatrix HermitianMatrix::operator*(double s) const { return HermitianMatrix(m_ * s); }

std::vector<double> eigenvalues(const HermitianMatrix& h) {
  const auto& m = h.data();
  if (h.n() == 1) return {m(0, 0).real()};
  if (h.n() == 2) {
    const double a1 = m(0, 0).real(), a2 = m(1, 1).real();
    const double c = 0.5 * (a1 + a2);
    const double r = std::hypot(0.5 * (a1 - a2), std::abs(m(0, 1)));
    return {c - r, c + r};
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double spectral_norm(const HermitianMatrix& h) {
  const auto ev = eigenvalues(h);
  return std::max(std::fabs(ev.front()), std::fabs(ev.back()));
}

double min_abs_eigenvalue(const HermitianMatrix& h) {
  double best = INFINITY;
  for (double l : eigenvalues(h)) best = std::min(best, std::fabs(l));
  return best;
}

double determinant(const HermitianMatrix& h) {
  if (h.n() == 2) {
    const auto& m = h.data();
    return m(0, 0).real() * m(1, 1).real() - std::norm(m(0, 1));
  }
  return h.data().determinant().real();
}

Signature signature(const HermitianMatrix& h) {
  const auto ev = eigenvalues(h);
  const double tol = kSingularRelTol * std::max(std::fabs(ev.front()), std::fabs(ev.back()));
  Signature s;
  for (double l : ev) {
    if (std::fabs(l) <= tol) fail(ErrorKind::SingularMatrix, "matrix has an eigenvalue at zero");
    (l > 0 ? s.p : s.q) += 1;
  }
  return s;
}

Su2Vector psi(const HermitianMatrix& m) {
  if (m.n() != 2) fail(ErrorKind::NonTraceless, "psi expects a 2x2 matrix");
  const double a = m(0, 0).real();
  const double tr = a + m(1, 1).real();
  const double scale = std::max(1.0, spectral_norm(m));
  if (std::fabs(tr) > 1e-12 * scale) fail(ErrorKind::NonTraceless, "matrix has non-zero trace");
  const double a_sym = 0.5 * (a - m(1, 1).real());
  return {a_sym, m(0, 1).real(), m(0, 1).imag()};
}

HermitianMatrix psi_inv(const Su2Vector& v) {
  Eigen::MatrixXcd m(2, 2);
  m << Complex(v.x, 0), Complex(v.y, v.z), Complex(v.y, -v.z), Complex(-v.x, 0);
  return HermitianMatrix(m);
}

namespace {

HermitianMatrix shift_trace(const HermitianMatrix& h, double t) {
  const double c = 0.5 * (h(0, 0).real() + h(1, 1).real());
  Eigen::MatrixXcd m = h.data();
  m(0, 0) -= t * c;
  m(1, 1) -= t * c;
  return HermitianMatrix(m);
}

void require_11(const HermitianMatrix& h) {
  if (h.n() != 2) fail(ErrorKind::WrongSignature, "retraction expects a 2x2 matrix");
  Signature s;
  try {
    s = signature(h);
  } catch (const Error&) {
    fail(ErrorKind::WrongSignature, "retraction expects signature (1,1), got a singular matrix");
  }
  if (!(s == Signature{1, 1})) {
    fail(ErrorKind::WrongSignature, "retraction expects signature (1,1), got (" +
                                        std::to_string(s.p) + "," + std::to_string(s.q) + ")");
  }
}

Su2Vector unit(const Su2Vector& v) { return v * (1.0 / norm(v)); }

}  // namespace

Retraction retract_11(const HermitianMatrix& h, int steps) {
  require_11(h);
  if (steps < 1) fail(ErrorKind::InvalidArgument, "retraction needs at least one step");
  Retraction r{{}, {}, {}};
  for (int k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) / steps;
    r.path.push_back(shift_trace(h, t));
    r.det.push_back(determinant(r.path.back()));
  }
  r.endpoint = unit(psi(r.path.back()));
  return r;
}

Su2Vector retract_11_endpoint(const HermitianMatrix& h) {
  require_11(h);
  return unit(psi(shift_trace(h, 1.0)));
}

HermitianMatrix embed_isu2(const Su2Vector& v, int p, int q) {
  if (p < 1 || q < 1) fail(ErrorKind::BadBlock, "embedding needs p >= 1 and q >= 1");
  const int n = p + q;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < p - 1; ++i) m(i, i) = 1.0;
  for (int i = p + 1; i < n; ++i) m(i, i) = -1.0;
  m.block(p - 1, p - 1, 2, 2) = psi_inv(v).data();
  return HermitianMatrix(m);
}

HermitianMatrix target_involution(const HermitianMatrix& h) {
  return HermitianMatrix(h.data().conjugate());
}

SchubertProjection schubert_projection(const HermitianMatrix& h, int p, int q) {
  if (p < 1 || q < 1 || p + q != h.n()) fail(ErrorKind::BadBlock, "projection block does not fit");
  Eigen::MatrixXcd blk = h.data().block(p - 1, p - 1, 2, 2);
  const Complex c = 0.5 * (blk(0, 0) + blk(1, 1));
  blk(0, 0) -= c;
  blk(1, 1) -= c;
  const Su2Vector v = psi(HermitianMatrix(blk));
  const double dist = (h.data() - embed_isu2(v, p, q).data()).norm();
  return {v, dist};
}

MatrixMap embed_map(const TorusMap& f, int p, int q) {
  if (p < 1 || q < 1) fail(ErrorKind::BadBlock, "embedding needs p >= 1 and q >= 1");
  MatrixMap m;
  m.kind = f.kind;
  m.p = p;
  m.q = q;
  m.name = f.name;
  m.kernel = [f, p, q](const TorusPoint& pt) { return embed_isu2(f(pt), p, q); };
  return m;
}

}  // namespace torhom
