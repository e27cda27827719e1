#include "spinexp/quat.hpp"

#include <cmath>

namespace spinexp {

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

Quaternion operator*(double s, const Quaternion& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}

rmat quat_tensor_to_matrix(const QuatTensor& t) {
  const std::array<Quaternion, 4> basis = {Quaternion::one(), Quaternion::i(), Quaternion::j(),
                                           Quaternion::k()};
  rmat m = rmat::Zero(4, 4);
  for (const auto& term : t) {
    for (int col = 0; col < 4; ++col) {
      Quaternion image = term.p * basis[col] * term.q.conj();
      m(0, col) += image.w;
      m(1, col) += image.x;
      m(2, col) += image.y;
      m(3, col) += image.z;
    }
  }
  return m;
}

QuatTensor quat_tensor_conjugate(const QuatTensor& t) {
  QuatTensor out;
  out.reserve(t.size());
  for (const auto& term : t) out.push_back({term.p.conj(), term.q.conj()});
  return out;
}

rmat theta_c(const cmat& z) {
  rmat out(2 * z.rows(), 2 * z.cols());
  for (Eigen::Index r = 0; r < z.rows(); ++r)
    for (Eigen::Index c = 0; c < z.cols(); ++c) {
      double a = z(r, c).real(), b = z(r, c).imag();
      out(2 * r, 2 * c) = a;
      out(2 * r, 2 * c + 1) = b;
      out(2 * r + 1, 2 * c) = -b;
      out(2 * r + 1, 2 * c + 1) = a;
    }
  return out;
}

bool is_theta_c(const rmat& x, double tol) {
  if (x.rows() != x.cols() || x.rows() % 2 != 0) return false;
  rmat jt = Jtilde(static_cast<int>(x.rows()));
  return (jt.transpose() * x * jt - x).norm() <= tol * std::max(1.0, x.norm());
}

bool is_anti_theta_c(const rmat& x, double tol) {
  if (x.rows() != x.cols() || x.rows() % 2 != 0) return false;
  rmat jt = Jtilde(static_cast<int>(x.rows()));
  return (jt.transpose() * x * jt + x).norm() <= tol * std::max(1.0, x.norm());
}

cmat theta_c_inverse(const rmat& x) {
  if (x.rows() % 2 != 0 || x.cols() % 2 != 0) throw domain_error("theta_c_inverse: odd dimensions");
  cmat out(x.rows() / 2, x.cols() / 2);
  for (Eigen::Index r = 0; r < out.rows(); ++r)
    for (Eigen::Index c = 0; c < out.cols(); ++c)
      out(r, c) = cplx(x(2 * r, 2 * c), x(2 * r, 2 * c + 1));
  return out;
}

cmat theta_h(const cmat& z, const cmat& w) {
  if (z.rows() != w.rows() || z.cols() != w.cols())
    throw domain_error("theta_h: mismatched blocks");
  Eigen::Index n = z.rows(), m = z.cols();
  cmat out(2 * n, 2 * m);
  out.topLeftCorner(n, m) = z;
  out.topRightCorner(n, m) = w;
  out.bottomLeftCorner(n, m) = -w.conjugate();
  out.bottomRightCorner(n, m) = z.conjugate();
  return out;
}

cmat theta_h(const std::array<Quaternion, 4>& q) {
  cmat z(2, 2), w(2, 2);
  for (int idx = 0; idx < 4; ++idx) {
    int r = idx / 2, c = idx % 2;
    z(r, c) = cplx(q[idx].w, q[idx].x);
    w(r, c) = cplx(q[idx].y, q[idx].z);
  }
  return theta_h(z, w);
}

bool is_theta_h(const cmat& x, double tol) {
  if (x.rows() != x.cols() || x.rows() % 2 != 0) return false;
  rmat jr = J(static_cast<int>(x.rows()));
  cmat j = jr.cast<cplx>();
  return (x * j - j * x.conjugate()).norm() <= tol * std::max(1.0, x.norm());
}

bool is_anti_theta_h(const cmat& x, double tol) {
  if (x.rows() != x.cols() || x.rows() % 2 != 0) return false;
  rmat jr = J(static_cast<int>(x.rows()));
  cmat j = jr.cast<cplx>();
  return (x * j + j * x.conjugate()).norm() <= tol * std::max(1.0, x.norm());
}

namespace {
rmat conjugator_s() {
  rmat sx(2, 2);
  sx << 0, 1, 1, 0;
  return kron(sx, J2());
}
}  // namespace

rmat conjugator_u() {
  // (1/sqrt2)(I - sigma_x (x) i sigma_y)
  return std::sqrt(0.5) * (rmat::Identity(4, 4) - conjugator_s());
}

rmat conjugate_by_u(const rmat& y) {
  rmat s = conjugator_s();
  return 0.5 * ((y - y * s) + s * (y - y * s));
}

cmat conjugate_by_u(const cmat& y) {
  cmat s = conjugator_s().cast<cplx>();
  return 0.5 * ((y - y * s) + s * (y - y * s));
}

rmat conjugate_by_u_inverse(const rmat& y) {
  rmat s = conjugator_s();
  return 0.5 * ((y + y * s) - s * (y + y * s));
}

cmat conjugate_by_u_inverse(const cmat& y) {
  cmat s = conjugator_s().cast<cplx>();
  return 0.5 * ((y + y * s) - s * (y + y * s));
}

}  // namespace spinexp
