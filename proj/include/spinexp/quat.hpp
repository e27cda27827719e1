#pragma once

#include <array>
#include <vector>

#include "spinexp/core.hpp"

namespace spinexp {

struct Quaternion {
  double w = 0, x = 0, y = 0, z = 0;

  Quaternion() = default;
  Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

  Quaternion conj() const { return {w, -x, -y, -z}; }
  double norm_sq() const { return w * w + x * x + y * y + z * z; }

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }
};

Quaternion operator*(const Quaternion& a, const Quaternion& b);
Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator*(double s, const Quaternion& a);

/// A formal sum of p (x) q terms.
struct QuatTensorTerm {
  Quaternion p, q;
};
using QuatTensor = std::vector<QuatTensorTerm>;

/// Matrix of v -> sum_t p_t v conj(q_t) on H = R^4 in the basis {1,i,j,k}.
rmat quat_tensor_to_matrix(const QuatTensor& t);
inline rmat quat_tensor_to_matrix(const Quaternion& p, const Quaternion& q) {
  return quat_tensor_to_matrix(QuatTensor{{p, q}});
}

/// Termwise p (x) q -> conj(p) (x) conj(q); realizes matrix transposition.
QuatTensor quat_tensor_conjugate(const QuatTensor& t);

// ---------------------------------------------------------------------------
// realification of complex matrices

/// Each entry a+bi becomes the 2x2 block [[a,b],[-b,a]].
rmat theta_c(const cmat& z);
bool is_theta_c(const rmat& x, double tol = 1e-10);
bool is_anti_theta_c(const rmat& x, double tol = 1e-10);
/// Inverse on the image (entries read off the 2x2 blocks).
cmat theta_c_inverse(const rmat& x);

// ---------------------------------------------------------------------------
// complexification of quaternion matrices

/// theta_h(Z, W) = [[Z, W], [-conj(W), conj(Z)]].
cmat theta_h(const cmat& z, const cmat& w);
/// Convenience: 2x2 quaternion matrix (row-major), entries q = z + w j.
cmat theta_h(const std::array<Quaternion, 4>& q);
bool is_theta_h(const cmat& x, double tol = 1e-10);
bool is_anti_theta_h(const cmat& x, double tol = 1e-10);

/// The real orthogonal U with U^T Jhat4 U = J4.
rmat conjugator_u();

/// U^T y U computed as (1/2)(I + S) y (I - S) with the integer matrix
/// S = sigma_x (x) J2. The two 1/sqrt(2) factors merge into an exact 0.5,
/// so integer inputs (Jhat4 in particular) conjugate without rounding.
rmat conjugate_by_u(const rmat& y);
cmat conjugate_by_u(const cmat& y);
/// U y U^T, the inverse transport.
rmat conjugate_by_u_inverse(const rmat& y);
cmat conjugate_by_u_inverse(const cmat& y);

}  // namespace spinexp
