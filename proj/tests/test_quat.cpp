#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "spinexp/quat.hpp"

using namespace spinexp;

namespace {
std::mt19937_64 rng(4242);
double unit() {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return d(rng);
}
Quaternion random_quat() { return {unit(), unit(), unit(), unit()}; }
cmat random_cmat(int n) {
  cmat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = cplx(unit(), unit());
  return m;
}
}  // namespace

TEST_CASE("quaternion algebra") {
  auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  Quaternion ij = i * j;
  CHECK(ij.z == 1.0);
  CHECK(ij.w == 0.0);
  Quaternion ji = j * i;
  CHECK(ji.z == -1.0);
  Quaternion i2 = i * i;
  CHECK(i2.w == -1.0);
  Quaternion kk = k * k;
  CHECK(kk.w == -1.0);

  Quaternion p = random_quat(), q = random_quat();
  Quaternion lhs = (p * q).conj();
  Quaternion rhs = q.conj() * p.conj();
  CHECK(std::abs(lhs.w - rhs.w) + std::abs(lhs.x - rhs.x) + std::abs(lhs.y - rhs.y) +
            std::abs(lhs.z - rhs.z) <
        1e-14);
}

TEST_CASE("tensor product matrices") {
  auto one = Quaternion::one(), i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK((quat_tensor_to_matrix(one, i) - Jhat4()).norm() == 0.0);
  CHECK((quat_tensor_to_matrix(one, j) - J(4)).norm() == 0.0);
  CHECK((quat_tensor_to_matrix(j, one) - Jbreve4()).norm() == 0.0);

  rmat i_left = quat_tensor_to_matrix(i, one);
  rmat expect = -kron(rmat::Identity(2, 2), J2());
  CHECK((i_left - expect).norm() == 0.0);

  // multiplicative: M_{p1 q1} M_{p2 q2} = M_{(p1 p2)(q1 q2)}
  for (int trial = 0; trial < 20; ++trial) {
    Quaternion p1 = random_quat(), q1 = random_quat(), p2 = random_quat(), q2 = random_quat();
    rmat lhs = quat_tensor_to_matrix(p1, q1) * quat_tensor_to_matrix(p2, q2);
    rmat rhs = quat_tensor_to_matrix(p1 * p2, q1 * q2);
    CHECK((lhs - rhs).norm() < 1e-13 * (1 + rhs.norm()));
  }

  // conjugating both slots transposes the matrix
  for (int trial = 0; trial < 20; ++trial) {
    QuatTensor t = {{random_quat(), random_quat()}, {random_quat(), random_quat()}};
    rmat m = quat_tensor_to_matrix(t);
    rmat mt = quat_tensor_to_matrix(quat_tensor_conjugate(t));
    CHECK((mt - m.transpose()).norm() < 1e-14 * (1 + m.norm()));
  }
}

TEST_CASE("realification") {
  for (int trial = 0; trial < 20; ++trial) {
    cmat a = random_cmat(3), b = random_cmat(3);
    rmat ra = theta_c(a), rb = theta_c(b);
    CHECK((ra * rb - theta_c(cmat(a * b))).norm() < 1e-13 * (1 + ra.norm() * rb.norm()));
    CHECK(is_theta_c(ra));
    CHECK((theta_c_inverse(ra) - a).norm() == 0.0);
  }
  // commuting with Jtilde characterizes the image; generic real matrices fail
  rmat g(6, 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) g(r, c) = unit();
  CHECK(!is_theta_c(g));
  // anticommuting part: theta_c(a) times the swap direction
  rmat jt = Jtilde(6);
  rmat anti = theta_c(random_cmat(3)) * (kron(rmat::Identity(3, 3), (rmat(2, 2) << 1, 0, 0, -1).finished()));
  CHECK(is_anti_theta_c(anti));
  CHECK((jt.transpose() * anti * jt + anti).norm() < 1e-13);
}

TEST_CASE("quaternion matrices to complex") {
  for (int trial = 0; trial < 20; ++trial) {
    std::array<Quaternion, 4> qa, qb;
    for (auto& q : qa) q = random_quat();
    for (auto& q : qb) q = random_quat();
    cmat a = theta_h(qa), b = theta_h(qb);
    CHECK(is_theta_h(a));
    CHECK(is_theta_h(cmat(a * b)));  // image is closed under products

    // quaternion product of the 2x2 arrays maps to the matrix product
    std::array<Quaternion, 4> qc;
    qc[0] = qa[0] * qb[0] + qa[1] * qb[2];
    qc[1] = qa[0] * qb[1] + qa[1] * qb[3];
    qc[2] = qa[2] * qb[0] + qa[3] * qb[2];
    qc[3] = qa[2] * qb[1] + qa[3] * qb[3];
    CHECK((theta_h(qc) - a * b).norm() < 1e-13 * (1 + a.norm() * b.norm()));
  }
  CHECK(!is_theta_h(random_cmat(4)));
  // i * theta_h image anticommutes with the J-conjugation
  std::array<Quaternion, 4> qa;
  for (auto& q : qa) q = random_quat();
  CHECK(is_anti_theta_h(cmat(iu * theta_h(qa))));
}

TEST_CASE("conjugator") {
  rmat u = conjugator_u();
  CHECK((u.transpose() * u - rmat::Identity(4, 4)).norm() < 1e-15);
  CHECK((u.transpose() * Jhat4() * u - J(4)).norm() < 1e-15);

  // merged-half form is exact on integer matrices
  CHECK((conjugate_by_u(Jhat4()) - J(4)).norm() == 0.0);
  CHECK((conjugate_by_u_inverse(J(4)) - Jhat4()).norm() == 0.0);

  // agrees with the explicit product on random input and round-trips
  for (int trial = 0; trial < 10; ++trial) {
    rmat y(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) y(r, c) = unit();
    rmat z = conjugate_by_u(y);
    CHECK((z - u.transpose() * y * u).norm() < 1e-14 * (1 + y.norm()));
    CHECK((conjugate_by_u_inverse(z) - y).norm() < 1e-14 * (1 + y.norm()));
  }
}
