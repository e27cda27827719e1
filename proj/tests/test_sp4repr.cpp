#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "spinexp/core.hpp"
#include "spinexp/oracle.hpp"
#include "spinexp/quat.hpp"
#include "spinexp/sp4repr.hpp"
#include "spinexp/spincover.hpp"

using namespace spinexp;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::mt19937_64 rng(424242);
double unit() {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return d(rng);
}

CayleyKlein random_ck() {
  CayleyKlein k;
  k.theta = 0.5 * kPi * 0.5 * (unit() + 1.0);
  k.lambda = kPi * (unit() + 1.0);
  k.mu = kPi * (unit() + 1.0);
  return k;
}

cmat diag2(cplx d0, cplx d1) {
  cmat d = cmat::Zero(2, 2);
  d(0, 0) = d0;
  d(1, 1) = d1;
  return d;
}

/// A, B from S1, S2, the diagonal S4 angle lambda, and the phases; the
/// construction route every case except 2 shares.
cmat build_generic(double s1v, double s2v, const cmat& s1, const cmat& s2,
                   double lambda, double aphase, double cphase) {
  double t1 = std::sqrt((1 - s1v) * (1 + s1v));
  double t2 = std::sqrt((1 - s2v) * (1 + s2v));
  cmat s4 = diag2(std::polar(1.0, lambda), std::polar(1.0, -lambda));
  cmat s3 = (s2 * s4 * s1.transpose()).adjoint();  // from S4 = S2^* S3^* conj(S1)
  cmat a = std::polar(1.0, aphase) * s1 * diag2(s1v, s2v) * s2.adjoint();
  cmat b = std::polar(1.0, -cphase) * s3.conjugate() * s2.conjugate() *
           diag2(t1, t2) * s2.transpose();
  return theta_h(a, b);
}

cmat build_case2(double sigma, const cmat& s1, double aphase, double bphase) {
  // Solve the A^* B symmetry condition for S2's mixing angle.
  CayleyKlein k1 = cayley_klein(s1);
  double mu2 = 1.3, lambda2 = -0.4;
  double t = std::tan(k1.theta) * std::cos(lambda2 - k1.mu) /
             std::cos(mu2 - k1.lambda);
  if (t < 0) {
    mu2 += kPi;
    t = -t;
  }
  CayleyKlein k2{std::atan(t), lambda2 + 2 * kPi, mu2};
  double th = std::sqrt((1 - sigma) * (1 + sigma));
  cmat a = sigma * std::polar(1.0, aphase) * s1;
  cmat b = th * std::polar(1.0, bphase) * k2.matrix();
  return theta_h(a, b);
}

bool in_sp4(const cmat& x, double tol) {
  cmat j4 = J(4).cast<cplx>();
  return (x.adjoint() * x - cmat::Identity(4, 4)).norm() <= tol &&
         (x.transpose() * j4 * x - j4).norm() <= tol;
}

}  // namespace

TEST_CASE("cayley klein round trip") {
  for (int k = 0; k < 25; ++k) {
    CayleyKlein ck = random_ck();
    cmat m = ck.matrix();
    CHECK((m.adjoint() * m - cmat::Identity(2, 2)).norm() < 1e-15);
    CHECK(std::abs(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) - 1.0) < 1e-15);
    CayleyKlein back = cayley_klein(m);
    CHECK((back.matrix() - m).norm() < 1e-14);
  }
  CHECK_THROWS_AS(cayley_klein(2.0 * cmat::Identity(2, 2)), domain_error);
  CHECK_THROWS_AS(cayley_klein(diag2(1.0, iu)), domain_error);  // det = i
  CHECK_THROWS_AS(cayley_klein(cmat::Identity(3, 3)), domain_error);
}

TEST_CASE("identity and the J pattern decompose to cases 3 and 4") {
  Sp4Params p = decompose_sp4(cmat::Identity(4, 4));
  CHECK(p.kind == ReprCase::case3);
  CHECK(p.sigma1 == 1.0);
  CHECK(p.sigma2 == 1.0);
  CHECK((reconstruct_sp4(p) - cmat::Identity(4, 4)).norm() < 1e-14);

  cmat j_pattern = theta_h(cmat::Zero(2, 2), cmat::Identity(2, 2));
  Sp4Params q = decompose_sp4(j_pattern);
  CHECK(q.kind == ReprCase::case4);
  CHECK(q.sigma1 == 0.0);
  CHECK((reconstruct_sp4(q) - j_pattern).norm() < 1e-14);
}

TEST_CASE("targeted constructions hit all six cases") {
  for (int trial = 0; trial < 12; ++trial) {
    cmat s1 = random_ck().matrix();
    cmat s2 = random_ck().matrix();
    double lam = kPi * (unit() + 1.0);
    double aph = 1.5 * unit();
    double cph = 1.5 * unit();

    struct Row {
      ReprCase kind;
      cmat x;
    };
    std::vector<Row> rows = {
        {ReprCase::case1, build_generic(0.8, 0.5, s1, s2, lam, aph, cph)},
        {ReprCase::case2, build_case2(0.6, s1, aph, cph)},
        {ReprCase::case3, build_generic(1.0, 1.0, s1, s2, 0, aph, 0)},
        {ReprCase::case4, build_generic(0.0, 0.0, s1, s2, 0, 0, cph)},
        {ReprCase::case5, build_generic(0.7, 0.0, s1, s2, lam, aph, cph)},
        {ReprCase::case6, build_generic(1.0, 0.6, s1, s2, lam, aph, cph)},
    };

    for (const auto& row : rows) {
      CAPTURE(to_string(row.kind));
      REQUIRE(in_sp4(row.x, 1e-12));
      Sp4Params p = decompose_sp4(row.x);
      CHECK(p.kind == row.kind);
      CHECK((reconstruct_sp4(p) - row.x).norm() < 1e-10);
      CHECK(p.sigma2 <= p.sigma1);
      CHECK(p.sigma1 <= 1.0);
      CHECK(std::abs(p.theta1 * p.theta1 + p.sigma1 * p.sigma1 - 1) < 1e-12);

      // the unitarity relations on the recovered blocks
      cmat a = reconstruct_sp4(p).block(0, 0, 2, 2);
      cmat b = reconstruct_sp4(p).block(0, 2, 2, 2);
      CHECK((a.adjoint() * a + b.transpose() * b.conjugate() -
             cmat::Identity(2, 2))
                .norm() < 1e-10);
      CHECK((a.adjoint() * b - (a.adjoint() * b).transpose()).norm() < 1e-10);

      if (p.kind == ReprCase::case1 || p.kind == ReprCase::case5 ||
          p.kind == ReprCase::case6)
        CHECK(verify_s4_constraint(p) < 1e-10);
      if (p.kind == ReprCase::case2) {
        double c1 = std::cos(p.s1.theta), sn1 = std::sin(p.s1.theta);
        double c2 = std::cos(p.s2.theta), sn2 = std::sin(p.s2.theta);
        CHECK(std::abs(c1 * sn2 * std::cos(p.s2.mu - p.s1.lambda) -
                       sn1 * c2 * std::cos(p.s2.lambda - p.s1.mu)) < 1e-10);
      }
    }
  }
}

TEST_CASE("cases 5 and 6 reduce B to the diagonal two-phase form") {
  for (int trial = 0; trial < 10; ++trial) {
    cmat s1 = random_ck().matrix();
    cmat s2 = random_ck().matrix();
    double lam = kPi * (unit() + 1.0);

    Sp4Params p5 =
        decompose_sp4(build_generic(0.7, 0.0, s1, s2, lam, unit(), unit()));
    REQUIRE(p5.kind == ReprCase::case5);
    cmat b5 = reconstruct_sp4(p5).block(0, 2, 2, 2);
    cmat want5 =
        p5.s1.matrix() *
        diag2(p5.theta1 * std::polar(1.0, p5.lambda - p5.c),
              std::polar(1.0, -(p5.lambda + p5.c))) *
        p5.s2.matrix().transpose();
    CHECK((b5 - want5).norm() < 1e-10);

    Sp4Params p6 =
        decompose_sp4(build_generic(1.0, 0.6, s1, s2, lam, unit(), unit()));
    REQUIRE(p6.kind == ReprCase::case6);
    cmat b6 = reconstruct_sp4(p6).block(0, 2, 2, 2);
    cmat want6 = std::polar(1.0, -p6.c) * p6.s1.matrix() *
                 diag2(0.0, p6.theta2 * std::polar(1.0, -p6.lambda)) *
                 p6.s2.matrix().transpose();
    CHECK((b6 - want6).norm() < 1e-10);
  }
}

TEST_CASE("random symplectic exponentials decompose as the generic case") {
  auto basis = sp4_basis();
  for (int trial = 0; trial < 60; ++trial) {
    cmat y = cmat::Zero(4, 4);
    for (const auto& g : basis) y += 0.35 * unit() * g;
    cmat x = series_expm(y);
    REQUIRE(in_sp4(x, 1e-12));

    Sp4Params p = decompose_sp4(x);
    CHECK(p.kind == ReprCase::case1);
    CHECK((reconstruct_sp4(p) - x).norm() < 1e-9);
    CHECK(verify_s4_constraint(p) < 1e-10);
  }
}

TEST_CASE("s4 constraint flags a non-diagonal S4") {
  Sp4Params p;
  p.kind = ReprCase::case1;
  p.sigma1 = 0.8;
  p.sigma2 = 0.5;
  p.theta1 = std::sqrt(1 - 0.64);
  p.theta2 = std::sqrt(1 - 0.25);
  p.s1 = random_ck();
  p.s2 = random_ck();
  p.s3 = random_ck();  // generic: S4 = S2^* S3^* conj(S1) has off-diagonals
  CHECK(verify_s4_constraint(p) > 1e-3);

  p.s3 = cayley_klein(
      (p.s2.matrix() * diag2(std::polar(1.0, 0.7), std::polar(1.0, -0.7)) *
       p.s1.matrix().transpose())
          .adjoint());
  CHECK(verify_s4_constraint(p) < 1e-12);

  p.kind = ReprCase::case2;
  CHECK_THROWS_AS(verify_s4_constraint(p), domain_error);
}

TEST_CASE("membership validation") {
  CHECK_THROWS_AS(decompose_sp4(2.0 * cmat::Identity(4, 4)), domain_error);
  cmat u = cmat::Identity(4, 4);
  u(3, 3) = iu;  // unitary but not symplectic
  CHECK_THROWS_AS(decompose_sp4(u), domain_error);
  CHECK_THROWS_AS(decompose_sp4(cmat::Identity(2, 2)), domain_error);
}

TEST_CASE("borderline singular values fall back to case 1") {
  cmat s1 = random_ck().matrix();
  cmat s2 = random_ck().matrix();

  // sigma2 inside the coincidence band but above the snap width
  cmat x = build_generic(0.7, 5e-9, s1, s2, 0.9, 0.3, -0.8);
  Sp4Params p = decompose_sp4(x);
  CHECK(p.kind == ReprCase::case1);
  CHECK((reconstruct_sp4(p) - x).norm() < 1e-9);

  // sigma2 below the snap width is treated as exactly zero
  cmat y = build_generic(0.7, 1e-11, s1, s2, 0.9, 0.3, -0.8);
  Sp4Params q = decompose_sp4(y);
  CHECK(q.kind == ReprCase::case5);
  CHECK(q.sigma2 == 0.0);
  CHECK((reconstruct_sp4(q) - y).norm() < 1e-9);

  // near-unit sigma1 likewise prefers the generic recovery
  cmat z = build_generic(1.0 - 5e-9, 0.6, s1, s2, 0.9, 0.3, -0.8);
  Sp4Params r = decompose_sp4(z);
  CHECK(r.kind == ReprCase::case1);
  CHECK((reconstruct_sp4(r) - z).norm() < 1e-9);
}
