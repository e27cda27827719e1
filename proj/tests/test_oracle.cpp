#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "spinexp/oracle.hpp"

using namespace spinexp;

namespace {
std::mt19937_64 rng(777);
double unit() {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return d(rng);
}
}  // namespace

TEST_CASE("series exp against closed forms") {
  // rotation: exp(t J2) = cos t I + sin t J2
  for (double t : {0.1, 1.0, 3.0, 25.0}) {
    rmat x(2, 2);
    x << 0, t, -t, 0;
    rmat e = series_expm(x);
    CHECK(std::abs(e(0, 0) - std::cos(t)) < 1e-13);
    CHECK(std::abs(e(0, 1) - std::sin(t)) < 1e-13);
    CHECK(std::abs(e(1, 0) + std::sin(t)) < 1e-13);
  }

  // nilpotent
  cmat n = cmat::Zero(2, 2);
  n(0, 1) = 3;
  cmat en = series_expm(n);
  CHECK(std::abs(en(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(en(0, 1) - 3.0) < 1e-14);

  // inverse pairing, including the scaled path
  for (int trial = 0; trial < 10; ++trial) {
    cmat a(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) a(r, c) = 4.0 * cplx(unit(), unit());
    cmat prod = series_expm(a) * series_expm(cmat(-a));
    CHECK((prod - cmat::Identity(3, 3)).norm() < 1e-11);
  }
}

TEST_CASE("brute minimal polynomial") {
  cmat d = cmat::Zero(4, 4);
  d(0, 0) = cplx(0, 1);
  d(1, 1) = cplx(0, 1);
  d(2, 2) = cplx(0, -1);
  d(3, 3) = cplx(0, -1);
  auto m = brute_minpoly(d);
  CHECK(m.degree() == 2);  // x^2 + 1
  CHECK(std::abs(m.eval(cplx(0, 1))) < 1e-12);
  CHECK((m.eval(d)).norm() < 1e-12);

  // conjugation does not change it
  cmat g(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = cplx(unit(), unit());
  cmat x = g * d * g.inverse();
  auto mc = brute_minpoly(x);
  CHECK(mc.degree() == 2);
  CHECK((mc.eval(x)).norm() < 1e-8 * std::pow(1 + fnorm(x), 2));

  CHECK(brute_minpoly(cmat::Zero(3, 3)).degree() == 1);
  CHECK(brute_minpoly(cmat::Identity(3, 3)).degree() == 1);

  // defective input cannot be annihilated by the clustered-root candidate
  cmat jordan = cmat::Zero(2, 2);
  jordan(0, 1) = 1;
  jordan(0, 0) = jordan(1, 1) = 2;
  CHECK_THROWS_AS(brute_minpoly(jordan), convergence_error);
}

TEST_CASE("minpoly on random antisymmetric matrices") {
  for (int n : {5, 6}) {
    for (int trial = 0; trial < 20; ++trial) {
      rmat a(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = unit();
      rmat x = a - a.transpose();
      auto m = brute_minpoly(x.cast<cplx>());
      CHECK(m.degree() == n);  // generic spectra have no repeats
      CHECK((m.eval(x.cast<cplx>())).norm() < 1e-7 * std::pow(1 + fnorm(x), m.degree()));
    }
  }
}
