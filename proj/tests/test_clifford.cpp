#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "spinexp/clifford.hpp"
#include "spinexp/oracle.hpp"
#include "spinexp/quat.hpp"

using namespace spinexp;

namespace {
std::mt19937_64 rng(31337);
double unit() {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  return d(rng);
}
cmat random_cmat(int n) {
  cmat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = cplx(unit(), unit());
  return m;
}
cmat sx() { return pauli_x(); }
cmat sy() { return pauli_y(); }
cmat sz() { return pauli_z(); }
cmat id2() { return cmat::Identity(2, 2); }
cmat isy() { return (iu * pauli_y()).eval(); }
}  // namespace

TEST_CASE("named bases verify exactly") {
  for (const char* name : {"pauli", "F", "g", "fhat", "Y", "cl41", "cl16", "cl17"}) {
    CAPTURE(name);
    auto s = named_basis(name);
    auto chk = verify_basis(s, 0.0);
    CAPTURE(chk.detail);
    CHECK(chk.ok);
  }
  CHECK_THROWS_AS(named_basis("nope"), domain_error);

  // the Y representation is real: needed downstream for so(6)
  for (const cmat& y : named_basis("Y").basis.f) {
    CHECK(y.imag().norm() == 0.0);
    CHECK((y + y.transpose()).norm() == 0.0);
  }
}

TEST_CASE("J4 conjugation is not reversion for F or g") {
  cmat j4 = J(4).cast<cplx>();
  cmat f5 = named_basis("F").basis.f[4];
  cmat g1 = named_basis("g").basis.f[0];
  CHECK(((-j4) * f5.transpose() * j4 + f5).norm() == 0.0);  // negates, not fixes
  CHECK(((-j4) * g1.transpose() * j4 + g1).norm() == 0.0);
}

TEST_CASE("doubling move") {
  CliffordBasis empty;
  auto cl11 = ic1(empty);
  REQUIRE(cl11.p() == 1);
  REQUIRE(cl11.q() == 1);
  CHECK((cl11.e[0] - sx()).norm() == 0.0);
  CHECK((cl11.f[0] - J(2).cast<cplx>()).norm() == 0.0);

  auto cl41 = ic1(named_basis("pauli").basis);
  CHECK((cl41.e[0] - kron(sz(), sx())).norm() == 0.0);
  CHECK((cl41.e[1] - kron(sz(), sy())).norm() == 0.0);
  CHECK((cl41.e[2] - kron(sz(), sz())).norm() == 0.0);
  CHECK((cl41.e[3] - kron(sx(), id2())).norm() == 0.0);
  CHECK((cl41.f[0] - kron(isy(), id2())).norm() == 0.0);
}

// the 4x4 working chain: Cl(2,3) -> two different Cl(4,1) bases -> Cl(0,5)
namespace {
CliffordBasis cl23() {
  CliffordBasis b;
  b.e = {kron(sz(), sx()), kron(sx(), id2())};
  b.f = {kron(sz(), isy()), kron(sz(), cmat(iu * sz())), kron(isy(), id2())};
  return b;
}
}  // namespace

TEST_CASE("pivot move on Cl(2,3)") {
  auto b = cl23();
  REQUIRE(verify_relations(b).ok);

  auto h = ic3(b, 0);
  REQUIRE(h.p() == 4);
  REQUIRE(h.q() == 1);
  CHECK((h.e[0] - kron(sz(), sx())).norm() == 0.0);
  CHECK((h.e[1] - kron(id2(), sz())).norm() == 0.0);
  CHECK((h.e[2] - kron(id2(), cmat(-sy()))).norm() == 0.0);
  CHECK((h.e[3] - kron(cmat(-sx()), sx())).norm() == 0.0);
  CHECK((h.f[0] - kron(cmat(-isy()), sx())).norm() == 0.0);

  auto hh = ic3(b, 1);
  CHECK((hh.e[0] - kron(sx(), id2())).norm() == 0.0);
  CHECK((hh.e[1] - kron(cmat(-sy()), sy())).norm() == 0.0);
  CHECK((hh.e[2] - kron(cmat(-sy()), sz())).norm() == 0.0);
  CHECK((hh.e[3] - kron(sz(), id2())).norm() == 0.0);
  CHECK((hh.f[0] - kron(isy(), sx())).norm() == 0.0);

  // both volume elements agree
  cmat vol = kron(sy(), sx());
  CHECK((h.e[0] * h.e[1] * h.e[2] * h.e[3] - vol).norm() == 0.0);
  CHECK((hh.e[0] * hh.e[1] * hh.e[2] * hh.e[3] - vol).norm() == 0.0);

  CHECK_THROWS_AS(ic3(b, 2), domain_error);
}

TEST_CASE("volume move reaches fhat, g, F") {
  auto b = cl23();
  // right multiplication on the second pivot basis lands on fhat on the nose
  auto fhat = ic2(ic3(b, 1), Ic2Side::right);
  auto named = named_basis("fhat").basis;
  REQUIRE(fhat.p() == 0);
  REQUIRE(fhat.q() == 5);
  for (int i = 0; i < 5; ++i) CHECK((fhat.f[i] - named.f[i]).norm() == 0.0);

  // on the first pivot basis it gives the g family up to three signs
  auto g = ic2(ic3(b, 0), Ic2Side::right);
  auto gn = named_basis("g").basis;
  double sign[5] = {-1, 1, 1, -1, -1};
  for (int i = 0; i < 5; ++i) CHECK((g.f[i] - sign[i] * gn.f[i]).norm() == 0.0);

  // left multiplication recovers F from Cl(4,1); right flips the first four
  auto f_left = ic2(named_basis("cl41").basis, Ic2Side::left);
  auto f_right = ic2(named_basis("cl41").basis, Ic2Side::right);
  auto fn = named_basis("F").basis;
  for (int i = 0; i < 5; ++i) CHECK((f_left.f[i] - fn.f[i]).norm() == 0.0);
  for (int i = 0; i < 4; ++i) CHECK((f_right.f[i] + fn.f[i]).norm() == 0.0);
  CHECK((f_right.f[4] - fn.f[4]).norm() == 0.0);

  CHECK_THROWS_AS(ic2(named_basis("F").basis), domain_error);
}

TEST_CASE("8x8 chain from Cl(3,3) to Y") {
  CliffordBasis b;
  b.e = {kron(sz(), kron(sz(), sx())), kron(sz(), kron(sx(), id2())),
         kron(sx(), cmat(cmat::Identity(4, 4)))};
  b.f = {kron(sz(), kron(sz(), isy())), kron(sz(), kron(isy(), id2())),
         kron(isy(), cmat(cmat::Identity(4, 4)))};
  REQUIRE(verify_relations(b).ok);

  auto e = ic3(b, 0);
  REQUIRE(e.p() == 4);
  REQUIRE(e.q() == 2);
  CHECK((e.e[0] - kron(sz(), kron(sz(), sx()))).norm() == 0.0);
  CHECK((e.e[1] - kron(id2(), kron(id2(), sz()))).norm() == 0.0);
  CHECK((e.e[2] + kron(id2(), kron(sx(), sx()))).norm() == 0.0);
  CHECK((e.e[3] + kron(sx(), kron(sz(), sx()))).norm() == 0.0);
  CHECK((e.f[0] + kron(id2(), kron(isy(), sx()))).norm() == 0.0);
  CHECK((e.f[1] + kron(isy(), kron(sz(), sx()))).norm() == 0.0);

  cmat vol = kron(isy(), kron(sx(), isy()));
  CHECK((e.e[0] * e.e[1] * e.e[2] * e.e[3] - vol).norm() == 0.0);

  auto y = ic2(e, Ic2Side::right);
  auto yn = named_basis("Y").basis;
  REQUIRE(y.q() == 6);
  for (int i = 0; i < 6; ++i) CHECK((y.f[i] - yn.f[i]).norm() == 0.0);
}

TEST_CASE("lifted involutions match the closed forms") {
  struct Pair {
    const char* parent;
    const char* child;
    int n;
  } pairs[] = {{"pauli", "cl41", 4}, {"F", "cl16", 8}, {"Y", "cl17", 16}};
  for (auto& pr : pairs) {
    CAPTURE(pr.child);
    auto par = named_basis(pr.parent);
    auto child = named_basis(pr.child);
    auto [lrev, lcc] = lift_involutions(par.rev, par.cc);
    for (int t = 0; t < 8; ++t) {
      cmat x = random_cmat(pr.n);
      CHECK((lrev(x) - child.rev(x)).norm() == 0.0);
      CHECK((lcc(x) - child.cc(x)).norm() == 0.0);
    }
  }

  // the same maps via block transposition and J/K conjugation
  auto f = named_basis("F");
  auto [lrev, lcc] = lift_involutions(f.rev, f.cc);
  cmat j8 = J(8).cast<cplx>(), k8 = K(8).cast<cplx>();
  for (int t = 0; t < 8; ++t) {
    cmat x = random_cmat(8);
    CHECK((cmat(-j8) * block_transpose(blockwise(x, f.rev)) * j8 - lcc(x)).norm() == 0.0);
    CHECK((k8 * block_transpose(blockwise(x, f.cc)) * k8 - lrev(x)).norm() == 0.0);
  }
}

TEST_CASE("grade involution") {
  auto y = named_basis("Y");
  cmat jt = Jtilde(8).cast<cplx>();
  for (int t = 0; t < 10; ++t) {
    cmat x = random_cmat(8);
    cmat g = grade_involution(y, x);
    CHECK((g - jt.transpose() * x * jt).norm() < 1e-13 * x.norm());
    CHECK((g - y.cc(y.rev(x))).norm() == 0.0);  // the two orders commute
  }
  // fixes products of two 1-vectors, negates single ones
  cmat y12 = y.basis.f[0] * y.basis.f[1];
  CHECK((grade_involution(y, y12) - y12).norm() == 0.0);
  CHECK((grade_involution(y, y.basis.f[2]) + y.basis.f[2]).norm() == 0.0);
}

TEST_CASE("one-vector coordinates") {
  auto g = named_basis("g");
  double a = unit(), b = unit(), c = unit(), d = unit(), e = unit();
  cmat x = one_vector_from_complex_triple(cplx(c, a), cplx(e, b), cplx(0, d));
  auto ex = expand_in_basis(x, g.basis.generators());
  CHECK(ex.residual < 1e-15);
  CHECK(std::abs(ex.coeff[0] - a) < 1e-15);
  CHECK(std::abs(ex.coeff[1] - b) < 1e-15);
  CHECK(std::abs(ex.coeff[2] - c) < 1e-15);
  CHECK(std::abs(ex.coeff[3] + d) < 1e-15);
  CHECK(std::abs(ex.coeff[4] - e) < 1e-15);
  CHECK(is_one_vector(x, g.basis));

  // a real z2 component falls outside the span
  cmat bad = one_vector_from_complex_triple(cplx(c, a), cplx(e, b), cplx(0.5, d));
  CHECK(!is_one_vector(bad, g.basis));
}

TEST_CASE("spin(6) membership") {
  auto y = named_basis("Y").basis;
  // exponentials of bivectors are members
  for (int t = 0; t < 5; ++t) {
    cmat biv = cmat::Zero(8, 8);
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) biv += unit() * y.f[i] * y.f[j];
    rmat z = series_expm(cmat(biv)).real();
    auto chk = spin6_membership(z);
    CAPTURE(chk.detail);
    CHECK(chk.ok);
  }

  // realified iI4 covers -I on vectors; it belongs
  rmat v = theta_c(cmat(iu * cmat::Identity(4, 4)));
  CHECK(spin6_membership(v).ok);

  // an eighth-root-of-unity phase is orthogonal and even but moves the span
  double r = std::sqrt(0.5);
  rmat w = theta_c(cmat(cplx(r, r) * cmat::Identity(4, 4)));
  auto chk = spin6_membership(w);
  CHECK(!chk.ok);
  CHECK(chk.detail.find("span") != std::string::npos);

  // odd orthogonal: a 1-vector itself
  CHECK(!spin6_membership(y.f[0].real()).ok);
  CHECK(spin6_membership(y.f[0].real()).detail == "odd part present");

  // not orthogonal at all
  rmat junk(8, 8);
  for (int r2 = 0; r2 < 8; ++r2)
    for (int c2 = 0; c2 < 8; ++c2) junk(r2, c2) = unit();
  CHECK(spin6_membership(junk).detail == "not orthogonal");
}
