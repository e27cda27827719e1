#include "spinexp/clifford.hpp"

#include <cmath>

namespace spinexp {

namespace {

cmat cm(const rmat& x) { return x.cast<cplx>(); }

cmat sx() { return pauli_x(); }
cmat sy() { return pauli_y(); }
cmat sz() { return pauli_z(); }
cmat id2() { return cmat::Identity(2, 2); }
cmat isy() { return cm(J2()); }  // i sigma_y

std::vector<cmat> f_generators() {
  cplx mi(0, -1);
  return {kron(sx(), cmat(mi * sx())), kron(sx(), cmat(mi * sy())), kron(sx(), cmat(mi * sz())),
          cmat(iu * kron(sz(), id2())), cm(J(4))};
}

std::vector<cmat> y_generators() {
  return {kron(sx(), kron(isy(), cmat(-sz()))),       kron(isy(), kron(sx(), sx())),
          kron(isy(), kron(id2(), sz())),             cmat(-kron(sz(), kron(isy(), sz()))),
          cmat(-kron(id2(), kron(isy(), sx()))),      cmat(-kron(isy(), kron(sz(), sx())))};
}

std::vector<cmat> g_generators() {
  return {cmat(iu * kron(sx(), id2())), kron(isy(), sy()), kron(isy(), sz()),
          cmat(iu * kron(sz(), id2())), kron(isy(), sx())};
}

std::vector<cmat> fhat_generators() {
  return {cmat(iu * kron(sz(), sx())), cmat(iu * kron(id2(), sz())), cmat(-kron(id2(), isy())),
          cmat(-iu * kron(sx(), sx())), kron(isy(), sx())};
}

}  // namespace

int CliffordBasis::dim() const {
  if (!e.empty()) return static_cast<int>(e.front().rows());
  if (!f.empty()) return static_cast<int>(f.front().rows());
  return 1;
}

std::vector<cmat> CliffordBasis::generators() const {
  std::vector<cmat> out = e;
  out.insert(out.end(), f.begin(), f.end());
  return out;
}

Involution inv_adjoint() {
  return {"adjoint", [](const cmat& x) { return cmat(x.adjoint()); }};
}

Involution inv_transpose() {
  return {"transpose", [](const cmat& x) { return cmat(x.transpose()); }};
}

Involution inv_transpose_by(const cmat& m, const cmat& minv, const std::string& name) {
  return {name, [m, minv](const cmat& x) { return cmat(minv * x.transpose() * m); }};
}

Involution inv_adjoint_by(const cmat& m, const cmat& minv, const std::string& name) {
  return {name, [m, minv](const cmat& x) { return cmat(minv * x.adjoint() * m); }};
}

cmat grade_involution(const CliffordStructure& s, const cmat& x) { return s.rev(s.cc(x)); }

CliffordStructure named_basis(const std::string& name) {
  if (name == "pauli") {
    CliffordBasis b{{sx(), sy(), sz()}, {}};
    cmat j2 = cm(J2());
    return {b, inv_adjoint(), inv_transpose_by(j2, cmat(-j2), "J2-transpose")};
  }
  if (name == "F") {
    CliffordBasis b{{}, f_generators()};
    cmat jh = cm(Jhat4());
    return {b, inv_transpose_by(jh, cmat(-jh), "Jhat4-transpose"), inv_adjoint()};
  }
  if (name == "g") {
    CliffordBasis b{{}, g_generators()};
    cmat jt = cm(Jtilde(4));
    return {b, inv_transpose_by(jt, cmat(-jt), "Jtilde4-transpose"), inv_adjoint()};
  }
  if (name == "fhat") {
    CliffordBasis b{{}, fhat_generators()};
    cmat jb = cm(Jbreve4());
    return {b, inv_transpose_by(jb, cmat(-jb), "Jbreve4-transpose"), inv_adjoint()};
  }
  if (name == "Y") {
    CliffordBasis b{{}, y_generators()};
    cmat jt = cm(Jtilde(8));
    return {b, inv_transpose_by(jt, cmat(-jt), "Jtilde8-transpose"), inv_transpose()};
  }
  if (name == "cl41") {
    CliffordBasis b = ic1(named_basis("pauli").basis);
    cmat m = kron(sx(), sy());
    cmat j4 = cm(J(4));
    return {b, inv_transpose_by(m, m, "sxsy-transpose"), inv_adjoint_by(j4, cmat(-j4), "J4-adjoint")};
  }
  if (name == "cl16") {
    CliffordBasis b = ic1(named_basis("F").basis);
    cmat k8 = cm(K(8));
    cmat p = kron(cm(J2()), cm(Jhat4()));  // [[0, Jhat4], [-Jhat4, 0]], its own inverse
    return {b, inv_adjoint_by(k8, k8, "K8-adjoint"), inv_transpose_by(p, p, "P-transpose")};
  }
  if (name == "cl17") {
    CliffordBasis b = ic1(named_basis("Y").basis);
    cmat k16 = cm(K(16));
    cmat qq = kron(cm(J2()), cm(Jtilde(8)));  // [[0, Jtilde8], [-Jtilde8, 0]], its own inverse
    return {b, inv_transpose_by(k16, k16, "K16-transpose"), inv_transpose_by(qq, qq, "Q-transpose")};
  }
  throw domain_error("named_basis: unknown name " + name);
}

namespace {
std::string gen_label(const CliffordBasis& b, int i) {
  return i < b.p() ? "e" + std::to_string(i + 1) : "f" + std::to_string(i - b.p() + 1);
}
}  // namespace

BasisCheck verify_relations(const CliffordBasis& b, double tol) {
  auto gens = b.generators();
  const int p = b.p();
  const int n = static_cast<int>(gens.size());
  cmat eye = cmat::Identity(b.dim(), b.dim());
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      cmat anti = gens[i] * gens[j] + gens[j] * gens[i];
      if (i == j) anti -= 2.0 * (i < p ? 1.0 : -1.0) * eye;
      if (anti.norm() > tol)
        return {false, gen_label(b, i) + "," + gen_label(b, j) + " relation residual " +
                           std::to_string(anti.norm())};
    }
  }
  return {};
}

BasisCheck verify_basis(const CliffordStructure& s, double tol) {
  auto rel = verify_relations(s.basis, tol);
  if (!rel.ok) return rel;
  auto gens = s.basis.generators();
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    if ((s.rev(gens[i]) - gens[i]).norm() > tol)
      return {false, "rev does not fix " + gen_label(s.basis, i)};
    if ((s.cc(gens[i]) + gens[i]).norm() > tol)
      return {false, "cc does not negate " + gen_label(s.basis, i)};
  }
  return {};
}

CliffordBasis ic1(const CliffordBasis& b) {
  const int n = b.dim();
  cmat up = cm((rmat(2, 2) << 1, 0, 0, -1).finished());
  CliffordBasis out;
  for (const cmat& g : b.e) out.e.push_back(kron(up, g));
  out.e.push_back(cm(K(2 * n)));
  for (const cmat& g : b.f) out.f.push_back(kron(up, g));
  out.f.push_back(cm(J(2 * n)));
  return out;
}

namespace {
cmat flip_leading(const cmat& x) {
  for (Eigen::Index r = 0; r < x.rows(); ++r)
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      cplx v = x(r, c);
      if (std::abs(v) < 1e-12) continue;
      bool neg = v.real() < -1e-12 || (std::abs(v.real()) <= 1e-12 && v.imag() < 0);
      return neg ? cmat(-x) : x;
    }
  return x;
}
}  // namespace

CliffordBasis ic2(const CliffordBasis& b, Ic2Side side, bool flip_to_canonical) {
  if (b.p() < 4) throw domain_error("ic2 needs at least four +1 generators");
  cmat g = b.e[0] * b.e[1] * b.e[2] * b.e[3];
  CliffordBasis out;
  for (int i = 4; i < b.p(); ++i) out.e.push_back(b.e[i]);
  for (int i = 0; i < 4; ++i) {
    cmat t = side == Ic2Side::right ? cmat(b.e[i] * g) : cmat(g * b.e[i]);
    out.f.push_back(flip_to_canonical ? flip_leading(t) : t);
  }
  out.f.insert(out.f.end(), b.f.begin(), b.f.end());
  return out;
}

CliffordBasis ic3(const CliffordBasis& b, int pivot) {
  if (pivot < 0 || pivot >= b.p()) throw domain_error("ic3: pivot out of range");
  const cmat& ep = b.e[pivot];
  CliffordBasis out;
  out.e.push_back(ep);
  for (const cmat& f : b.f) out.e.push_back(f * ep);
  for (int j = 0; j < b.p(); ++j)
    if (j != pivot) out.f.push_back(b.e[j] * ep);
  return out;
}

std::pair<Involution, Involution> lift_involutions(const Involution& rev, const Involution& cc) {
  auto quarter = [](const cmat& x, int r, int c) {
    Eigen::Index h = x.rows() / 2;
    return cmat(x.block(r * h, c * h, h, h));
  };
  auto assemble = [](const cmat& a, const cmat& b, const cmat& c, const cmat& d) {
    Eigen::Index h = a.rows();
    cmat out(2 * h, 2 * h);
    out.topLeftCorner(h, h) = a;
    out.topRightCorner(h, h) = b;
    out.bottomLeftCorner(h, h) = c;
    out.bottomRightCorner(h, h) = d;
    return out;
  };
  Involution lifted_rev{"lifted-rev(" + cc.name + ")", [=](const cmat& x) {
                          return assemble(cc(quarter(x, 1, 1)), cc(quarter(x, 0, 1)),
                                          cc(quarter(x, 1, 0)), cc(quarter(x, 0, 0)));
                        }};
  Involution lifted_cc{"lifted-cc(" + rev.name + ")", [=](const cmat& x) {
                         return assemble(rev(quarter(x, 1, 1)), cmat(-rev(quarter(x, 0, 1))),
                                         cmat(-rev(quarter(x, 1, 0))), rev(quarter(x, 0, 0)));
                       }};
  return {lifted_rev, lifted_cc};
}

cmat block_transpose(const cmat& x) {
  if (x.rows() != x.cols() || x.rows() % 2 != 0) throw domain_error("block_transpose: bad shape");
  Eigen::Index h = x.rows() / 2;
  cmat out(x.rows(), x.cols());
  out.topLeftCorner(h, h) = x.topLeftCorner(h, h);
  out.topRightCorner(h, h) = x.bottomLeftCorner(h, h);
  out.bottomLeftCorner(h, h) = x.topRightCorner(h, h);
  out.bottomRightCorner(h, h) = x.bottomRightCorner(h, h);
  return out;
}

cmat blockwise(const cmat& x, const Involution& inv) {
  if (x.rows() != x.cols() || x.rows() % 2 != 0) throw domain_error("blockwise: bad shape");
  Eigen::Index h = x.rows() / 2;
  cmat out(x.rows(), x.cols());
  out.topLeftCorner(h, h) = inv(cmat(x.topLeftCorner(h, h)));
  out.topRightCorner(h, h) = inv(cmat(x.topRightCorner(h, h)));
  out.bottomLeftCorner(h, h) = inv(cmat(x.bottomLeftCorner(h, h)));
  out.bottomRightCorner(h, h) = inv(cmat(x.bottomRightCorner(h, h)));
  return out;
}

Expansion expand_in_basis(const cmat& x, const std::vector<cmat>& family) {
  Expansion out;
  cmat rem = x;
  for (const cmat& v : family) {
    double c = (v.conjugate().cwiseProduct(x)).sum().real() / frobenius_norm_sq(v);
    out.coeff.push_back(c);
    rem -= c * v;
  }
  out.residual = rem.norm();
  return out;
}

bool is_one_vector(const cmat& x, const CliffordBasis& b, double tol) {
  auto ex = expand_in_basis(x, b.generators());
  return ex.residual <= tol * std::max(1.0, x.norm());
}

cmat one_vector_from_complex_triple(cplx z0, cplx z1, cplx z2) {
  cmat x(4, 4);
  x << std::conj(z2), 0, z0, std::conj(z1),                  //
      0, std::conj(z2), z1, -std::conj(z0),                  //
      -std::conj(z0), -std::conj(z1), z2, 0,                 //
      -z1, z0, 0, z2;
  return x;
}

MembershipCheck spin6_membership(const rmat& z, double tol) {
  MembershipCheck out;
  if (z.rows() != 8 || z.cols() != 8) return {false, "wrong shape", 0};
  double ortho = (z * z.transpose() - rmat::Identity(8, 8)).norm();
  out.worst_residual = ortho;
  if (ortho > tol) return {false, "not orthogonal", ortho};
  rmat jt = Jtilde(8);
  double even = (jt.transpose() * z * jt - z).norm();
  out.worst_residual = std::max(out.worst_residual, even);
  if (even > tol) return {false, "odd part present", even};
  auto y = named_basis("Y");
  cmat zc = z.cast<cplx>();
  for (int i = 0; i < 6; ++i) {
    cmat img = zc * y.basis.f[i] * zc.transpose();
    auto ex = expand_in_basis(img, y.basis.generators());
    out.worst_residual = std::max(out.worst_residual, ex.residual);
    if (ex.residual > tol)
      return {false, "conjugation leaves the 1-vector span at Y" + std::to_string(i + 1),
              ex.residual};
  }
  return out;
}

}  // namespace spinexp
