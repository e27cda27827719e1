#include "spinexp/spincover.hpp"

#include <cmath>

#include "spinexp/quat.hpp"

namespace spinexp {

namespace {

const std::vector<cmat>& f_family() {
  static const std::vector<cmat> f = named_basis("F").basis.generators();
  return f;
}

const std::vector<cmat>& y_family() {
  static const std::vector<cmat> y = named_basis("Y").basis.generators();
  return y;
}

constexpr int kPsi5Pairs[10][2] = {{1, 2}, {3, 1}, {1, 4}, {1, 5}, {2, 3},
                                   {2, 4}, {5, 2}, {4, 3}, {5, 3}, {5, 4}};
// rows 14 and 15 of the printed table have the opposite orientation
constexpr int kPsi6Printed[15][2] = {{1, 5}, {4, 1}, {4, 5}, {3, 2}, {2, 6},
                                     {6, 3}, {2, 1}, {6, 1}, {3, 1}, {4, 6},
                                     {4, 3}, {4, 2}, {5, 6}, {3, 5}, {2, 5}};
constexpr int kPsi6Computed[15][2] = {{1, 5}, {4, 1}, {4, 5}, {3, 2}, {2, 6},
                                      {6, 3}, {2, 1}, {6, 1}, {3, 1}, {4, 6},
                                      {4, 3}, {4, 2}, {5, 6}, {5, 3}, {5, 2}};

const char* kPsi5Labels[10] = {"i M[j,j]", "-M[i,1]", "-M[k,1]", "i M[j,k]", "i M[k,j]",
                               "i M[i,j]", "M[1,i]",  "M[j,1]",  "i M[k,k]", "i M[i,k]"};
const char* kPsi6Labels[15] = {"i sx.I",  "i sy.I",  "i sz.I",  "I.i sx",  "I.i sy",
                               "I.i sz",  "i sz.sz", "i sz.sx", "i sz.sy", "i sx.sx",
                               "i sx.sy", "i sx.sz", "i sy.sx", "i sy.sy", "i sy.sz"};

rmat commutator_matrix(const cmat& x, const std::vector<cmat>& family, double tol) {
  const int n = static_cast<int>(family.size());
  rmat out(n, n);
  for (int j = 0; j < n; ++j) {
    const cmat c = x * family[j] - family[j] * x;
    const auto ex = expand_in_basis(c, family);
    if (ex.residual > tol * (1.0 + c.norm()))
      throw domain_error("commutator leaves the 1-vector span at generator " +
                         std::to_string(j + 1));
    for (int i = 0; i < n; ++i) out(i, j) = ex.coeff[i];
  }
  return out;
}

rmat pair_matrix(int n, GeneratorPair p) {
  rmat m = rmat::Zero(n, n);
  m(p.a - 1, p.b - 1) = 2.0;
  m(p.b - 1, p.a - 1) = -2.0;
  return m;
}

GeneratorPair locate_pair(const rmat& image) {
  for (int r = 0; r < image.rows(); ++r)
    for (int c = 0; c < image.cols(); ++c)
      if (image(r, c) == 2.0) return {r + 1, c + 1};
  throw domain_error("table image has no +2 entry");
}

IsoTable build_table(const std::vector<cmat>& gens, const std::vector<cmat>& family,
                     bool through_theta_c, const int printed[][2], const char* const* labels) {
  IsoTable t;
  for (size_t k = 0; k < gens.size(); ++k) {
    IsoTableRow row;
    row.label = labels[k];
    row.generator = gens[k];
    const cmat lifted = through_theta_c ? cmat(theta_c(gens[k]).cast<cplx>()) : gens[k];
    row.image = commutator_matrix(lifted, family, 1e-12);
    row.computed = locate_pair(row.image);
    row.printed = {printed[k][0], printed[k][1]};
    row.matches_printed = (row.image - pair_matrix(static_cast<int>(family.size()),
                                                   row.printed)).norm() == 0.0;
    if (!row.matches_printed) t.flagged.push_back(static_cast<int>(k) + 1);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

std::vector<cmat> hat_sp4_basis() {
  const Quaternion o = Quaternion::one(), qi = Quaternion::i(), qj = Quaternion::j(),
                   qk = Quaternion::k();
  auto re = [](const Quaternion& p, const Quaternion& q) {
    return cmat(quat_tensor_to_matrix(p, q).cast<cplx>());
  };
  std::vector<cmat> x(10);
  x[0] = iu * re(qj, qj);
  x[1] = -re(qi, o);
  x[2] = -re(qk, o);
  x[3] = iu * re(qj, qk);
  x[4] = iu * re(qk, qj);
  x[5] = iu * re(qi, qj);
  x[6] = re(o, qi);
  x[7] = re(qj, o);
  x[8] = iu * re(qk, qk);
  x[9] = iu * re(qi, qk);
  return x;
}

std::vector<cmat> sp4_basis() {
  std::vector<cmat> out = hat_sp4_basis();
  for (cmat& x : out) x = conjugate_by_u(x);
  return out;
}

std::vector<cmat> su4_pauli_basis() {
  const cmat sx = pauli_x(), sy = pauli_y(), sz = pauli_z(), id = cmat::Identity(2, 2);
  auto tensor = [](const cmat& a, const cmat& b) { return cmat(iu * kron(a, b)); };
  return {tensor(sx, id), tensor(sy, id), tensor(sz, id), tensor(id, sx), tensor(id, sy),
          tensor(id, sz), tensor(sz, sz), tensor(sz, sx), tensor(sz, sy), tensor(sx, sx),
          tensor(sx, sy), tensor(sx, sz), tensor(sy, sx), tensor(sy, sy), tensor(sy, sz)};
}

IsoTable build_psi5_table() {
  return build_table(hat_sp4_basis(), f_family(), /*through_theta_c=*/false, kPsi5Pairs,
                     kPsi5Labels);
}

IsoTable build_psi6_table() {
  return build_table(su4_pauli_basis(), y_family(), /*through_theta_c=*/true, kPsi6Printed,
                     kPsi6Labels);
}

std::vector<rmat> theta_c_pauli_printed() {
  const rmat sx = pauli_x().real(), sz = pauli_z().real(), j2 = J2(),
             id = rmat::Identity(2, 2);
  auto k3 = [](const rmat& a, const rmat& b, const rmat& c) {
    return rmat(kron(kron(a, b), c));
  };
  return {k3(sx, id, j2), k3(j2, id, id), k3(sz, id, j2), k3(id, sx, j2), k3(id, j2, id),
          k3(id, sx, j2), k3(sz, sz, j2), k3(sz, sz, j2), k3(sz, j2, id), k3(sx, sx, j2),
          k3(sx, j2, id), k3(sx, sz, j2), k3(j2, sx, id), k3(j2, j2, j2), k3(j2, sz, id)};
}

const std::vector<int>& theta_c_table_flags() {
  static const std::vector<int> f = {6, 8, 14};
  return f;
}

const std::vector<int>& psi6_table_flags() {
  static const std::vector<int> f = {14, 15};
  return f;
}

rmat psi5(const cmat& x) { return commutator_matrix(x, f_family(), 1e-8); }

cmat psi5_inverse(const rmat& a) {
  const auto basis = hat_sp4_basis();
  cmat out = cmat::Zero(4, 4);
  for (int k = 0; k < 10; ++k)
    out += (a(kPsi5Pairs[k][0] - 1, kPsi5Pairs[k][1] - 1) / 2.0) * basis[static_cast<size_t>(k)];
  return out;
}

rmat psi6(const cmat& x) {
  return commutator_matrix(theta_c(x).cast<cplx>(), y_family(), 1e-8);
}

cmat psi6_inverse(const rmat& a) {
  const auto basis = su4_pauli_basis();
  cmat out = cmat::Zero(4, 4);
  for (int k = 0; k < 15; ++k)
    out +=
        (a(kPsi6Computed[k][0] - 1, kPsi6Computed[k][1] - 1) / 2.0) * basis[static_cast<size_t>(k)];
  return out;
}

rmat covering_action(const cmat& z, const std::vector<cmat>& family, CoverConj conj,
                     double tol) {
  const Eigen::Index m = z.rows();
  const cmat zc = conj == CoverConj::adjoint ? cmat(z.adjoint()) : cmat(z.transpose());
  if ((z * zc - cmat::Identity(m, m)).norm() > tol * std::sqrt(static_cast<double>(m)))
    throw domain_error("covering_action: z is not unitary for the requested conjugation");
  const int n = static_cast<int>(family.size());
  rmat r(n, n);
  for (int j = 0; j < n; ++j) {
    const cmat img = z * family[static_cast<size_t>(j)] * zc;
    const auto ex = expand_in_basis(img, family);
    if (ex.residual > tol * (1.0 + img.norm()))
      throw domain_error("covering_action: conjugation leaves the 1-vector span at generator " +
                         std::to_string(j + 1));
    for (int i = 0; i < n; ++i) r(i, j) = ex.coeff[static_cast<size_t>(i)];
  }
  return r;
}

CoverResult exp_so5(const rmat& x, double tol) {
  CoverResult out;
  out.element = exp_spin_element(psi5_inverse(x), SpinAlgebra::hat_sp4, tol);
  out.value = covering_action(out.element.value, f_family(), CoverConj::adjoint);
  return out;
}

CoverResult exp_so6(const rmat& x, double tol) {
  CoverResult out;
  out.element = exp_spin_element(psi6_inverse(x), SpinAlgebra::su4, tol);
  out.value = covering_action(theta_c(out.element.value).cast<cplx>(), y_family(),
                              CoverConj::transpose);
  return out;
}

}  // namespace spinexp
