#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "spinexp/core.hpp"

namespace spinexp {

/// Matrix generators for Cl(p,q): e[i]^2 = +I, f[j]^2 = -I, all pairs
/// anticommute.
struct CliffordBasis {
  std::vector<cmat> e;
  std::vector<cmat> f;

  int p() const { return static_cast<int>(e.size()); }
  int q() const { return static_cast<int>(f.size()); }
  int dim() const;
  std::vector<cmat> generators() const;  // e's then f's
};

/// An (anti)automorphism of the matrix algebra, e.g. reversion or Clifford
/// conjugation in a particular representation.
struct Involution {
  std::string name;
  std::function<cmat(const cmat&)> op;
  cmat operator()(const cmat& x) const { return op(x); }
};

Involution inv_adjoint();
Involution inv_transpose();
/// x -> minv * x^T * m
Involution inv_transpose_by(const cmat& m, const cmat& minv, const std::string& name);
/// x -> minv * x^dagger * m
Involution inv_adjoint_by(const cmat& m, const cmat& minv, const std::string& name);

/// A basis together with its reversion (fixes 1-vectors) and Clifford
/// conjugation (negates 1-vectors).
struct CliffordStructure {
  CliffordBasis basis;
  Involution rev;
  Involution cc;
};

/// grade involution = rev . cc = cc . rev
cmat grade_involution(const CliffordStructure& s, const cmat& x);

/// Named representations: "pauli" Cl(3,0) on C^2; "F", "g", "fhat" Cl(0,5) on
/// C^4; "Y" Cl(0,6) on R^8; "cl41" Cl(4,1) on C^4; "cl16" Cl(1,6) on C^8;
/// "cl17" Cl(1,7) on R^16.
CliffordStructure named_basis(const std::string& name);

struct BasisCheck {
  bool ok = true;
  std::string detail;
};
/// Squares and anticommutators only.
BasisCheck verify_relations(const CliffordBasis& b, double tol = 0.0);
/// Generator relations plus involution action on 1-vectors. tol 0 demands
/// exact zeros (all named bases are signed-integer words, so they pass).
BasisCheck verify_basis(const CliffordStructure& s, double tol = 0.0);

// ---------------------------------------------------------------------------
// the three construction moves

/// Cl(p,q) -> Cl(p+1,q+1) by doubling: generators lift to diag(g,-g), the new
/// e is K, the new f is J (each appended after the lifted ones).
CliffordBasis ic1(const CliffordBasis& b);

enum class Ic2Side { right, left };
/// Cl(p,q) -> Cl(p-4,q+4), p >= 4: multiply e_1..e_4 by g = e1 e2 e3 e4 (on
/// the chosen side); they become the leading f's. flip_to_canonical flips the
/// sign of any transformed generator whose leading nonzero entry is negative
/// (cosmetic only).
CliffordBasis ic2(const CliffordBasis& b, Ic2Side side = Ic2Side::right,
                  bool flip_to_canonical = false);

/// Cl(p,q) -> Cl(q+1,p-1): pick e_pivot; new e's are e_pivot and f_k e_pivot,
/// new f's are e_j e_pivot for j != pivot.
CliffordBasis ic3(const CliffordBasis& b, int pivot);

/// Reversion and conjugation for the ic1 image in terms of the parent's:
/// for x = [[A,B],[C,D]],
///   rev'(x) = [[cc(D), cc(B)], [cc(C), cc(A)]]
///   cc'(x)  = [[rev(D), -rev(B)], [-rev(C), rev(A)]]
/// Returns {rev', cc'}.
std::pair<Involution, Involution> lift_involutions(const Involution& rev, const Involution& cc);

/// [[A,B],[C,D]] -> [[A,C],[B,D]] on 2x2 block structure.
cmat block_transpose(const cmat& x);
/// Apply inv to each of the four blocks in place.
cmat blockwise(const cmat& x, const Involution& inv);

// ---------------------------------------------------------------------------
// vectors and membership

struct Expansion {
  std::vector<double> coeff;
  double residual = 0;
};
/// Real coordinates of x in a Frobenius-orthogonal family, plus the norm of
/// what is left over.
Expansion expand_in_basis(const cmat& x, const std::vector<cmat>& family);

bool is_one_vector(const cmat& x, const CliffordBasis& b, double tol = 1e-10);

/// The 4x4 matrix
///   [[ conj(z2), 0,        z0,  conj(z1)],
///    [ 0,        conj(z2), z1, -conj(z0)],
///    [-conj(z0), -conj(z1), z2,  0      ],
///    [-z1,        z0,       0,   z2     ]]
/// For purely imaginary z2 this spans the "g" 1-vectors.
cmat one_vector_from_complex_triple(cplx z0, cplx z1, cplx z2);

struct MembershipCheck {
  bool ok = true;
  std::string detail;
  double worst_residual = 0;
};
/// Is z (8x8 real) in the image of Spin(6)? Checks orthogonality, evenness
/// (commutes with Jtilde), and that conjugation preserves the span of the Y
/// generators.
MembershipCheck spin6_membership(const rmat& z, double tol = 1e-8);

}  // namespace spinexp
