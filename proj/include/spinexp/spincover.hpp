#pragma once

#include <string>
#include <vector>

#include "spinexp/clifford.hpp"
#include "spinexp/core.hpp"
#include "spinexp/expm.hpp"

namespace spinexp {

// ---------------------------------------------------------------------------
// Lie-algebra bases

/// X1..X10: quaternion-tensor realifications spanning hat-sp(4). Signs are
/// fixed so every commutator image below lands on +2(e_a e_b^T - e_b e_a^T).
std::vector<cmat> hat_sp4_basis();
/// U-transport of hat_sp4_basis into sp(4).
std::vector<cmat> sp4_basis();
/// P1..P15: i sigma tensors spanning su(4), in the reference-table order.
std::vector<cmat> su4_pauli_basis();

// ---------------------------------------------------------------------------
// isomorphism tables

struct GeneratorPair {
  int a = 0, b = 0;  // 1-based; the image is 2(e_a e_b^T - e_b e_a^T)
};

struct IsoTableRow {
  std::string label;
  cmat generator;
  rmat image;  // computed from the commutator action
  GeneratorPair computed;
  GeneratorPair printed;
  bool matches_printed = false;
};

struct IsoTable {
  std::vector<IsoTableRow> rows;
  std::vector<int> flagged;  // 1-based rows where computed != printed
};

/// Images of the basis elements under the commutator action on the F
/// (resp. Y) 1-vectors, cross-checked against the reference tables. The
/// computed value is authoritative; disagreements land in `flagged`.
IsoTable build_psi5_table();
IsoTable build_psi6_table();

/// The 15 printed 8x8 realifications of the su(4) basis, for comparison
/// against theta_c applied directly; rows in theta_c_table_flags() disagree
/// with the computation.
std::vector<rmat> theta_c_pauli_printed();
const std::vector<int>& theta_c_table_flags();  // {6, 8, 14}
const std::vector<int>& psi6_table_flags();     // {14, 15}

// ---------------------------------------------------------------------------
// the isomorphisms

/// Column j = coordinates of [x, F_j] in the F family; x in hat-sp(4).
rmat psi5(const cmat& x);
cmat psi5_inverse(const rmat& a);
/// Column j = coordinates of [theta_c(x), Y_j] in the Y family; x in su(4).
rmat psi6(const cmat& x);
cmat psi6_inverse(const rmat& a);

// ---------------------------------------------------------------------------
// covering action and the exponential pipelines

enum class CoverConj { adjoint, transpose };

/// Matrix of v -> z v z^conj on the family: column j holds the coordinates
/// of z V_j z^conj. Requires z z^conj = I within tol and every column to
/// expand without leftover; throws domain_error otherwise.
rmat covering_action(const cmat& z, const std::vector<cmat>& family, CoverConj conj,
                     double tol = 1e-8);

struct CoverResult {
  rmat value;
  ExpResult element;  // the 4x4 exponential behind the rotation
};

/// e^x for real antisymmetric x through the spin cover:
/// psi inverse, closed-form 4x4 exponential, covering action.
CoverResult exp_so5(const rmat& x, double tol = 1e-9);
CoverResult exp_so6(const rmat& x, double tol = 1e-9);

}  // namespace spinexp
