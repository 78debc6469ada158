#pragma once

#include <Eigen/Dense>

#include <array>
#include <string>
#include <vector>

#include "dpe6/errors.hpp"
#include "dpe6/numbers.hpp"

namespace dpe6 {

/// Basis tag for Pic(X), rank 10.
///
/// standard: {H_q, H_p, E_1..E_8} for the model surface of the reference
/// equation; applied: {H_x, H_y, F_1..F_8} for the surface built from the
/// recurrence mapping. Coordinate index 0 is H_q/H_x, index 1 is H_p/H_y,
/// indices 2..9 are the exceptional classes.
enum class Basis { standard, applied };

inline const char* basis_name(Basis b) {
  return b == Basis::standard ? "standard" : "applied";
}

using Coeffs10 = Eigen::Matrix<Int, 10, 1>;
using Mat10 = Eigen::Matrix<Int, 10, 10>;
using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// Divisor class: 10 integer coordinates over a tagged basis.
struct PicClass {
  Coeffs10 coeffs = Coeffs10::Zero();
  Basis basis = Basis::standard;
};

inline bool operator==(const PicClass& a, const PicClass& b) {
  return a.basis == b.basis && a.coeffs.cwiseEqual(b.coeffs).all();
}
inline bool operator!=(const PicClass& a, const PicClass& b) { return !(a == b); }

inline void require_same_basis(const PicClass& a, const PicClass& b, const char* op) {
  if (a.basis != b.basis)
    throw basis_mismatch(std::string(op) + ": classes carry different basis tags");
}

inline PicClass operator+(const PicClass& a, const PicClass& b) {
  require_same_basis(a, b, "PicClass addition");
  return {a.coeffs + b.coeffs, a.basis};
}
inline PicClass operator-(const PicClass& a, const PicClass& b) {
  require_same_basis(a, b, "PicClass subtraction");
  return {a.coeffs - b.coeffs, a.basis};
}
inline PicClass operator-(const PicClass& a) { return {-a.coeffs, a.basis}; }
inline PicClass operator*(const Int& n, const PicClass& a) { return {n * a.coeffs, a.basis}; }

/// Convenience constructors over the generator names.
PicClass pic(Basis basis, std::array<long, 10> coeffs);

/// The intersection form on the generators: H.H = 0, H_q.H_p = 1 (likewise
/// H_x.H_y), E_i.E_j = -delta_ij. Same numeric Gram matrix in both bases.
Int pair(const PicClass& a, const PicClass& b);

/// Reflection in a -2-class: c + (c . root) root.
PicClass reflect(const PicClass& root, const PicClass& c);

/// Integer endomorphism of Pic with tagged source and target bases; columns
/// are the images of the source basis vectors in target coordinates.
struct LatticeMap {
  Mat10 m = Mat10::Identity();
  Basis source = Basis::standard;
  Basis target = Basis::standard;
};

inline bool operator==(const LatticeMap& a, const LatticeMap& b) {
  return a.source == b.source && a.target == b.target && a.m.cwiseEqual(b.m).all();
}

PicClass apply(const LatticeMap& m, const PicClass& c);

/// compose(m2, m1) applies m1 first.
LatticeMap compose(const LatticeMap& m2, const LatticeMap& m1);

LatticeMap identity_map(Basis basis);

/// The reflection in a -2-class as a lattice map on its basis.
LatticeMap reflection_map(const PicClass& root);

/// True iff pair(m a, m b) = pair(a, b) for all basis vectors a, b.
bool is_isometry(const LatticeMap& m);

/// -K = 2H + 2H' - sum of the eight exceptional classes (either basis).
PicClass anticanonical(Basis basis);

/// Surface (7 roots, multiplicities 1,1,2,3,2,1,2) or symmetry (3 roots,
/// multiplicities 1,1,1) root basis; delta() is the stated integer
/// combination and must equal -K.
struct RootBasis {
  enum class Kind { surface, symmetry };
  Kind kind;
  std::string name;
  std::vector<PicClass> roots;
  std::vector<long> delta_mults;

  PicClass delta() const;
};

/// Matrix of pairwise intersection numbers of the roots.
IntMatrix gram_matrix(const RootBasis& basis);

enum class ChangeOfBasis { pre, fin };

/// Image of a class under the stated substitution (direction inferred from
/// the class's tag); round trip is the identity.
PicClass change_basis(const PicClass& c, ChangeOfBasis which);

/// The substitution as a lattice map in the requested direction.
LatticeMap change_of_basis_map(ChangeOfBasis which, Basis from);

/// Conjugates a standard-basis endomorphism to the applied basis through the
/// given identification.
LatticeMap conjugate_to_applied(const LatticeMap& m, ChangeOfBasis which);

/// Coefficients k_i with m(alpha_i) = alpha_i + k_i * delta for all roots of
/// a symmetry basis. Requires m to be an isometry fixing -K; throws
/// not_a_translation if some residual is off the delta line.
std::array<Int, 3> translation_vector(const LatticeMap& m, const RootBasis& symmetry);

// --- transcribed surface data ---------------------------------------------

const RootBasis& standard_surface_basis();   // delta_0..delta_6 over H_q,H_p,E_i
const RootBasis& standard_symmetry_basis();  // alpha_0..alpha_2 over H_q,H_p,E_i
const RootBasis& applied_surface_basis();    // delta_0..delta_6 over H_x,H_y,F_i
const RootBasis& applied_symmetry_pre();     // preliminary alpha choice
const RootBasis& applied_symmetry_fin();     // final alpha choice

/// The action of the composed recurrence mapping on Pic, applied basis.
const LatticeMap& psi_star();

/// The printed 7x7 generalized Cartan matrix of affine type E6.
const IntMatrix& e6_cartan_matrix();

/// 3x3 generalized Cartan matrix of affine type A2.
const IntMatrix& a2_cartan_matrix();

/// Checks that the stored basis-change tables are mutual inverses and that
/// every stored root basis satisfies its delta expansion; throws on any
/// transcription error. Cheap; run at suite startup.
void verify_lattice_tables();

}  // namespace dpe6
