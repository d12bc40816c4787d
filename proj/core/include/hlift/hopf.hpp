#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hlift/exactla.hpp"

namespace hlift {

/// Finite-dimensional associative unital algebra given by structure
/// constants, stored as one left-multiplication matrix per basis element:
/// left_mult[i] column j holds the coordinates of b_i * b_j.
struct AlgebraPresentation {
  FieldSpec spec;
  size_t dim = 0;
  std::vector<std::string> labels;
  std::vector<Matrix> left_mult;
  Matrix unit;
  /// Indices of a generating set (the unit need not be listed). Used to
  /// shrink linear-algebra problems; results are re-checked against the
  /// full basis. Defaults to every basis index.
  std::vector<size_t> generators;

  AlgebraPresentation(const FieldSpec& s, size_t d);

  Matrix multiply(const Matrix& a, const Matrix& b) const;
  Matrix left_mult_of(const Matrix& a) const;
  Matrix right_mult(size_t j) const;
  Matrix right_mult_of(const Matrix& b) const;
  /// Index of the unit when it is a standard basis vector.
  std::optional<size_t> unit_basis_index() const;

  /// Associativity on all basis triples plus both unit axioms; throws on
  /// the first violation.
  void verify() const;
};

using AlgebraPtr = std::shared_ptr<const AlgebraPresentation>;

/// Hopf algebra data on top of an algebra presentation. The coproduct is a
/// dim^2 x dim matrix (column b = coordinates of Delta(b) in the b_k (x) b_l
/// basis, row index k*dim+l), the counit a 1 x dim row, the antipode and
/// its inverse dim x dim.
struct HopfStructure {
  AlgebraPtr algebra;
  Matrix coproduct;
  Matrix counit;
  Matrix antipode;
  Matrix antipode_inverse;

  HopfStructure(AlgebraPtr alg);

  size_t dim() const { return algebra->dim; }
  const FieldSpec& spec() const { return algebra->spec; }

  /// Full axiom battery: coassociativity, counit laws, antipode identities,
  /// Delta and epsilon multiplicative and unital, S inverse. Throws with a
  /// description of the first failing identity.
  void verify() const;
  bool is_cocommutative() const;
};

using HopfPtr = std::shared_ptr<const HopfStructure>;

/// Finite-dimensional left module: one action matrix per algebra basis
/// element. Immutable after construction; safe to share across threads.
struct ModuleRep {
  AlgebraPtr algebra;
  size_t dim = 0;
  std::vector<Matrix> action;

  ModuleRep(AlgebraPtr alg, size_t d);

  Matrix act(const Matrix& elem_coords) const;
  /// Module axioms: unit acts as identity; action respects multiplication
  /// on basis pairs (all of them when `all_pairs`, otherwise generator
  /// pairs against all basis elements).
  void verify(bool all_pairs = true) const;
};

// --- constructions --------------------------------------------------------

/// Taft algebra T_n: basis x^i g^j, relations g x = w x g, x^n = 0, g^n = 1,
/// with Delta(x) = x(x)1 + g(x)x, Delta(g) = g(x)g, S(x) = -g^{-1} x,
/// S(g) = g^{-1}. Requires an order-n root in the spec and characteristic
/// zero or coprime to n.
HopfPtr taft(unsigned n, const FieldSpec& spec);

/// Group algebra k[Z/p] over F_p in the u = t - 1 basis, i.e. k[u]/(u^p)
/// with Delta(u) = u(x)1 + 1(x)u + u(x)u. Requires characteristic p.
HopfPtr group_algebra_zp(unsigned p, const FieldSpec& spec);

/// Trivial module k: every a acts by counit(a).
ModuleRep trivial_module(const HopfStructure& H);

/// Enveloping algebra A^e = A (x) A^op with (a(x)b)(c(x)d) = ac (x) db.
AlgebraPtr enveloping(const HopfStructure& H);

/// delta(a) = sum a_1 (x) S(a_2) as a dim^2 x dim matrix into A^e.
Matrix delta_embed(const HopfStructure& H);

/// A as a module over itself under the left adjoint action
/// a . b = sum a_1 b S(a_2).
ModuleRep adjoint_module(const HopfStructure& H);

/// Componentwise Hopf structure on A (x) B (coproduct with the middle
/// interchange, counit epsilon(x)epsilon, antipode S(x)S).
HopfPtr tensor_hopf(const HopfStructure& H1, const HopfStructure& H2);

AlgebraPtr tensor_algebra(const AlgebraPresentation& A, const AlgebraPresentation& B);
AlgebraPtr opposite(const AlgebraPresentation& A);

/// Product of two coordinate vectors of A (x) B (plain tensor algebra).
Matrix tensor_coord_multiply(const AlgebraPresentation& A, const AlgebraPresentation& B,
                             const Matrix& u, const Matrix& v);

/// Basis of Hom_A(M, N) = {T : T rho_M(a) = rho_N(a) T}. Computed from one
/// kernel computation over the generator constraints, then substituted
/// against every basis element (falling back to the full constraint set if
/// a declared generating set turns out not to generate).
std::vector<Matrix> hom_space(const ModuleRep& M, const ModuleRep& N);

/// M (x) N as a module via the coproduct of H.
ModuleRep tensor_module(const HopfStructure& H, const ModuleRep& M, const ModuleRep& N);

ModuleRep direct_sum(const std::vector<const ModuleRep*>& parts);
/// Free left module A^rank (block action).
ModuleRep free_module(AlgebraPtr A, size_t rank);
/// A as a left module over itself.
ModuleRep regular_module(AlgebraPtr A);

/// tau: V (x) W -> W (x) V on coordinates, e_(i,j) -> e_(j,i).
Matrix swap_matrix(size_t dim_v, size_t dim_w, const FieldSpec& spec);

/// Lemma-style certification of the delta embedding: delta is an injective
/// algebra map, and Theta(a (x) b) = (a (x) 1) delta(b) is a right-A-linear
/// isomorphism from the free right module A (x) A onto A^e (so A^e is
/// projective as a right A-module, with the splitting given by Theta^{-1}).
struct DeltaEmbeddingReport {
  Matrix delta;
  Matrix theta;
  bool algebra_map = false;
  bool injective = false;
  bool theta_bijective = false;
  bool theta_right_linear = false;
  bool ok() const { return algebra_map && injective && theta_bijective && theta_right_linear; }
};
DeltaEmbeddingReport verify_delta_embedding(const HopfStructure& H, const AlgebraPresentation& Ae);

}  // namespace hlift
