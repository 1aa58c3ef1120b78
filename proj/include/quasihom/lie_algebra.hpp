#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "quasihom/linalg.hpp"
#include "quasihom/vector_field.hpp"

namespace quasihom {

/// Finite-dimensional real Lie algebra given by rational structure constants
/// [X_i, X_j] = sum_k c^k_ij X_k. A fresh algebra is abelian.
class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t dim = 0);

  /// Algebra whose adjoint matrices are the given ones: column j of ad[i] is
  /// [X_i, X_j]. Throws std::invalid_argument unless the matrices are
  /// consistent with antisymmetry.
  static LieAlgebra from_ad_matrices(const std::vector<Matrix>& ad);

  std::size_t dim() const { return dim_; }
  const Rational& c(std::size_t k, std::size_t i, std::size_t j) const { return c_[(i * dim_ + j) * dim_ + k]; }

  /// Sets [X_i, X_j] = v and [X_j, X_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const RVector& v);
  RVector bracket_of_basis(std::size_t i, std::size_t j) const;
  RVector bracket(const RVector& a, const RVector& b) const;

  /// (ad X_i)_{kj} = c^k_ij.
  Matrix ad(std::size_t i) const;
  Matrix ad(const RVector& v) const;

  bool is_antisymmetric() const;
  bool satisfies_jacobi() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  Rational& at(std::size_t k, std::size_t i, std::size_t j) { return c_[(i * dim_ + j) * dim_ + k]; }
  std::size_t dim_;
  std::vector<Rational> c_;
};

/// Raised by structure_constants when a bracket leaves the span.
class ClosureError : public std::runtime_error {
 public:
  ClosureError(std::size_t i, std::size_t j)
      : std::runtime_error("bracket of fields " + std::to_string(i) + " and " + std::to_string(j) +
                           " is outside their span"),
        i_(i),
        j_(j) {}
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }

 private:
  std::size_t i_, j_;
};

/// Structure constants of the span of `fields`, solved exactly from the brackets.
LieAlgebra structure_constants(const std::vector<VectorField>& fields);

bool is_unimodular(const LieAlgebra& l);

/// Basis (reduced echelon) of a subspace spanned by the given vectors.
std::vector<RVector> span_basis(const std::vector<RVector>& vectors, std::size_t dim);

/// Basis of [S, S] for a subspace S (the whole algebra when omitted).
std::vector<RVector> derived_algebra(const LieAlgebra& l);
std::vector<RVector> derived_algebra(const LieAlgebra& l, const std::vector<RVector>& sub);
std::vector<RVector> center(const LieAlgebra& l);
Matrix killing_form(const LieAlgebra& l);

/// The subalgebra spanned by `basis`, written in that basis. Throws
/// std::invalid_argument when the span is not closed under the bracket.
LieAlgebra restrict_to(const LieAlgebra& l, const std::vector<RVector>& basis);

/// The same algebra in the basis given by the columns of p (invertible).
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& p);

enum class AlgebraTag {
  Abelian,
  Heisenberg,
  AffPlusR,
  Sol,
  Sl2,
  RplusSl2,
  RsemidirectHeis,
  Sl2plusSl2,
  Sl2semidirectR3,
  Other
};

std::string to_string(AlgebraTag tag);

/// Eigenvalue data of sol(a,b): the eigenvalues of ad Z on the derived
/// algebra, up to scale. When their ratio is rational they are normalized to
/// (1, b) with |b| >= 1; otherwise to center +- sqrt(radicand) with center = 1. raw_trace and raw_det are those of
/// ad Z for the first basis vector Z outside the derived algebra.
struct SolParams {
  bool rational = true;
  Rational a, b;
  Rational center, radicand;
  Rational raw_trace, raw_det;
};

struct AlgebraClass {
  AlgebraTag tag = AlgebraTag::Other;
  std::optional<SolParams> sol;
  std::string to_string() const;
};

/// Decision tree over dimension, derived algebra, center and Killing form;
/// see README for the branches.
AlgebraClass classify(const LieAlgebra& l);

LieAlgebra make_abelian(std::size_t dim);
/// [X, Y] = Z.
LieAlgebra make_heisenberg();
/// [Y, H] = H, third generator central.
LieAlgebra make_aff_plus_r();
/// [Y, H] = H, [Y, T] = -T, [H, T] = Y.
LieAlgebra make_sl2();
/// R x R^2 with ad of the first generator = diag(a, b) on the last two.
LieAlgebra make_sol(const Rational& a, const Rational& b);
/// Basis (X, Y, Z) with [Y, Z] = X + gamma Y, [X, Z] = gamma X + r Y, [X, Y] = 0.
LieAlgebra make_unipotent_case(const Rational& gamma, const Rational& r);

enum class IsotropyClass { Zero, Elliptic, Semisimple, Unipotent };

std::string to_string(IsotropyClass c);

/// Class of M in o(2,1) (skew for the antidiagonal form). Throws
/// std::invalid_argument when M is not in o(2,1).
IsotropyClass classify_o21_element(const Matrix& m);

/// The same criterion for an endomorphism skew with respect to a Lorentz Gram
/// matrix: M^T G + G M = 0.
IsotropyClass classify_skew_endomorphism(const Matrix& m, const Matrix& gram);

}  // namespace quasihom
