#pragma once

#include <cstddef>

#include "hompre/linalg.hpp"
#include "hompre/report.hpp"

namespace hompre {

struct HomLieAlgebra {
  std::size_t dim = 0;
  Tensor3 bracket;  // c(i,j,k): [e_i, e_j] = sum_k c(i,j,k) e_k
  LinearMap twist;  // φ

  Vector br(const Vector& x, const Vector& y) const { return apply_bilinear(bracket, x, y); }
  /// Matrix of ad_x = [x, ·].
  LinearMap ad(const Vector& x) const;
};

struct HomPreLieAlgebra {
  std::size_t dim = 0;
  Tensor3 product;
  LinearMap twist;  // α

  Vector mul(const Vector& x, const Vector& y) const { return apply_bilinear(product, x, y); }
  /// Commutator x·y − y·x.
  Vector br(const Vector& x, const Vector& y) const { return mul(x, y) - mul(y, x); }
  /// Matrix of L_x = x · (−).
  LinearMap left(const Vector& x) const;
  /// Matrix of R_x = (−) · x.
  LinearMap right(const Vector& x) const;
  Vector basis(std::size_t i) const { return Vector::basis(dim, i); }

  friend bool operator==(const HomPreLieAlgebra&, const HomPreLieAlgebra&) = default;
};

enum class Symmetry { skew, symmetric };

struct BilinearForm {
  std::size_t dim = 0;
  Tensor2 matrix;  // (a,b) = B(e_a, e_b)
  Symmetry symmetry = Symmetry::symmetric;

  Scalar operator()(const Vector& x, const Vector& y) const;
};

/// Throws DimensionMismatch unless tensor and twist shapes match dim.
void check_shape(const HomLieAlgebra& g);
void check_shape(const HomPreLieAlgebra& a);
void check_shape(const BilinearForm& b);

/// Identities: "skew-symmetry", "twist-invertible", "multiplicativity", "hom-jacobi".
ValidationReport validate_hom_lie(const HomLieAlgebra& g);

/// Identities: "twist-invertible", "multiplicativity", "hom-pre-lie".
/// The hom-pre-lie residual at (x,y,z) is
/// (x·y)·α(z) − α(x)·(y·z) − (y·x)·α(z) + α(y)·(x·z).
ValidationReport validate_hom_pre_lie(const HomPreLieAlgebra& a);
/// Same verdict as validate_hom_pre_lie(a).valid(), stopping at the first failure.
bool is_hom_pre_lie(const HomPreLieAlgebra& a);

/// Commutator algebra; throws InvalidInput if a is not a valid Hom-pre-Lie algebra.
HomLieAlgebra sub_adjacent(const HomPreLieAlgebra& a);
/// Commutator algebra without the validity precondition.
HomLieAlgebra commutator_algebra(const HomPreLieAlgebra& a);

/// Identities: "product", "twist".
ValidationReport check_morphism(const LinearMap& f, const HomPreLieAlgebra& src, const HomPreLieAlgebra& dst);

/// Identities: "algebra/…" (the algebra itself), "symmetry", "nondegenerate",
/// "invariant-1" ω(αx, αy) = ω(x, y), "invariant-2" ω(x·y, αz) = −ω(αy, [x,z]).
ValidationReport validate_quadratic(const HomPreLieAlgebra& a, const BilinearForm& w);

/// Identities: "symmetry", "nondegenerate", "hessian-1" B(αx, αy) = B(x, y),
/// "hessian-2" B(x·y, αz) − B(αx, y·z) = B(y·x, αz) − B(αy, x·z).
ValidationReport validate_hessian(const HomPreLieAlgebra& a, const BilinearForm& b);

}  // namespace hompre
