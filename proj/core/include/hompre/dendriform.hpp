#pragma once

#include <cstddef>

#include "hompre/algebra.hpp"
#include "hompre/report.hpp"
#include "hompre/representation.hpp"

namespace hompre {

struct OOperator {
  HomPreLieRep rep;  // carries the algebra (A, ·, α) and (V, β, ρ, μ)
  LinearMap T;       // V → A

  const HomPreLieAlgebra& algebra() const { return rep.algebra; }
};

struct HomLDendriform {
  std::size_t dim = 0;
  Tensor3 left;   // ▷
  Tensor3 right;  // ◁
  LinearMap twist;

  Vector tri_left(const Vector& x, const Vector& y) const { return apply_bilinear(left, x, y); }
  Vector tri_right(const Vector& x, const Vector& y) const { return apply_bilinear(right, x, y); }

  friend bool operator==(const HomLDendriform&, const HomLDendriform&) = default;
};

/// Which action the second slot of the semidirect ambient A ⋉ V* carries.
/// mu_star is (ρ⋆ − μ⋆, −μ⋆), the dual representation; rho_star is the
/// alternative (ρ⋆ − μ⋆, −ρ⋆).
enum class SemidirectVariant { mu_star, rho_star };

void check_shape(const HomLDendriform& d);

/// Identities "operator-1" Tβ = αT and
/// "operator-2" T(u)·T(v) = T(ρ(Tβ⁻¹u)v + μ(Tβ⁻¹v)u).
/// Throws SingularMap if β is singular.
ValidationReport validate_o_operator(const OOperator& o);

/// Verdicts "s-matrix" and "o-operator" with T = r♯ ∘ (α⁻¹)* on the
/// coadjoint representation; valid iff they agree. Throws AsymmetricInput.
ValidationReport check_smatrix_ooperator_equiv(const HomPreLieAlgebra& a, const Tensor2& r);

/// "twist-invertible", "multiplicativity-left", "multiplicativity-right",
/// "L-1", "L-2".
ValidationReport validate_l_dendriform(const HomLDendriform& d);

/// x • y = x ▷ y + x ◁ y.
HomPreLieAlgebra horizontal(const HomLDendriform& d);
/// x · y = x ▷ y − y ◁ x.
HomPreLieAlgebra vertical(const HomLDendriform& d);
/// Same products without the validity precondition.
HomPreLieAlgebra horizontal_unchecked(const HomLDendriform& d);
HomPreLieAlgebra vertical_unchecked(const HomLDendriform& d);

/// x ▷ᵗ y = x ▷ y, x ◁ᵗ y = −y ◁ x.
HomLDendriform transpose_dendriform(const HomLDendriform& d);

/// (A, α, L_▷, R_◁) over the horizontal algebra.
HomPreLieRep horizontal_rep(const HomLDendriform& d);
/// (A, α, L_▷, −L_◁) over the vertical algebra.
HomPreLieRep vertical_rep(const HomLDendriform& d);

/// Validates both representations; failures are prefixed "horizontal/" and
/// "vertical/".
ValidationReport dendriform_rep_check(const HomLDendriform& d);

struct OperatorDendriform {
  HomLDendriform onV;
  HomLDendriform onTV;  // on the image T(V), in the basis of pivot columns
  LinearMap image_basis;  // columns are the chosen basis of T(V) inside A
};

/// u ▷ v = ρ(Tβ⁻¹u)v, u ◁ v = −μ(Tβ⁻¹u)v, plus the induced structure
/// T(u) ▷ T(v) = T(u ▷ v) on the image. Throws InvalidInput unless o is valid.
OperatorDendriform dendriform_from_o_operator(const OOperator& o);

/// x ▷ y = T(ρ(α⁻¹x)T⁻¹y), x ◁ y = −T(μ(α⁻¹x)T⁻¹y) on A.
/// Throws SingularMap if T is singular, InvalidInput if o is not valid.
HomLDendriform compatible_dendriform_from_invertible(const OOperator& o);

/// The O-operator α on (A, α, L_▷, −L_◁) over the vertical algebra.
OOperator o_operator_from_dendriform(const HomLDendriform& d);

/// B(x ▷ y, z) = −B(y, [α⁻¹x, α⁻²z]), B(x ◁ y, z) = −B(y, α⁻²z · α⁻¹x).
/// Throws InvalidInput unless validate_hessian(a, b) passes.
HomLDendriform dendriform_from_hessian(const HomPreLieAlgebra& a, const BilinearForm& b);

/// Identities "hessian-left" and "hessian-right": the defining equations of
/// dendriform_from_hessian replayed on d.
ValidationReport check_hessian_dendriform(const HomPreLieAlgebra& a, const BilinearForm& b,
                                          const HomLDendriform& d);

/// A ⋉ V* over the dual representation of the chosen variant.
HomPreLieAlgebra semidirect_ambient(const HomPreLieRep& r, SemidirectVariant variant = SemidirectVariant::mu_star);

/// r_T = T̄ + σ(T̄) on A ⊕ V* with T̄ = Σ_i T(v_i) ⊗ v_i*.
Tensor2 embed_operator_tensor(const LinearMap& T, std::size_t dim_a, std::size_t dim_v);

struct SemidirectSMatrix {
  HomPreLieAlgebra big_algebra;
  Tensor2 rT;
  ValidationReport verdict;  // verdicts "s-matrix", "o-operator"; valid iff they agree
};

/// Throws IntertwinerViolation unless Tβ = αT.
SemidirectSMatrix semidirect_smatrix(const HomPreLieRep& r, const LinearMap& T,
                                     SemidirectVariant variant = SemidirectVariant::mu_star);

struct CanonicalSMatrix {
  HomPreLieAlgebra big_algebra;
  Tensor2 r;
};

/// The ambient vertical(d) ⋉ A* over (L_▷, −L_◁) with r = Σ v_i ⊗ v_i* + v_i* ⊗ v_i.
CanonicalSMatrix canonical_smatrix(const HomLDendriform& d,
                                   SemidirectVariant variant = SemidirectVariant::mu_star);

}  // namespace hompre
