#pragma once

#include "hompre/algebra.hpp"
#include "hompre/linalg.hpp"
#include "hompre/report.hpp"

namespace hompre {

struct Bialgebra {
  HomPreLieAlgebra primal;  // (A, ·, α)
  HomPreLieAlgebra dual;    // (A*, ∘, (α⁻¹)*)
  LinearMap phi_star;       // A → A ⊗ A, dual of ∘
  LinearMap psi_star;       // A* → A* ⊗ A*, dual of ·
};

struct RTensor {
  Tensor2 r;
  bool symmetric = false;
  bool pro1_holds = false;
};

/// Matrix of r♯: A* → A, ⟨r♯ξ, η⟩ = ⟨r, ξ ⊗ η⟩. Equals the transpose of r.
LinearMap r_sharp(const Tensor2& r);

/// Recomputes both flags from a and r.
RTensor make_rtensor(const HomPreLieAlgebra& a, const Tensor2& r);

/// r♯ ∘ (α⁻¹)* = α ∘ r♯.
bool check_pro1(const HomPreLieAlgebra& a, const Tensor2& r);

/// φ*(x) = (L^{-2}_x ⊗ α + α ⊗ ad^{-2}_x) r as an n² × n matrix.
LinearMap coboundary_cocycle(const HomPreLieAlgebra& a, const Tensor2& r);

/// ξ ∘ η = ad⋆_{r♯ξ} η − R⋆_{σ(r)♯η} ξ on A* with twist (α⁻¹)*.
/// Throws Pro1Violation when check_pro1 fails.
HomPreLieAlgebra dual_product_from_r(const HomPreLieAlgebra& a, const Tensor2& r);

/// [[r,r]] = Σ r_pq r_st ( αe_p ⊗ αe_s ⊗ e_q·e_t − αe_p ⊗ [e_s,e_q] ⊗ αe_t
///                         − e_p·e_s ⊗ αe_t ⊗ αe_q ).
Tensor3 hom_s_bracket(const HomPreLieAlgebra& a, const Tensor2& r);

/// Identity "pro-3": r♯(α*ξ)·r♯(α*η) − r♯(α*(ξ∘η)) = [[r,r]]((α⁻²)*ξ, (α⁻²)*η)
/// on dual basis pairs. Throws Pro1Violation when check_pro1 fails.
ValidationReport check_pro3(const HomPreLieAlgebra& a, const Tensor2& r);

/// Identity "p-condition": (P(x·y) − P(αx)P(y))(r − σ(r)) = 0 with
/// P(x) = L^{-2}_x ⊗ α + α ⊗ L^{-2}_x.
ValidationReport check_P_condition(const HomPreLieAlgebra& a, const Tensor2& r);

/// Symmetric, pro-1, and [[r,r]] = 0.
bool is_hom_s_matrix(const HomPreLieAlgebra& a, const Tensor2& r);

/// n² × n matrix with entry ((i,j), k) = c(i,j,k): the map ξ ↦ ψ*(ξ) with
/// ⟨ψ*(ξ), x ⊗ y⟩ = ⟨ξ, x·y⟩.
LinearMap dualize_product(const HomPreLieAlgebra& p);

/// Bialgebra whose comultiplications are the dualized products.
Bialgebra make_bialgebra(const HomPreLieAlgebra& primal, const HomPreLieAlgebra& dual);

/// "pairing-phi", "pairing-psi", "phi-cocycle/…", "psi-cocycle/…".
/// Throws TwistMismatch or InvalidInput when preconditions fail.
ValidationReport validate_bialgebra(const Bialgebra& b);

/// Verdicts "bialgebra", "matched-pair", "manin-triple"; valid iff all agree.
ValidationReport check_equivalence_theorem(const HomPreLieAlgebra& a, const HomPreLieAlgebra& adual);

/// Throws NotAnSMatrix unless is_hom_s_matrix(a, r).
Bialgebra triangular_bialgebra(const HomPreLieAlgebra& a, const Tensor2& r);

}  // namespace hompre
