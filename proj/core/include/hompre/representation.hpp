#pragma once

#include <cstddef>
#include <vector>

#include "hompre/algebra.hpp"
#include "hompre/linalg.hpp"
#include "hompre/report.hpp"

namespace hompre {

/// A basis-indexed family of matrices f(e_1), ..., f(e_n); f(x) is the
/// linear combination with the coordinates of x.
using MapFamily = std::vector<LinearMap>;

struct HomLieRep {
  HomLieAlgebra algebra;
  std::size_t space_dim = 0;
  LinearMap beta;
  MapFamily rho;

  LinearMap rho_at(const Vector& x) const { return linear_combination(rho, x, space_dim, space_dim); }
};

struct HomPreLieRep {
  HomPreLieAlgebra algebra;
  std::size_t space_dim = 0;
  LinearMap beta;
  MapFamily rho;
  MapFamily mu;

  LinearMap rho_at(const Vector& x) const { return linear_combination(rho, x, space_dim, space_dim); }
  LinearMap mu_at(const Vector& x) const { return linear_combination(mu, x, space_dim, space_dim); }
};

/// Identities: "hom-lie-rep-1" ρ(φx)β = βρ(x), "hom-lie-rep-2"
/// ρ([x,y])β = ρ(φx)ρ(y) − ρ(φy)ρ(x). Throws SingularMap if β is singular.
ValidationReport validate_lie_rep(const HomLieRep& r);

/// The Hom-Lie conditions for ρ over the commutator algebra, prefixed "lie/",
/// plus "rep-1" βμ(x) = μ(αx)β and
/// "rep-2" μ(αy)μ(x) − μ(x·y)β = μ(αy)ρ(x) − ρ(αx)μ(y).
ValidationReport validate_pre_lie_rep(const HomPreLieRep& r);

HomLieRep adjoint_rep(const HomLieAlgebra& g);

/// (A, α, L^s, R^s) with L^s_x = L_{α^s x} and R^s_x = R_{α^s x}.
HomPreLieRep shifted_rep(const HomPreLieAlgebra& a, int s);
inline HomPreLieRep regular_rep(const HomPreLieAlgebra& a) { return shifted_rep(a, 0); }

/// (V ⊗ W, β_V ⊗ β_W, ρ_V ⊗ β_W + β_V ⊗ ρ_W).
HomLieRep tensor_rep(const HomLieAlgebra& g, const HomLieRep& r1, const HomLieRep& r2);

/// Families L_{α^s e_i}, R_{α^s e_i}, ad_{α^s e_i} = L − R, without validation.
MapFamily left_family(const HomPreLieAlgebra& a, int s = 0);
MapFamily right_family(const HomPreLieAlgebra& a, int s = 0);
MapFamily ad_family(const HomPreLieAlgebra& a, int s = 0);

/// Twisted transpose of a family acting on V with twist β over an algebra
/// with twist α: f⋆(x) = f*(αx) ∘ (β⁻²)*, where f*(x) = −f(x)ᵀ.
MapFamily star_family(const MapFamily& f, const LinearMap& alpha, const LinearMap& beta);

MapFamily negate(const MapFamily& f);
MapFamily subtract(const MapFamily& f, const MapFamily& g);

/// (V*, (β⁻¹)*, ρ⋆ − μ⋆, −μ⋆).
HomPreLieRep dual_pre_lie_rep(const HomPreLieRep& r);
/// Same construction without the validity precondition.
HomPreLieRep dual_pre_lie_rep_unchecked(const HomPreLieRep& r);

/// (A*, (α⁻¹)*, ad⋆, −R⋆).
HomPreLieRep coadjoint_pre_lie_rep(const HomPreLieAlgebra& a);
HomPreLieRep coadjoint_pre_lie_rep_unchecked(const HomPreLieAlgebra& a);

/// (A ⊗ A, α ⊗ α, L^{-2} ⊗ α + α ⊗ ad^{-2}) as a rep of the commutator algebra.
HomLieRep coboundary_rep(const HomPreLieAlgebra& a);
HomLieRep coboundary_rep_unchecked(const HomPreLieAlgebra& a);

/// Identity "cocycle": δ[x,y] = ρ(φx)δ(y) − ρ(φy)δ(x) on basis pairs.
ValidationReport check_one_cocycle(const HomLieAlgebra& g, const HomLieRep& r, const LinearMap& delta);

/// A ⊕ V with twist α ⊕ β and (x+u)·(y+v) = x·y + ρ(x)v + μ(y)u.
HomPreLieAlgebra semidirect_pre_lie(const HomPreLieRep& r);
HomPreLieAlgebra semidirect_pre_lie_unchecked(const HomPreLieRep& r);

}  // namespace hompre
