#pragma once

#include <cstddef>
#include <vector>

#include "hompre/algebra.hpp"
#include "hompre/report.hpp"
#include "hompre/representation.hpp"

namespace hompre {

struct LieMatchedPair {
  HomLieAlgebra g;
  HomLieAlgebra h;
  MapFamily rho;   // g acting on h, with respect to h's twist
  MapFamily rho2;  // h acting on g, with respect to g's twist
};

struct PreLieMatchedPair {
  HomPreLieAlgebra a;
  HomPreLieAlgebra b;
  MapFamily lA, rA;  // A → gl(B)
  MapFamily lB, rB;  // B → gl(A)
};

struct ManinTriple {
  HomPreLieAlgebra total;
  BilinearForm form;
  std::vector<std::size_t> part1;  // basis indices spanning A₁
  std::vector<std::size_t> part2;  // basis indices spanning A₂
};

/// Identities: "g/…", "h/…" for the algebras, "rho/…", "rho2/…" for the
/// representations, "matched-pair-1", "matched-pair-2".
ValidationReport validate_matched_pair_lie(const LieMatchedPair& mp);

/// g ⊕ h with [(x,x'),(y,y')] = ([x,y] + ρ'(x')y − ρ'(y')x, [x',y'] + ρ(x)y' − ρ(y)x').
HomLieAlgebra double_lie(const LieMatchedPair& mp);

/// Identities: "a/…", "b/…", "rep-on-b/…", "rep-on-a/…", "pre-matched-pair-1" … "-4".
ValidationReport validate_matched_pair_pre_lie(const PreLieMatchedPair& mp);

/// A ⊕ B with ⋄ and twist α_A ⊕ α_B.
HomPreLieAlgebra double_pre_lie(const PreLieMatchedPair& mp);

/// Throws TwistMismatch unless adual has A's dimension and twist (α⁻¹)*.
void require_dual_twist(const HomPreLieAlgebra& a, const HomPreLieAlgebra& adual);

/// (A, A*, ad⋆, −R⋆, 𝔞𝔡⋆, −ℛ⋆).
PreLieMatchedPair standard_pre_lie_matched_pair(const HomPreLieAlgebra& a, const HomPreLieAlgebra& adual);

/// (A^C, (A*)^C, L⋆, ℒ⋆).
LieMatchedPair standard_lie_matched_pair(const HomPreLieAlgebra& a, const HomPreLieAlgebra& adual);

/// Verdicts "lie-matched-pair" and "pre-lie-matched-pair"; valid iff they agree.
ValidationReport check_pre_lie_matched_equiv(const HomPreLieAlgebra& a, const HomPreLieAlgebra& adual);

/// ω̄(x+ξ, y+η) = ⟨ξ,y⟩ − ⟨η,x⟩ on A ⊕ A*, i.e. the matrix [[0, −I], [I, 0]].
BilinearForm standard_pairing_form(std::size_t n);

struct StandardTriple {
  ManinTriple triple;
  ValidationReport verdict;
};

StandardTriple standard_manin_triple(const HomPreLieAlgebra& a, const HomPreLieAlgebra& adual);

/// Quadratic validity of total with form, plus "split", "subalgebra-1/2",
/// "isotropic-1/2" and "twist-block" for the decomposition.
ValidationReport validate_manin_triple(const ManinTriple& m);

struct Standardization {
  LinearMap iso;  // total → A₁ ⊕ A₁*, f(x,u) = (x, ω(u,·))
  ManinTriple standard;
};

/// Throws InvalidInput if m fails validate_manin_triple.
Standardization standardize_manin_triple(const ManinTriple& m);

/// Sub-algebra of a on the given coordinate indices (product restricted and
/// projected, twist restricted). Used to read A₁, A₂ out of a triple.
HomPreLieAlgebra restrict_to(const HomPreLieAlgebra& a, const std::vector<std::size_t>& idx);

}  // namespace hompre
