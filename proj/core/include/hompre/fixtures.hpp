#pragma once

#include "hompre/algebra.hpp"
#include "hompre/dendriform.hpp"

/// Smallest instances that exercise each identity nontrivially. All are
/// two-dimensional.
namespace hompre::fixtures {

/// Zero product, α = id.
HomPreLieAlgebra F0();
/// e1·e2 = e2, α = diag(1,2).
HomPreLieAlgebra F1();
/// e1·e1 = e2, α = id.
HomPreLieAlgebra F2();
/// F2's product with α = diag(2,4).
HomPreLieAlgebra F2c();
/// e1·e2 = e1, α = id. Not Hom-pre-Lie.
HomPreLieAlgebra FN();
/// e1 ▷ e1 = e2, ◁ = 0, α = id.
HomLDendriform D1();
/// [[0,1],[1,0]], a Hessian form on F2.
BilinearForm B_H();

/// Zero algebra of dimension n with twist id.
HomPreLieAlgebra zero_algebra(std::size_t n);
/// The dual-side algebra on A* with zero product and twist (α⁻¹)*.
HomPreLieAlgebra zero_dual(const HomPreLieAlgebra& a);

}  // namespace hompre::fixtures
