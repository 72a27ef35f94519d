#include <gtest/gtest.h>

#include "hompre/bialgebra.hpp"
#include "hompre/errors.hpp"
#include "hompre/fixtures.hpp"
#include "hompre/matched_pair.hpp"

using namespace hompre;
using namespace hompre::fixtures;

namespace {

Vector e(std::size_t n, std::size_t i) { return Vector::basis(n, i); }
Tensor2 el(std::size_t i, std::size_t j) { return Tensor2::elementary(2, i, j); }

std::vector<Tensor2> all_small_tensors() {
  std::vector<Tensor2> out;
  for (int code = 0; code < 81; ++code) {
    Tensor2 r(2, 2);
    int c = code;
    for (std::size_t k = 0; k < 4; ++k, c /= 3) r(k / 2, k % 2) = Scalar(c % 3 - 1);
    out.push_back(r);
  }
  return out;
}

bool psi_cocycle_holds(const ValidationReport& r) {
  for (const auto& f : r.failures())
    if (f.identity.rfind("psi-cocycle/", 0) == 0) return false;
  return true;
}

}  // namespace

TEST(RSharp, Examples) {
  const auto a = r_sharp(el(1, 1));
  EXPECT_EQ(a.apply(e(2, 1)), e(2, 1));
  EXPECT_TRUE(a.apply(e(2, 0)).is_zero());
  const auto b = r_sharp(el(0, 1));
  EXPECT_EQ(b.apply(e(2, 0)), e(2, 1));
  EXPECT_TRUE(b.apply(e(2, 1)).is_zero());
}

TEST(RSharp, FlipRelation) {
  for (const auto& r : all_small_tensors()) {
    const auto s = r_sharp(flip_tensor2(r));
    for (std::size_t q = 0; q < 2; ++q) {
      Vector expect(2);
      for (std::size_t i = 0; i < 2; ++i) expect[i] = r(i, q);
      EXPECT_EQ(s.apply(e(2, q)), expect);
    }
  }
}

TEST(Pro1, Examples) {
  EXPECT_TRUE(check_pro1(F2(), el(1, 1)));
  EXPECT_FALSE(check_pro1(F1(), el(1, 1)));
  EXPECT_FALSE(check_pro1(F2c(), el(0, 0)));
  EXPECT_THROW(check_pro1(F2(), Tensor2(3, 3)), DimensionMismatch);
  const auto rt = make_rtensor(F2(), el(0, 1));
  EXPECT_FALSE(rt.symmetric);
  EXPECT_TRUE(rt.pro1_holds);
}

TEST(CoboundaryCocycle, Examples) {
  EXPECT_TRUE(coboundary_cocycle(F0(), el(0, 1)).is_zero());
  EXPECT_TRUE(coboundary_cocycle(F2(), el(1, 1)).is_zero());
  const auto phi = coboundary_cocycle(F2(), el(0, 0));
  EXPECT_EQ(phi.column(0), e(4, 2));
  EXPECT_TRUE(phi.column(1).is_zero());
}

TEST(DualProduct, Examples) {
  EXPECT_TRUE(dual_product_from_r(F0(), el(0, 0)).product.is_zero());
  EXPECT_TRUE(dual_product_from_r(F2(), el(1, 1)).product.is_zero());
  const auto d = dual_product_from_r(F2(), el(0, 0));
  EXPECT_EQ(dualize_product(d), coboundary_cocycle(F2(), el(0, 0)));
  EXPECT_EQ(d.twist, LinearMap::identity(2));
  EXPECT_THROW(dual_product_from_r(F1(), el(1, 1)), Pro1Violation);
}

TEST(SBracket, Examples) {
  EXPECT_TRUE(hom_s_bracket(F0(), el(0, 1)).is_zero());
  EXPECT_TRUE(hom_s_bracket(F2(), el(1, 1)).is_zero());
  const auto t = hom_s_bracket(F2(), el(0, 0));
  EXPECT_EQ(t.nonzero_count(), 2u);
  EXPECT_EQ(t(0, 0, 1), Scalar(1));
  EXPECT_EQ(t(1, 0, 0), Scalar(-1));
  EXPECT_THROW(hom_s_bracket(FN(), el(0, 0)), InvalidInput);
}

TEST(Pro3, Examples) {
  EXPECT_TRUE(check_pro3(F2(), el(1, 1)).valid());
  EXPECT_TRUE(check_pro3(F2(), el(0, 0)).valid());
  EXPECT_TRUE(check_pro3(F0(), el(0, 1)).valid());
  EXPECT_THROW(check_pro3(F1(), el(1, 1)), Pro1Violation);
}

TEST(PCondition, Examples) {
  EXPECT_TRUE(check_P_condition(F2(), el(0, 0)).valid());
  EXPECT_TRUE(check_P_condition(F0(), el(0, 1)).valid());
  // P(e2) = 0 and P(e1) kills e1⊗e2 − e2⊗e1.
  EXPECT_TRUE(check_P_condition(F2(), el(0, 1)).valid());
}

TEST(SMatrix, Examples) {
  EXPECT_TRUE(is_hom_s_matrix(F2(), el(1, 1)));
  EXPECT_FALSE(is_hom_s_matrix(F2(), el(0, 0)));
  EXPECT_FALSE(is_hom_s_matrix(F2(), el(0, 1)));
}

TEST(Dualize, Examples) {
  EXPECT_TRUE(dualize_product(F0()).is_zero());
  const auto p2 = dualize_product(F2());
  EXPECT_EQ(p2.column(1), e(4, 0));
  EXPECT_TRUE(p2.column(0).is_zero());
  EXPECT_EQ(dualize_product(F1()).column(1), e(4, 1));
}

TEST(Bialgebra, Examples) {
  EXPECT_TRUE(validate_bialgebra(make_bialgebra(F0(), zero_dual(F0()))).valid());
  EXPECT_TRUE(validate_bialgebra(triangular_bialgebra(F2(), el(1, 1))).valid());
  HomPreLieAlgebra adhoc = zero_dual(F2());
  adhoc.product(0, 0, 1) = 1;
  EXPECT_FALSE(validate_bialgebra(make_bialgebra(F2(), adhoc)).valid());
  EXPECT_THROW(validate_bialgebra(make_bialgebra(F1(), zero_algebra(2))), TwistMismatch);
}

TEST(Bialgebra, EquivalenceTheorem) {
  for (const auto& [a, d] : {std::pair{F0(), zero_dual(F0())}, std::pair{F2(), dual_product_from_r(F2(), el(1, 1))}}) {
    const auto rep = check_equivalence_theorem(a, d);
    EXPECT_TRUE(rep.valid());
    EXPECT_TRUE(rep.verdict("bialgebra"));
    EXPECT_TRUE(rep.verdict("matched-pair"));
    EXPECT_TRUE(rep.verdict("manin-triple"));
  }
}

TEST(Bialgebra, Triangular) {
  const auto t0 = triangular_bialgebra(F0(), Tensor2(2, 2));
  EXPECT_TRUE(t0.dual.product.is_zero());
  const auto t2 = triangular_bialgebra(F2(), el(1, 1));
  EXPECT_TRUE(t2.dual.product.is_zero());
  EXPECT_THROW(triangular_bialgebra(F2(), el(0, 0)), NotAnSMatrix);
}

TEST(BialgebraProperties, SweepOverSmallTensors) {
  int smatrices = 0, pro1 = 0;
  for (const auto& a : {F0(), F1(), F2(), F2c()})
    for (const auto& r : all_small_tensors()) {
      if (!check_pro1(a, r)) continue;
      ++pro1;
      EXPECT_TRUE(check_pro3(a, r).valid());
      const auto d = dual_product_from_r(a, r);
      EXPECT_EQ(dualize_product(d), coboundary_cocycle(a, r));
      if (is_hom_s_matrix(a, r)) {
        ++smatrices;
        EXPECT_TRUE(validate_hom_pre_lie(d).valid());
        EXPECT_TRUE(validate_bialgebra(triangular_bialgebra(a, r)).valid());
      }
      if (validate_hom_pre_lie(d).valid()) {
        const auto b = validate_bialgebra(Bialgebra{a, d, coboundary_cocycle(a, r), dualize_product(a)});
        EXPECT_EQ(psi_cocycle_holds(b), check_P_condition(a, r).valid());
        EXPECT_EQ(b.valid(), check_P_condition(a, r).valid());
      }
    }
  EXPECT_GT(pro1, 100);
  EXPECT_GT(smatrices, 10);
}
