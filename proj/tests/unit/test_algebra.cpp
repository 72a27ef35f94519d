#include <gtest/gtest.h>

#include "hompre/algebra.hpp"
#include "hompre/errors.hpp"
#include "hompre/fixtures.hpp"

using namespace hompre;
using namespace hompre::fixtures;

namespace {

bool has_witness(const ValidationReport& r, const std::string& id, std::vector<std::size_t> w) {
  for (const auto& f : r.failures())
    if (f.identity == id && f.witness == w) return true;
  return false;
}

BilinearForm form(std::initializer_list<std::initializer_list<Scalar>> rows, Symmetry s) {
  const auto m = LinearMap::from_rows(rows);
  return BilinearForm{m.rows(), Tensor2::from_map(m), s};
}

}  // namespace

TEST(HomLie, SubAdjacentFixturesValid) {
  EXPECT_TRUE(validate_hom_lie(sub_adjacent(F0())).valid());
  EXPECT_TRUE(validate_hom_lie(sub_adjacent(F1())).valid());
}

TEST(HomLie, ZeroTwistInvalid) {
  auto g = sub_adjacent(F1());
  g.twist = LinearMap::zero(2, 2);
  const auto rep = validate_hom_lie(g);
  EXPECT_FALSE(rep.valid());
  EXPECT_TRUE(rep.has_failure("twist-invertible"));
}

TEST(HomPreLie, FixtureVerdicts) {
  EXPECT_TRUE(validate_hom_pre_lie(F0()).valid());
  EXPECT_TRUE(validate_hom_pre_lie(F1()).valid());
  EXPECT_TRUE(validate_hom_pre_lie(F2()).valid());
  EXPECT_TRUE(validate_hom_pre_lie(F2c()).valid());
}

TEST(HomPreLie, FNWitness) {
  const auto rep = validate_hom_pre_lie(FN());
  ASSERT_FALSE(rep.valid());
  const Failure* f = rep.first("hom-pre-lie");
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->witness, (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_EQ(f->residual, Vector::basis(2, 0));
  EXPECT_EQ(format_witness(f->witness), "(e1,e2,e2)");
}

TEST(HomPreLie, TwistSensitive) {
  auto a = F2();
  a.twist = LinearMap::diagonal({1, 2});
  const auto rep = validate_hom_pre_lie(a);
  EXPECT_FALSE(rep.valid());
  EXPECT_TRUE(rep.has_failure("multiplicativity"));
}

TEST(HomPreLie, EmptyAndOneDimensional) {
  EXPECT_TRUE(validate_hom_pre_lie(zero_algebra(0)).valid());
  EXPECT_TRUE(validate_hom_lie(sub_adjacent(zero_algebra(0))).valid());
  HomPreLieAlgebra one{1, Tensor3::cube(1), LinearMap::diagonal({3})};
  EXPECT_TRUE(validate_hom_pre_lie(one).valid());
}

TEST(HomPreLie, ShapeMismatch) {
  HomPreLieAlgebra bad{2, Tensor3::cube(3), LinearMap::identity(2)};
  EXPECT_THROW(validate_hom_pre_lie(bad), DimensionMismatch);
}

TEST(HomPreLie, ReportsAreSelfCertifying) {
  const auto a = FN();
  const auto rep = validate_hom_pre_lie(a);
  for (const auto& f : rep.failures()) {
    if (f.identity != "hom-pre-lie") continue;
    const Vector x = a.basis(f.witness[0]), y = a.basis(f.witness[1]), z = a.basis(f.witness[2]);
    const Vector az = a.twist.apply(z), ax = a.twist.apply(x), ay = a.twist.apply(y);
    const Vector r = a.mul(a.mul(x, y), az) - a.mul(ax, a.mul(y, z)) - a.mul(a.mul(y, x), az) + a.mul(ay, a.mul(x, z));
    EXPECT_FALSE(r.is_zero());
    EXPECT_EQ(r, f.residual);
  }
}

TEST(SubAdjacent, Brackets) {
  EXPECT_TRUE(sub_adjacent(F0()).bracket.is_zero());
  EXPECT_TRUE(sub_adjacent(F2()).bracket.is_zero());
  const auto g = sub_adjacent(F1());
  EXPECT_EQ(g.br(Vector::basis(2, 0), Vector::basis(2, 1)), Vector::basis(2, 1));
  EXPECT_EQ(g.twist, LinearMap::diagonal({1, 2}));
  EXPECT_THROW(sub_adjacent(FN()), InvalidInput);
}

TEST(Morphism, Examples) {
  EXPECT_TRUE(check_morphism(LinearMap::identity(2), F2(), F2()).valid());
  EXPECT_TRUE(check_morphism(LinearMap::zero(2, 2), F2(), F2()).valid());
  const auto rep = check_morphism(LinearMap::diagonal({1, 2}), F2(), F2());
  EXPECT_FALSE(rep.valid());
  EXPECT_TRUE(rep.has_failure("product"));
  EXPECT_THROW(check_morphism(LinearMap::identity(3), F2(), F2()), DimensionMismatch);
}

TEST(Quadratic, Examples) {
  EXPECT_FALSE(validate_quadratic(F2(), form({{0, 0}, {0, 0}}, Symmetry::skew)).valid());
  EXPECT_TRUE(validate_quadratic(F0(), form({{0, 1}, {-1, 0}}, Symmetry::skew)).valid());
}

TEST(Hessian, Examples) {
  EXPECT_TRUE(validate_hessian(F2(), B_H()).valid());
  const auto rep = validate_hessian(F2(), form({{1, 0}, {0, 1}}, Symmetry::symmetric));
  EXPECT_FALSE(rep.valid());
  EXPECT_TRUE(has_witness(rep, "hessian-2", {1, 0, 0}));
  EXPECT_TRUE(validate_hessian(F0(), form({{2, 1}, {1, 3}}, Symmetry::symmetric)).valid());
}

TEST(Hessian, AsymmetricMatrixRejected) {
  const auto rep = validate_hessian(F0(), form({{0, 1}, {2, 0}}, Symmetry::symmetric));
  EXPECT_TRUE(rep.has_failure("symmetry"));
}

TEST(HomPreLie, FastPredicateMatchesValidator) {
  for (const auto& a : {F0(), F1(), F2(), F2c(), FN()}) EXPECT_EQ(is_hom_pre_lie(a), validate_hom_pre_lie(a).valid());
  HomPreLieAlgebra singular = F0();
  singular.twist = LinearMap(2, 2);
  EXPECT_FALSE(is_hom_pre_lie(singular));
  for (int code = 0; code < 6561; code += 7) {
    HomPreLieAlgebra a{2, Tensor3::cube(2), LinearMap::diagonal({1, 2})};
    int c = code;
    for (std::size_t p = 0; p < 8; ++p, c /= 3) a.product(p / 4, (p / 2) % 2, p % 2) = Scalar(c % 3 - 1);
    EXPECT_EQ(is_hom_pre_lie(a), validate_hom_pre_lie(a).valid()) << code;
  }
}
