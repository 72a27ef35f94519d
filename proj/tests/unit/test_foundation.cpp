#include <gtest/gtest.h>

#include <random>

#include "hompre/errors.hpp"
#include "hompre/fixtures.hpp"
#include "hompre/linalg.hpp"
#include "hompre/scalar.hpp"

using namespace hompre;

TEST(Scalar, ParsesCanonicalForms) {
  EXPECT_EQ(Scalar::parse("3/4"), Scalar(3, 4));
  EXPECT_EQ(Scalar::parse("-2"), Scalar(-2));
  EXPECT_EQ(Scalar::parse("0"), Scalar(0));
  EXPECT_EQ(Scalar(6, -8).str(), "-3/4");
}

TEST(Scalar, RejectsNonCanonical) {
  EXPECT_THROW(Scalar::parse("2/4"), ParseError);
  EXPECT_THROW(Scalar::parse("1/0"), ParseError);
  EXPECT_THROW(Scalar::parse("1/-2"), ParseError);
  EXPECT_THROW(Scalar::parse("x"), ParseError);
  EXPECT_THROW(Scalar::parse(""), ParseError);
}

TEST(Scalar, DivisionByZero) {
  EXPECT_THROW(Scalar(1) / Scalar(0), DivisionByZero);
  EXPECT_THROW(Scalar(0).inverse(), DivisionByZero);
}

TEST(LinearMap, InvertMapExamples) {
  EXPECT_EQ(invert_map(LinearMap::identity(2)), LinearMap::identity(2));
  EXPECT_EQ(invert_map(LinearMap::diagonal({1, 2})), LinearMap::diagonal({1, Scalar(1, 2)}));
  const auto m = LinearMap::from_rows({{1, 1}, {0, 1}});
  EXPECT_EQ(invert_map(m), LinearMap::from_rows({{1, -1}, {0, 1}}));
  EXPECT_EQ(m * invert_map(m), LinearMap::identity(2));
}

TEST(LinearMap, SingularThrows) {
  EXPECT_THROW(invert_map(LinearMap::from_rows({{1, 2}, {2, 4}})), SingularMap);
}

TEST(LinearMap, DualMapIsTranspose) {
  EXPECT_EQ(dual_map(LinearMap::identity(2)), LinearMap::identity(2));
  EXPECT_EQ(dual_map(LinearMap::diagonal({1, 2})), LinearMap::diagonal({1, 2}));
  EXPECT_EQ(dual_map(LinearMap::from_rows({{0, 1}, {0, 0}})), LinearMap::from_rows({{0, 0}, {1, 0}}));
}

TEST(LinearMap, KroneckerExamples) {
  EXPECT_EQ(tensor_product_map(LinearMap::identity(2), LinearMap::identity(2)), LinearMap::identity(4));
  EXPECT_EQ(tensor_product_map(LinearMap::diagonal({1, 2}), LinearMap::diagonal({1, 3})),
            LinearMap::diagonal({1, 3, 2, 6}));
  const auto k = tensor_product_map(LinearMap::from_rows({{0, 1}, {0, 0}}), LinearMap::identity(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Vector v = k.apply(Vector::basis(4, i * 2 + j));
      EXPECT_EQ(v, i == 1 ? Vector::basis(4, j) : Vector(4));
    }
}

TEST(LinearMap, PowerAndRank) {
  const auto a = LinearMap::diagonal({2, 4});
  EXPECT_EQ(a.power(-2), LinearMap::diagonal({Scalar(1, 4), Scalar(1, 16)}));
  EXPECT_EQ(a.power(0), LinearMap::identity(2));
  EXPECT_EQ(LinearMap::from_rows({{1, 2}, {2, 4}}).rank(), 1u);
}

TEST(LinearMap, SolveInSpan) {
  const auto cols = LinearMap::from_columns({Vector{1, 1, 0}}, 3);
  EXPECT_EQ(*solve_in_span(cols, Vector{2, 2, 0}), Vector{2});
  EXPECT_FALSE(solve_in_span(cols, Vector{1, 0, 0}).has_value());
  EXPECT_EQ(pivot_columns(LinearMap::from_rows({{1, 2, 0}, {0, 0, 1}})), (std::vector<std::size_t>{0, 2}));
}

TEST(Bilinear, FixtureProducts) {
  const auto z = Tensor3::cube(2);
  EXPECT_TRUE(apply_bilinear(z, Vector{1, 2}, Vector{3, 4}).is_zero());
  const auto f2 = fixtures::F2();
  EXPECT_EQ(apply_bilinear(f2.product, Vector::basis(2, 0), Vector::basis(2, 0)), Vector::basis(2, 1));
  const auto f1 = fixtures::F1();
  EXPECT_EQ(apply_bilinear(f1.product, Vector::basis(2, 0), Vector::basis(2, 1)), Vector::basis(2, 1));
  EXPECT_TRUE(apply_bilinear(f1.product, Vector::basis(2, 1), Vector::basis(2, 0)).is_zero());
}

TEST(Bilinear, DimensionMismatch) {
  EXPECT_THROW(apply_bilinear(Tensor3::cube(2), Vector{1, 2, 3}, Vector{1, 2}), DimensionMismatch);
}

TEST(Tensor2, Flip) {
  EXPECT_EQ(flip_tensor2(Tensor2::elementary(2, 1, 1)), Tensor2::elementary(2, 1, 1));
  EXPECT_EQ(flip_tensor2(Tensor2::elementary(2, 0, 1)), Tensor2::elementary(2, 1, 0));
  EXPECT_THROW(flip_tensor2(Tensor2(2, 3)), DimensionMismatch);
}

namespace {

Scalar small(std::mt19937& g) { return Scalar(static_cast<std::int64_t>(g() % 7) - 3, 1 + g() % 3); }

LinearMap random_map(std::mt19937& g, std::size_t r, std::size_t c) {
  LinearMap m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = small(g);
  return m;
}

}  // namespace

TEST(FoundationProperties, InverseInvolution) {
  std::mt19937 g(7);
  int tested = 0;
  for (int t = 0; t < 200; ++t) {
    const auto m = random_map(g, 3, 3);
    if (m.determinant().is_zero()) continue;
    ++tested;
    EXPECT_EQ(invert_map(invert_map(m)), m);
  }
  EXPECT_GT(tested, 100);
}

TEST(FoundationProperties, DualOfKronecker) {
  std::mt19937 g(11);
  for (int t = 0; t < 50; ++t) {
    const auto f = random_map(g, 2, 3), h = random_map(g, 3, 2);
    EXPECT_EQ(dual_map(tensor_product_map(f, h)), tensor_product_map(dual_map(f), dual_map(h)));
  }
}

TEST(FoundationProperties, FlipInvolutionAndSymmetrization) {
  std::mt19937 g(13);
  for (int t = 0; t < 50; ++t) {
    const auto r = Tensor2::from_map(random_map(g, 3, 3));
    EXPECT_EQ(flip_tensor2(flip_tensor2(r)), r);
    EXPECT_TRUE((r + flip_tensor2(r)).is_symmetric());
  }
}

TEST(FoundationProperties, Bilinearity) {
  std::mt19937 g(17);
  for (int t = 0; t < 50; ++t) {
    Tensor3 c = Tensor3::cube(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) c(i, j, k) = small(g);
    const Vector x = random_map(g, 3, 1).column(0), y = random_map(g, 3, 1).column(0),
                 z = random_map(g, 3, 1).column(0);
    const Scalar a = small(g), b = small(g);
    EXPECT_EQ(apply_bilinear(c, a * x + b * y, z), a * apply_bilinear(c, x, z) + b * apply_bilinear(c, y, z));
    EXPECT_EQ(apply_bilinear(c, z, a * x + b * y), a * apply_bilinear(c, z, x) + b * apply_bilinear(c, z, y));
  }
}
