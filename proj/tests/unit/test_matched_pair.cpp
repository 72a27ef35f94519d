#include <gtest/gtest.h>

#include "hompre/bialgebra.hpp"
#include "hompre/errors.hpp"
#include "hompre/fixtures.hpp"
#include "hompre/matched_pair.hpp"

using namespace hompre;
using namespace hompre::fixtures;

namespace {

Vector e(std::size_t n, std::size_t i) { return Vector::basis(n, i); }

MapFamily zeros(std::size_t count, std::size_t n) { return MapFamily(count, LinearMap(n, n)); }

HomLieAlgebra abelian(std::size_t n) { return HomLieAlgebra{n, Tensor3::cube(n), LinearMap::identity(n)}; }

HomPreLieAlgebra dual_rs() { return dual_product_from_r(F2(), Tensor2::elementary(2, 1, 1)); }

// Re-expresses a triple in new coordinates: p maps new coordinates to old ones.
ManinTriple transport(const ManinTriple& m, const LinearMap& p, const Scalar& form_scale) {
  const std::size_t n = m.total.dim;
  const LinearMap pinv = p.inverse();
  HomPreLieAlgebra t{n, Tensor3::cube(n), pinv * m.total.twist * p};
  Tensor2 w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = pinv.apply(m.total.mul(p.column(i), p.column(j)));
      for (std::size_t k = 0; k < n; ++k) t.product(i, j, k) = v[k];
      w(i, j) = form_scale * m.form(p.column(i), p.column(j));
    }
  return ManinTriple{t, BilinearForm{n, w, Symmetry::skew}, m.part1, m.part2};
}

void expect_standardization(const ManinTriple& m) {
  ASSERT_TRUE(validate_manin_triple(m).valid());
  const auto s = standardize_manin_triple(m);
  EXPECT_TRUE(check_morphism(s.iso, m.total, s.standard.total).valid());
  EXPECT_TRUE(validate_manin_triple(s.standard).valid());
  const std::size_t n = m.total.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      EXPECT_EQ(m.form(e(n, i), e(n, j)), s.standard.form(s.iso.column(i), s.iso.column(j)));
  const std::size_t h = n / 2;
  for (auto idx : m.part1)
    for (std::size_t k = h; k < n; ++k) EXPECT_TRUE(s.iso(k, idx).is_zero());
  for (auto idx : m.part2)
    for (std::size_t k = 0; k < h; ++k) EXPECT_TRUE(s.iso(k, idx).is_zero());
}

}  // namespace

TEST(LieMatchedPair, Trivial) {
  const auto g = sub_adjacent(F0());
  EXPECT_TRUE(validate_matched_pair_lie({g, g, zeros(2, 2), zeros(2, 2)}).valid());
  const auto d = double_lie({g, g, zeros(2, 2), zeros(2, 2)});
  EXPECT_EQ(d.dim, 4u);
  EXPECT_TRUE(d.bracket.is_zero());
}

TEST(LieMatchedPair, ZeroRepsValid) {
  EXPECT_TRUE(validate_matched_pair_lie({sub_adjacent(F2()), abelian(2), zeros(2, 2), zeros(2, 2)}).valid());
}

TEST(LieMatchedPair, ViolatingCandidate) {
  const LieMatchedPair mp{sub_adjacent(F1()), abelian(2), zeros(2, 2),
                          {LinearMap::identity(2), LinearMap(2, 2)}};
  const auto rep = validate_matched_pair_lie(mp);
  EXPECT_FALSE(rep.valid());
  EXPECT_TRUE(rep.has_failure("matched-pair-1"));
  EXPECT_FALSE(rep.has_failure("rho2/hom-lie-rep-1"));
  EXPECT_EQ(validate_hom_lie(double_lie(mp)).valid(), rep.valid());
}

TEST(LieMatchedPair, DoubleRestrictsToG) {
  const auto d = double_lie({sub_adjacent(F1()), abelian(2), zeros(2, 2), zeros(2, 2)});
  EXPECT_EQ(d.br(e(4, 0), e(4, 1)), e(4, 1));
  EXPECT_EQ(d.twist, LinearMap::diagonal({1, 2, 1, 1}));
  EXPECT_TRUE(validate_hom_lie(d).valid());
}

TEST(PreLieMatchedPair, Examples) {
  const auto f0 = F0();
  EXPECT_TRUE(validate_matched_pair_pre_lie({f0, f0, zeros(2, 2), zeros(2, 2), zeros(2, 2), zeros(2, 2)}).valid());
  EXPECT_TRUE(double_pre_lie({f0, f0, zeros(2, 2), zeros(2, 2), zeros(2, 2), zeros(2, 2)}).product.is_zero());
  const auto f2 = F2();
  EXPECT_TRUE(validate_matched_pair_pre_lie({f2, f2, zeros(2, 2), zeros(2, 2), zeros(2, 2), zeros(2, 2)}).valid());
  EXPECT_TRUE(validate_matched_pair_pre_lie(standard_pre_lie_matched_pair(f2, dual_rs())).valid());
}

TEST(PreLieMatchedPair, SemidirectSpecialization) {
  const auto c = coadjoint_pre_lie_rep(F2());
  const HomPreLieAlgebra b{2, Tensor3::cube(2), c.beta};
  const auto d = double_pre_lie({F2(), b, c.rho, c.mu, zeros(2, 2), zeros(2, 2)});
  EXPECT_EQ(d, semidirect_pre_lie(c));
}

TEST(PreLieMatchedPair, Equivalence) {
  const auto r0 = check_pre_lie_matched_equiv(F0(), zero_dual(F0()));
  EXPECT_TRUE(r0.valid());
  EXPECT_TRUE(r0.verdict("lie-matched-pair"));
  EXPECT_TRUE(r0.verdict("pre-lie-matched-pair"));
  const auto r2 = check_pre_lie_matched_equiv(F2(), dual_rs());
  EXPECT_TRUE(r2.valid());
  EXPECT_TRUE(r2.verdict("lie-matched-pair"));
  EXPECT_THROW(check_pre_lie_matched_equiv(F1(), zero_algebra(2)), TwistMismatch);
}

TEST(Manin, StandardPairingForm) {
  const auto w = standard_pairing_form(2);
  EXPECT_EQ(w.matrix.as_map(), LinearMap::from_rows({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  EXPECT_EQ(w.symmetry, Symmetry::skew);
}

TEST(Manin, StandardTriples) {
  const auto t0 = standard_manin_triple(F0(), zero_dual(F0()));
  EXPECT_TRUE(t0.verdict.valid());
  EXPECT_TRUE(t0.triple.total.product.is_zero());
  const auto t2 = standard_manin_triple(F2(), zero_dual(F2()));
  EXPECT_EQ(t2.triple.total.mul(e(4, 3), e(4, 0)), e(4, 2));
  EXPECT_TRUE(standard_manin_triple(F2(), dual_rs()).verdict.valid());
  EXPECT_THROW(standard_manin_triple(F1(), zero_algebra(2)), TwistMismatch);
}

TEST(Manin, StandardizeStandardTriple) {
  const auto m = standard_manin_triple(F2(), dual_rs()).triple;
  const auto s = standardize_manin_triple(m);
  EXPECT_EQ(s.iso, LinearMap::identity(4));
  expect_standardization(m);
}

TEST(Manin, StandardizeRescaledCopy) {
  const auto m = standard_manin_triple(F2(), dual_rs()).triple;
  const auto moved = transport(m, LinearMap::diagonal({1, 1, Scalar(1, 2), Scalar(1, 2)}), 2);
  expect_standardization(moved);
  const auto s = standardize_manin_triple(moved);
  EXPECT_EQ(s.iso, LinearMap::identity(4));
}

TEST(Manin, StandardizeMixedBasis) {
  const auto m = standard_manin_triple(F1(), zero_dual(F1())).triple;
  ASSERT_TRUE(validate_manin_triple(m).valid());
  const auto moved = transport(m, LinearMap::diagonal({1, 1, 3, -1}), Scalar(1, 3));
  expect_standardization(moved);
}

TEST(Manin, StandardizeTrivial) {
  const auto m = standard_manin_triple(F0(), zero_dual(F0())).triple;
  expect_standardization(m);
}

TEST(Manin, StandardizeRejectsInvalid) {
  auto m = standard_manin_triple(F0(), zero_dual(F0())).triple;
  m.form.matrix = Tensor2(4, 4);
  EXPECT_THROW(standardize_manin_triple(m), InvalidInput);
}
