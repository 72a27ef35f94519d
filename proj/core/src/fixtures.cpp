#include "hompre/fixtures.hpp"

namespace hompre::fixtures {

namespace {

HomPreLieAlgebra single(std::size_t i, std::size_t j, std::size_t k, LinearMap twist) {
  HomPreLieAlgebra a{2, Tensor3::cube(2), std::move(twist)};
  a.product(i, j, k) = 1;
  return a;
}

}  // namespace

HomPreLieAlgebra F0() { return zero_algebra(2); }
HomPreLieAlgebra F1() { return single(0, 1, 1, LinearMap::diagonal({1, 2})); }
HomPreLieAlgebra F2() { return single(0, 0, 1, LinearMap::identity(2)); }
HomPreLieAlgebra F2c() { return single(0, 0, 1, LinearMap::diagonal({2, 4})); }
HomPreLieAlgebra FN() { return single(0, 1, 0, LinearMap::identity(2)); }

HomLDendriform D1() {
  HomLDendriform d{2, Tensor3::cube(2), Tensor3::cube(2), LinearMap::identity(2)};
  d.left(0, 0, 1) = 1;
  return d;
}

BilinearForm B_H() {
  Tensor2 m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  return BilinearForm{2, m, Symmetry::symmetric};
}

HomPreLieAlgebra zero_algebra(std::size_t n) { return HomPreLieAlgebra{n, Tensor3::cube(n), LinearMap::identity(n)}; }

HomPreLieAlgebra zero_dual(const HomPreLieAlgebra& a) {
  return HomPreLieAlgebra{a.dim, Tensor3::cube(a.dim), a.twist.inverse().transpose()};
}

}  // namespace hompre::fixtures
