#include "hompre/algebra.hpp"

#include "hompre/errors.hpp"

namespace hompre {

namespace {

Vector scalar_vec(const Scalar& s) { return Vector{s}; }

bool twist_invertible(const LinearMap& m) { return !m.determinant().is_zero(); }

ValidationReport check_form_shape_and_symmetry(const BilinearForm& b) {
  ValidationReport rep;
  const auto& m = b.matrix;
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) {
      const Scalar expected = b.symmetry == Symmetry::symmetric ? m(j, i) : -m(j, i);
      rep.expect_zero("symmetry", {i, j}, scalar_vec(m(i, j) - expected));
    }
  if (m.as_map().determinant().is_zero()) rep.fail("nondegenerate");
  return rep;
}

}  // namespace

LinearMap HomLieAlgebra::ad(const Vector& x) const {
  LinearMap m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const Vector col = br(x, Vector::basis(dim, j));
    for (std::size_t k = 0; k < dim; ++k) m(k, j) = col[k];
  }
  return m;
}

LinearMap HomPreLieAlgebra::left(const Vector& x) const {
  LinearMap m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const Vector col = mul(x, basis(j));
    for (std::size_t k = 0; k < dim; ++k) m(k, j) = col[k];
  }
  return m;
}

LinearMap HomPreLieAlgebra::right(const Vector& x) const {
  LinearMap m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const Vector col = mul(basis(j), x);
    for (std::size_t k = 0; k < dim; ++k) m(k, j) = col[k];
  }
  return m;
}

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  Scalar s;
  for (std::size_t a = 0; a < dim; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim; ++b)
      if (!y[b].is_zero() && !matrix(a, b).is_zero()) s += x[a] * matrix(a, b) * y[b];
  }
  return s;
}

void check_shape(const HomLieAlgebra& g) {
  const auto n = g.dim;
  if (g.bracket.dim(0) != n || g.bracket.dim(1) != n || g.bracket.dim(2) != n)
    throw DimensionMismatch("bracket tensor does not match algebra dimension");
  if (g.twist.rows() != n || g.twist.cols() != n) throw DimensionMismatch("twist does not match algebra dimension");
}

void check_shape(const HomPreLieAlgebra& a) {
  const auto n = a.dim;
  if (a.product.dim(0) != n || a.product.dim(1) != n || a.product.dim(2) != n)
    throw DimensionMismatch("product tensor does not match algebra dimension");
  if (a.twist.rows() != n || a.twist.cols() != n) throw DimensionMismatch("twist does not match algebra dimension");
}

void check_shape(const BilinearForm& b) {
  if (b.matrix.dim_left() != b.dim || b.matrix.dim_right() != b.dim)
    throw DimensionMismatch("form matrix does not match dimension");
}

ValidationReport validate_hom_lie(const HomLieAlgebra& g) {
  check_shape(g);
  ValidationReport rep;
  const auto n = g.dim;
  const auto& phi = g.twist;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        rep.expect_zero("skew-symmetry", {i, j}, scalar_vec(g.bracket(i, j, k) + g.bracket(j, i, k)));
  if (!twist_invertible(phi)) rep.fail("twist-invertible");
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = Vector::basis(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector y = Vector::basis(n, j);
      rep.expect_zero("multiplicativity", {i, j}, phi.apply(g.br(x, y)) - g.br(phi.apply(x), phi.apply(y)));
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = Vector::basis(n, i), y = Vector::basis(n, j), z = Vector::basis(n, k);
        const Vector r = g.br(phi.apply(x), g.br(y, z)) + g.br(phi.apply(y), g.br(z, x)) +
                         g.br(phi.apply(z), g.br(x, y));
        rep.expect_zero("hom-jacobi", {i, j, k}, r);
      }
  return rep;
}

ValidationReport validate_hom_pre_lie(const HomPreLieAlgebra& a) {
  check_shape(a);
  ValidationReport rep;
  const auto n = a.dim;
  const auto& al = a.twist;
  if (!twist_invertible(al)) rep.fail("twist-invertible");
  std::vector<Vector> e, ae;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(a.basis(i));
    ae.push_back(al.column(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rep.expect_zero("multiplicativity", {i, j}, al.apply(a.mul(e[i], e[j])) - a.mul(ae[i], ae[j]));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector xy = a.mul(e[i], e[j]);
      const Vector yx = a.mul(e[j], e[i]);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector r = a.mul(xy, ae[k]) - a.mul(ae[i], a.mul(e[j], e[k])) - a.mul(yx, ae[k]) +
                         a.mul(ae[j], a.mul(e[i], e[k]));
        rep.expect_zero("hom-pre-lie", {i, j, k}, r);
      }
    }
  return rep;
}

bool is_hom_pre_lie(const HomPreLieAlgebra& a) {
  check_shape(a);
  const auto n = a.dim;
  const auto& al = a.twist;
  std::vector<Vector> e, ae;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(a.basis(i));
    ae.push_back(al.column(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector xy = a.mul(e[i], e[j]);
      if (al.apply(xy) != a.mul(ae[i], ae[j])) return false;
      const Vector yx = a.mul(e[j], e[i]);
      for (std::size_t k = 0; k < n; ++k)
        if (a.mul(xy, ae[k]) - a.mul(yx, ae[k]) != a.mul(ae[i], a.mul(e[j], e[k])) - a.mul(ae[j], a.mul(e[i], e[k])))
          return false;
    }
  return twist_invertible(al);
}

HomLieAlgebra commutator_algebra(const HomPreLieAlgebra& a) {
  check_shape(a);
  HomLieAlgebra g{a.dim, Tensor3::cube(a.dim), a.twist};
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) g.bracket(i, j, k) = a.product(i, j, k) - a.product(j, i, k);
  return g;
}

HomLieAlgebra sub_adjacent(const HomPreLieAlgebra& a) {
  if (!validate_hom_pre_lie(a).valid()) throw InvalidInput("sub_adjacent: input is not a Hom-pre-Lie algebra");
  return commutator_algebra(a);
}

ValidationReport check_morphism(const LinearMap& f, const HomPreLieAlgebra& src, const HomPreLieAlgebra& dst) {
  check_shape(src);
  check_shape(dst);
  if (f.rows() != dst.dim || f.cols() != src.dim) throw DimensionMismatch("morphism shape does not match algebras");
  ValidationReport rep;
  for (std::size_t i = 0; i < src.dim; ++i)
    for (std::size_t j = 0; j < src.dim; ++j) {
      const Vector x = src.basis(i), y = src.basis(j);
      rep.expect_zero("product", {i, j}, f.apply(src.mul(x, y)) - dst.mul(f.apply(x), f.apply(y)));
    }
  const LinearMap d = f * src.twist - dst.twist * f;
  for (std::size_t j = 0; j < src.dim; ++j) rep.expect_zero("twist", {j}, d.column(j));
  return rep;
}

ValidationReport validate_quadratic(const HomPreLieAlgebra& a, const BilinearForm& w) {
  check_shape(a);
  check_shape(w);
  if (w.dim != a.dim) throw DimensionMismatch("form dimension differs from algebra dimension");
  if (w.symmetry != Symmetry::skew) throw DimensionMismatch("quadratic form must be declared skew");
  ValidationReport rep;
  rep.absorb(validate_hom_pre_lie(a), "algebra");
  rep.absorb(check_form_shape_and_symmetry(w), "form");
  const auto n = a.dim;
  const auto& al = a.twist;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = a.basis(i), y = a.basis(j);
      rep.expect_zero("invariant-1", {i, j}, scalar_vec(w(al.apply(x), al.apply(y)) - w(x, y)));
      for (std::size_t k = 0; k < n; ++k) {
        const Vector z = a.basis(k);
        const Scalar r = w(a.mul(x, y), al.apply(z)) + w(al.apply(y), a.br(x, z));
        rep.expect_zero("invariant-2", {i, j, k}, scalar_vec(r));
      }
    }
  return rep;
}

ValidationReport validate_hessian(const HomPreLieAlgebra& a, const BilinearForm& b) {
  check_shape(a);
  check_shape(b);
  if (b.dim != a.dim) throw DimensionMismatch("form dimension differs from algebra dimension");
  if (b.symmetry != Symmetry::symmetric) throw DimensionMismatch("Hessian form must be declared symmetric");
  ValidationReport rep = check_form_shape_and_symmetry(b);
  const auto n = a.dim;
  const auto& al = a.twist;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = a.basis(i), y = a.basis(j);
      rep.expect_zero("hessian-1", {i, j}, scalar_vec(b(al.apply(x), al.apply(y)) - b(x, y)));
      for (std::size_t k = 0; k < n; ++k) {
        const Vector z = a.basis(k);
        const Scalar r = b(a.mul(x, y), al.apply(z)) - b(al.apply(x), a.mul(y, z)) - b(a.mul(y, x), al.apply(z)) +
                         b(al.apply(y), a.mul(x, z));
        rep.expect_zero("hessian-2", {i, j, k}, scalar_vec(r));
      }
    }
  return rep;
}

}  // namespace hompre
