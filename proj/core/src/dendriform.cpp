#include "hompre/dendriform.hpp"

#include "hompre/bialgebra.hpp"
#include "hompre/errors.hpp"

namespace hompre {

namespace {

Tensor3 tensor_from(std::size_t n, const auto& product) {
  Tensor3 t = Tensor3::cube(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector v = product(Vector::basis(n, i), Vector::basis(n, j));
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = v[k];
    }
  return t;
}

MapFamily left_mult(std::size_t n, const Tensor3& t) {
  MapFamily f;
  for (std::size_t i = 0; i < n; ++i) {
    LinearMap m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = t(i, j, k);
    f.push_back(m);
  }
  return f;
}

MapFamily right_mult(std::size_t n, const Tensor3& t) {
  MapFamily f;
  for (std::size_t i = 0; i < n; ++i) {
    LinearMap m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(k, j) = t(j, i, k);
    f.push_back(m);
  }
  return f;
}

void require_valid(const HomLDendriform& d, const char* op) {
  if (!validate_l_dendriform(d).valid())
    throw InvalidInput(std::string(op) + ": input is not a Hom-L-dendriform algebra");
}

}  // namespace

void check_shape(const HomLDendriform& d) {
  const auto n = d.dim;
  for (const Tensor3* t : {&d.left, &d.right})
    if (t->dim(0) != n || t->dim(1) != n || t->dim(2) != n)
      throw DimensionMismatch("dendriform product does not match dimension");
  if (d.twist.rows() != n || d.twist.cols() != n) throw DimensionMismatch("twist does not match dimension");
}

ValidationReport validate_o_operator(const OOperator& o) {
  const auto& r = o.rep;
  const auto& a = r.algebra;
  check_shape(a);
  const std::size_t n = a.dim, m = r.space_dim;
  if (o.T.rows() != n || o.T.cols() != m) throw DimensionMismatch("operator shape does not match spaces");
  if (r.beta.rows() != m || r.beta.cols() != m) throw DimensionMismatch("β does not match representation space");
  if (r.rho.size() != n || r.mu.size() != n) throw DimensionMismatch("representation families have wrong size");
  const LinearMap binv = r.beta.inverse();
  ValidationReport rep;
  const LinearMap d1 = o.T * r.beta - a.twist * o.T;
  for (std::size_t j = 0; j < m; ++j) rep.expect_zero("operator-1", {j}, d1.column(j));
  const LinearMap tb = o.T * binv;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vector u = Vector::basis(m, i), v = Vector::basis(m, j);
      const Vector inner = r.rho_at(tb.apply(u)).apply(v) + r.mu_at(tb.apply(v)).apply(u);
      rep.expect_zero("operator-2", {i, j}, a.mul(o.T.apply(u), o.T.apply(v)) - o.T.apply(inner));
    }
  return rep;
}

ValidationReport check_smatrix_ooperator_equiv(const HomPreLieAlgebra& a, const Tensor2& r) {
  if (!r.is_symmetric()) throw AsymmetricInput("check_smatrix_ooperator_equiv: r is not symmetric");
  const bool s = is_hom_s_matrix(a, r);
  const OOperator o{coadjoint_pre_lie_rep(a), r_sharp(r) * a.twist.inverse().transpose()};
  const bool op = validate_o_operator(o).valid();
  ValidationReport rep;
  rep.add_verdict("s-matrix", s);
  rep.add_verdict("o-operator", op);
  if (s != op) rep.fail("agreement");
  return rep;
}

ValidationReport validate_l_dendriform(const HomLDendriform& d) {
  check_shape(d);
  const std::size_t n = d.dim;
  const auto& al = d.twist;
  ValidationReport rep;
  if (al.determinant().is_zero()) rep.fail("twist-invertible");
  auto L = [&](const Vector& x, const Vector& y) { return d.tri_left(x, y); };
  auto R = [&](const Vector& x, const Vector& y) { return d.tri_right(x, y); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = Vector::basis(n, i), y = Vector::basis(n, j);
      const Vector ax = al.column(i), ay = al.column(j);
      rep.expect_zero("multiplicativity-left", {i, j}, al.apply(L(x, y)) - L(ax, ay));
      rep.expect_zero("multiplicativity-right", {i, j}, al.apply(R(x, y)) - R(ax, ay));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = Vector::basis(n, i), y = Vector::basis(n, j);
      const Vector ax = al.column(i), ay = al.column(j);
      const Vector xly = L(x, y), xry = R(x, y), yrx = R(y, x), ylx = L(y, x);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector z = Vector::basis(n, k), az = al.column(k);
        const Vector l1 = L(xly, az) + L(xry, az) + L(ay, L(x, z)) - L(yrx, az) - L(ylx, az) - L(ax, L(y, z));
        rep.expect_zero("L-1", {i, j, k}, l1);
        const Vector l2 = R(xly, az) + R(ay, L(x, z)) + R(ay, R(x, z)) - R(yrx, az) - L(ax, R(y, z));
        rep.expect_zero("L-2", {i, j, k}, l2);
      }
    }
  return rep;
}

HomPreLieAlgebra horizontal_unchecked(const HomLDendriform& d) {
  check_shape(d);
  return HomPreLieAlgebra{d.dim, d.left + d.right, d.twist};
}

HomPreLieAlgebra vertical_unchecked(const HomLDendriform& d) {
  check_shape(d);
  return HomPreLieAlgebra{
      d.dim, tensor_from(d.dim, [&](const Vector& x, const Vector& y) { return d.tri_left(x, y) - d.tri_right(y, x); }),
      d.twist};
}

HomPreLieAlgebra horizontal(const HomLDendriform& d) {
  require_valid(d, "horizontal");
  return horizontal_unchecked(d);
}

HomPreLieAlgebra vertical(const HomLDendriform& d) {
  require_valid(d, "vertical");
  return vertical_unchecked(d);
}

HomLDendriform transpose_dendriform(const HomLDendriform& d) {
  require_valid(d, "transpose_dendriform");
  return HomLDendriform{
      d.dim, d.left, tensor_from(d.dim, [&](const Vector& x, const Vector& y) { return -d.tri_right(y, x); }),
      d.twist};
}

HomPreLieRep horizontal_rep(const HomLDendriform& d) {
  return HomPreLieRep{horizontal_unchecked(d), d.dim, d.twist, left_mult(d.dim, d.left), right_mult(d.dim, d.right)};
}

HomPreLieRep vertical_rep(const HomLDendriform& d) {
  return HomPreLieRep{vertical_unchecked(d), d.dim, d.twist, left_mult(d.dim, d.left),
                      negate(left_mult(d.dim, d.right))};
}

ValidationReport dendriform_rep_check(const HomLDendriform& d) {
  require_valid(d, "dendriform_rep_check");
  ValidationReport rep;
  rep.absorb(validate_pre_lie_rep(horizontal_rep(d)), "horizontal");
  rep.absorb(validate_pre_lie_rep(vertical_rep(d)), "vertical");
  return rep;
}

OperatorDendriform dendriform_from_o_operator(const OOperator& o) {
  if (!validate_o_operator(o).valid()) throw InvalidInput("dendriform_from_o_operator: T is not an O-operator");
  const auto& r = o.rep;
  const std::size_t m = r.space_dim;
  const LinearMap tb = o.T * r.beta.inverse();
  HomLDendriform onV{m, Tensor3::cube(m), Tensor3::cube(m), r.beta};
  for (std::size_t i = 0; i < m; ++i) {
    const Vector x = tb.column(i);
    const LinearMap rho = r.rho_at(x), mu = r.mu_at(x);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        onV.left(i, j, k) = rho(k, j);
        onV.right(i, j, k) = -mu(k, j);
      }
  }

  const auto piv = pivot_columns(o.T);
  const std::size_t q = piv.size();
  std::vector<Vector> cols;
  for (auto p : piv) cols.push_back(o.T.column(p));
  const LinearMap basis = LinearMap::from_columns(cols, o.T.rows());
  auto coords = [&](const Vector& w) {
    auto c = solve_in_span(basis, w);
    if (!c) throw InvalidInput("dendriform_from_o_operator: image is not closed");
    return *c;
  };
  HomLDendriform onTV{q, Tensor3::cube(q), Tensor3::cube(q), LinearMap(q, q)};
  for (std::size_t a = 0; a < q; ++a) {
    const Vector ua = Vector::basis(m, piv[a]);
    const Vector ta = coords(r.algebra.twist.apply(cols[a]));
    for (std::size_t k = 0; k < q; ++k) onTV.twist(k, a) = ta[k];
    for (std::size_t b = 0; b < q; ++b) {
      const Vector ub = Vector::basis(m, piv[b]);
      const Vector l = coords(o.T.apply(onV.tri_left(ua, ub)));
      const Vector rr = coords(o.T.apply(onV.tri_right(ua, ub)));
      for (std::size_t k = 0; k < q; ++k) {
        onTV.left(a, b, k) = l[k];
        onTV.right(a, b, k) = rr[k];
      }
    }
  }
  return OperatorDendriform{std::move(onV), std::move(onTV), basis};
}

HomLDendriform compatible_dendriform_from_invertible(const OOperator& o) {
  const LinearMap tinv = o.T.inverse();
  if (!validate_o_operator(o).valid()) throw InvalidInput("compatible_dendriform_from_invertible: not an O-operator");
  const auto& r = o.rep;
  const auto& a = r.algebra;
  const std::size_t n = a.dim;
  const LinearMap ainv = a.twist.inverse();
  HomLDendriform d{n, Tensor3::cube(n), Tensor3::cube(n), a.twist};
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = ainv.column(i);
    const LinearMap l = o.T * r.rho_at(x) * tinv;
    const LinearMap rr = -(o.T * r.mu_at(x) * tinv);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        d.left(i, j, k) = l(k, j);
        d.right(i, j, k) = rr(k, j);
      }
  }
  return d;
}

OOperator o_operator_from_dendriform(const HomLDendriform& d) {
  require_valid(d, "o_operator_from_dendriform");
  return OOperator{vertical_rep(d), d.twist};
}

HomLDendriform dendriform_from_hessian(const HomPreLieAlgebra& a, const BilinearForm& b) {
  if (!validate_hom_pre_lie(a).valid()) throw InvalidInput("dendriform_from_hessian: algebra is not Hom-pre-Lie");
  if (!validate_hessian(a, b).valid()) throw InvalidInput("dendriform_from_hessian: form is not a Hessian structure");
  const std::size_t n = a.dim;
  const LinearMap ai1 = a.twist.inverse();
  const LinearMap ai2 = ai1 * ai1;
  const LinearMap solver = b.matrix.as_map().transpose().inverse();
  HomLDendriform d{n, Tensor3::cube(n), Tensor3::cube(n), a.twist};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x1 = ai1.column(i), y = a.basis(j);
      Vector rl(n), rr(n);
      for (std::size_t c = 0; c < n; ++c) {
        const Vector z2 = ai2.column(c);
        rl[c] = -b(y, a.br(x1, z2));
        rr[c] = -b(y, a.mul(z2, x1));
      }
      const Vector wl = solver.apply(rl), wr = solver.apply(rr);
      for (std::size_t k = 0; k < n; ++k) {
        d.left(i, j, k) = wl[k];
        d.right(i, j, k) = wr[k];
      }
    }
  return d;
}

ValidationReport check_hessian_dendriform(const HomPreLieAlgebra& a, const BilinearForm& b,
                                          const HomLDendriform& d) {
  const std::size_t n = a.dim;
  const LinearMap ai1 = a.twist.inverse();
  const LinearMap ai2 = ai1 * ai1;
  ValidationReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector x = a.basis(i), y = a.basis(j), z = a.basis(k);
        const Vector x1 = ai1.column(i), z2 = ai2.column(k);
        rep.expect_zero("hessian-left", {i, j, k}, Vector{b(d.tri_left(x, y), z) + b(y, a.br(x1, z2))});
        rep.expect_zero("hessian-right", {i, j, k}, Vector{b(d.tri_right(x, y), z) + b(y, a.mul(z2, x1))});
      }
  return rep;
}

HomPreLieAlgebra semidirect_ambient(const HomPreLieRep& r, SemidirectVariant variant) {
  HomPreLieRep dual = dual_pre_lie_rep_unchecked(r);
  if (variant == SemidirectVariant::rho_star) dual.mu = negate(star_family(r.rho, r.algebra.twist, r.beta));
  return semidirect_pre_lie_unchecked(dual);
}

Tensor2 embed_operator_tensor(const LinearMap& T, std::size_t dim_a, std::size_t dim_v) {
  if (T.rows() != dim_a || T.cols() != dim_v) throw DimensionMismatch("operator shape does not match spaces");
  const std::size_t total = dim_a + dim_v;
  Tensor2 r(total, total);
  for (std::size_t a = 0; a < dim_a; ++a)
    for (std::size_t i = 0; i < dim_v; ++i) {
      r(a, dim_a + i) += T(a, i);
      r(dim_a + i, a) += T(a, i);
    }
  return r;
}

SemidirectSMatrix semidirect_smatrix(const HomPreLieRep& r, const LinearMap& T, SemidirectVariant variant) {
  const auto& a = r.algebra;
  check_shape(a);
  if (T.rows() != a.dim || T.cols() != r.space_dim) throw DimensionMismatch("operator shape does not match spaces");
  if (!(T * r.beta == a.twist * T)) throw IntertwinerViolation("semidirect_smatrix: T∘β ≠ α∘T");
  SemidirectSMatrix out{semidirect_ambient(r, variant), embed_operator_tensor(T, a.dim, r.space_dim), {}};
  const bool ambient = validate_hom_pre_lie(out.big_algebra).valid();
  const bool s = ambient && is_hom_s_matrix(out.big_algebra, out.rT);
  const bool op = validate_o_operator(OOperator{r, T * r.beta}).valid();
  out.verdict.add_verdict("ambient", ambient);
  out.verdict.add_verdict("s-matrix", s);
  out.verdict.add_verdict("o-operator", op);
  if (s != op) out.verdict.fail("agreement");
  return out;
}

CanonicalSMatrix canonical_smatrix(const HomLDendriform& d, SemidirectVariant variant) {
  require_valid(d, "canonical_smatrix");
  const HomPreLieRep rep = vertical_rep(d);
  return CanonicalSMatrix{semidirect_ambient(rep, variant),
                          embed_operator_tensor(LinearMap::identity(d.dim), d.dim, d.dim)};
}

}  // namespace hompre
