#include "hompre/bialgebra.hpp"

#include "hompre/errors.hpp"
#include "hompre/matched_pair.hpp"
#include "hompre/representation.hpp"

namespace hompre {

namespace {

void require_square(const HomPreLieAlgebra& a, const Tensor2& r) {
  check_shape(a);
  if (r.dim_left() != a.dim || r.dim_right() != a.dim) throw DimensionMismatch("tensor does not match algebra");
}

void require_valid(const HomPreLieAlgebra& a, const char* op) {
  if (!validate_hom_pre_lie(a).valid()) throw InvalidInput(std::string(op) + ": algebra is not Hom-pre-Lie");
}

}  // namespace

LinearMap r_sharp(const Tensor2& r) { return r.as_map().transpose(); }

bool check_pro1(const HomPreLieAlgebra& a, const Tensor2& r) {
  require_square(a, r);
  const LinearMap rs = r_sharp(r);
  return rs * a.twist.inverse().transpose() == a.twist * rs;
}

RTensor make_rtensor(const HomPreLieAlgebra& a, const Tensor2& r) {
  return RTensor{r, r.is_symmetric(), check_pro1(a, r)};
}

LinearMap coboundary_cocycle(const HomPreLieAlgebra& a, const Tensor2& r) {
  require_square(a, r);
  const HomLieRep rep = coboundary_rep(a);
  const Vector flat = r.flat();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < a.dim; ++i) cols.push_back(rep.rho[i].apply(flat));
  return LinearMap::from_columns(cols, a.dim * a.dim);
}

HomPreLieAlgebra dual_product_from_r(const HomPreLieAlgebra& a, const Tensor2& r) {
  if (!check_pro1(a, r)) throw Pro1Violation("dual_product_from_r: r♯ does not intertwine the twists");
  const std::size_t n = a.dim;
  const MapFamily ads = star_family(ad_family(a), a.twist, a.twist);
  const MapFamily Rs = star_family(right_family(a), a.twist, a.twist);
  const LinearMap rs = r_sharp(r);
  const LinearMap srs = r_sharp(flip_tensor2(r));
  HomPreLieAlgebra d{n, Tensor3::cube(n), a.twist.inverse().transpose()};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector xi = Vector::basis(n, i), eta = Vector::basis(n, j);
      const Vector v = linear_combination(ads, rs.apply(xi), n, n).apply(eta) -
                       linear_combination(Rs, srs.apply(eta), n, n).apply(xi);
      for (std::size_t k = 0; k < n; ++k) d.product(i, j, k) = v[k];
    }
  return d;
}

Tensor3 hom_s_bracket(const HomPreLieAlgebra& a, const Tensor2& r) {
  require_square(a, r);
  require_valid(a, "hom_s_bracket");
  const std::size_t n = a.dim;
  Tensor3 t = Tensor3::cube(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (r(p, q).is_zero()) continue;
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t u = 0; u < n; ++u) {
          if (r(s, u).is_zero()) continue;
          const Scalar k = r(p, q) * r(s, u);
          const Vector xi = a.basis(p), yi = a.basis(q), xj = a.basis(s), yj = a.basis(u);
          const Vector axi = a.twist.column(p), axj = a.twist.column(s), ayi = a.twist.column(q),
                       ayj = a.twist.column(u);
          t.add_outer(k, axi, axj, a.mul(yi, yj));
          t.add_outer(-k, axi, a.br(xj, yi), ayj);
          t.add_outer(-k, a.mul(xi, xj), ayj, ayi);
        }
    }
  return t;
}

ValidationReport check_pro3(const HomPreLieAlgebra& a, const Tensor2& r) {
  const HomPreLieAlgebra d = dual_product_from_r(a, r);
  const Tensor3 t = hom_s_bracket(a, r);
  const std::size_t n = a.dim;
  const LinearMap rs_at = r_sharp(r) * a.twist.transpose();
  const LinearMap ai2t = a.twist.power(-2).transpose();
  ValidationReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector xi = Vector::basis(n, i), eta = Vector::basis(n, j);
      const Vector lhs = a.mul(rs_at.apply(xi), rs_at.apply(eta)) - rs_at.apply(d.mul(xi, eta));
      const Vector rhs = apply_bilinear(t, ai2t.apply(xi), ai2t.apply(eta));
      rep.expect_zero("pro-3", {i, j}, lhs - rhs);
    }
  return rep;
}

ValidationReport check_P_condition(const HomPreLieAlgebra& a, const Tensor2& r) {
  require_square(a, r);
  require_valid(a, "check_P_condition");
  const std::size_t n = a.dim;
  const MapFamily l = left_family(a, -2);
  auto P = [&](const Vector& x) {
    const LinearMap lx = linear_combination(l, x, n, n);
    return tensor_product_map(lx, a.twist) + tensor_product_map(a.twist, lx);
  };
  const Vector skew = (r - flip_tensor2(r)).flat();
  ValidationReport rep;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = a.basis(i), y = a.basis(j);
      const LinearMap m = P(a.mul(x, y)) - P(a.twist.apply(x)) * P(y);
      rep.expect_zero("p-condition", {i, j}, m.apply(skew));
    }
  return rep;
}

bool is_hom_s_matrix(const HomPreLieAlgebra& a, const Tensor2& r) {
  require_square(a, r);
  require_valid(a, "is_hom_s_matrix");
  return r.is_symmetric() && check_pro1(a, r) && hom_s_bracket(a, r).is_zero();
}

LinearMap dualize_product(const HomPreLieAlgebra& p) {
  check_shape(p);
  const std::size_t n = p.dim;
  LinearMap m(n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) m(i * n + j, k) = p.product(i, j, k);
  return m;
}

Bialgebra make_bialgebra(const HomPreLieAlgebra& primal, const HomPreLieAlgebra& dual) {
  return Bialgebra{primal, dual, dualize_product(dual), dualize_product(primal)};
}

ValidationReport validate_bialgebra(const Bialgebra& b) {
  require_dual_twist(b.primal, b.dual);
  require_valid(b.primal, "validate_bialgebra");
  require_valid(b.dual, "validate_bialgebra");
  const std::size_t n = b.primal.dim;
  if (b.phi_star.rows() != n * n || b.phi_star.cols() != n || b.psi_star.rows() != n * n || b.psi_star.cols() != n)
    throw DimensionMismatch("comultiplication shapes do not match dimension");
  ValidationReport rep;
  const LinearMap dphi = b.phi_star - dualize_product(b.dual);
  for (std::size_t k = 0; k < n; ++k) rep.expect_zero("pairing-phi", {k}, dphi.column(k));
  const LinearMap dpsi = b.psi_star - dualize_product(b.primal);
  for (std::size_t k = 0; k < n; ++k) rep.expect_zero("pairing-psi", {k}, dpsi.column(k));
  rep.absorb(check_one_cocycle(commutator_algebra(b.primal), coboundary_rep(b.primal), b.phi_star), "phi-cocycle");
  rep.absorb(check_one_cocycle(commutator_algebra(b.dual), coboundary_rep(b.dual), b.psi_star), "psi-cocycle");
  return rep;
}

ValidationReport check_equivalence_theorem(const HomPreLieAlgebra& a, const HomPreLieAlgebra& adual) {
  require_dual_twist(a, adual);
  const bool algebras = validate_hom_pre_lie(a).valid() && validate_hom_pre_lie(adual).valid();
  const bool bi = algebras && validate_bialgebra(make_bialgebra(a, adual)).valid();
  const bool mp = validate_matched_pair_pre_lie(standard_pre_lie_matched_pair(a, adual)).valid();
  const bool manin = standard_manin_triple(a, adual).verdict.valid();
  ValidationReport rep;
  rep.add_verdict("bialgebra", bi);
  rep.add_verdict("matched-pair", mp);
  rep.add_verdict("manin-triple", manin);
  if (bi != mp || mp != manin) rep.fail("agreement");
  return rep;
}

Bialgebra triangular_bialgebra(const HomPreLieAlgebra& a, const Tensor2& r) {
  require_square(a, r);
  require_valid(a, "triangular_bialgebra");
  if (!is_hom_s_matrix(a, r)) throw NotAnSMatrix("triangular_bialgebra: r is not a Hom-s-matrix");
  const HomPreLieAlgebra d = dual_product_from_r(a, r);
  return Bialgebra{a, d, coboundary_cocycle(a, r), dualize_product(a)};
}

}  // namespace hompre
