#include "hompre/representation.hpp"

#include <string>

#include "hompre/errors.hpp"

namespace hompre {

namespace {

void check_family(const MapFamily& f, std::size_t count, std::size_t dim, const char* what) {
  if (f.size() != count) throw DimensionMismatch(std::string(what) + ": family size differs from algebra dimension");
  for (const auto& m : f)
    if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch(std::string(what) + ": map has wrong shape");
}

void require_valid(const HomPreLieAlgebra& a, const char* op) {
  if (!validate_hom_pre_lie(a).valid()) throw InvalidInput(std::string(op) + ": algebra is not Hom-pre-Lie");
}

void require_valid(const HomLieAlgebra& g, const char* op) {
  if (!validate_hom_lie(g).valid()) throw InvalidInput(std::string(op) + ": algebra is not Hom-Lie");
}

MapFamily shifted(const HomPreLieAlgebra& a, int s, bool left) {
  const LinearMap p = a.twist.power(s);
  MapFamily f;
  f.reserve(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) {
    const Vector x = p.column(i);
    f.push_back(left ? a.left(x) : a.right(x));
  }
  return f;
}

}  // namespace

ValidationReport validate_lie_rep(const HomLieRep& r) {
  check_shape(r.algebra);
  const auto n = r.algebra.dim;
  const auto m = r.space_dim;
  if (r.beta.rows() != m || r.beta.cols() != m) throw DimensionMismatch("β does not match representation space");
  check_family(r.rho, n, m, "ρ");
  if (r.beta.determinant().is_zero()) throw SingularMap("representation twist β is not invertible");
  ValidationReport rep;
  const auto& phi = r.algebra.twist;
  std::vector<LinearMap> rho_phi;
  for (std::size_t i = 0; i < n; ++i) rho_phi.push_back(r.rho_at(phi.column(i)));
  for (std::size_t i = 0; i < n; ++i) {
    const LinearMap d = rho_phi[i] * r.beta - r.beta * r.rho[i];
    if (!d.is_zero()) rep.fail("hom-lie-rep-1", {i}, Tensor2::from_map(d).flat());
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = Vector::basis(n, i), y = Vector::basis(n, j);
      const LinearMap d = r.rho_at(r.algebra.br(x, y)) * r.beta - rho_phi[i] * r.rho[j] + rho_phi[j] * r.rho[i];
      if (!d.is_zero()) rep.fail("hom-lie-rep-2", {i, j}, Tensor2::from_map(d).flat());
    }
  return rep;
}

ValidationReport validate_pre_lie_rep(const HomPreLieRep& r) {
  check_shape(r.algebra);
  const auto n = r.algebra.dim;
  const auto m = r.space_dim;
  check_family(r.mu, n, m, "μ");
  ValidationReport rep;
  rep.absorb(validate_lie_rep(HomLieRep{commutator_algebra(r.algebra), m, r.beta, r.rho}), "lie");
  const auto& al = r.algebra.twist;
  std::vector<LinearMap> mu_al, rho_al;
  for (std::size_t i = 0; i < n; ++i) {
    mu_al.push_back(r.mu_at(al.column(i)));
    rho_al.push_back(r.rho_at(al.column(i)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const LinearMap d = r.beta * r.mu[i] - mu_al[i] * r.beta;
    if (!d.is_zero()) rep.fail("rep-1", {i}, Tensor2::from_map(d).flat());
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = Vector::basis(n, i), y = Vector::basis(n, j);
      const LinearMap d = mu_al[j] * r.mu[i] - r.mu_at(r.algebra.mul(x, y)) * r.beta - mu_al[j] * r.rho[i] +
                          rho_al[i] * r.mu[j];
      if (!d.is_zero()) rep.fail("rep-2", {i, j}, Tensor2::from_map(d).flat());
    }
  return rep;
}

HomLieRep adjoint_rep(const HomLieAlgebra& g) {
  require_valid(g, "adjoint_rep");
  MapFamily rho;
  for (std::size_t i = 0; i < g.dim; ++i) rho.push_back(g.ad(Vector::basis(g.dim, i)));
  return HomLieRep{g, g.dim, g.twist, rho};
}

MapFamily left_family(const HomPreLieAlgebra& a, int s) { return shifted(a, s, true); }
MapFamily right_family(const HomPreLieAlgebra& a, int s) { return shifted(a, s, false); }
MapFamily ad_family(const HomPreLieAlgebra& a, int s) { return subtract(left_family(a, s), right_family(a, s)); }

HomPreLieRep shifted_rep(const HomPreLieAlgebra& a, int s) {
  require_valid(a, "shifted_rep");
  return HomPreLieRep{a, a.dim, a.twist, left_family(a, s), right_family(a, s)};
}

HomLieRep tensor_rep(const HomLieAlgebra& g, const HomLieRep& r1, const HomLieRep& r2) {
  if (!validate_lie_rep(r1).valid() || !validate_lie_rep(r2).valid())
    throw InvalidInput("tensor_rep: factors are not representations");
  if (!(r1.algebra.bracket == g.bracket && r1.algebra.twist == g.twist && r2.algebra.bracket == g.bracket &&
        r2.algebra.twist == g.twist))
    throw InvalidInput("tensor_rep: factors represent a different algebra");
  MapFamily rho;
  for (std::size_t i = 0; i < g.dim; ++i)
    rho.push_back(tensor_product_map(r1.rho[i], r2.beta) + tensor_product_map(r1.beta, r2.rho[i]));
  return HomLieRep{g, r1.space_dim * r2.space_dim, tensor_product_map(r1.beta, r2.beta), rho};
}

MapFamily star_family(const MapFamily& f, const LinearMap& alpha, const LinearMap& beta) {
  const LinearMap tail = beta.power(-2).transpose();
  const std::size_t m = beta.rows();
  MapFamily out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    out.push_back(-(linear_combination(f, alpha.column(i), m, m).transpose() * tail));
  return out;
}

MapFamily negate(const MapFamily& f) {
  MapFamily out;
  for (const auto& m : f) out.push_back(-m);
  return out;
}

MapFamily subtract(const MapFamily& f, const MapFamily& g) {
  if (f.size() != g.size()) throw DimensionMismatch("families differ in size");
  MapFamily out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f[i] - g[i]);
  return out;
}

HomPreLieRep dual_pre_lie_rep_unchecked(const HomPreLieRep& r) {
  const auto& al = r.algebra.twist;
  const MapFamily rs = star_family(r.rho, al, r.beta);
  const MapFamily ms = star_family(r.mu, al, r.beta);
  return HomPreLieRep{r.algebra, r.space_dim, r.beta.inverse().transpose(), subtract(rs, ms), negate(ms)};
}

HomPreLieRep dual_pre_lie_rep(const HomPreLieRep& r) {
  if (!validate_pre_lie_rep(r).valid()) throw InvalidInput("dual_pre_lie_rep: input is not a representation");
  return dual_pre_lie_rep_unchecked(r);
}

HomPreLieRep coadjoint_pre_lie_rep_unchecked(const HomPreLieAlgebra& a) {
  return dual_pre_lie_rep_unchecked(HomPreLieRep{a, a.dim, a.twist, left_family(a), right_family(a)});
}

HomPreLieRep coadjoint_pre_lie_rep(const HomPreLieAlgebra& a) {
  require_valid(a, "coadjoint_pre_lie_rep");
  return coadjoint_pre_lie_rep_unchecked(a);
}

HomLieRep coboundary_rep_unchecked(const HomPreLieAlgebra& a) {
  const MapFamily l = left_family(a, -2);
  const MapFamily ad = ad_family(a, -2);
  MapFamily rho;
  for (std::size_t i = 0; i < a.dim; ++i)
    rho.push_back(tensor_product_map(l[i], a.twist) + tensor_product_map(a.twist, ad[i]));
  return HomLieRep{commutator_algebra(a), a.dim * a.dim, tensor_product_map(a.twist, a.twist), rho};
}

HomLieRep coboundary_rep(const HomPreLieAlgebra& a) {
  require_valid(a, "coboundary_rep");
  return coboundary_rep_unchecked(a);
}

ValidationReport check_one_cocycle(const HomLieAlgebra& g, const HomLieRep& r, const LinearMap& delta) {
  check_shape(g);
  if (delta.rows() != r.space_dim || delta.cols() != g.dim)
    throw DimensionMismatch("cocycle shape does not match algebra and representation");
  check_family(r.rho, g.dim, r.space_dim, "ρ");
  ValidationReport rep;
  std::vector<LinearMap> rho_phi;
  for (std::size_t i = 0; i < g.dim; ++i) rho_phi.push_back(r.rho_at(g.twist.column(i)));
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j) {
      const Vector x = Vector::basis(g.dim, i), y = Vector::basis(g.dim, j);
      const Vector d = delta.apply(g.br(x, y)) - rho_phi[i].apply(delta.column(j)) + rho_phi[j].apply(delta.column(i));
      rep.expect_zero("cocycle", {i, j}, d);
    }
  return rep;
}

HomPreLieAlgebra semidirect_pre_lie_unchecked(const HomPreLieRep& r) {
  const auto& a = r.algebra;
  const std::size_t n = a.dim, m = r.space_dim, total = n + m;
  HomPreLieAlgebra s{total, Tensor3::cube(total), direct_sum(a.twist, r.beta)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.product(i, j, k) = a.product(i, j, k);
  // x·v = ρ(x)v and u·y = μ(y)u.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < m; ++v)
      for (std::size_t k = 0; k < m; ++k) {
        s.product(i, n + v, n + k) = r.rho[i](k, v);
        s.product(n + v, i, n + k) = r.mu[i](k, v);
      }
  return s;
}

HomPreLieAlgebra semidirect_pre_lie(const HomPreLieRep& r) {
  if (!validate_pre_lie_rep(r).valid()) throw InvalidInput("semidirect_pre_lie: input is not a representation");
  return semidirect_pre_lie_unchecked(r);
}

}  // namespace hompre
