#include "hompre/matched_pair.hpp"

#include <algorithm>

#include "hompre/errors.hpp"

namespace hompre {

namespace {

LinearMap at(const MapFamily& f, const Vector& x, std::size_t dim) { return linear_combination(f, x, dim, dim); }

void check_families(const MapFamily& f, std::size_t count, std::size_t dim) {
  if (f.size() != count) throw DimensionMismatch("matched-pair family has wrong size");
  for (const auto& m : f)
    if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch("matched-pair map has wrong shape");
}

bool invertible(const LinearMap& m) { return !m.determinant().is_zero(); }

}  // namespace

ValidationReport validate_matched_pair_lie(const LieMatchedPair& mp) {
  const auto& g = mp.g;
  const auto& h = mp.h;
  check_shape(g);
  check_shape(h);
  const std::size_t n = g.dim, m = h.dim;
  check_families(mp.rho, n, m);
  check_families(mp.rho2, m, n);
  ValidationReport rep;
  rep.absorb(validate_hom_lie(g), "g");
  rep.absorb(validate_hom_lie(h), "h");
  if (invertible(h.twist)) rep.absorb(validate_lie_rep(HomLieRep{g, m, h.twist, mp.rho}), "rho");
  if (invertible(g.twist)) rep.absorb(validate_lie_rep(HomLieRep{h, n, g.twist, mp.rho2}), "rho2");
  const auto& phi = g.twist;
  const auto& phi2 = h.twist;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < m; ++p) {
        const Vector x = Vector::basis(n, i), y = Vector::basis(n, j), xp = Vector::basis(m, p);
        const LinearMap r2xp = mp.rho2[p];
        const Vector lhs = at(mp.rho2, phi2.apply(xp), n).apply(g.br(x, y));
        const Vector rhs = g.br(r2xp.apply(x), phi.apply(y)) + g.br(phi.apply(x), r2xp.apply(y)) +
                           at(mp.rho2, mp.rho[j].apply(xp), n).apply(phi.apply(x)) -
                           at(mp.rho2, mp.rho[i].apply(xp), n).apply(phi.apply(y));
        rep.expect_zero("matched-pair-1", {i, j, n + p}, lhs - rhs);
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        const Vector x = Vector::basis(n, i), xp = Vector::basis(m, p), yp = Vector::basis(m, q);
        const LinearMap rx = mp.rho[i];
        const Vector lhs = at(mp.rho, phi.apply(x), m).apply(h.br(xp, yp));
        const Vector rhs = h.br(rx.apply(xp), phi2.apply(yp)) + h.br(phi2.apply(xp), rx.apply(yp)) +
                           at(mp.rho, mp.rho2[q].apply(x), m).apply(phi2.apply(xp)) -
                           at(mp.rho, mp.rho2[p].apply(x), m).apply(phi2.apply(yp));
        rep.expect_zero("matched-pair-2", {i, n + p, n + q}, lhs - rhs);
      }
  return rep;
}

HomLieAlgebra double_lie(const LieMatchedPair& mp) {
  check_shape(mp.g);
  check_shape(mp.h);
  const std::size_t n = mp.g.dim, m = mp.h.dim, total = n + m;
  check_families(mp.rho, n, m);
  check_families(mp.rho2, m, n);
  HomLieAlgebra d{total, Tensor3::cube(total), direct_sum(mp.g.twist, mp.h.twist)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d.bracket(i, j, k) = mp.g.bracket(i, j, k);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t k = 0; k < m; ++k) d.bracket(n + p, n + q, n + k) = mp.h.bracket(p, q, k);
  // [x, y'] = (−ρ'(y')x, ρ(x)y') and [x', y] = (ρ'(x')y, −ρ(y)x').
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t k = 0; k < n; ++k) {
        d.bracket(i, n + p, k) = -mp.rho2[p](k, i);
        d.bracket(n + p, i, k) = mp.rho2[p](k, i);
      }
      for (std::size_t k = 0; k < m; ++k) {
        d.bracket(i, n + p, n + k) = mp.rho[i](k, p);
        d.bracket(n + p, i, n + k) = -mp.rho[i](k, p);
      }
    }
  return d;
}

ValidationReport validate_matched_pair_pre_lie(const PreLieMatchedPair& mp) {
  const auto& A = mp.a;
  const auto& B = mp.b;
  check_shape(A);
  check_shape(B);
  const std::size_t n = A.dim, m = B.dim;
  check_families(mp.lA, n, m);
  check_families(mp.rA, n, m);
  check_families(mp.lB, m, n);
  check_families(mp.rB, m, n);
  ValidationReport rep;
  rep.absorb(validate_hom_pre_lie(A), "a");
  rep.absorb(validate_hom_pre_lie(B), "b");
  if (invertible(B.twist)) rep.absorb(validate_pre_lie_rep(HomPreLieRep{A, m, B.twist, mp.lA, mp.rA}), "rep-on-b");
  if (invertible(A.twist)) rep.absorb(validate_pre_lie_rep(HomPreLieRep{B, n, A.twist, mp.lB, mp.rB}), "rep-on-a");
  const auto& aA = A.twist;
  const auto& aB = B.twist;
  auto lA = [&](const Vector& x) { return at(mp.lA, x, m); };
  auto rA = [&](const Vector& x) { return at(mp.rA, x, m); };
  auto lB = [&](const Vector& a) { return at(mp.lB, a, n); };
  auto rB = [&](const Vector& a) { return at(mp.rB, a, n); };

  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = A.basis(i);
    const Vector ax = aA.apply(x);
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        const Vector a = B.basis(p), b = B.basis(q);
        const Vector aa = aB.apply(a), ab = aB.apply(b);
        const Vector r1 = rA(ax).apply(B.br(a, b)) - rA(lB(b).apply(x)).apply(aa) + rA(lB(a).apply(x)).apply(ab) -
                          B.mul(aa, mp.rA[i].apply(b)) + B.mul(ab, mp.rA[i].apply(a));
        rep.expect_zero("pre-matched-pair-1", {i, n + p, n + q}, r1);
        const Vector r2 = lA(ax).apply(B.mul(a, b)) + lA(lB(a).apply(x) - rB(a).apply(x)).apply(ab) -
                          B.mul(mp.lA[i].apply(a) - mp.rA[i].apply(a), ab) - rA(rB(b).apply(x)).apply(aa) -
                          B.mul(aa, mp.lA[i].apply(b));
        rep.expect_zero("pre-matched-pair-2", {i, n + p, n + q}, r2);
      }
  }
  for (std::size_t p = 0; p < m; ++p) {
    const Vector a = B.basis(p);
    const Vector aa = aB.apply(a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Vector x = A.basis(i), y = A.basis(j);
        const Vector ax = aA.apply(x), ay = aA.apply(y);
        const Vector r3 = rB(aa).apply(A.br(x, y)) - rB(mp.lA[j].apply(a)).apply(ax) +
                          rB(mp.lA[i].apply(a)).apply(ay) - A.mul(ax, mp.rB[p].apply(y)) +
                          A.mul(ay, mp.rB[p].apply(x));
        rep.expect_zero("pre-matched-pair-3", {i, j, n + p}, r3);
        const Vector r4 = lB(aa).apply(A.mul(x, y)) + lB(mp.lA[i].apply(a) - mp.rA[i].apply(a)).apply(ay) -
                          A.mul(mp.lB[p].apply(x) - mp.rB[p].apply(x), ay) - rB(mp.rA[j].apply(a)).apply(ax) -
                          A.mul(ax, mp.lB[p].apply(y));
        rep.expect_zero("pre-matched-pair-4", {i, j, n + p}, r4);
      }
  }
  return rep;
}

HomPreLieAlgebra double_pre_lie(const PreLieMatchedPair& mp) {
  const auto& A = mp.a;
  const auto& B = mp.b;
  check_shape(A);
  check_shape(B);
  const std::size_t n = A.dim, m = B.dim, total = n + m;
  check_families(mp.lA, n, m);
  check_families(mp.rA, n, m);
  check_families(mp.lB, m, n);
  check_families(mp.rB, m, n);
  HomPreLieAlgebra d{total, Tensor3::cube(total), direct_sum(A.twist, B.twist)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d.product(i, j, k) = A.product(i, j, k);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t k = 0; k < m; ++k) d.product(n + p, n + q, n + k) = B.product(p, q, k);
  // x ⋄ b = r_B(b)x + l_A(x)b and a ⋄ y = l_B(a)y + r_A(y)a.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t k = 0; k < n; ++k) {
        d.product(i, n + p, k) = mp.rB[p](k, i);
        d.product(n + p, i, k) = mp.lB[p](k, i);
      }
      for (std::size_t k = 0; k < m; ++k) {
        d.product(i, n + p, n + k) = mp.lA[i](k, p);
        d.product(n + p, i, n + k) = mp.rA[i](k, p);
      }
    }
  return d;
}

void require_dual_twist(const HomPreLieAlgebra& a, const HomPreLieAlgebra& adual) {
  check_shape(a);
  check_shape(adual);
  if (adual.dim != a.dim) throw TwistMismatch("dual algebra dimension differs");
  if (a.twist.determinant().is_zero()) throw TwistMismatch("algebra twist is not invertible");
  if (!(adual.twist == a.twist.inverse().transpose()))
    throw TwistMismatch("dual algebra twist is not the inverse transpose of the algebra twist");
}

PreLieMatchedPair standard_pre_lie_matched_pair(const HomPreLieAlgebra& a, const HomPreLieAlgebra& adual) {
  require_dual_twist(a, adual);
  const auto& al = a.twist;
  const auto& ad = adual.twist;
  const MapFamily Rs = star_family(right_family(a), al, al);
  const MapFamily RRs = star_family(right_family(adual), ad, ad);
  return PreLieMatchedPair{a,
                           adual,
                           subtract(star_family(left_family(a), al, al), Rs),
                           negate(Rs),
                           subtract(star_family(left_family(adual), ad, ad), RRs),
                           negate(RRs)};
}

LieMatchedPair standard_lie_matched_pair(const HomPreLieAlgebra& a, const HomPreLieAlgebra& adual) {
  require_dual_twist(a, adual);
  return LieMatchedPair{commutator_algebra(a), commutator_algebra(adual),
                        star_family(left_family(a), a.twist, a.twist),
                        star_family(left_family(adual), adual.twist, adual.twist)};
}

ValidationReport check_pre_lie_matched_equiv(const HomPreLieAlgebra& a, const HomPreLieAlgebra& adual) {
  require_dual_twist(a, adual);
  const bool algebras = validate_hom_pre_lie(a).valid() && validate_hom_pre_lie(adual).valid();
  const bool lie = algebras && validate_matched_pair_lie(standard_lie_matched_pair(a, adual)).valid();
  const bool pre = validate_matched_pair_pre_lie(standard_pre_lie_matched_pair(a, adual)).valid();
  ValidationReport rep;
  rep.add_verdict("lie-matched-pair", lie);
  rep.add_verdict("pre-lie-matched-pair", pre);
  if (lie != pre) rep.fail("agreement");
  return rep;
}

BilinearForm standard_pairing_form(std::size_t n) {
  BilinearForm w{2 * n, Tensor2(2 * n, 2 * n), Symmetry::skew};
  for (std::size_t i = 0; i < n; ++i) {
    w.matrix(n + i, i) = 1;
    w.matrix(i, n + i) = -1;
  }
  return w;
}

StandardTriple standard_manin_triple(const HomPreLieAlgebra& a, const HomPreLieAlgebra& adual) {
  const PreLieMatchedPair mp = standard_pre_lie_matched_pair(a, adual);
  const std::size_t n = a.dim;
  ManinTriple t{double_pre_lie(mp), standard_pairing_form(n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    t.part1.push_back(i);
    t.part2.push_back(n + i);
  }
  ValidationReport verdict = validate_manin_triple(t);
  return StandardTriple{std::move(t), std::move(verdict)};
}

ValidationReport validate_manin_triple(const ManinTriple& m) {
  const std::size_t N = m.total.dim;
  ValidationReport rep = validate_quadratic(m.total, m.form);
  std::vector<int> owner(N, 0);
  bool split_ok = true;
  for (auto i : m.part1) {
    if (i >= N || owner[i] != 0) split_ok = false;
    else owner[i] = 1;
  }
  for (auto i : m.part2) {
    if (i >= N || owner[i] != 0) split_ok = false;
    else owner[i] = 2;
  }
  if (!split_ok || std::count(owner.begin(), owner.end(), 0) != 0) {
    rep.fail("split");
    return rep;
  }
  for (int part = 1; part <= 2; ++part) {
    const auto& idx = part == 1 ? m.part1 : m.part2;
    const std::string tag = std::to_string(part);
    for (auto i : idx)
      for (auto j : idx) {
        Vector outside(N);
        for (std::size_t k = 0; k < N; ++k)
          if (owner[k] != part) outside[k] = m.total.product(i, j, k);
        rep.expect_zero("subalgebra-" + tag, {i, j}, outside);
        rep.expect_zero("isotropic-" + tag, {i, j}, Vector{m.form.matrix(i, j)});
      }
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (owner[i] != owner[j]) rep.expect_zero("twist-block", {i, j}, Vector{m.total.twist(i, j)});
  return rep;
}

HomPreLieAlgebra restrict_to(const HomPreLieAlgebra& a, const std::vector<std::size_t>& idx) {
  const std::size_t n = idx.size();
  HomPreLieAlgebra r{n, Tensor3::cube(n), LinearMap(n, n)};
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      r.twist(p, q) = a.twist(idx[p], idx[q]);
      for (std::size_t k = 0; k < n; ++k) r.product(p, q, k) = a.product(idx[p], idx[q], idx[k]);
    }
  }
  return r;
}

Standardization standardize_manin_triple(const ManinTriple& m) {
  if (!validate_manin_triple(m).valid()) throw InvalidInput("standardize_manin_triple: input is not a Manin triple");
  const std::size_t N = m.total.dim;
  const std::size_t n = m.part1.size();
  if (m.part2.size() != n) throw InvalidInput("standardize_manin_triple: parts differ in dimension");
  LinearMap f(N, N);
  for (std::size_t a = 0; a < n; ++a) f(a, m.part1[a]) = 1;
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) f(n + a, m.part2[b]) = m.form.matrix(m.part2[b], m.part1[a]);
  const LinearMap finv = f.inverse();
  HomPreLieAlgebra s{N, Tensor3::cube(N), f * m.total.twist * finv};
  for (std::size_t p = 0; p < N; ++p)
    for (std::size_t q = 0; q < N; ++q) {
      const Vector v = f.apply(m.total.mul(finv.column(p), finv.column(q)));
      for (std::size_t k = 0; k < N; ++k) s.product(p, q, k) = v[k];
    }
  ManinTriple st{std::move(s), standard_pairing_form(n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    st.part1.push_back(i);
    st.part2.push_back(n + i);
  }
  return Standardization{f, std::move(st)};
}

}  // namespace hompre
