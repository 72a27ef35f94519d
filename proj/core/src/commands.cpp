#include "hompre/commands.hpp"

#include <algorithm>
#include <exception>
#include <functional>

#include "hompre/bialgebra.hpp"
#include "hompre/errors.hpp"
#include "hompre/matched_pair.hpp"

namespace hompre {

namespace {

using Inputs = std::vector<Document>;

void require_arity(std::string_view name, const Inputs& in, std::size_t n) {
  if (in.size() != n)
    throw InvalidInput(std::string(name) + " takes " + std::to_string(n) + " document" + (n == 1 ? "" : "s") +
                       ", got " + std::to_string(in.size()));
}

// Entrywise comparison of two products on the same basis, as identity `name`.
void compare_products(ValidationReport& rep, const std::string& name, const HomPreLieAlgebra& got,
                      const HomPreLieAlgebra& want) {
  for (std::size_t i = 0; i < want.dim; ++i)
    for (std::size_t j = 0; j < want.dim; ++j)
      rep.expect_zero(name, {i, j}, got.mul(want.basis(i), want.basis(j)) - want.mul(want.basis(i), want.basis(j)));
  if (got.twist != want.twist) rep.fail(name + "-twist");
}

void agreement(ValidationReport& rep, const std::string& lhs, bool l, const std::string& rhs, bool r) {
  rep.add_verdict(lhs, l);
  rep.add_verdict(rhs, r);
  if (l != r) rep.fail("agreement");
}

const HomLDendriform& valid_dendriform(const Document& doc) {
  const auto& d = doc.as<HomLDendriform>("dendriform");
  if (!validate_l_dendriform(d).valid()) throw InvalidInput("input is not a Hom-L-dendriform algebra");
  return d;
}

struct CheckEntry {
  std::string_view slug;
  std::size_t arity;
  std::string_view text;
  std::function<ValidationReport(const Inputs&, SemidirectVariant)> run;
};

const std::vector<CheckEntry>& check_table() {
  static const std::vector<CheckEntry> table = {
      {"double-lie-equiv", 1,
       "input: matched_pair_lie (g, h, rho, rho2)\n"
       "The double g + h with [(x,x'),(y,y')] = ([x,y] + rho2(x')y - rho2(y')x, [x',y'] + rho(x)y' - rho(y)x')\n"
       "and twist phi_g + phi_h is a Hom-Lie algebra exactly when (g, h, rho, rho2) is a matched pair.",
       [](const Inputs& in, SemidirectVariant) {
         const auto& mp = in[0].as<LieMatchedPair>("matched pair");
         ValidationReport rep;
         agreement(rep, "double", validate_hom_lie(double_lie(mp)).valid(), "matched-pair",
                   validate_matched_pair_lie(mp).valid());
         return rep;
       }},
      {"double-pre-lie-equiv", 1,
       "input: matched_pair_pre_lie (A, B, l_A, r_A, l_B, r_B)\n"
       "A + B with (x+a)*(y+b) = x.y + l_B(a)y + r_B(b)x + a.b + l_A(x)b + r_A(y)a and twist alpha_A + alpha_B\n"
       "is a Hom-pre-Lie algebra exactly when the six-tuple is a matched pair.",
       [](const Inputs& in, SemidirectVariant) {
         const auto& mp = in[0].as<PreLieMatchedPair>("matched pair");
         ValidationReport rep;
         agreement(rep, "double", validate_hom_pre_lie(double_pre_lie(mp)).valid(), "matched-pair",
                   validate_matched_pair_pre_lie(mp).valid());
         return rep;
       }},
      {"matched-equiv", 2,
       "input: hom_pre_lie A, hom_pre_lie A* with twist (alpha^-1)*\n"
       "(A, A*, ad*, -R*, ad*, -R*) is a matched pair of Hom-pre-Lie algebras exactly when\n"
       "(A^C, (A*)^C, L*, L*) is a matched pair of the sub-adjacent Hom-Lie algebras.",
       [](const Inputs& in, SemidirectVariant) {
         return check_pre_lie_matched_equiv(in[0].as<HomPreLieAlgebra>("algebra"),
                                            in[1].as<HomPreLieAlgebra>("dual algebra"));
       }},
      {"manin-standardize", 1,
       "input: manin_triple (total, form, part1, part2)\n"
       "f(x,u) = (x, w(u,-)) is an isomorphism of Manin triples onto (A1 + A1*, A1, A1*) with the standard form:\n"
       "f is an algebra morphism, the image validates and w(x,y) = w_std(f x, f y).",
       [](const Inputs& in, SemidirectVariant) {
         const auto& m = in[0].as<ManinTriple>("Manin triple");
         const Standardization s = standardize_manin_triple(m);
         ValidationReport rep;
         rep.absorb(check_morphism(s.iso, m.total, s.standard.total), "morphism");
         rep.absorb(validate_manin_triple(s.standard), "standard");
         const std::size_t n = m.total.dim;
         for (std::size_t i = 0; i < n; ++i)
           for (std::size_t j = 0; j < n; ++j)
             rep.expect_zero("form-pullback", {i, j},
                             Vector{m.form(Vector::basis(n, i), Vector::basis(n, j)) -
                                    s.standard.form(s.iso.column(i), s.iso.column(j))});
         return rep;
       }},
      {"bialgebra-tri-equiv", 2,
       "input: hom_pre_lie A, hom_pre_lie A* with twist (alpha^-1)*\n"
       "The three conditions agree: (A, A*) is a Hom-pre-Lie bialgebra; (A, A*, ad*, -R*, ad*, -R*) is a\n"
       "matched pair; (A + A*, A, A*) with w(x+a, y+b) = <a,y> - <b,x> is a Manin triple.",
       [](const Inputs& in, SemidirectVariant) {
         return check_equivalence_theorem(in[0].as<HomPreLieAlgebra>("algebra"),
                                          in[1].as<HomPreLieAlgebra>("dual algebra"));
       }},
      {"s-identity", 2,
       "input: hom_pre_lie A, tensor2 r with r#(alpha^-1)* = alpha r#\n"
       "r#(alpha*(a)) . r#(alpha*(b)) - r#(alpha*(a o b)) = [[r,r]]((alpha^-2)* a, (alpha^-2)* b)\n"
       "for all a, b in A*, with o the dual product induced by r.",
       [](const Inputs& in, SemidirectVariant) {
         return check_pro3(in[0].as<HomPreLieAlgebra>("algebra"), in[1].as<Tensor2>("tensor"));
       }},
      {"p-condition", 2,
       "input: hom_pre_lie A, tensor2 r with r#(alpha^-1)* = alpha r# and a Hom-pre-Lie dual product\n"
       "psi* is a 1-cocycle of (A*)^C exactly when (P(x.y) - P(alpha x)P(y))(r - sigma(r)) = 0,\n"
       "where P(x) = L^-2_x (x) alpha + alpha (x) L^-2_x.",
       [](const Inputs& in, SemidirectVariant) {
         const auto& a = in[0].as<HomPreLieAlgebra>("algebra");
         const auto& r = in[1].as<Tensor2>("tensor");
         const HomPreLieAlgebra d = dual_product_from_r(a, r);
         if (!validate_hom_pre_lie(d).valid()) throw InvalidInput("dual product of r is not Hom-pre-Lie");
         const bool cocycle =
             check_one_cocycle(commutator_algebra(d), coboundary_rep(d), dualize_product(a)).valid();
         ValidationReport rep;
         agreement(rep, "psi-cocycle", cocycle, "p-condition", check_P_condition(a, r).valid());
         return rep;
       }},
      {"triangular", 2,
       "input: hom_pre_lie A, tensor2 r that is a Hom-s-matrix\n"
       "(A, A*, phi*, psi*) with phi* the coboundary of r and the dual product induced by r\n"
       "is a Hom-pre-Lie bialgebra.",
       [](const Inputs& in, SemidirectVariant) {
         ValidationReport rep;
         rep.absorb(validate_bialgebra(triangular_bialgebra(in[0].as<HomPreLieAlgebra>("algebra"),
                                                            in[1].as<Tensor2>("tensor"))),
                    "bialgebra");
         return rep;
       }},
      {"smatrix-ooperator", 2,
       "input: hom_pre_lie A, symmetric tensor2 r\n"
       "r is a Hom-s-matrix exactly when r# o (alpha^-1)* is an O-operator on the representation\n"
       "(A*, (alpha^-1)*, ad*, -R*).",
       [](const Inputs& in, SemidirectVariant) {
         return check_smatrix_ooperator_equiv(in[0].as<HomPreLieAlgebra>("algebra"), in[1].as<Tensor2>("tensor"));
       }},
      {"dendriform-reps", 1,
       "input: dendriform (A, |>, <|, alpha)\n"
       "(A, alpha, L_|>, R_<|) represents the horizontal algebra x|>y + x<|y and\n"
       "(A, alpha, L_|>, -L_<|) represents the vertical algebra x|>y - y<|x.",
       [](const Inputs& in, SemidirectVariant) { return dendriform_rep_check(valid_dendriform(in[0])); }},
      {"o-to-dendriform", 1,
       "input: o_operator (representation (V, beta, rho, mu), T)\n"
       "u |> v = rho(T beta^-1 u)v and u <| v = -mu(T beta^-1 u)v define a Hom-L-dendriform algebra on V,\n"
       "and T(u) |> T(v) = T(u |> v) defines one on T(V).",
       [](const Inputs& in, SemidirectVariant) {
         const OperatorDendriform od = dendriform_from_o_operator(in[0].as<OOperator>("O-operator"));
         ValidationReport rep;
         rep.absorb(validate_l_dendriform(od.onV), "V");
         rep.absorb(validate_l_dendriform(od.onTV), "image");
         return rep;
       }},
      {"invertible-o", 1,
       "input: o_operator with T invertible\n"
       "x |> y = T(rho(alpha^-1 x)T^-1 y), x <| y = -T(mu(alpha^-1 x)T^-1 y) is a Hom-L-dendriform algebra\n"
       "whose vertical algebra is A, and alpha is an O-operator on (A, alpha, L_|>, -L_<|).",
       [](const Inputs& in, SemidirectVariant) {
         const auto& o = in[0].as<OOperator>("O-operator");
         const HomLDendriform d = compatible_dendriform_from_invertible(o);
         ValidationReport rep;
         const ValidationReport dv = validate_l_dendriform(d);
         rep.absorb(dv, "dendriform");
         if (dv.valid()) {
           compare_products(rep, "compatible", vertical(d), o.algebra());
           rep.absorb(validate_o_operator(o_operator_from_dendriform(d)), "converse");
         }
         return rep;
       }},
      {"hessian-dendriform", 2,
       "input: hom_pre_lie A, bilinear_form B that is Hessian on A\n"
       "B(x |> y, z) = -B(y, [alpha^-1 x, alpha^-2 z]) and B(x <| y, z) = -B(y, alpha^-2 z . alpha^-1 x)\n"
       "define a Hom-L-dendriform algebra whose vertical algebra is A.",
       [](const Inputs& in, SemidirectVariant) {
         const auto& a = in[0].as<HomPreLieAlgebra>("algebra");
         const auto& b = in[1].as<BilinearForm>("form");
         const HomLDendriform d = dendriform_from_hessian(a, b);
         ValidationReport rep;
         const ValidationReport dv = validate_l_dendriform(d);
         rep.absorb(dv, "dendriform");
         rep.absorb(check_hessian_dendriform(a, b, d), "defining");
         if (dv.valid()) compare_products(rep, "compatible", vertical(d), a);
         return rep;
       }},
      {"semidirect-smatrix", 1,
       "input: o_operator (representation (V, beta, rho, mu), T) with T beta = alpha T\n"
       "r_T = T + sigma(T) is a Hom-s-matrix in A x V* exactly when T beta is an O-operator on (V, beta, rho, mu).",
       [](const Inputs& in, SemidirectVariant variant) {
         const auto& o = in[0].as<OOperator>("O-operator");
         return semidirect_smatrix(o.rep, o.T, variant).verdict;
       }},
      {"canonical-smatrix", 1,
       "input: dendriform (A, |>, <|, alpha)\n"
       "r = sum_i e_i (x) e_i* + e_i* (x) e_i is a Hom-s-matrix in the vertical algebra x A*\n"
       "over (L_|>, -L_<|).",
       [](const Inputs& in, SemidirectVariant variant) {
         const CanonicalSMatrix c = canonical_smatrix(valid_dendriform(in[0]), variant);
         ValidationReport rep;
         if (!c.r.is_symmetric()) rep.fail("symmetric");
         if (!check_pro1(c.big_algebra, c.r)) rep.fail("pro-1");
         const Tensor3 t = hom_s_bracket(c.big_algebra, c.r);
         const std::size_t n = c.big_algebra.dim;
         for (std::size_t i = 0; i < n; ++i)
           for (std::size_t j = 0; j < n; ++j)
             for (std::size_t k = 0; k < n; ++k)
               if (!t(i, j, k).is_zero()) rep.fail("s-bracket", {i, j, k}, Vector{t(i, j, k)});
         return rep;
       }},
  };
  return table;
}

const CheckEntry& find_check(std::string_view slug) {
  for (const auto& e : check_table())
    if (e.slug == slug) return e;
  throw UnknownSlug("unknown check \"" + std::string(slug) + "\"");
}

struct DeriveEntry {
  std::string_view name;
  std::size_t arity;
  std::function<Document(const Inputs&, SemidirectVariant)> run;
};

const HomPreLieAlgebra& alg(const Inputs& in, std::size_t i) { return in[i].as<HomPreLieAlgebra>("algebra"); }

const std::vector<DeriveEntry>& derive_table() {
  using V = SemidirectVariant;
  static const std::vector<DeriveEntry> table = {
      {"sub-adjacent", 1, [](const Inputs& in, V) { return Document(sub_adjacent(alg(in, 0))); }},
      {"adjoint-rep", 1, [](const Inputs& in, V) { return Document(adjoint_rep(in[0].as<HomLieAlgebra>("algebra"))); }},
      {"regular-rep", 1, [](const Inputs& in, V) { return Document(regular_rep(alg(in, 0))); }},
      {"dual-rep", 1,
       [](const Inputs& in, V) { return Document(dual_pre_lie_rep(in[0].as<HomPreLieRep>("representation"))); }},
      {"coadjoint-rep", 1, [](const Inputs& in, V) { return Document(coadjoint_pre_lie_rep(alg(in, 0))); }},
      {"coboundary-rep", 1, [](const Inputs& in, V) { return Document(coboundary_rep(alg(in, 0))); }},
      {"semidirect", 1,
       [](const Inputs& in, V) { return Document(semidirect_pre_lie(in[0].as<HomPreLieRep>("representation"))); }},
      {"double-lie", 1, [](const Inputs& in, V) { return Document(double_lie(in[0].as<LieMatchedPair>("pair"))); }},
      {"double-pre-lie", 1,
       [](const Inputs& in, V) { return Document(double_pre_lie(in[0].as<PreLieMatchedPair>("pair"))); }},
      {"standard-lie-matched-pair", 2,
       [](const Inputs& in, V) { return Document(standard_lie_matched_pair(alg(in, 0), alg(in, 1))); }},
      {"standard-pre-lie-matched-pair", 2,
       [](const Inputs& in, V) { return Document(standard_pre_lie_matched_pair(alg(in, 0), alg(in, 1))); }},
      {"standard-manin", 2,
       [](const Inputs& in, V) { return Document(standard_manin_triple(alg(in, 0), alg(in, 1)).triple); }},
      {"standardize-manin", 1,
       [](const Inputs& in, V) {
         return Document(standardize_manin_triple(in[0].as<ManinTriple>("Manin triple")).standard);
       }},
      {"coboundary-cocycle", 2,
       [](const Inputs& in, V) { return Document(coboundary_cocycle(alg(in, 0), in[1].as<Tensor2>("tensor"))); }},
      {"dual-product", 2,
       [](const Inputs& in, V) { return Document(dual_product_from_r(alg(in, 0), in[1].as<Tensor2>("tensor"))); }},
      {"bialgebra", 2, [](const Inputs& in, V) { return Document(make_bialgebra(alg(in, 0), alg(in, 1))); }},
      {"triangular-bialgebra", 2,
       [](const Inputs& in, V) { return Document(triangular_bialgebra(alg(in, 0), in[1].as<Tensor2>("tensor"))); }},
      {"horizontal", 1,
       [](const Inputs& in, V) { return Document(horizontal(in[0].as<HomLDendriform>("dendriform"))); }},
      {"vertical", 1, [](const Inputs& in, V) { return Document(vertical(in[0].as<HomLDendriform>("dendriform"))); }},
      {"transpose-dendriform", 1,
       [](const Inputs& in, V) { return Document(transpose_dendriform(in[0].as<HomLDendriform>("dendriform"))); }},
      {"horizontal-rep", 1,
       [](const Inputs& in, V) { return Document(horizontal_rep(in[0].as<HomLDendriform>("dendriform"))); }},
      {"vertical-rep", 1,
       [](const Inputs& in, V) { return Document(vertical_rep(in[0].as<HomLDendriform>("dendriform"))); }},
      {"dendriform-from-o-operator", 1,
       [](const Inputs& in, V) {
         return Document(dendriform_from_o_operator(in[0].as<OOperator>("O-operator")).onV);
       }},
      {"compatible-dendriform", 1,
       [](const Inputs& in, V) {
         return Document(compatible_dendriform_from_invertible(in[0].as<OOperator>("O-operator")));
       }},
      {"o-operator-from-dendriform", 1,
       [](const Inputs& in, V) {
         return Document(o_operator_from_dendriform(in[0].as<HomLDendriform>("dendriform")));
       }},
      {"dendriform-from-hessian", 2,
       [](const Inputs& in, V) {
         return Document(dendriform_from_hessian(alg(in, 0), in[1].as<BilinearForm>("form")));
       }},
      {"semidirect-ambient", 1,
       [](const Inputs& in, V v) {
         return Document(semidirect_ambient(in[0].as<HomPreLieRep>("representation"), v));
       }},
      {"semidirect-smatrix", 1,
       [](const Inputs& in, V v) {
         const auto& o = in[0].as<OOperator>("O-operator");
         return Document(semidirect_smatrix(o.rep, o.T, v).rT);
       }},
      {"canonical-ambient", 1,
       [](const Inputs& in, V v) {
         return Document(canonical_smatrix(in[0].as<HomLDendriform>("dendriform"), v).big_algebra);
       }},
      {"canonical-smatrix", 1,
       [](const Inputs& in, V v) {
         return Document(canonical_smatrix(in[0].as<HomLDendriform>("dendriform"), v).r);
       }},
  };
  return table;
}

}  // namespace

std::vector<Document> read_documents(std::string_view text) {
  const auto p = text.find_first_not_of(" \t\r\n");
  if (p != std::string_view::npos && text[p] == '[') return parse_documents(text);
  return {parse_document(text)};
}

ValidationReport run_validate(const Document& doc) {
  return std::visit(
      [](const auto& v) -> ValidationReport {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HomLieAlgebra>) {
          return validate_hom_lie(v);
        } else if constexpr (std::is_same_v<T, HomPreLieAlgebra>) {
          return validate_hom_pre_lie(v);
        } else if constexpr (std::is_same_v<T, HomLieRep>) {
          return validate_lie_rep(v);
        } else if constexpr (std::is_same_v<T, HomPreLieRep>) {
          return validate_pre_lie_rep(v);
        } else if constexpr (std::is_same_v<T, LieMatchedPair>) {
          return validate_matched_pair_lie(v);
        } else if constexpr (std::is_same_v<T, PreLieMatchedPair>) {
          return validate_matched_pair_pre_lie(v);
        } else if constexpr (std::is_same_v<T, HomLDendriform>) {
          return validate_l_dendriform(v);
        } else if constexpr (std::is_same_v<T, ManinTriple>) {
          return validate_manin_triple(v);
        } else if constexpr (std::is_same_v<T, Bialgebra>) {
          require_dual_twist(v.primal, v.dual);
          ValidationReport rep;
          rep.absorb(validate_hom_pre_lie(v.primal), "primal");
          rep.absorb(validate_hom_pre_lie(v.dual), "dual");
          if (rep.valid()) rep = validate_bialgebra(v);
          return rep;
        } else if constexpr (std::is_same_v<T, OOperator>) {
          ValidationReport rep;
          rep.absorb(validate_pre_lie_rep(v.rep), "rep");
          const ValidationReport op = validate_o_operator(v);
          for (const auto& f : op.failures()) rep.fail(f.identity, f.witness, f.residual);
          return rep;
        } else {
          throw UnsupportedKind("a " + std::string(kind_name(Document(v).kind())) +
                                " document only validates in context; use check or derive");
        }
      },
      doc.value());
}

const std::vector<std::string_view>& derive_constructions() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& e : derive_table()) out.push_back(e.name);
    return out;
  }();
  return names;
}

Document run_derive(std::string_view construction, const std::vector<Document>& inputs, SemidirectVariant variant) {
  for (const auto& e : derive_table())
    if (e.name == construction) {
      require_arity(construction, inputs, e.arity);
      return e.run(inputs, variant);
    }
  throw UnknownSlug("unknown construction \"" + std::string(construction) + "\"");
}

const std::vector<std::string_view>& check_slugs() {
  static const std::vector<std::string_view> slugs = [] {
    std::vector<std::string_view> out;
    for (const auto& e : check_table()) out.push_back(e.slug);
    return out;
  }();
  return slugs;
}

ValidationReport run_check(std::string_view slug, const std::vector<Document>& inputs, SemidirectVariant variant) {
  const CheckEntry& e = find_check(slug);
  require_arity(slug, inputs, e.arity);
  return e.run(inputs, variant);
}

std::string explain(std::string_view slug) { return std::string(find_check(slug).text) + "\n"; }

int exit_code_for_current_exception() {
  try {
    throw;
  } catch (const ParseError&) {
    return exit_parse_error;
  } catch (...) {
    return exit_precondition;
  }
}

}  // namespace hompre
