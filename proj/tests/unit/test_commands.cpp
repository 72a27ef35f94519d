#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hompre/commands.hpp"
#include "hompre/errors.hpp"
#include "hompre/fixtures.hpp"

using namespace hompre;
using namespace hompre::fixtures;

namespace {

Document load(const std::string& name) {
  std::ifstream in(std::filesystem::path(HOMPRE_TEST_DATA) / (name + ".json"));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::vector<Document> load_all(std::initializer_list<std::string> names) {
  std::vector<Document> out;
  for (const auto& n : names) out.push_back(load(n));
  return out;
}

struct SlugCase {
  const char* slug;
  std::vector<std::string> files;
};

const std::vector<SlugCase> kSlugCases = {
    {"double-lie-equiv", {"mp_lie_f2"}},
    {"double-pre-lie-equiv", {"mp_pre_lie_f2"}},
    {"matched-equiv", {"f2", "f2_dual_rs"}},
    {"manin-standardize", {"manin_f2"}},
    {"bialgebra-tri-equiv", {"f2", "f2_dual_rs"}},
    {"s-identity", {"f2", "r_e11"}},
    {"p-condition", {"f2", "r_e12"}},
    {"triangular", {"f2", "r_s"}},
    {"smatrix-ooperator", {"f2", "r_s"}},
    {"dendriform-reps", {"d1"}},
    {"o-to-dendriform", {"o_d1"}},
    {"invertible-o", {"o_d1"}},
    {"hessian-dendriform", {"f2", "b_h"}},
    {"semidirect-smatrix", {"o_d1"}},
    {"canonical-smatrix", {"d1"}},
};

int exit_of(const std::function<int()>& f) {
  try {
    return f();
  } catch (...) {
    return exit_code_for_current_exception();
  }
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_EQ(exit_code(run_validate(load("f2"))), exit_holds);
  const auto r = run_validate(load("fn"));
  EXPECT_EQ(exit_code(r), exit_fails);
  EXPECT_NE(r.render().find("(e1,e2,e2)"), std::string::npos);
  EXPECT_EQ(exit_code(run_validate(load("d1"))), exit_holds);
  EXPECT_EQ(exit_code(run_validate(load("bialgebra_f2"))), exit_holds);
  EXPECT_EQ(exit_code(run_validate(load("manin_f2"))), exit_holds);
  EXPECT_EQ(exit_code(run_validate(load("o_d1"))), exit_holds);
  EXPECT_EQ(exit_code(run_validate(load("o_regular_f2"))), exit_fails);
}

TEST(Validate, ContextOnlyKinds) {
  EXPECT_THROW(run_validate(load("b_h")), UnsupportedKind);
  EXPECT_THROW(run_validate(load("r_s")), UnsupportedKind);
  EXPECT_THROW(run_validate(load("id2")), UnsupportedKind);
}

TEST(Derive, SubAdjacentF1) {
  const Document d = run_derive("sub-adjacent", {load("f1")});
  EXPECT_EQ(serialize(d), serialize(load("sub_adjacent_f1")));
  EXPECT_NE(serialize(d).find(R"({"i": 1, "j": 2, "k": 2, "c": "1"})"), std::string::npos);
}

TEST(Derive, TriangularBialgebra) {
  const Document doc = run_derive("triangular-bialgebra", load_all({"f2", "r_s"}));
  const auto& b = doc.as<Bialgebra>();
  EXPECT_TRUE(b.dual.product.is_zero());
  EXPECT_TRUE(validate_bialgebra(b).valid());
}

TEST(Derive, DendriformFromHessian) {
  const Document doc = run_derive("dendriform-from-hessian", load_all({"f2", "b_h"}));
  const auto& d = doc.as<HomLDendriform>();
  EXPECT_TRUE(d.left.is_zero());
  EXPECT_EQ(d.right.nonzero_count(), 1u);
  EXPECT_EQ(d.right(0, 0, 1), Scalar(-1));
}

TEST(Derive, Deterministic) {
  for (auto name : {"coadjoint-rep", "coboundary-rep", "regular-rep", "sub-adjacent"})
    EXPECT_EQ(serialize(run_derive(name, {load("f2c")})), serialize(run_derive(name, {load("f2c")})));
  EXPECT_EQ(serialize(run_derive("regular-rep", {load("f2")})), serialize(load("regular_f2")));
  EXPECT_EQ(serialize(run_derive("vertical-rep", {load("d1")})), serialize(load("d1_vertical_rep")));
  EXPECT_EQ(serialize(run_derive("dual-product", load_all({"f2", "r_s"}))), serialize(load("f2_dual_rs")));
  EXPECT_EQ(serialize(run_derive("standard-manin", load_all({"f2", "f2_dual_rs"}))), serialize(load("manin_f2")));
}

TEST(Derive, EveryConstructionRunsOnSomeFixture) {
  const std::vector<std::vector<Document>> pool = {
      {load("f2")}, {load("sub_adjacent_f1")}, {load("regular_f2")}, {load("mp_lie_f2")}, {load("mp_pre_lie_f2")},
      load_all({"f2", "f2_dual_rs"}), {load("manin_f2")}, load_all({"f2", "r_s"}), {load("d1")}, {load("o_d1")},
      load_all({"f2", "b_h"})};
  for (auto name : derive_constructions()) {
    bool ran = false;
    for (const auto& in : pool) {
      try {
        const Document d = run_derive(name, in);
        EXPECT_EQ(serialize(parse_document(serialize(d))), serialize(d)) << name;
        ran = true;
        break;
      } catch (const Error&) {
      }
    }
    EXPECT_TRUE(ran) << name;
  }
}

TEST(Derive, Errors) {
  EXPECT_THROW(run_derive("no-such", {load("f2")}), UnknownSlug);
  EXPECT_THROW(run_derive("sub-adjacent", {}), InvalidInput);
  EXPECT_THROW(run_derive("sub-adjacent", {load("d1")}), UnsupportedKind);
  EXPECT_THROW(run_derive("sub-adjacent", {load("fn")}), InvalidInput);
  EXPECT_THROW(run_derive("triangular-bialgebra", load_all({"f2", "r_e11"})), NotAnSMatrix);
}

TEST(Check, EverySlugHoldsOnItsFixture) {
  ASSERT_EQ(check_slugs().size(), kSlugCases.size());
  for (const auto& c : kSlugCases) {
    std::vector<Document> in;
    for (const auto& f : c.files) in.push_back(load(f));
    const auto r = run_check(c.slug, in);
    EXPECT_TRUE(r.valid()) << c.slug << "\n" << r.render(true);
  }
}

TEST(Check, ExamplesFromTheContract) {
  EXPECT_EQ(exit_code(run_check("bialgebra-tri-equiv", load_all({"f2", "f2_dual_rs"}))), exit_holds);
  EXPECT_EQ(exit_code(run_check("s-identity", load_all({"f2", "r_e11"}))), exit_holds);
  EXPECT_EQ(exit_code(run_check("canonical-smatrix", {load("d1")})), exit_holds);
  // Both sides false, so the biconditional still holds.
  const auto r = run_check("semidirect-smatrix", {load("o_regular_f2")});
  EXPECT_TRUE(r.valid());
  EXPECT_FALSE(r.verdict("s-matrix"));
  EXPECT_FALSE(r.verdict("o-operator"));
}

TEST(Check, ExitCodes) {
  EXPECT_EQ(exit_of([] { return exit_code(run_check("nope", {})); }), exit_precondition);
  EXPECT_EQ(exit_of([] { return exit_code(run_check("triangular", {load("f2")})); }), exit_precondition);
  EXPECT_EQ(exit_of([] { return exit_code(run_check("triangular", load_all({"f2", "r_e11"}))); }),
            exit_precondition);
  EXPECT_EQ(exit_of([] { return exit_code(run_check("dendriform-reps", {load("f2")})); }), exit_precondition);
  EXPECT_EQ(exit_of([] { return exit_code(run_validate(parse_document("{\"kind\": "))); }), exit_parse_error);
}

TEST(Check, ExplainCoversEverySlug) {
  for (auto s : check_slugs()) {
    const std::string t = explain(s);
    EXPECT_EQ(t.rfind("input: ", 0), 0u) << s;
    EXPECT_EQ(t.back(), '\n');
  }
  EXPECT_THROW(explain("nope"), UnknownSlug);
}

TEST(ReadDocuments, SingleAndArray) {
  EXPECT_EQ(read_documents(serialize(F2())).size(), 1u);
  EXPECT_EQ(read_documents(serialize_documents({F2(), F1()})).size(), 2u);
}
